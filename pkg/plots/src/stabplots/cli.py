"""Command-line entry point: `plot --in CSV --cols NAME[,NAME...] --out IMG`."""
from __future__ import annotations

import argparse
import sys

from .render import EmptyCsvError, MissingColumnError, PlotSpec, render


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="plot",
        description="Render sweep-CSV columns as a static figure.",
    )
    parser.add_argument(
        "--in", dest="inputs", metavar="CSV", action="append", required=True,
        help="input CSV; repeat the flag to overlay several files",
    )
    parser.add_argument(
        "--cols", metavar="NAME[,NAME...]", required=True,
        help="comma-separated column names to plot",
    )
    parser.add_argument("--out", metavar="IMG", required=True,
                        help="output image path (.png or .svg)")
    parser.add_argument("--xlabel", default="t (ns)")
    parser.add_argument("--ylabel", default="")
    parser.add_argument("--title", default="")
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    columns = tuple(c.strip() for c in args.cols.split(",") if c.strip())
    try:
        spec = PlotSpec(
            inputs=tuple(args.inputs),
            columns=columns,
            out=args.out,
            xlabel=args.xlabel,
            ylabel=args.ylabel,
            title=args.title,
        )
        render(spec)
    except MissingColumnError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except (EmptyCsvError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
