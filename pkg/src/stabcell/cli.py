"""
Command-line entry point: configuration ingestion, time sweeps, CSV
emission and the validation report.

Subcommands
-----------
simulate   full evolution sweep → CSV
free       same sweep with all couplings zero (closed-form regime)
reinsert   alias of simulate emphasizing the p̃ columns (same CSV layout)
validate   run every numbered check; exit 0 iff all pass

The CSV layout is fixed: one header, one row per grid point, 17 significant
digits (round-trip exact for doubles), LF line endings, `.` decimal
separator — reruns of the same configuration are byte-identical.
"""
from __future__ import annotations

import argparse
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import checks
from .frames import FrameKind
from .model import SystemParams, default_params, load_params
from .pipeline import evaluate, make_context
from .syndrome import SYNDROMES, Scenario

try:
    import tomllib as _toml
except ModuleNotFoundError:  # Python < 3.11
    import tomli as _toml

CSV_HEADER = (
    "t_ns,p_pp,p_mp,p_pm,p_mm,"
    "F_noerr,F_corr_mp,F_corr_pm,F_corr_mm,"
    "pt_pp,pt_mp,pt_pm,pt_mm,identity_residual"
)

#: environment variable overriding the output path (and nothing else)
OUTPUT_ENV_VAR = "STABCELL_OUT"

_SYNDROME_ORDER = SYNDROMES  # (1,1), (-1,1), (1,-1), (-1,-1) → pp, mp, pm, mm


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass(frozen=True)
class RunConfig:
    scenario: Scenario
    frame: FrameKind
    convention: str
    t_start: float
    t_end: float
    steps: int
    out: str
    params_path: str = None
    free: bool = False

    def __post_init__(self):
        if not (self.t_end > self.t_start >= 0.0):
            raise ConfigError(
                f"need t_end > t_start >= 0, got [{self.t_start}, {self.t_end}]"
            )
        if self.steps < 2:
            raise ConfigError(f"need steps >= 2, got {self.steps}")

    def params(self) -> SystemParams:
        # a params file carries its own convention and wins over the flag
        if self.params_path is not None:
            p = load_params(self.params_path)
        else:
            p = default_params(self.convention)
        if self.free:
            p = p.without_couplings()
        return p

    def time_grid(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.steps + 1)


_DEFAULTS = {
    "scenario": "phi+",
    "frame": "lab",
    "convention": "cyclic",
    "t_start": 0.0,
    "t_end": 50.0,
    "steps": 2000,
    "out": "sweep.csv",
    "params": None,
}


def build_config(args: argparse.Namespace, free: bool = False) -> RunConfig:
    """Merge defaults ← config file ← CLI flags ← output-path env var."""
    merged = dict(_DEFAULTS)
    if args.config is not None:
        with open(args.config, "rb") as fh:
            file_cfg = _toml.load(fh)
        unknown = set(file_cfg) - set(_DEFAULTS)
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        merged.update(file_cfg)
    for key in ("scenario", "frame", "convention", "t_start", "t_end",
                "steps", "out"):
        flag = getattr(args, key.replace("-", "_"), None)
        if flag is not None:
            merged[key] = flag
    env_out = os.environ.get(OUTPUT_ENV_VAR)
    if env_out:
        merged["out"] = env_out
    try:
        scenario = Scenario(merged["scenario"])
        frame = FrameKind(merged["frame"])
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if merged["convention"] not in ("cyclic", "angular"):
        raise ConfigError(f"unknown convention {merged['convention']!r}")
    return RunConfig(
        scenario=scenario,
        frame=frame,
        convention=merged["convention"],
        t_start=float(merged["t_start"]),
        t_end=float(merged["t_end"]),
        steps=int(merged["steps"]),
        out=str(merged["out"]),
        params_path=merged["params"],
        free=free,
    )


def format_row(values) -> str:
    return ",".join("%.17g" % v for v in values)


def csv_rows(config: RunConfig):
    """Yield formatted CSV rows for the configured sweep, in grid order."""
    ctx = make_context(config.params(), config.scenario, config.frame)
    no_err = config.scenario.no_error_syndrome
    for t in config.time_grid():
        r = evaluate(ctx, t)
        row = [r.t]
        row += [r.probabilities[s] for s in _SYNDROME_ORDER]
        row.append(r.fidelities[no_err])
        row += [r.fidelities[s] for s in _SYNDROME_ORDER[1:]]
        row += [r.ptilde[s] for s in _SYNDROME_ORDER]
        row.append(r.identity_residual)
        yield format_row(row)


def cmd_simulate(config: RunConfig) -> int:
    try:
        with open(config.out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(CSV_HEADER + "\n")
            for row in csv_rows(config):
                fh.write(row + "\n")
    except OSError as exc:
        print(f"error: cannot write {config.out}: {exc}", file=sys.stderr)
        return 1
    return 0


def cmd_validate(convention: str = None) -> int:
    """Run every check, print a machine-readable report, return exit code."""
    results = []
    for fn in checks.ALL_CHECKS:
        if convention is not None and fn in (
            checks.check_probability_bounds,
            checks.check_fidelity_oscillation,
            checks.check_identity_suite,
            checks.check_closed_form_limit,
            checks.check_frame_invariance,
            checks.check_density_hygiene,
            checks.check_stabilizer_noninvariance,
        ):
            results.append(fn(convention))
        else:
            results.append(fn())
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def _add_run_flags(parser: argparse.ArgumentParser):
    parser.add_argument("--config", metavar="PATH", default=None,
                        help="flat TOML run configuration")
    parser.add_argument("--scenario", choices=["phi+", "psi+"], default=None)
    parser.add_argument("--frame", choices=["lab", "rot", "rot-ext"],
                        default=None)
    parser.add_argument("--convention", choices=["cyclic", "angular"],
                        default=None)
    parser.add_argument("--t-start", type=float, default=None, metavar="NS")
    parser.add_argument("--t-end", type=float, default=None, metavar="NS")
    parser.add_argument("--steps", type=int, default=None)
    parser.add_argument("--out", metavar="PATH", default=None)


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabcell",
        description="Stabilizer-cell evolution sweeps and validation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, desc in (
        ("simulate", "full-evolution sweep to CSV"),
        ("free", "zero-coupling sweep to CSV"),
        ("reinsert", "sweep to CSV (re-insertion columns)"),
    ):
        _add_run_flags(sub.add_parser(name, help=desc))
    val = sub.add_parser("validate", help="run all checks, report pass/fail")
    val.add_argument("--config", metavar="PATH", default=None)
    val.add_argument("--convention", choices=["cyclic", "angular"],
                     default=None)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    try:
        if args.command == "validate":
            return cmd_validate(args.convention)
        config = build_config(args, free=(args.command == "free"))
        return cmd_simulate(config)
    except (ConfigError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
