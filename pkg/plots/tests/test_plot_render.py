"""Library-level rendering tests against the golden sweep CSVs."""
import numpy as np
import pytest

from stabplots import (
    EmptyCsvError,
    MissingColumnError,
    PlotSpec,
    load_csv,
    render,
)


class TestLoadCsv:
    def test_loads_all_columns(self, phi_lab_csv):
        table = load_csv(phi_lab_csv)
        expected = {
            "t_ns", "p_pp", "p_mp", "p_pm", "p_mm",
            "F_noerr", "F_corr_mp", "F_corr_pm", "F_corr_mm",
            "pt_pp", "pt_mp", "pt_pm", "pt_mm", "identity_residual",
        }
        assert expected == set(table)
        n = len(table["t_ns"])
        assert n == 501
        assert all(len(col) == n for col in table.values())

    def test_columns_are_float_arrays(self, phi_lab_csv):
        table = load_csv(phi_lab_csv)
        assert table["t_ns"][0] == 0.0
        assert table["t_ns"][-1] == 50.0
        assert np.all(table["p_pp"] >= 0.0)
        assert np.all(table["p_pp"] <= 1.0 + 1e-12)

    def test_empty_file_raises(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(EmptyCsvError):
            load_csv(path)

    def test_header_only_raises(self, tmp_path):
        path = tmp_path / "header_only.csv"
        path.write_text("t_ns,p_pp\n")
        with pytest.raises(EmptyCsvError):
            load_csv(path)


class TestPlotSpec:
    def test_rejects_empty_inputs(self):
        with pytest.raises(ValueError):
            PlotSpec(inputs=(), columns=("p_pp",), out="x.png")

    def test_rejects_empty_columns(self):
        with pytest.raises(ValueError):
            PlotSpec(inputs=("a.csv",), columns=(), out="x.png")

    def test_rejects_unknown_format(self):
        with pytest.raises(ValueError):
            PlotSpec(inputs=("a.csv",), columns=("p_pp",), out="x.pdf")


class TestRender:
    def test_probability_figure(self, phi_lab_csv, tmp_path):
        out = tmp_path / "p_pp.png"
        spec = PlotSpec(
            inputs=(str(phi_lab_csv),), columns=("p_pp",), out=str(out),
        )
        assert render(spec) == str(out)
        assert out.stat().st_size > 1000

    def test_fidelity_figure_svg(self, psi_lab_csv, tmp_path):
        out = tmp_path / "fid.svg"
        spec = PlotSpec(
            inputs=(str(psi_lab_csv),),
            columns=("F_noerr", "F_corr_mp"),
            out=str(out),
        )
        render(spec)
        text = out.read_text()
        assert text.startswith("<?xml")
        assert "</svg>" in text

    def test_overlay_two_inputs(self, phi_lab_csv, phi_rot_csv, tmp_path):
        out = tmp_path / "frames.png"
        spec = PlotSpec(
            inputs=(str(phi_lab_csv), str(phi_rot_csv)),
            columns=("F_noerr",),
            out=str(out),
        )
        render(spec)
        assert out.exists()

    def test_missing_column_named_in_error(self, phi_lab_csv, tmp_path):
        spec = PlotSpec(
            inputs=(str(phi_lab_csv),),
            columns=("no_such_column",),
            out=str(tmp_path / "x.png"),
        )
        with pytest.raises(MissingColumnError, match="no_such_column"):
            render(spec)
        assert not (tmp_path / "x.png").exists()

    def test_missing_column_error_lists_available(self, phi_lab_csv, tmp_path):
        spec = PlotSpec(
            inputs=(str(phi_lab_csv),),
            columns=("p_oops",),
            out=str(tmp_path / "x.png"),
        )
        with pytest.raises(MissingColumnError, match="p_pp"):
            render(spec)

    def test_missing_time_column(self, tmp_path):
        path = tmp_path / "no_time.csv"
        path.write_text("a,b\n1,2\n3,4\n")
        spec = PlotSpec(
            inputs=(str(path),), columns=("a",), out=str(tmp_path / "x.png"),
        )
        with pytest.raises(MissingColumnError, match="t_ns"):
            render(spec)

    def test_regeneration_is_byte_identical(self, phi_lab_csv, tmp_path):
        first = tmp_path / "a.png"
        second = tmp_path / "b.png"
        for out in (first, second):
            render(PlotSpec(
                inputs=(str(phi_lab_csv),),
                columns=("p_pp", "p_mp"),
                out=str(out),
            ))
        assert first.read_bytes() == second.read_bytes()

    def test_svg_regeneration_is_byte_identical(self, psi_lab_csv, tmp_path):
        first = tmp_path / "a.svg"
        second = tmp_path / "b.svg"
        for out in (first, second):
            render(PlotSpec(
                inputs=(str(psi_lab_csv),),
                columns=("F_noerr",),
                out=str(out),
            ))
        assert first.read_bytes() == second.read_bytes()

    def test_rendering_does_not_mutate_input(self, phi_lab_csv, tmp_path):
        before = phi_lab_csv.read_bytes()
        render(PlotSpec(
            inputs=(str(phi_lab_csv),),
            columns=("pt_pp",),
            out=str(tmp_path / "x.png"),
        ))
        assert phi_lab_csv.read_bytes() == before
