"""End-to-end tests of the `plot` command-line interface."""
from stabplots.cli import main


def test_probability_plot(phi_lab_csv, tmp_path, capsys):
    out = tmp_path / "probs.png"
    code = main([
        "--in", str(phi_lab_csv),
        "--cols", "p_pp,p_mp,p_pm,p_mm",
        "--out", str(out),
    ])
    assert code == 0
    assert out.exists()


def test_fidelity_plot(psi_lab_csv, tmp_path):
    out = tmp_path / "fid.svg"
    code = main([
        "--in", str(psi_lab_csv),
        "--cols", "F_noerr,F_corr_mp,F_corr_pm,F_corr_mm",
        "--out", str(out),
        "--ylabel", "fidelity",
        "--title", "branch fidelities",
    ])
    assert code == 0
    assert out.exists()


def test_overlay_two_csvs(phi_lab_csv, phi_rot_csv, tmp_path):
    out = tmp_path / "frames.png"
    code = main([
        "--in", str(phi_lab_csv),
        "--in", str(phi_rot_csv),
        "--cols", "F_noerr",
        "--out", str(out),
    ])
    assert code == 0
    assert out.exists()


def test_missing_column_exits_2_and_names_column(phi_lab_csv, tmp_path, capsys):
    code = main([
        "--in", str(phi_lab_csv),
        "--cols", "bogus",
        "--out", str(tmp_path / "x.png"),
    ])
    assert code == 2
    err = capsys.readouterr().err
    assert "bogus" in err
    assert str(phi_lab_csv) in err


def test_empty_csv_exits_2(tmp_path, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text("")
    code = main([
        "--in", str(empty),
        "--cols", "p_pp",
        "--out", str(tmp_path / "x.png"),
    ])
    assert code == 2
    assert "empty.csv" in capsys.readouterr().err


def test_bad_output_suffix_exits_2(phi_lab_csv, tmp_path, capsys):
    code = main([
        "--in", str(phi_lab_csv),
        "--cols", "p_pp",
        "--out", str(tmp_path / "x.gif"),
    ])
    assert code == 2
    assert ".gif" in capsys.readouterr().err


def test_missing_input_file_exits_2(tmp_path, capsys):
    code = main([
        "--in", str(tmp_path / "nope.csv"),
        "--cols", "p_pp",
        "--out", str(tmp_path / "x.png"),
    ])
    assert code == 2


def test_whitespace_in_cols_is_tolerated(phi_lab_csv, tmp_path):
    code = main([
        "--in", str(phi_lab_csv),
        "--cols", " p_pp , p_mm ",
        "--out", str(tmp_path / "x.png"),
    ])
    assert code == 0
