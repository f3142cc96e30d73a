"""Parameters, basis enumeration and Hamiltonian block structure."""
import math

import numpy as np
import pytest

from stabcell.model import (
    DEFAULT_DEVICE_GHZ,
    GROUND_LABEL,
    LEVEL1_LABELS,
    LEVEL2_LABELS,
    BasisLabel,
    build_h1,
    build_h2,
    default_params,
    excitation_basis,
    excitation_number,
    from_frequencies_ghz,
    ground_energy,
    load_params,
)


def test_cyclic_convention_scales_frequencies():
    p = from_frequencies_ghz(DEFAULT_DEVICE_GHZ, "cyclic")
    assert p.w1 == pytest.approx(2.0 * math.pi * 8.14, abs=1e-14)
    # couplings are angular rates in both conventions
    assert p.g11 == pytest.approx(0.51, abs=1e-15)


def test_angular_convention_uses_raw_values():
    p = from_frequencies_ghz(DEFAULT_DEVICE_GHZ, "angular")
    assert p.w1 == pytest.approx(8.14, abs=1e-15)
    assert p.g11 == pytest.approx(0.51, abs=1e-15)


def test_ground_energy_value():
    # ½(Σω_r − Σω_q) with the device values = π·(32.48 − 24.6)
    p = default_params("cyclic")
    assert ground_energy(p) == pytest.approx(math.pi * (32.48 - 24.6), rel=1e-14)


def test_unknown_convention_rejected():
    with pytest.raises(ValueError):
        from_frequencies_ghz(DEFAULT_DEVICE_GHZ, "hertzian")


def test_missing_key_rejected():
    values = dict(DEFAULT_DEVICE_GHZ)
    del values["g42"]
    with pytest.raises(ValueError, match="g42"):
        from_frequencies_ghz(values)


def test_nonpositive_frequency_rejected():
    values = dict(DEFAULT_DEVICE_GHZ, f3=-1.0)
    with pytest.raises(ValueError):
        from_frequencies_ghz(values)


def test_without_couplings():
    p = default_params().without_couplings()
    assert all(g == 0.0 for g in p.couplings().values())
    assert p.w1 == default_params().w1


def test_load_params_roundtrip(tmp_path):
    path = tmp_path / "params.toml"
    lines = [f"{k} = {v}" for k, v in DEFAULT_DEVICE_GHZ.items()]
    lines.append('convention = "angular"')
    path.write_text("\n".join(lines) + "\n")
    p = load_params(path)
    assert p.convention == "angular"
    assert p.w2 == pytest.approx(8.18)


def test_basis_sizes_and_levels():
    assert len(LEVEL1_LABELS) == 8
    assert len(LEVEL2_LABELS) == 32
    assert excitation_number(GROUND_LABEL) == 0
    assert all(excitation_number(l) == 1 for l in LEVEL1_LABELS)
    assert all(excitation_number(l) == 2 for l in LEVEL2_LABELS)
    with pytest.raises(ValueError):
        excitation_basis(3)


def test_frozen_landmark_labels():
    # 1-based landmarks used throughout: 27 = both data qubits excited,
    # 29 = data-1 + ancilla-b, 31 = data-2 + ancilla-b, 32 = both ancillas
    assert LEVEL2_LABELS[26] == BasisLabel(0, 0, 0, 0, 1, 1, 0, 0)
    assert LEVEL2_LABELS[28] == BasisLabel(0, 0, 0, 0, 1, 0, 0, 1)
    assert LEVEL2_LABELS[30] == BasisLabel(0, 0, 0, 0, 0, 1, 0, 1)
    assert LEVEL2_LABELS[31] == BasisLabel(0, 0, 0, 0, 0, 0, 1, 1)
    # first ten level-2 labels are the two-photon occupations
    assert all(sum(l.resonators) == 2 for l in LEVEL2_LABELS[:10])


def test_h1_structure():
    p = default_params()
    h = build_h1(p)
    assert np.array_equal(h, h.T)
    assert h[0, 0] == pytest.approx(ground_energy(p) + p.w1)
    assert h[0, 4] == pytest.approx(p.g11)
    assert h[0, 6] == pytest.approx(p.g1a)
    assert h[2, 7] == pytest.approx(p.g3b)
    # qubit 1 does not couple to resonators 2 and 4
    assert h[1, 4] == 0.0 and h[3, 4] == 0.0


def test_h2_structure():
    p = default_params()
    h = build_h2(p)
    assert np.array_equal(h, h.T)
    # two photons in one mode couple with a √2 bosonic enhancement
    assert h[0, 10] == pytest.approx(math.sqrt(2.0) * p.g11)
    # single-photon–single-qubit entries carry the bare coupling
    assert h[22, 26] == pytest.approx(p.g42)
    assert h[26, 26] == pytest.approx(ground_energy(p) + p.wp1 + p.wp2)


def test_zero_coupling_blocks_are_diagonal():
    p = default_params().without_couplings()
    for h in (build_h1(p), build_h2(p)):
        assert np.max(np.abs(h - np.diag(np.diag(h)))) == 0.0
