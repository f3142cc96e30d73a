"""
System parameters, excitation-number basis enumeration and Hamiltonian blocks.

The physical system is two data qubits (1, 2), two ancillas (a, b) and four
resonators coupled in a ring:

    r1: qubit1 -- ancilla a     (g11, g1a)
    r2: qubit2 -- ancilla a     (g22, g2a)
    r3: qubit1 -- ancilla b     (g31, g3b)
    r4: qubit2 -- ancilla b     (g42, g4b)

With the rotating-wave coupling a†σ₊ + aσ₋ the total excitation number

    N = Σ_k n_k + (number of excited qubits)

is conserved, so the Hamiltonian is block diagonal per N.  All scenarios
treated here live in N ≤ 2, which makes a photon cutoff of 2 per resonator
exact rather than approximate.  The N = 1 block is 8-dimensional, the N = 2
block 32-dimensional; their basis orderings are frozen below and every index
set in the rest of the package refers to these orderings.

Units: ħ = 1, time in ns, angular frequencies in rad/ns.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import NamedTuple

import numpy as np

try:
    import tomllib as _toml
except ModuleNotFoundError:  # Python < 3.11
    import tomli as _toml

TWO_PI = 2.0 * math.pi

#: frequency conventions for converting GHz inputs to rad/ns
CONVENTIONS = ("cyclic", "angular")

#: representative device values in GHz (resonators, data qubits, ancillas,
#: couplings); used as the default parameter set throughout
DEFAULT_DEVICE_GHZ = {
    "f1": 8.14, "f2": 8.18, "f3": 8.1, "f4": 8.06,
    "fp1": 6.6, "fp2": 6.4, "fa": 5.9, "fb": 5.7,
    "g11": 0.51, "g22": 0.52, "g1a": 0.53, "g2a": 0.54,
    "g42": 0.5, "g4b": 0.49, "g3b": 0.48, "g31": 0.47,
}

_FREQ_KEYS = ("f1", "f2", "f3", "f4", "fp1", "fp2", "fa", "fb")
_COUPLING_KEYS = ("g11", "g1a", "g2a", "g22", "g42", "g4b", "g3b", "g31")


@dataclass(frozen=True)
class SystemParams:
    """All frequencies and couplings in rad/ns (angular units)."""

    w1: float
    w2: float
    w3: float
    w4: float
    wp1: float
    wp2: float
    wa: float
    wb: float
    g11: float
    g1a: float
    g2a: float
    g22: float
    g42: float
    g4b: float
    g3b: float
    g31: float
    convention: str = "cyclic"

    def __post_init__(self):
        for name in ("w1", "w2", "w3", "w4", "wp1", "wp2", "wa", "wb"):
            w = getattr(self, name)
            if not (math.isfinite(w) and w > 0):
                raise ValueError(f"frequency {name} must be positive, got {w}")
        for name in _COUPLING_KEYS:
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"coupling {name} must be finite")
        if self.convention not in CONVENTIONS:
            raise ValueError(f"unknown convention {self.convention!r}")

    def couplings(self) -> dict:
        return {k: getattr(self, k) for k in _COUPLING_KEYS}

    def without_couplings(self) -> "SystemParams":
        """Free-evolution limit: all couplings zero."""
        return replace(self, **{k: 0.0 for k in _COUPLING_KEYS})


def from_frequencies_ghz(values: dict, convention: str = "cyclic") -> SystemParams:
    """Build SystemParams from tabulated values under the chosen convention.

    convention "cyclic" sets ω = 2π·f (rad/ns per GHz) for the mode and qubit
    frequencies; "angular" takes them as angular frequencies directly, ω = f.
    Couplings are used as angular rates (rad/ns) in both conventions: only
    this reading reproduces the reported syndrome-probability magnitudes
    (no-error capture dipping to ≈0.992 for one stable input, error-syndrome
    probabilities below 1e-4/1e-7), whereas scaling the couplings by 2π as
    well yields percent-level ancilla leakage.
    """
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    missing = [k for k in _FREQ_KEYS + _COUPLING_KEYS if k not in values]
    if missing:
        raise ValueError(f"missing parameter keys: {missing}")
    for k in _FREQ_KEYS:
        if not values[k] > 0:
            raise ValueError(f"frequency {k} must be positive, got {values[k]}")
    scale = TWO_PI if convention == "cyclic" else 1.0
    w = {k: scale * float(values[k]) for k in _FREQ_KEYS}
    w.update({k: float(values[k]) for k in _COUPLING_KEYS})
    return SystemParams(
        w1=w["f1"], w2=w["f2"], w3=w["f3"], w4=w["f4"],
        wp1=w["fp1"], wp2=w["fp2"], wa=w["fa"], wb=w["fb"],
        g11=w["g11"], g1a=w["g1a"], g2a=w["g2a"], g22=w["g22"],
        g42=w["g42"], g4b=w["g4b"], g3b=w["g3b"], g31=w["g31"],
        convention=convention,
    )


def default_params(convention: str = "cyclic") -> SystemParams:
    return from_frequencies_ghz(DEFAULT_DEVICE_GHZ, convention)


def load_params(path) -> SystemParams:
    """Read a flat TOML parameter file (f1..f4, fp1, fp2, fa, fb, g.., convention)."""
    with open(path, "rb") as fh:
        data = _toml.load(fh)
    convention = data.pop("convention", "cyclic")
    return from_frequencies_ghz(data, convention)


class BasisLabel(NamedTuple):
    """Product-state label |r1 r2 r3 r4⟩ ⊗ |q1 q2⟩ ⊗ |qa qb⟩."""

    r1: int
    r2: int
    r3: int
    r4: int
    q1: int
    q2: int
    qa: int
    qb: int

    @property
    def resonators(self) -> tuple:
        return (self.r1, self.r2, self.r3, self.r4)

    @property
    def data_bits(self) -> tuple:
        return (self.q1, self.q2)

    @property
    def ancilla_bits(self) -> tuple:
        return (self.qa, self.qb)


def excitation_number(label: BasisLabel) -> int:
    return sum(label)


def _label(r=(0, 0, 0, 0), q=(0, 0), a=(0, 0)) -> BasisLabel:
    return BasisLabel(*r, *q, *a)


GROUND_LABEL = _label()

#: qubit slots in fixed order (data 1, data 2, ancilla a, ancilla b)
_QUBIT_SLOTS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def _photon(mode: int, n: int = 1) -> tuple:
    r = [0, 0, 0, 0]
    r[mode] = n
    return tuple(r)


def _level1_labels() -> list:
    labels = [_label(r=_photon(m)) for m in range(4)]
    labels += [_label(q=s[:2], a=s[2:]) for s in _QUBIT_SLOTS]
    return labels


def _level2_labels() -> list:
    labels = []
    # two photons: modes (i, j) with i <= j
    for i in range(4):
        for j in range(i, 4):
            r = [0, 0, 0, 0]
            r[i] += 1
            r[j] += 1
            labels.append(_label(r=tuple(r)))
    # one photon and one excited qubit
    for m in range(4):
        for s in _QUBIT_SLOTS:
            labels.append(_label(r=_photon(m), q=s[:2], a=s[2:]))
    # two excited qubits: slots (i, j) with i < j
    for i in range(4):
        for j in range(i + 1, 4):
            s = tuple(x + y for x, y in zip(_QUBIT_SLOTS[i], _QUBIT_SLOTS[j]))
            labels.append(_label(q=s[:2], a=s[2:]))
    return labels


LEVEL1_LABELS = tuple(_level1_labels())
LEVEL2_LABELS = tuple(_level2_labels())


@dataclass(frozen=True)
class ExcitationBasis:
    level: int
    labels: tuple


def excitation_basis(level: int) -> ExcitationBasis:
    if level == 0:
        return ExcitationBasis(0, (GROUND_LABEL,))
    if level == 1:
        return ExcitationBasis(1, LEVEL1_LABELS)
    if level == 2:
        return ExcitationBasis(2, LEVEL2_LABELS)
    raise ValueError(f"only excitation levels 0..2 are enumerated, got {level}")


def ground_energy(p: SystemParams) -> float:
    """E₀ = ½(ω₁+ω₂+ω₃+ω₄ − ω′₁ − ω′₂ − ω_a − ω_b)."""
    return 0.5 * (p.w1 + p.w2 + p.w3 + p.w4 - p.wp1 - p.wp2 - p.wa - p.wb)


# Hamiltonian blocks.  The entries below are transcribed literally rather
# than generated from the label list, so that the independently constructed
# full-space operator (oracle module) provides a genuine cross-check of both.

def build_h1(p: SystemParams) -> np.ndarray:
    """8×8 Hamiltonian block on the first excitation level."""
    e0 = ground_energy(p)
    h = np.zeros((8, 8))
    diag = (p.w1, p.w2, p.w3, p.w4, p.wp1, p.wp2, p.wa, p.wb)
    for i, w in enumerate(diag):
        h[i, i] = e0 + w
    off = {
        (1, 5): p.g11, (1, 7): p.g1a,
        (2, 6): p.g22, (2, 7): p.g2a,
        (3, 5): p.g31, (3, 8): p.g3b,
        (4, 6): p.g42, (4, 8): p.g4b,
    }
    for (i, j), g in off.items():
        h[i - 1, j - 1] = g
        h[j - 1, i - 1] = g
    return h


_SQRT2 = math.sqrt(2.0)


def _h2_offdiagonals(p: SystemParams) -> dict:
    """Nonzero upper-triangle entries (1-based index pairs) of the N=2 block."""
    return {
        (1, 11): _SQRT2 * p.g11, (1, 13): _SQRT2 * p.g1a,
        (2, 12): p.g22, (2, 13): p.g2a, (2, 15): p.g11, (2, 17): p.g1a,
        (3, 11): p.g31, (3, 14): p.g3b, (3, 19): p.g11, (3, 21): p.g1a,
        (4, 12): p.g42, (4, 14): p.g4b, (4, 23): p.g11, (4, 25): p.g1a,
        (5, 16): _SQRT2 * p.g22, (5, 17): _SQRT2 * p.g2a,
        (6, 15): p.g31, (6, 18): p.g3b, (6, 20): p.g22, (6, 21): p.g2a,
        (7, 16): p.g42, (7, 18): p.g4b, (7, 24): p.g22, (7, 25): p.g2a,
        (8, 19): _SQRT2 * p.g31, (8, 22): _SQRT2 * p.g3b,
        (9, 20): p.g42, (9, 22): p.g4b, (9, 23): p.g31, (9, 26): p.g3b,
        (10, 24): _SQRT2 * p.g42, (10, 26): _SQRT2 * p.g4b,
        (11, 28): p.g1a,
        (12, 27): p.g11, (12, 30): p.g1a,
        (13, 28): p.g11,
        (14, 29): p.g11, (14, 32): p.g1a,
        (15, 27): p.g22, (15, 28): p.g2a,
        (16, 30): p.g2a,
        (17, 30): p.g22,
        (18, 31): p.g22, (18, 32): p.g2a,
        (19, 29): p.g3b,
        (20, 27): p.g31, (20, 31): p.g3b,
        (21, 28): p.g31, (21, 32): p.g3b,
        (22, 29): p.g31,
        (23, 27): p.g42, (23, 29): p.g4b,
        (24, 31): p.g4b,
        (25, 30): p.g42, (25, 32): p.g4b,
        (26, 31): p.g42,
    }


def build_h2(p: SystemParams) -> np.ndarray:
    """32×32 Hamiltonian block on the second excitation level."""
    e0 = ground_energy(p)
    ws = (p.w1, p.w2, p.w3, p.w4)
    wq = (p.wp1, p.wp2, p.wa, p.wb)
    h = np.zeros((32, 32))
    for k, label in enumerate(LEVEL2_LABELS):
        h[k, k] = e0 + sum(n * w for n, w in zip(label.resonators, ws)) \
            + sum(q * w for q, w in zip(label[4:], wq))
    for (i, j), g in _h2_offdiagonals(p).items():
        h[i - 1, j - 1] = g
        h[j - 1, i - 1] = g
    return h
