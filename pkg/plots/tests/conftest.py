"""Shared fixtures: golden sweep CSVs produced by the simulator CLI."""
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def phi_lab_csv() -> Path:
    return DATA_DIR / "golden_phi_lab.csv"


@pytest.fixture(scope="session")
def phi_rot_csv() -> Path:
    return DATA_DIR / "golden_phi_rot.csv"


@pytest.fixture(scope="session")
def psi_lab_csv() -> Path:
    return DATA_DIR / "golden_psi_lab.csv"
