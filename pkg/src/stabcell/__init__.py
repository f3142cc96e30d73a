"""
Simulator for a minimal stabilizer cell — two data qubits and two ancillas
coupled through four resonators — evolving under a rotating-wave
qubit-resonator Hamiltonian.

The package computes syndrome measurement probabilities, reduced data-qubit
density matrices and fidelities, re-insertion probabilities, rotating-frame
views and Kraus maps, and validates the block-diagonal subspace route
against an independent 1296-dimensional full-space construction.
"""
from .density import (
    KrausSet,
    corrected_fidelity,
    fidelity,
    kraus_elements,
    reduce_to_qubits,
)
from .frames import FrameKind, frame_phases, free_fidelity, free_reinsertion
from .linalg import JacobiConvergenceError, SpectralDecomposition, jacobi_eigendecompose
from .model import (
    DEFAULT_DEVICE_GHZ,
    BasisLabel,
    SystemParams,
    build_h1,
    build_h2,
    default_params,
    excitation_basis,
    from_frequencies_ghz,
    ground_energy,
    load_params,
)
from .pipeline import SimulationContext, TimePointResult, evaluate, make_context
from .reinsertion import ReinsertionReport, reinsert, verify_identity
from .syndrome import (
    SYNDROMES,
    BasisOrderError,
    ProjectedState,
    Scenario,
    derive_index_sets,
    measure,
    probabilities,
)

__version__ = "1.0.0"

__all__ = [
    "BasisLabel",
    "BasisOrderError",
    "DEFAULT_DEVICE_GHZ",
    "FrameKind",
    "JacobiConvergenceError",
    "KrausSet",
    "ProjectedState",
    "ReinsertionReport",
    "SYNDROMES",
    "Scenario",
    "SimulationContext",
    "SpectralDecomposition",
    "SystemParams",
    "TimePointResult",
    "build_h1",
    "build_h2",
    "corrected_fidelity",
    "default_params",
    "derive_index_sets",
    "evaluate",
    "excitation_basis",
    "fidelity",
    "frame_phases",
    "free_fidelity",
    "free_reinsertion",
    "from_frequencies_ghz",
    "ground_energy",
    "jacobi_eigendecompose",
    "kraus_elements",
    "load_params",
    "make_context",
    "measure",
    "probabilities",
    "reduce_to_qubits",
    "reinsert",
    "verify_identity",
]
