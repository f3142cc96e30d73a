"""
End-to-end per-time-point computation shared by the CLI and the checks.

A SimulationContext freezes everything that does not depend on t (block
decomposition, ground energy, syndrome index sets, frame phases); evaluation
of distinct time points is then pure and independently parallelizable.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import density, frames, reinsertion, stabilizer
from .linalg import SpectralDecomposition, jacobi_eigendecompose
from .model import SystemParams, build_h1, build_h2, excitation_basis, ground_energy
from .syndrome import (
    SYNDROMES,
    Scenario,
    SyndromeIndexSets,
    derive_index_sets,
    measure,
    probabilities,
)


@dataclass(frozen=True)
class SimulationContext:
    params: SystemParams
    scenario: Scenario
    frame: frames.FrameKind
    e0: float
    decomp1: SpectralDecomposition
    decomp2: SpectralDecomposition
    sets: SyndromeIndexSets
    phases: np.ndarray

    @property
    def decomps(self) -> dict:
        return {1: self.decomp1, 2: self.decomp2}


def make_context(
    params: SystemParams,
    scenario: Scenario,
    frame: frames.FrameKind = frames.FrameKind.LAB,
) -> SimulationContext:
    return SimulationContext(
        params=params,
        scenario=scenario,
        frame=frame,
        e0=ground_energy(params),
        decomp1=jacobi_eigendecompose(build_h1(params)),
        decomp2=jacobi_eigendecompose(build_h2(params)),
        sets=derive_index_sets(excitation_basis(2)),
        phases=frames.frame_phases(params, frame),
    )


@dataclass(frozen=True)
class TimePointResult:
    t: float
    probabilities: dict  # syndrome → p
    fidelities: dict  # syndrome → corrected fidelity (0.0 for dead branches)
    ptilde: dict  # syndrome → p̃ from re-inserting the no-error branch
    identity_residual: float


def branch_state(ctx: SimulationContext, t: float, syndrome: tuple):
    """Post-measurement state of one syndrome branch, in ctx's frame."""
    mu = ctx.scenario.evolve(ctx.decomp2, ctx.e0, t)
    post = measure(mu, syndrome, ctx.sets)
    return frames.transform_projected(post, ctx.phases, t)


def evaluate(ctx: SimulationContext, t: float) -> TimePointResult:
    mu = ctx.scenario.evolve(ctx.decomp2, ctx.e0, t)
    mu = frames.to_rotating_frame(mu, ctx.phases, t)
    probs = probabilities(mu, ctx.sets)

    fids = {}
    for s in SYNDROMES:
        post = measure(mu, s, ctx.sets)
        if post.amplitudes is None:
            fids[s] = 0.0
            continue
        rho = density.reduce_to_qubits(post)
        fids[s] = density.corrected_fidelity(ctx.scenario, s, rho)

    no_err = measure(mu, ctx.scenario.no_error_syndrome, ctx.sets)
    report = reinsertion.verify_identity(no_err, t)
    return TimePointResult(
        t=t,
        probabilities=probs,
        fidelities=fids,
        ptilde=report.ptilde,
        identity_residual=report.max_residual,
    )
