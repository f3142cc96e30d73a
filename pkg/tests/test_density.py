"""Partial traces, fidelities and the operator-sum map."""
import numpy as np
import pytest

from stabcell import density
from stabcell.pipeline import branch_state, make_context
from stabcell.model import default_params
from stabcell.stabilizer import bell_state
from stabcell.syndrome import SYNDROMES, Scenario, measure, probabilities

TIMES = (0.4, 3.1, 11.8, 29.5)


@pytest.fixture(scope="module")
def contexts():
    p = default_params()
    return {s: make_context(p, s) for s in Scenario}


def _live_branches(ctx, t):
    for s in SYNDROMES:
        post = branch_state(ctx, t, s)
        if post.amplitudes is not None:
            yield post


def test_rho_hygiene(contexts):
    for ctx in contexts.values():
        for t in TIMES:
            for post in _live_branches(ctx, t):
                rho = density.reduce_to_qubits(post)
                assert np.max(np.abs(rho - rho.conj().T)) < 1e-12
                assert np.real(np.trace(rho)) == pytest.approx(1.0, abs=1e-12)
                assert np.linalg.eigvalsh(rho).min() > -1e-10


def test_fidelity_bounded_by_top_eigenvalue(contexts):
    ctx = contexts[Scenario.PHI_PLUS]
    for t in TIMES:
        for post in _live_branches(ctx, t):
            rho = density.reduce_to_qubits(post)
            top = np.linalg.eigvalsh(rho).max()
            for label in ("phi+", "psi+", "phi-", "psi-"):
                f = density.fidelity(bell_state(label), rho)
                assert f**2 <= top + 1e-12


def test_initial_state_fidelity_is_one(contexts):
    for scenario, ctx in contexts.items():
        post = branch_state(ctx, 0.0, scenario.no_error_syndrome)
        rho = density.reduce_to_qubits(post)
        f = density.fidelity(bell_state(scenario.target_bell), rho)
        assert f == pytest.approx(1.0, abs=1e-12)


def test_corrected_fidelity_reduces_to_plain_on_no_error(contexts):
    for scenario, ctx in contexts.items():
        for t in TIMES:
            post = branch_state(ctx, t, scenario.no_error_syndrome)
            rho = density.reduce_to_qubits(post)
            plain = density.fidelity(bell_state(scenario.target_bell), rho)
            corr = density.corrected_fidelity(
                scenario, scenario.no_error_syndrome, rho
            )
            assert corr == pytest.approx(plain, abs=1e-14)


def test_reduce_rejects_dead_branch():
    from stabcell.syndrome import ProjectedState

    with pytest.raises(ValueError):
        density.reduce_to_qubits(ProjectedState((1, 1), 0.0, None))


def test_kraus_matches_partial_trace(contexts):
    for scenario, ctx in contexts.items():
        bell = bell_state(scenario.target_bell)
        rho_in = np.outer(bell, bell.conj())
        for t in TIMES:
            mu = scenario.evolve(ctx.decomp2, ctx.e0, t)
            probs = probabilities(mu, ctx.sets)
            for s in SYNDROMES:
                post = measure(mu, s, ctx.sets)
                kset = density.kraus_elements(ctx.decomps, ctx.e0, scenario, s, t)
                total, trace = kset.apply(rho_in)
                assert trace == pytest.approx(probs[s], abs=1e-10)
                if post.amplitudes is None:
                    continue
                rho = density.reduce_to_qubits(post)
                assert np.max(np.abs(total / trace - rho)) < 1e-10


def test_kraus_completeness_on_tracked_inputs(contexts):
    # summed over syndromes the channel is trace-preserving for the
    # analyzed inputs
    for scenario, ctx in contexts.items():
        bell = bell_state(scenario.target_bell)
        rho_in = np.outer(bell, bell.conj())
        total = 0.0
        for s in SYNDROMES:
            kset = density.kraus_elements(ctx.decomps, ctx.e0, scenario, s, 7.3)
            total += kset.apply(rho_in)[1]
        assert total == pytest.approx(1.0, abs=1e-10)
