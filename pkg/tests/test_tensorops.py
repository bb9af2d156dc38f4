import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings

from hyperspec.core import build_hypergraph
from hyperspec.errors import (
    DimensionMismatch,
    InstanceTooLarge,
    NonPositiveScale,
    NotConverged,
    NotUnitVector,
)
from hyperspec.generators import complete_uniform, hyperstar, random_connected
from hyperspec.tensorops import (
    ADJACENCY,
    SIGNLESS_LAPLACIAN,
    adjacency,
    apply,
    brute_force_oracle,
    power_iteration,
    rayleigh,
    scaled_operator,
    signless_laplacian,
    signless_laplacian_radius,
    spectral_radius,
)

from conftest import hypergraphs, random_connected_batch

SINGLE = build_hypergraph(3, 3, [[1, 2, 3]])


def dense_adjacency_tensor(G):
    """Materialized order-k tensor with 1/(k-1)! on every ordering of each edge."""
    T = np.zeros((G.n,) * G.k)
    w = 1.0 / math.factorial(G.k - 1)
    for e in G.edges:
        for perm in itertools.permutations([v - 1 for v in e]):
            T[perm] = w
    return T


def dense_apply(T, x):
    out = T
    for _ in range(T.ndim - 1):
        out = out @ x
    return out


def test_apply_single_edge():
    assert np.array_equal(apply(adjacency(SINGLE), np.ones(3)), np.ones(3))


def test_apply_hyperstar_row_sums():
    G = hyperstar(3, 2)
    y = apply(adjacency(G), np.ones(G.n))
    assert y[0] == 2 and np.all(y[1:] == 1)


def test_row_sums_are_degrees(fixtures):
    for G in fixtures.values():
        ones = np.ones(G.n)
        assert np.array_equal(apply(adjacency(G), ones), np.asarray(G.degrees, dtype=float))
        assert np.array_equal(apply(signless_laplacian(G), ones), 2.0 * np.asarray(G.degrees))


@settings(max_examples=60, deadline=None)
@given(hypergraphs(max_n=6, ks=(2, 3, 4)))
def test_apply_matches_dense_tensor(G):
    x = np.random.default_rng(G.num_edges).uniform(0.1, 2.0, G.n)
    T = dense_adjacency_tensor(G)
    assert np.allclose(apply(adjacency(G), x), dense_apply(T, x), rtol=1e-12, atol=1e-14)
    q = dense_apply(T, x) + np.asarray(G.degrees) * x ** (G.k - 1)
    assert np.allclose(apply(signless_laplacian(G), x), q, rtol=1e-12, atol=1e-14)


def test_apply_guard_for_tiny_entries():
    x = np.array([1e-310, 2.0, 3.0])
    y = apply(adjacency(SINGLE), x)
    assert y[0] == 6.0
    assert y[1] == pytest.approx(3e-310, rel=1e-6)


def test_apply_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        apply(adjacency(SINGLE), np.ones(4))


def test_rayleigh():
    x = np.full(3, 3 ** (-1 / 3))
    assert rayleigh(SINGLE, x) == pytest.approx(1.0, abs=1e-14)
    assert rayleigh(SINGLE, np.array([1.0, 0.0, 0.0])) == 0.0
    with pytest.raises(NotUnitVector):
        rayleigh(SINGLE, np.ones(3))


@pytest.mark.parametrize("k, d", [(3, 4), (2, 5), (4, 3)])
def test_rayleigh_at_hyperstar_perron_vector(k, d):
    G = hyperstar(k, d)
    est = spectral_radius(G)
    assert rayleigh(G, est.vector) == pytest.approx(d ** (1 / k), abs=1e-9)


def test_power_iteration_fixture_values(fixtures):
    assert power_iteration(adjacency(fixtures["H1"]), tol=1e-8).eigenvalue == pytest.approx(6, abs=1e-6)
    assert power_iteration(adjacency(fixtures["H2"])).eigenvalue == pytest.approx(5, abs=1e-6)
    assert power_iteration(adjacency(SINGLE)).eigenvalue == pytest.approx(1, abs=1e-8)


def test_power_iteration_rejects_zero_shift_for_adjacency():
    with pytest.raises(ValueError):
        power_iteration(adjacency(SINGLE), shift=0.0)
    assert power_iteration(signless_laplacian(SINGLE), shift=0.0).eigenvalue == pytest.approx(2, abs=1e-8)


def test_not_converged_carries_estimate(fixtures):
    with pytest.raises(NotConverged) as info:
        power_iteration(adjacency(fixtures["H1"]), max_iter=3)
    est = info.value.estimate
    assert est is not None and not est.converged and est.lo <= est.eigenvalue <= est.hi


def test_estimate_invariants(fixtures):
    for G in fixtures.values():
        for est in (spectral_radius(G), signless_laplacian_radius(G)):
            assert est.lo <= est.eigenvalue <= est.hi
            assert np.all(est.vector > 0)
            assert abs(np.sum(est.vector**G.k) ** (1 / G.k) - 1) <= 1e-12
            assert est.converged and est.hi - est.lo <= 1e-10 * max(est.hi, 1)


def test_certificate_is_monotone():
    for G in random_connected_batch(60, seed=3):
        for op in (adjacency(G), signless_laplacian(G)):
            est = power_iteration(op, record_history=True)
            lo = np.array([h[0] for h in est.history])
            hi = np.array([h[1] for h in est.history])
            slack = 1e-12 * max(1.0, hi[0])
            assert np.all(np.diff(lo) >= -slack)
            assert np.all(np.diff(hi) <= slack)


def test_rayleigh_inside_certificate():
    for G in random_connected_batch(100, seed=4):
        est = spectral_radius(G)
        r = rayleigh(G, est.vector)
        assert est.lo - 1e-12 <= r <= est.hi + 1e-12


def test_spectral_radius_edgeless_and_components():
    G = build_hypergraph(4, 2, [])
    est = spectral_radius(G)
    assert est.eigenvalue == 0 and est.converged
    # S_8^3 on 1..17 plus a separate edge 18,19,20
    star = hyperstar(3, 8)
    G = build_hypergraph(20, 3, list(star.edges) + [[18, 19, 20]])
    est = spectral_radius(G)
    assert est.eigenvalue == pytest.approx(8 ** (1 / 3), abs=1e-6)
    assert np.all(est.vector[17:] == 0) and np.all(est.vector[:17] > 0)


def test_signless_laplacian_regular():
    assert signless_laplacian_radius(complete_uniform(5, 3)).eigenvalue == pytest.approx(12, abs=1e-6)
    assert signless_laplacian_radius(SINGLE).eigenvalue == pytest.approx(2, abs=1e-6)


def test_signless_laplacian_g2_window(fixtures):
    mu = signless_laplacian_radius(fixtures["G2"]).eigenvalue
    assert 2.6 <= mu <= 3.25
    oracle = brute_force_oracle(fixtures["G2"], SIGNLESS_LAPLACIAN)
    assert oracle.value == pytest.approx(mu, abs=1e-4)


def test_scaled_operator(fixtures):
    G = fixtures["H1"]
    A = adjacency(G)
    x = np.random.default_rng(0).uniform(0.5, 1.5, G.n)
    assert np.array_equal(apply(scaled_operator(A, np.ones(G.n)), x), apply(A, x))
    u = np.asarray(G.degrees, dtype=float)
    assert power_iteration(scaled_operator(A, u)).eigenvalue == pytest.approx(6, abs=1e-6)
    est = power_iteration(scaled_operator(adjacency(SINGLE), [1.0, 2.0, 3.0]))
    assert est.eigenvalue == pytest.approx(1, abs=1e-8)
    with pytest.raises(NonPositiveScale):
        scaled_operator(A, np.zeros(G.n))


def test_scaled_apply_is_diagonal_similarity():
    G = random_connected(np.random.default_rng(11), k_choices=(3,), max_n=6)
    u = np.random.default_rng(12).uniform(0.5, 2.0, G.n)
    x = np.random.default_rng(13).uniform(0.5, 2.0, G.n)
    T = dense_adjacency_tensor(G)
    # N = U^-(k-1) M U entrywise: N_{i...} = M_{i...} u_{i2}..u_{ik} / u_i^(k-1)
    expected = dense_apply(T, u * x) / u ** (G.k - 1)
    assert np.allclose(apply(scaled_operator(adjacency(G), u), x), expected, rtol=1e-12)


def test_oracle_examples(fixtures):
    assert brute_force_oracle(SINGLE).value == pytest.approx(1, abs=1e-6)
    assert brute_force_oracle(hyperstar(3, 4)).value == pytest.approx(4 ** (1 / 3), abs=1e-4)
    G2 = fixtures["G2"]
    assert brute_force_oracle(G2).value == pytest.approx(spectral_radius(G2).eigenvalue, abs=1e-4)
    with pytest.raises(InstanceTooLarge):
        brute_force_oracle(fixtures["H1"])


def test_oracle_is_feasible_lower_bound():
    for G in random_connected_batch(30, seed=5, max_n=8):
        res = brute_force_oracle(G, restarts=3)
        assert np.all(res.vector >= 0)
        assert rayleigh(G, res.vector) == pytest.approx(res.value, rel=1e-12)
        est = spectral_radius(G)
        assert est.eigenvalue - 1e-4 <= res.value <= est.hi + 1e-6


def test_adjacency_and_kind_aliases():
    assert adjacency(SINGLE).kind == ADJACENCY
    assert signless_laplacian(SINGLE).kind == SIGNLESS_LAPLACIAN
    with pytest.raises(ValueError):
        brute_force_oracle(SINGLE, "laplacian")
