"""Acceptance criteria 1-9, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line (shown even
without ``-s``). Run ``python3 tests/test_acceptance.py`` for the same lines
without pytest.
"""

import math
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperspec.bounds import (  # noqa: E402
    full_report,
    mu_upper_mo,
    mu_upper_theta,
    rho_upper_d,
    star_polynomial,
    star_value,
    yzl_edge_bounds,
)
from hyperspec.core import avg2_exact, build_hypergraph, is_regular  # noqa: E402
from hyperspec.generators import (  # noqa: E402
    blow_up,
    complete_uniform,
    cycle,
    fixture,
    hyperstar,
    random_connected,
    star_extremal,
)
from hyperspec.tensorops import (  # noqa: E402
    adjacency,
    brute_force_oracle,
    power_iteration,
    scaled_operator,
    signless_laplacian,
    signless_laplacian_radius,
    spectral_radius,
)

from conftest import random_connected_batch  # noqa: E402


def _batch(count, seed, **kw):
    return random_connected_batch(count, seed, **kw)


def criterion_1():
    lines = []
    ok = True
    for name, target in (("H1", 6), ("H2", 5)):
        G = fixture(name)
        t0 = time.perf_counter()
        est = spectral_radius(G, max_iter=10**5)
        wall = time.perf_counter() - t0
        m = set(avg2_exact(G))
        exact = len(m) == 1 and next(iter(m)) == target
        good = abs(est.eigenvalue - target) <= 1e-6 and est.iterations <= 10**5 and wall <= 1.0 and exact
        ok &= good
        lines.append(f"{name} rho={est.eigenvalue:.12f} it={est.iterations} t={wall:.3f}s m_min=m_max={target}:{exact}")
    return ok, "; ".join(lines)


def criterion_2():
    G1, G2, G3 = fixture("G1"), fixture("G2"), fixture("G3")
    th1, th2, th3 = (mu_upper_theta(G).bound for G in (G1, G2, G3))
    e2, e3 = yzl_edge_bounds(G2), yzl_edge_bounds(G3)
    mo1 = mu_upper_mo(G1).bound
    checks = [
        th2 == 3.25,
        tuple(e2) == (4.0, 3.25),
        abs(th3 - 12.18294) <= 1e-3,
        e3.tt2 == 10.0 and abs(e3.tt3 - 15.32159) <= 1e-3,
        abs(th1 - 8.125) <= 1e-9,
        mo1 > 8.125,
    ]
    detail = (f"theta(G2)={th2!r} tt(G2)={tuple(e2)} theta(G3)={th3:.6f} tt(G3)=({e3.tt2}, {e3.tt3:.6f}) "
              f"theta(G1)={th1!r} mo(G1)={mo1:.6f}")
    return all(checks), detail


def criterion_3():
    worst_star = 0.0
    for k in (2, 3, 4, 5):
        for d in range(1, 7):
            worst_star = max(worst_star, abs(spectral_radius(hyperstar(k, d)).eigenvalue - d ** (1 / k)))
    worst_f, worst_res, count = 0.0, 0.0, 0
    for k in (3, 4):
        for Delta in range(1, 6):
            for delta in range(1, Delta + 1):
                for gamma in range(1, delta + 1):
                    val = star_value(Delta, delta, gamma, k)
                    rho = spectral_radius(star_extremal(k, Delta, delta, gamma)).eigenvalue
                    worst_f = max(worst_f, abs(rho - val))
                    worst_res = max(worst_res, star_polynomial(Delta, delta, gamma, k).relative_residual(val, k))
                    count += 1
    ok = worst_star <= 1e-6 and worst_f <= 1e-6 and worst_res <= 1e-8
    return ok, f"hyperstar max err {worst_star:.2e}; {count} two-heart graphs max err {worst_f:.2e}, max rel residual {worst_res:.2e}"


def criterion_4():
    bases = [cycle(m) for m in range(3, 9)]
    bases += [complete_uniform(m, 2) for m in range(3, 7)]
    bases += [complete_uniform(m, 3) for m in range(4, 7)]
    bases += [complete_uniform(m, 4) for m in range(5, 7)]
    worst_rho = worst_mu = 0.0
    for H in bases:
        assert is_regular(H)
        G = blow_up(H)
        worst_rho = max(worst_rho, abs(spectral_radius(G).eigenvalue - rho_upper_d(G)))
        worst_mu = max(worst_mu, abs(signless_laplacian_radius(G).eigenvalue - mu_upper_mo(G).bound))
    ok = worst_rho <= 1e-6 and worst_mu <= 1e-6
    return ok, f"{len(bases)} blow-ups; rho vs degree bound max err {worst_rho:.2e}; mu vs root bound max err {worst_mu:.2e}"


def criterion_5():
    t0 = time.perf_counter()
    violations = []
    checked = 0
    for G in _batch(500, seed=5150, k_choices=(2, 3, 4), max_n=10):
        est = {"rho": spectral_radius(G), "mu": signless_laplacian_radius(G)}
        for e in full_report(G).applicable():
            checked += 1
            lo, hi = est[e.target].lo, est[e.target].hi
            if (e.kind == "lower" and e.value > lo + 1e-6) or (e.kind == "upper" and e.value < hi - 1e-6):
                violations.append((e.bound_id, G))
    wall = time.perf_counter() - t0
    ok = not violations and wall <= 60
    names = sorted({v[0] for v in violations})
    return ok, f"500 instances, {checked} bound checks, {len(violations)} violations {names} in {wall:.1f}s"


def criterion_6():
    worst = 0.0
    rng = np.random.default_rng(606)
    for G in _batch(100, seed=606, max_n=8):
        seed = int(rng.integers(2**31))
        for kind, solve in (("adjacency", spectral_radius), ("signless_laplacian", signless_laplacian_radius)):
            oracle = brute_force_oracle(G, kind, seed=seed)
            worst = max(worst, abs(oracle.value - solve(G).eigenvalue))
    return worst <= 1e-4, f"100 instances, rho and mu, max |oracle - power| = {worst:.2e}"


def criterion_7():
    rng = np.random.default_rng(707)
    worst = 0.0
    for i, G in enumerate(_batch(200, seed=707)):
        u = np.exp(rng.uniform(-1.5, 1.5, G.n))
        op = adjacency(G) if i % 2 == 0 else signless_laplacian(G)
        plain = power_iteration(op).eigenvalue
        scaled = power_iteration(scaled_operator(op, u)).eigenvalue
        worst = max(worst, abs(scaled - plain) / plain)
    return worst <= 1e-6, f"200 cases, max relative difference {worst:.2e}"


def criterion_8():
    rng = np.random.default_rng(808)
    worst = -math.inf
    for G in _batch(200, seed=808):
        drop = int(rng.integers(G.num_edges))
        H = build_hypergraph(G.n, G.k, [e for i, e in enumerate(G.edges) if i != drop])
        worst = max(worst, spectral_radius(H).eigenvalue - spectral_radius(G).eigenvalue)
    return worst <= 1e-8, f"200 deletions, max increase {worst:.2e}"


def dense_power_method(M, tol=1e-15, max_iter=200000):
    """Perron root of a nonnegative irreducible matrix by power iteration on M + I."""
    S = M + np.eye(len(M))
    x = np.ones(len(M)) / math.sqrt(len(M))
    lam = 0.0
    for _ in range(max_iter):
        y = S @ x
        new = float(x @ y)
        x = y / np.linalg.norm(y)
        if abs(new - lam) <= tol * new:
            break
        lam = new
    return float(x @ S @ x) - 1.0


def criterion_9():
    worst = 0.0
    worst_eigh = 0.0
    mo_ok = True
    for G in _batch(200, seed=909, k_choices=(2,), max_n=8):
        A = np.zeros((G.n, G.n))
        for a, b in G.edges:
            A[a - 1, b - 1] = A[b - 1, a - 1] = 1.0
        Q = np.diag(A.sum(axis=1)) + A
        rho, mu = spectral_radius(G).eigenvalue, signless_laplacian_radius(G).eigenvalue
        worst = max(worst, abs(rho - dense_power_method(A)), abs(mu - dense_power_method(Q)))
        worst_eigh = max(worst_eigh, abs(rho - np.linalg.eigvalsh(A)[-1]), abs(mu - np.linalg.eigvalsh(Q)[-1]))
        d1, d2 = sorted(G.degrees, reverse=True)[:2]
        mo = mu_upper_mo(G)
        expected_star = 1.0 if d1 == d2 else d1 / d2
        mo_ok &= mo.d_star == expected_star and abs(mo.bound - (d1 + d2)) <= 1e-12 * (d1 + d2)
    ok = worst <= 1e-8 and worst_eigh <= 1e-8 and mo_ok
    return ok, f"200 graphs, max err vs dense power {worst:.2e}, vs eigvalsh {worst_eigh:.2e}, root bound = d1+d2: {mo_ok}"


CRITERIA = {
    1: ("fixture eigenvalues", criterion_1),
    2: ("worked bound values", criterion_2),
    3: ("closed-form equality families", criterion_3),
    4: ("blow-up equality", criterion_4),
    5: ("bracketing property suite", criterion_5),
    6: ("oracle equivalence", criterion_6),
    7: ("diagonal-similarity invariance", criterion_7),
    8: ("subhypergraph monotonicity", criterion_8),
    9: ("k = 2 regression", criterion_9),
}


def run_criterion(number):
    title, fn = CRITERIA[number]
    ok, detail = fn()
    line = f"criterion {number} ({title}): {'PASS' if ok else 'FAIL'} | {detail}"
    return ok, line


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number, capsys):
    ok, line = run_criterion(number)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(n) for n in sorted(CRITERIA)]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
