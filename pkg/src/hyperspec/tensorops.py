"""Implicit adjacency / signless Laplacian tensor operators and eigensolvers.

The adjacency tensor of a k-uniform hypergraph has entry ``1/(k-1)!`` on each
ordering of an edge, so applying it to ``x`` collapses to

    (A x)_i = sum over edges e containing i of prod_{v in e, v != i} x_v

and the signless Laplacian adds ``d_i x_i^(k-1)``. Neither tensor is ever
materialized; one application costs O(|E| k).
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np
from scipy.optimize import minimize

from hyperspec.core import Hypergraph, component_subhypergraph, connected_components
from hyperspec.errors import (
    DimensionMismatch,
    InstanceTooLarge,
    NonPositiveIterate,
    NonPositiveScale,
    NotConverged,
    NotUnitVector,
)

ADJACENCY = "adjacency"
SIGNLESS_LAPLACIAN = "signless_laplacian"
_KINDS = (ADJACENCY, SIGNLESS_LAPLACIAN)
_TINY = 1e-300

DEFAULT_SHIFT = 1.0
DEFAULT_TOL = 1e-10
DEFAULT_MAX_ITER = 10**6


def _kind(name: str) -> str:
    aliases = {"a": ADJACENCY, "adj": ADJACENCY, "q": SIGNLESS_LAPLACIAN, "qlap": SIGNLESS_LAPLACIAN}
    kind = aliases.get(name, name)
    if kind not in _KINDS:
        raise ValueError(f"unknown operator kind {name!r}")
    return kind


@dataclass(frozen=True)
class TensorOperator:
    """``kind`` in {adjacency, signless_laplacian}; ``scale`` (if set) gives U^-(k-1) T U."""

    kind: str
    hypergraph: Hypergraph
    scale: np.ndarray | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "kind", _kind(self.kind))

    @property
    def n(self) -> int:
        return self.hypergraph.n

    @property
    def k(self) -> int:
        return self.hypergraph.k

    def apply(self, x) -> np.ndarray:
        return apply(self, x)


def adjacency(G: Hypergraph) -> TensorOperator:
    return TensorOperator(ADJACENCY, G)


def signless_laplacian(G: Hypergraph) -> TensorOperator:
    return TensorOperator(SIGNLESS_LAPLACIAN, G)


def _leave_one_out(P: np.ndarray) -> np.ndarray:
    """Row-wise products of all entries but one, shape preserved."""
    full = P.prod(axis=1)
    out = np.empty_like(P)
    small = (P < _TINY).any(axis=1)
    ok = ~small
    out[ok] = full[ok, None] / P[ok]
    if small.any():
        # prefix * suffix products avoid dividing by ~0
        S = P[small]
        pre = np.cumprod(np.hstack([np.ones((S.shape[0], 1)), S[:, :-1]]), axis=1)
        suf = np.cumprod(np.hstack([np.ones((S.shape[0], 1)), S[:, :0:-1]]), axis=1)[:, ::-1]
        out[small] = pre * suf
    return out


def _adjacency_apply(G: Hypergraph, x: np.ndarray) -> np.ndarray:
    E = G.edge_array
    if E.shape[0] == 0:
        return np.zeros(G.n)
    loo = _leave_one_out(x[E])
    return np.bincount(E.ravel(), weights=loo.ravel(), minlength=G.n)


def apply(T: TensorOperator, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    G = T.hypergraph
    if x.shape != (G.n,):
        raise DimensionMismatch(f"vector of shape {x.shape}, operator dimension {G.n}")
    k = G.k
    z = x if T.scale is None else T.scale * x
    y = _adjacency_apply(G, z)
    if T.kind == SIGNLESS_LAPLACIAN:
        y = y + np.asarray(G.degrees, dtype=float) * z ** (k - 1)
    if T.scale is not None:
        y = y / T.scale ** (k - 1)
    return y


def scaled_operator(T: TensorOperator, u) -> TensorOperator:
    """Diagonal similarity ``U^-(k-1) T U``; composes with an existing scale."""
    u = np.asarray(u, dtype=float)
    if u.shape != (T.n,):
        raise DimensionMismatch(f"scale of shape {u.shape}, operator dimension {T.n}")
    if not np.all(u > 0) or not np.all(np.isfinite(u)):
        raise NonPositiveScale("scale entries must be finite and strictly positive")
    if T.scale is not None:
        u = T.scale * u
    return replace(T, scale=u)


def k_norm(x, k: int) -> float:
    return float(np.sum(np.abs(x) ** k) ** (1.0 / k))


def rayleigh(G: Hypergraph, x, kind: str = ADJACENCY) -> float:
    """``x^T (T x)`` for nonnegative unit (k-norm) ``x``.

    For the adjacency tensor this is ``k * sum_e prod_{v in e} x_v``.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (G.n,):
        raise DimensionMismatch(f"vector of shape {x.shape}, hypergraph has {G.n} vertices")
    if abs(k_norm(x, G.k) - 1.0) > 1e-9:
        raise NotUnitVector(f"||x||_k = {k_norm(x, G.k)!r}")
    E = G.edge_array
    val = G.k * float(x[E].prod(axis=1).sum()) if E.shape[0] else 0.0
    if _kind(kind) == SIGNLESS_LAPLACIAN:
        val += float(np.dot(np.asarray(G.degrees, dtype=float), x**G.k))
    return val


@dataclass
class EigenEstimate:
    """Eigenvalue with a Collatz-Wielandt certificate ``lo <= rho <= hi``."""

    eigenvalue: float
    vector: np.ndarray
    lo: float
    hi: float
    iterations: int
    converged: bool
    shift: float
    history: list[tuple[float, float]] | None = None

    @property
    def gap(self) -> float:
        return self.hi - self.lo

    def as_dict(self) -> dict:
        return {
            "lambda": self.eigenvalue,
            "lo": self.lo,
            "hi": self.hi,
            "iterations": self.iterations,
            "converged": self.converged,
            "shift": self.shift,
        }


def power_iteration(
    T: TensorOperator,
    shift: float = DEFAULT_SHIFT,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
    x0=None,
    record_history: bool = False,
) -> EigenEstimate:
    """Shifted NQZ iteration for the Perron pair of a weakly irreducible operator.

    Iterates ``y = T x + shift * x^[k-1]``, ``x <- y^[1/(k-1)] / ||.||_k``. The
    bounds ``min/max_i y_i / x_i^(k-1) - shift`` bracket the spectral radius at
    every step; iteration stops once ``hi - lo <= tol * max(hi, 1)``.

    The hypergraph must be connected. ``shift`` must be positive for the
    adjacency operator (its diagonal is zero).
    """
    k = T.k
    if shift < 0 or (T.kind == ADJACENCY and shift <= 0):
        raise ValueError(f"shift must be > 0 for adjacency and >= 0 otherwise, got {shift}")
    x = np.ones(T.n) if x0 is None else np.asarray(x0, dtype=float).copy()
    if not np.all(x > 0):
        raise NonPositiveIterate("initial vector must be strictly positive")
    x /= k_norm(x, k)
    hist = [] if record_history else None
    lo = hi = np.nan
    for it in range(1, max_iter + 1):
        xk = x ** (k - 1)
        y = apply(T, x) + shift * xk
        ratios = y / xk
        lo, hi = float(ratios.min()) - shift, float(ratios.max()) - shift
        if hist is not None:
            hist.append((lo, hi))
        if hi - lo <= tol * max(hi, 1.0):
            return EigenEstimate(0.5 * (lo + hi), x, lo, hi, it, True, shift, hist)
        z = y ** (1.0 / (k - 1))
        if not np.all(z > 0):
            raise NonPositiveIterate(f"iterate has a zero entry at step {it}; is the input connected?")
        x = z / k_norm(z, k)
    est = EigenEstimate(0.5 * (lo + hi), x, lo, hi, max_iter, False, shift, hist)
    raise NotConverged(f"no convergence in {max_iter} iterations (gap {hi - lo:.3e})", est)


def _radius(
    G: Hypergraph,
    kind: str,
    shift: float,
    tol: float,
    max_iter: int,
) -> EigenEstimate:
    if G.num_edges == 0:
        v = np.zeros(G.n)
        if G.n:
            v[0] = 1.0
        return EigenEstimate(0.0, v, 0.0, 0.0, 0, True, shift)
    comps = connected_components(G)
    if comps.is_connected:
        return power_iteration(TensorOperator(kind, G), shift, tol, max_iter)
    best = None
    for members in comps.components:
        if len(members) == 1 and G.degree(next(iter(members))) == 0:
            continue
        sub, labels = component_subhypergraph(G, members)
        try:
            est = power_iteration(TensorOperator(kind, sub), shift, tol, max_iter)
        except NotConverged as exc:
            exc.estimate = _embed(exc.estimate, labels, G.n)
            raise
        if best is None or est.eigenvalue > best.eigenvalue:
            best = _embed(est, labels, G.n)
    return best


def _embed(est: EigenEstimate, labels: dict[int, int], n: int) -> EigenEstimate:
    v = np.zeros(n)
    for new, old in labels.items():
        v[old - 1] = est.vector[new - 1]
    return replace(est, vector=v)


def spectral_radius(
    G: Hypergraph,
    shift: float = DEFAULT_SHIFT,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> EigenEstimate:
    """rho(G). Disconnected inputs are solved per component; the best one is reported."""
    return _radius(G, ADJACENCY, shift, tol, max_iter)


def signless_laplacian_radius(
    G: Hypergraph,
    shift: float = DEFAULT_SHIFT,
    tol: float = DEFAULT_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> EigenEstimate:
    """mu(G), the spectral radius of the signless Laplacian tensor."""
    return _radius(G, SIGNLESS_LAPLACIAN, shift, tol, max_iter)


@dataclass
class OracleResult:
    value: float
    vector: np.ndarray
    restarts: int
    seed: int


def brute_force_oracle(
    G: Hypergraph,
    kind: str = ADJACENCY,
    restarts: int = 8,
    steps: int = 500,
    seed: int = 0,
    max_n: int = 12,
) -> OracleResult:
    """Maximize the Rayleigh value over the nonnegative k-norm sphere from random starts.

    Substituting ``y_i = x_i^k`` turns ``x^T(Ax) = k sum_e prod x_v`` into
    ``k sum_e (prod_{v in e} y_v)^(1/k)`` over the probability simplex, a sum of
    geometric means and hence concave; the signless Laplacian adds the linear
    term ``sum d_i y_i``. Every start therefore heads for the same global
    maximum. The returned value is evaluated at a feasible point, so it is
    always a lower bound on the spectral radius.
    """
    kind = _kind(kind)
    if G.n > max_n:
        raise InstanceTooLarge(f"n={G.n} exceeds oracle limit {max_n}")
    n, k = G.n, G.k
    E = G.edge_array
    deg = np.asarray(G.degrees, dtype=float)
    lin = deg if kind == SIGNLESS_LAPLACIAN else np.zeros(n)

    def neg_obj(y):
        y = np.clip(y, 0.0, None)
        g = y[E].prod(axis=1) ** (1.0 / k) if E.shape[0] else np.zeros(0)
        return -(k * g.sum() + lin @ y)

    def neg_grad(y):
        y = np.clip(y, 1e-15, None)
        grad = lin.copy()
        if E.shape[0]:
            g = y[E].prod(axis=1) ** (1.0 / k)
            grad += np.bincount(E.ravel(), weights=(g[:, None] / y[E]).ravel(), minlength=n)
        return -grad

    rng = np.random.default_rng(seed)
    best_val, best_x = -np.inf, None
    cons = ({"type": "eq", "fun": lambda y: y.sum() - 1.0, "jac": lambda y: np.ones(n)},)
    for r in range(restarts):
        y0 = np.full(n, 1.0 / n) if r == 0 else rng.dirichlet(np.ones(n))
        res = minimize(
            neg_obj, y0, jac=neg_grad, method="SLSQP", bounds=[(0.0, 1.0)] * n,
            constraints=cons, options={"maxiter": steps, "ftol": 1e-15},
        )
        x = np.clip(res.x, 0.0, None) ** (1.0 / k)
        if not np.any(x > 0):
            continue
        x /= k_norm(x, k)
        val = rayleigh(G, x, kind)
        if val > best_val:
            best_val, best_x = val, x
    return OracleResult(float(best_val), best_x, restarts, seed)
