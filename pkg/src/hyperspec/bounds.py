"""Degree and average 2-degree bounds on rho(G) and mu(G), with sharpness detection.

Notation: d_(1) >= d_(2) >= ... are sorted degrees and m_(1) >= m_(2) >= ...
sorted average 2-degrees. In the theta/gamma min-max bounds, each rank is
paired with the degree *of the same vertex*; d and m are never sorted
independently there.

Sharp flags are ``True``/``False`` only where an equality characterization
is known and decidable (connected inputs); otherwise ``None``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import NamedTuple

import numpy as np

from hyperspec.core import (
    DegreeProfile,
    Hypergraph,
    connected_components,
    degree_profile,
    has_equal_avg2_degrees,
    is_blowup_of_regular,
    is_regular,
)
from hyperspec.errors import HypergraphError, IsolatedVertexPresent, NoEdges, ParameterOrder

PRINTED = "printed"
EXCLUDE_SCALED = "exclude_scaled"


def _need_edges(G: Hypergraph):
    if G.num_edges == 0:
        raise NoEdges("bound needs at least one edge")


def _avg2_profile(G: Hypergraph) -> DegreeProfile:
    p = degree_profile(G)
    if p.avg2 is None:
        raise IsolatedVertexPresent("bound needs a hypergraph without isolated vertices")
    return p


def _top_two(values) -> tuple[float, float]:
    s = sorted(values, reverse=True)
    return s[0], s[1]


def _combine(a: float, b: float, k: int) -> float:
    """a^(1/k) b^(1-1/k), written as b (a/b)^(1/k) so that a == b returns b exactly."""
    return b * (a / b) ** (1.0 / k)


# --- degree and average 2-degree row-sum bounds ----------------------------


class DegreeBounds(NamedTuple):
    rho_upper: int
    mu_upper: int
    rho_lower: int
    mu_lower: int


def degree_bounds(G: Hypergraph) -> DegreeBounds:
    """Row sums of A are the degrees, those of Q twice the degrees."""
    d = G.degrees
    hi, lo = (max(d), min(d)) if d else (0, 0)
    return DegreeBounds(hi, 2 * hi, lo, 2 * lo)


class Avg2Bounds(NamedTuple):
    rho_lower: float
    rho_upper: float


def avg2_bounds(G: Hypergraph) -> Avg2Bounds:
    p = _avg2_profile(G)
    return Avg2Bounds(min(p.avg2), max(p.avg2))


def rho_upper_m(G: Hypergraph) -> float:
    """rho <= m_(1)^(1/k) m_(2)^(1-1/k)."""
    p = _avg2_profile(G)
    m1, m2 = _top_two(p.avg2)
    return _combine(m1, m2, G.k)


def rho_lower_m(G: Hypergraph) -> float:
    """rho >= m_(n)^(1/k) m_(n-1)^(1-1/k)."""
    p = _avg2_profile(G)
    s = sorted(p.avg2)
    return _combine(s[0], s[1], G.k)


def rho_upper_d(G: Hypergraph) -> float:
    """rho <= d_(1)^(1/k) d_(2)^(1-1/k)."""
    _need_edges(G)
    d1, d2 = _top_two(G.degrees)
    return _combine(d1, d2, G.k)


# --- two-heart lower bound --------------------------------------------------


def star_value(Delta: int, delta: int, gamma: int, k: int) -> float:
    """Largest positive root rho of (rho^k - Delta + gamma)(rho^2k - B rho^k + C)."""
    s = Delta + delta - 2 * gamma
    disc = (Delta - delta) ** 2 + gamma**4 + 2 * s * gamma**2
    return ((s + gamma**2 + math.sqrt(disc)) / 2.0) ** (1.0 / k)


@dataclass(frozen=True)
class StarPolynomial:
    """Factors of f in the variable s = rho^k, highest degree first."""

    linear: tuple[int, int]
    quadratic: tuple[int, int, int]

    def __call__(self, rho: float, k: int) -> float:
        s = rho**k
        return np.polyval(self.linear, s) * np.polyval(self.quadratic, s)

    def relative_residual(self, rho: float, k: int) -> float:
        """|f(rho)| divided by the sum of the absolute values of its terms."""
        s = rho**k
        lin_terms = abs(self.linear[0] * s) + abs(self.linear[1])
        quad_terms = abs(self.quadratic[0] * s * s) + abs(self.quadratic[1] * s) + abs(self.quadratic[2])
        scale = lin_terms * quad_terms
        return abs(self(rho, k)) / scale if scale else abs(self(rho, k))

    def largest_root_s(self) -> float:
        """Largest real root in s over both factors."""
        a, b, c = self.quadratic
        quad = (-b + math.sqrt(b * b - 4 * a * c)) / (2 * a)
        return max(quad, -self.linear[1] / self.linear[0])


def star_polynomial(Delta: int, delta: int, gamma: int, k: int) -> StarPolynomial:
    if not 1 <= gamma <= delta <= Delta:
        raise ParameterOrder(f"need 1 <= gamma <= delta <= Delta, got ({Delta}, {delta}, {gamma})")
    return StarPolynomial(
        (1, -(Delta - gamma)),
        (1, -(Delta + delta - 2 * gamma + gamma**2), (Delta - gamma) * (delta - gamma)),
    )


@dataclass(frozen=True)
class StarBoundWitness:
    u: int
    v: int
    Delta: int
    delta: int
    gamma: int
    value: float
    sharp: bool | None = None


def _is_two_heart_shape(G: Hypergraph, u: int, v: int, Delta: int, delta: int, gamma: int) -> bool:
    """Is G the two-heart graph with hearts u, v (all other vertices of degree 1)?"""
    if G.num_edges != Delta + delta - gamma:
        return False
    if any(u not in e and v not in e for e in G.edges):
        return False
    return all(d == 1 for w, d in enumerate(G.degrees, start=1) if w not in (u, v))


def rho_lower_star(G: Hypergraph) -> StarBoundWitness:
    """Best two-heart lower bound over all max-degree u and their max-degree neighbours v."""
    _need_edges(G)
    deg = G.degrees
    Delta = max(deg)
    best = None
    for u in (w for w in range(1, G.n + 1) if deg[w - 1] == Delta):
        nbrs = G.neighbors(u)
        delta = max(deg[w - 1] for w in nbrs)
        for v in sorted(w for w in nbrs if deg[w - 1] == delta):
            gamma = len(G.edges_containing(u, v))
            val = star_value(Delta, delta, gamma, G.k)
            if best is None or val > best.value:
                best = StarBoundWitness(u, v, Delta, delta, gamma, val)
    if connected_components(G).is_connected:
        sharp = _is_two_heart_shape(G, best.u, best.v, best.Delta, best.delta, best.gamma)
    else:
        sharp = None
    return StarBoundWitness(**{**asdict(best), "sharp": sharp})


# --- signless Laplacian upper bounds ---------------------------------------


def h_poly(t: float, d1: float, d2: float, k: int) -> float:
    return d2 * t**k + (d2 - d1) * t ** (k - 1) - d1


class MoBound(NamedTuple):
    d_star: float
    bound: float


def mu_upper_mo(G: Hypergraph) -> MoBound:
    """mu <= d_(1) + d_(1) / d*^(k-1), d* the positive root of h (bisection)."""
    _need_edges(G)
    d1, d2 = _top_two(G.degrees)
    k = G.k
    if d1 == d2:
        return MoBound(1.0, 2.0 * d1)
    if k == 2:
        # h(t) = (d2 t - d1)(t + 1)
        t = d1 / d2
        return MoBound(t, d1 + d1 / t)
    lo, hi = (d1 / d2) ** (1.0 / k), d1 / d2
    t = 0.5 * (lo + hi)
    for _ in range(200):
        t = 0.5 * (lo + hi)
        val = h_poly(t, d1, d2, k)
        if abs(val) <= 1e-12 * d1 or hi - lo <= 1e-14 * hi:
            break
        if val < 0:
            lo = t
        else:
            hi = t
    return MoBound(t, d1 + d1 * (1.0 / t) ** (k - 1))


def mu_upper_mo_weaker(G: Hypergraph) -> float:
    """mu <= d_(1) + d_(1)^(1/k) d_(2)^(1-1/k)."""
    _need_edges(G)
    d1, d2 = _top_two(G.degrees)
    return d1 + _combine(d1, d2, G.k)


def mu_upper_m_plus_delta(G: Hypergraph) -> float:
    return rho_upper_m(G) + max(G.degrees)


@dataclass(frozen=True)
class ThetaBound:
    bound: float
    argmin_j: int
    scaled_vertex: int
    theta: dict[int, float] = field(repr=False)
    first: dict[int, float] = field(repr=False)


def _check_convention(convention: str):
    if convention not in (PRINTED, EXCLUDE_SCALED):
        raise ValueError(f"unknown index convention {convention!r}")


def mu_upper_theta(G: Hypergraph, convention: str = PRINTED) -> ThetaBound:
    """mu <= min_j max{ m_(1)^(1/k) m_j^(1-1/k) + d_(1), theta_j }.

    theta_j = max over vertices i other than the rank-1 vertex of
    m_(1)^(1/k) m_i m_j^(-1/k) + d_i. The rank-1 vertex is also the scaled
    vertex, so both index conventions coincide here. With several max-m
    vertices, each is tried as rank 1 and the smallest bound is returned.
    ``j`` and the table keys are vertex ids.
    """
    _check_convention(convention)
    p = _avg2_profile(G)
    m = np.asarray(p.avg2)
    d = np.asarray(p.degrees, dtype=float)
    k = G.k
    top = max(p.avg2_exact)
    best = None
    for r in (v for v in range(1, G.n + 1) if p.avg2_exact[v - 1] == top):
        t = (m[r - 1] / m) ** (1.0 / k)  # one scale per j
        first = m * t + d[r - 1]
        others = np.array([i for i in range(G.n) if i != r - 1])
        theta = (np.outer(t, m[others]) + d[others]).max(axis=1)
        vals = np.maximum(first, theta)
        j = int(np.argmin(vals))
        if best is None or vals[j] < best.bound:
            ids = range(1, G.n + 1)
            best = ThetaBound(
                float(vals[j]), j + 1, r,
                dict(zip(ids, theta.tolist())), dict(zip(ids, first.tolist())),
            )
    return best


class GammaBound(NamedTuple):
    bound: float
    argmax_j: int
    scaled_vertex: int


def mu_lower_gamma(G: Hypergraph, convention: str = PRINTED) -> GammaBound:
    """mu >= max_j min{ m_(n)^(1/k) m_j^(1-1/k) + d_(n), gamma_j }.

    gamma_j = min over i of m_(n)^(1/k) m_i m_j^(-1/k) + d_i, where i runs over
    ranks 2..n under the ``printed`` convention (fixed ranking; rank n is the
    last vertex of ``sorted_by_m``), and over every vertex except the scaled
    rank-n vertex under ``exclude_scaled`` (there every min-m vertex is tried
    as rank n and the largest bound kept).
    """
    _check_convention(convention)
    p = _avg2_profile(G)
    m = np.asarray(p.avg2)
    d = np.asarray(p.degrees, dtype=float)
    k = G.k
    order = p.sorted_by_m
    if convention == PRINTED:
        cases = [(order[-1], [v - 1 for v in order[1:]])]
    else:
        low = min(p.avg2_exact)
        cases = [
            (s, [i for i in range(G.n) if i != s - 1])
            for s in range(1, G.n + 1) if p.avg2_exact[s - 1] == low
        ]
    best = None
    for s, idx in cases:
        y = (m[s - 1] / m) ** (1.0 / k)
        first = m * y + d[s - 1]
        idx = np.asarray(idx)
        gam = (np.outer(y, m[idx]) + d[idx]).min(axis=1)
        vals = np.minimum(first, gam)
        j = int(np.argmax(vals))
        if best is None or vals[j] > best.bound:
            best = GammaBound(float(vals[j]), j + 1, s)
    return best


class EdgePairBounds(NamedTuple):
    tt2: float
    tt3: float | None


def yzl_edge_bounds(G: Hypergraph) -> EdgePairBounds:
    """Max over vertex pairs inside an edge of d_i + d_j, and of
    (d_i + d_j + sqrt((d_i - d_j)^2 + 4 m_i m_j)) / 2.

    ``tt3`` is ``None`` when some vertex is isolated.
    """
    _need_edges(G)
    p = degree_profile(G)
    d = p.degrees
    pairs = {(a, b) for e in G.edges for a in e for b in e if a < b}
    tt2 = max(d[a - 1] + d[b - 1] for a, b in pairs)
    tt3 = None
    if p.avg2 is not None:
        m = p.avg2
        tt3 = max(
            (d[a - 1] + d[b - 1] + math.sqrt((d[a - 1] - d[b - 1]) ** 2 + 4 * m[a - 1] * m[b - 1])) / 2
            for a, b in pairs
        )
    return EdgePairBounds(float(tt2), tt3)


# --- report -----------------------------------------------------------------

RHO, MU = "rho", "mu"
UPPER, LOWER = "upper", "lower"


@dataclass
class BoundEntry:
    bound_id: str
    kind: str
    target: str
    value: float | None
    sharp: bool | None
    citation: str
    inapplicable: str | None = None
    witness: dict | None = None

    @property
    def applicable(self) -> bool:
        return self.value is not None

    def as_dict(self) -> dict:
        return {
            "boundId": self.bound_id,
            "kind": self.kind,
            "target": self.target,
            "value": self.value,
            "inapplicable": self.inapplicable,
            "sharp": self.sharp,
            "citation": self.citation,
            "witness": self.witness,
        }


@dataclass
class BoundReport:
    entries: list[BoundEntry]

    def get(self, bound_id: str) -> BoundEntry:
        for e in self.entries:
            if e.bound_id == bound_id:
                return e
        raise KeyError(bound_id)

    def applicable(self, target: str | None = None, kind: str | None = None) -> list[BoundEntry]:
        return [
            e for e in self.entries
            if e.applicable and (target is None or e.target == target) and (kind is None or e.kind == kind)
        ]

    def as_list(self) -> list[dict]:
        return [e.as_dict() for e in self.entries]


CITATIONS = {
    "rhoUpperDegree": "rho <= max degree (row sums of A)",
    "muUpperDegree": "mu <= 2 * max degree (row sums of Q)",
    "rhoLowerDegree": "rho >= min degree (row sums of A)",
    "muLowerDegree": "mu >= 2 * min degree (row sums of Q)",
    "rhoUpperAvg2": "rho <= max_i m_i (row sums after scaling by degrees)",
    "rhoLowerAvg2": "rho >= min_i m_i (row sums after scaling by degrees)",
    "rhoUpperM": "rho <= m_(1)^(1/k) m_(2)^(1-1/k)",
    "rhoUpperD": "rho <= d_(1)^(1/k) d_(2)^(1-1/k)",
    "rhoLowerM": "rho >= m_(n)^(1/k) m_(n-1)^(1-1/k)",
    "rhoLowerStar": "rho >= two-heart value f(Delta, delta, gamma)",
    "muUpperMo": "mu <= d_(1) + d_(1) / d*^(k-1), h(d*) = 0",
    "muUpperMoWeaker": "mu <= d_(1) + d_(1)^(1/k) d_(2)^(1-1/k)",
    "muUpperMPlusDelta": "mu <= m_(1)^(1/k) m_(2)^(1-1/k) + max degree",
    "thetaBound": "mu <= min_j max{m_(1)^(1/k) m_j^(1-1/k) + d_(1), theta_j}",
    "gammaBound": "mu >= max_j min{m_(n)^(1/k) m_j^(1-1/k) + d_(n), gamma_j} (ranks 2..n)",
    "gammaBoundExcl": "mu >= max_j min{m_(n)^(1/k) m_j^(1-1/k) + d_(n), gamma_j} (i != scaled vertex)",
    "tt2": "mu <= max over edge pairs of d_i + d_j",
    "tt3": "mu <= max over edge pairs of (d_i + d_j + sqrt((d_i - d_j)^2 + 4 m_i m_j)) / 2",
}


def full_report(G: Hypergraph) -> BoundReport:
    """Every bound, each either a value or the hypothesis it needs."""
    connected = connected_components(G).is_connected and G.num_edges > 0
    no_isolated = G.n > 0 and min(G.degrees) > 0
    regular = bool(is_regular(G))
    blowup = bool(is_blowup_of_regular(G))
    equal_m = has_equal_avg2_degrees(G) if no_isolated else False
    entries: list[BoundEntry] = []

    def add(bid, kind, target, fn, sharp=None):
        try:
            value, witness = fn()
        except HypergraphError as exc:
            entries.append(BoundEntry(bid, kind, target, None, None, CITATIONS[bid], f"{type(exc).__name__}: {exc}"))
            return
        entries.append(BoundEntry(bid, kind, target, float(value), sharp if connected else None, CITATIONS[bid], None, witness))

    def plain(f):
        return lambda: (f(G), None)

    db = degree_bounds(G)
    add("rhoUpperDegree", UPPER, RHO, lambda: (db.rho_upper, None), regular)
    add("muUpperDegree", UPPER, MU, lambda: (db.mu_upper, None), regular)
    add("rhoLowerDegree", LOWER, RHO, lambda: (db.rho_lower, None), regular)
    add("muLowerDegree", LOWER, MU, lambda: (db.mu_lower, None), regular)
    add("rhoUpperAvg2", UPPER, RHO, lambda: (avg2_bounds(G).rho_upper, None), equal_m)
    add("rhoLowerAvg2", LOWER, RHO, lambda: (avg2_bounds(G).rho_lower, None), equal_m)
    add("rhoUpperM", UPPER, RHO, plain(rho_upper_m), equal_m)
    add("rhoUpperD", UPPER, RHO, plain(rho_upper_d), regular or blowup)
    add("rhoLowerM", LOWER, RHO, plain(rho_lower_m), equal_m)

    def star():
        w = rho_lower_star(G)
        return w.value, {"u": w.u, "v": w.v, "Delta": w.Delta, "delta": w.delta, "gamma": w.gamma}

    add("rhoLowerStar", LOWER, RHO, star, rho_lower_star(G).sharp if G.num_edges else None)

    def mo():
        r = mu_upper_mo(G)
        return r.bound, {"dStar": r.d_star}

    add("muUpperMo", UPPER, MU, mo, regular or blowup)
    add("muUpperMoWeaker", UPPER, MU, plain(mu_upper_mo_weaker), regular)
    add("muUpperMPlusDelta", UPPER, MU, plain(mu_upper_m_plus_delta))

    def theta():
        r = mu_upper_theta(G)
        return r.bound, {"j": r.argmin_j, "scaledVertex": r.scaled_vertex}

    def gamma(convention):
        def f():
            r = mu_lower_gamma(G, convention)
            return r.bound, {"j": r.argmax_j, "scaledVertex": r.scaled_vertex}
        return f

    add("thetaBound", UPPER, MU, theta)
    add("gammaBound", LOWER, MU, gamma(PRINTED))
    add("gammaBoundExcl", LOWER, MU, gamma(EXCLUDE_SCALED))

    add("tt2", UPPER, MU, lambda: (yzl_edge_bounds(G).tt2, None))

    def tt3():
        _avg2_profile(G)
        return yzl_edge_bounds(G).tt3, None

    add("tt3", UPPER, MU, tt3)
    return BoundReport(entries)
