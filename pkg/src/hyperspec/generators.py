"""Extremal hypergraph families and the shipped fixture hypergraphs.

Vertex numbering is canonical so structural checks never need general
isomorphism testing:

* hyperstar: heart is vertex 1, then the leaves petal by petal;
* two-heart family: u = 1, v = 2, then u's pendant petals, v's pendant
  petals, then the k-2 fillers of each bridge edge;
* blow-up: the new common vertex is appended as vertex n + 1.
"""

from __future__ import annotations

import hashlib
import itertools
import math
from dataclasses import dataclass, field
from importlib import resources

import numpy as np

from hyperspec import io
from hyperspec.core import Hypergraph, connected_components
from hyperspec.errors import BadParams, DuplicateEdge, NoEdges, UnknownFixture

FIXTURES = ("H1", "H2", "G1", "G2", "G3")


def hyperstar(k: int, d: int) -> Hypergraph:
    """S_d^k: d edges sharing only the heart (vertex 1). d = 0 is a lone vertex."""
    if k < 2 or d < 0:
        raise BadParams(f"hyperstar needs k >= 2, d >= 0 (got k={k}, d={d})")
    n = 1 + d * (k - 1)
    if d == 0:
        return Hypergraph.lone_vertex(k)
    edges = [(1, *range(2 + p * (k - 1), 2 + (p + 1) * (k - 1))) for p in range(d)]
    return Hypergraph(n, k, tuple(edges))


def blow_up(H: Hypergraph) -> Hypergraph:
    """Add one new vertex (id n + 1) to every edge of a (k-1)-uniform H."""
    if H.num_edges == 0:
        raise NoEdges("blow-up needs at least one edge")
    apex = H.n + 1
    return Hypergraph(H.n + 1, H.k + 1, tuple((*e, apex) for e in H.edges))


def two_heart_graph(k: int, d1: int, d2: int, gamma: int) -> Hypergraph:
    """Hyperstars S_{d1}^k and S_{d2}^k with hearts u=1, v=2 joined by gamma bridges.

    Each bridge edge is ``{u, v}`` plus k-2 fresh vertices, so u ends with
    degree d1 + gamma and v with d2 + gamma. ``d1 = 0`` is accepted (it is the
    degree-parameterized family with Delta = gamma).
    """
    if k < 2 or d1 < 0 or d2 < 0 or gamma < 1:
        raise BadParams(f"need k >= 2, d1 >= 0, d2 >= 0, gamma >= 1 (got {k}, {d1}, {d2}, {gamma})")
    if k == 2 and gamma > 1:
        raise DuplicateEdge("k = 2 admits a single edge between u and v")
    nxt = 3
    edges = []
    for heart, count in ((1, d1), (2, d2)):
        for _ in range(count):
            edges.append((heart, *range(nxt, nxt + k - 1)))
            nxt += k - 1
    for _ in range(gamma):
        edges.append((1, 2, *range(nxt, nxt + k - 2)))
        nxt += k - 2
    return Hypergraph(nxt - 1, k, tuple(edges))


def star_extremal(k: int, Delta: int, delta: int, gamma: int) -> Hypergraph:
    """The two-heart graph with final degrees d_u = Delta, d_v = delta, gamma shared edges."""
    if not 1 <= gamma <= delta <= Delta:
        raise BadParams(f"need 1 <= gamma <= delta <= Delta (got {Delta}, {delta}, {gamma})")
    return two_heart_graph(k, Delta - gamma, delta - gamma, gamma)


def complete_uniform(n: int, k: int) -> Hypergraph:
    if not 2 <= k <= n:
        raise BadParams(f"need 2 <= k <= n (got n={n}, k={k})")
    return Hypergraph(n, k, tuple(itertools.combinations(range(1, n + 1), k)))


def cycle(m: int) -> Hypergraph:
    """The 2-uniform cycle C_m."""
    if m < 3:
        raise BadParams("cycle needs m >= 3")
    return Hypergraph(m, 2, tuple((i, i % m + 1) for i in range(1, m + 1)))


def fixture_text(name: str) -> str:
    if name not in FIXTURES:
        raise UnknownFixture(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return resources.files("hyperspec").joinpath("data", f"{name}.txt").read_text()


def fixture(name: str) -> Hypergraph:
    return io.parse(fixture_text(name))


def fixture_checksums() -> dict[str, str]:
    """Shipped SHA-256 digests, keyed by fixture name."""
    text = resources.files("hyperspec").joinpath("data", "SHA256SUMS").read_text()
    out = {}
    for line in text.splitlines():
        digest, fname = line.split()
        out[fname.removesuffix(".txt")] = digest
    return out


def fixture_digest(name: str) -> str:
    return hashlib.sha256(fixture_text(name).encode()).hexdigest()


def random_uniform(n: int, k: int, m: int, rng: np.random.Generator) -> Hypergraph:
    """m distinct k-subsets of [n], uniformly at random."""
    total = math.comb(n, k)
    if not 0 <= m <= total:
        raise BadParams(f"cannot choose {m} of {total} possible edges")
    if total <= 5000:
        pool = list(itertools.combinations(range(1, n + 1), k))
        picks = rng.choice(total, size=m, replace=False)
        edges = [pool[i] for i in sorted(picks)]
    else:
        seen = set()
        while len(seen) < m:
            seen.add(tuple(sorted(int(v) + 1 for v in rng.choice(n, size=k, replace=False))))
        edges = sorted(seen)
    return Hypergraph(n, k, tuple(edges))


def random_connected(
    rng: np.random.Generator,
    k_choices=(2, 3, 4),
    max_n: int = 10,
    min_n: int | None = None,
) -> Hypergraph:
    """A random connected k-uniform hypergraph with no isolated vertex (rejection sampling)."""
    k = int(rng.choice(k_choices))
    lo_n = max(k, min_n or k)
    n = int(rng.integers(lo_n, max_n + 1))
    total = math.comb(n, k)
    lo_m = -(-(n - 1) // (k - 1)) if n > 1 else 1
    hi_m = min(total, max(lo_m, 3 * n))
    while True:
        m = int(rng.integers(lo_m, hi_m + 1))
        G = random_uniform(n, k, m, rng)
        if min(G.degrees) > 0 and connected_components(G).is_connected:
            return G


@dataclass(frozen=True)
class GeneratorSpec:
    """Parameters naming one family member; ``build()`` constructs it."""

    family: str
    params: dict = field(default_factory=dict)

    def build(self) -> Hypergraph:
        p = self.params
        if self.family == "hyperstar":
            return hyperstar(p["k"], p["d"])
        if self.family == "blowup":
            return blow_up(p["base"])
        if self.family == "gddg":
            return two_heart_graph(p["k"], p["d1"], p["d2"], p["gamma"])
        if self.family == "star-extremal":
            return star_extremal(p["k"], p["Delta"], p["delta"], p["gamma"])
        if self.family == "complete":
            return complete_uniform(p["n"], p["k"])
        if self.family == "cycle":
            return cycle(p["m"])
        if self.family == "fixture":
            return fixture(p["name"])
        raise BadParams(f"unknown family {self.family!r}")
