"""k-uniform hypergraph model, degrees, average 2-degrees and structural predicates.

Vertex ids are 1-based at the API boundary (``1..n``). Internally, the
cached numpy views (``edge_array``) are 0-based.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

import numpy as np

from hyperspec.errors import (
    ComputationOverflow,
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeWrongSize,
    EmptySelection,
    IsolatedVertexPresent,
    RankExceedsOrder,
    RankTooSmall,
    VertexOutOfRange,
)


@dataclass(frozen=True)
class Hypergraph:
    """Immutable k-uniform hypergraph on vertices ``1..n``.

    Edges keep their input order; vertices inside each edge are stored
    ascending. ``incidence[i - 1]`` lists the indices of edges containing ``i``.
    """

    n: int
    k: int
    edges: tuple[tuple[int, ...], ...]
    incidence: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n, k = int(self.n), int(self.k)
        if k < 2:
            raise RankTooSmall(f"k={k} < 2")
        if k > n:
            raise RankExceedsOrder(f"k={k} > n={n}")
        normalized = []
        seen = set()
        for idx, edge in enumerate(self.edges):
            e = tuple(int(v) for v in edge)
            if len(e) != k:
                raise EdgeWrongSize(f"edge {idx + 1} has {len(e)} vertices, expected {k}")
            if len(set(e)) != k:
                raise DuplicateVertexInEdge(f"edge {idx + 1} repeats a vertex: {list(e)}")
            for v in e:
                if not 1 <= v <= n:
                    raise VertexOutOfRange(f"vertex {v} in edge {idx + 1} not in [1, {n}]")
            e = tuple(sorted(e))
            if e in seen:
                raise DuplicateEdge(f"edge {list(e)} appears twice")
            seen.add(e)
            normalized.append(e)
        inc: list[list[int]] = [[] for _ in range(n)]
        for idx, e in enumerate(normalized):
            for v in e:
                inc[v - 1].append(idx)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "edges", tuple(normalized))
        object.__setattr__(self, "incidence", tuple(tuple(x) for x in inc))

    @classmethod
    def lone_vertex(cls, k: int) -> "Hypergraph":
        """One isolated vertex, the degenerate S_0^k; the only instance allowed k > n."""
        G = object.__new__(cls)
        for name, val in (("n", 1), ("k", int(k)), ("edges", ()), ("incidence", ((),))):
            object.__setattr__(G, name, val)
        return G

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_array(self) -> np.ndarray:
        """``(|E|, k)`` int array of 0-based vertex indices."""
        if not self.edges:
            return np.zeros((0, self.k), dtype=np.intp)
        return np.asarray(self.edges, dtype=np.intp) - 1

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(x) for x in self.incidence)

    def degree(self, v: int) -> int:
        return len(self.incidence[v - 1])

    def neighbors(self, v: int) -> set[int]:
        out = set()
        for idx in self.incidence[v - 1]:
            out.update(self.edges[idx])
        out.discard(v)
        return out

    def edges_containing(self, *vertices: int) -> list[int]:
        """Indices of edges containing every vertex given."""
        sets = [set(self.incidence[v - 1]) for v in vertices]
        return sorted(set.intersection(*sets)) if sets else []


def build_hypergraph(n: int, k: int, edges: Sequence[Sequence[int]]) -> Hypergraph:
    return Hypergraph(n, k, tuple(tuple(e) for e in edges))


@dataclass(frozen=True)
class DegreeProfile:
    """Degrees and average 2-degrees, indexed by vertex id minus one.

    ``avg2`` and ``avg2_exact`` are ``None`` when some vertex is isolated.
    ``sorted_by_m`` orders vertex ids by m descending, ties broken by degree
    descending then id ascending; ``sorted_by_d`` by degree descending then id.
    """

    degrees: tuple[int, ...]
    avg2: tuple[float, ...] | None
    avg2_exact: tuple[Fraction, ...] | None
    sorted_by_m: tuple[int, ...] | None
    sorted_by_d: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.degrees else 0

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.degrees else 0

    def d(self, v: int) -> int:
        return self.degrees[v - 1]

    def m(self, v: int) -> float:
        if self.avg2 is None:
            raise IsolatedVertexPresent("average 2-degrees undefined with isolated vertices")
        return self.avg2[v - 1]


def avg2_exact(G: Hypergraph) -> tuple[Fraction, ...]:
    """Exact average 2-degrees as fractions; requires no isolated vertex."""
    deg = G.degrees
    if G.n and min(deg) == 0:
        raise IsolatedVertexPresent(
            f"vertex {deg.index(0) + 1} is isolated; average 2-degree undefined"
        )
    out = []
    for i in range(1, G.n + 1):
        num = 0
        for idx in G.incidence[i - 1]:
            num += math.prod(deg[v - 1] for v in G.edges[idx] if v != i)
        out.append(Fraction(num, deg[i - 1] ** (G.k - 1)))
    return tuple(out)


def _to_float(q: Fraction) -> float:
    try:
        return q.numerator / q.denominator
    except OverflowError as exc:
        raise ComputationOverflow(f"average 2-degree {q} exceeds double range") from exc


def degree_profile(G: Hypergraph) -> DegreeProfile:
    deg = G.degrees
    by_d = tuple(sorted(range(1, G.n + 1), key=lambda v: (-deg[v - 1], v)))
    if G.n == 0 or min(deg) == 0:
        return DegreeProfile(deg, None, None, None, by_d)
    exact = avg2_exact(G)
    floats = tuple(_to_float(q) for q in exact)
    by_m = tuple(sorted(range(1, G.n + 1), key=lambda v: (-exact[v - 1], -deg[v - 1], v)))
    return DegreeProfile(deg, floats, exact, by_m, by_d)


@dataclass(frozen=True)
class ComponentDecomposition:
    component_of: dict[int, int]
    components: tuple[frozenset[int], ...]
    isolated_vertices: frozenset[int]

    @property
    def is_connected(self) -> bool:
        return len(self.components) <= 1


def connected_components(G: Hypergraph) -> ComponentDecomposition:
    """BFS over the incidence lists; isolated vertices are singleton components."""
    comp_of: dict[int, int] = {}
    comps = []
    edge_seen = [False] * G.num_edges
    for start in range(1, G.n + 1):
        if start in comp_of:
            continue
        cid = len(comps)
        members = {start}
        comp_of[start] = cid
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for idx in G.incidence[v - 1]:
                if edge_seen[idx]:
                    continue
                edge_seen[idx] = True
                for w in G.edges[idx]:
                    if w not in comp_of:
                        comp_of[w] = cid
                        members.add(w)
                        queue.append(w)
        comps.append(frozenset(members))
    isolated = frozenset(v for v in range(1, G.n + 1) if G.degree(v) == 0)
    return ComponentDecomposition(comp_of, tuple(comps), isolated)


def is_connected(G: Hypergraph) -> bool:
    return connected_components(G).is_connected


class RegularityCheck(NamedTuple):
    regular: bool
    degree: int | None

    def __bool__(self):
        return self.regular


def is_regular(G: Hypergraph) -> RegularityCheck:
    deg = set(G.degrees)
    if len(deg) == 1:
        return RegularityCheck(True, deg.pop())
    return RegularityCheck(False, None)


class BlowupCheck(NamedTuple):
    blowup: bool
    apex: int | None
    base_degree: int | None

    def __bool__(self):
        return self.blowup


def is_blowup_of_regular(G: Hypergraph) -> BlowupCheck:
    """Is there a vertex in every edge with all other non-isolated vertices of equal degree?

    The smallest qualifying apex id is returned.
    """
    if not G.edges:
        return BlowupCheck(False, None, None)
    common = set(G.edges[0]).intersection(*map(set, G.edges[1:]))
    for apex in sorted(common):
        rest = {d for v, d in enumerate(G.degrees, start=1) if v != apex and d > 0}
        if len(rest) == 1:
            return BlowupCheck(True, apex, rest.pop())
    return BlowupCheck(False, None, None)


def has_equal_avg2_degrees(G: Hypergraph, tol: float = 0.0) -> bool:
    """True iff ``max m - min m <= tol * max m``; with ``tol=0`` compared exactly."""
    exact = avg2_exact(G)
    if tol == 0.0:
        return len(set(exact)) <= 1
    hi, lo = float(max(exact)), float(min(exact))
    return hi - lo <= tol * hi


def induced_subhypergraph(
    G: Hypergraph, edge_indices: Sequence[int]
) -> tuple[Hypergraph, dict[int, int]]:
    """Hypergraph spanned by the selected edges (0-based indices into ``G.edges``).

    Vertices are relabeled ``1..n'`` in increasing order of their old id.
    Returns the subhypergraph and the map ``new id -> old id``.
    """
    chosen = sorted(set(int(i) for i in edge_indices))
    if not chosen:
        raise EmptySelection("no edges selected")
    for i in chosen:
        if not 0 <= i < G.num_edges:
            raise IndexError(f"edge index {i} out of range for {G.num_edges} edges")
    old_ids = sorted({v for i in chosen for v in G.edges[i]})
    relabel = {old: new for new, old in enumerate(old_ids, start=1)}
    sub = Hypergraph(
        len(old_ids), G.k, tuple(tuple(relabel[v] for v in G.edges[i]) for i in chosen)
    )
    return sub, {new: old for old, new in relabel.items()}


def component_subhypergraph(
    G: Hypergraph, vertices: frozenset[int]
) -> tuple[Hypergraph, dict[int, int]]:
    """Subhypergraph on the edges inside ``vertices`` (a union of components)."""
    idx = sorted({i for v in vertices for i in G.incidence[v - 1]})
    return induced_subhypergraph(G, idx)
