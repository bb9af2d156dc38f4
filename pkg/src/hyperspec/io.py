"""Hypergraph file formats.

Text format: a header line ``k n``, then one edge per line as ``k``
whitespace-separated 1-based vertex ids. Blank lines and lines starting
with ``#`` are ignored. JSON format: ``{"k": int, "n": int, "edges": [[...], ...]}``.

The canonical serialization is the text format with each edge's vertices
ascending and edges in stored order, so parse(serialize(parse(s))) == parse(s).
"""

from __future__ import annotations

import json
from pathlib import Path

from hyperspec.core import Hypergraph
from hyperspec.errors import ParseError


def _parse_ints(tokens, lineno):
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer token") from exc


def parse_text(text: str) -> Hypergraph:
    header = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        nums = _parse_ints(line.split(), lineno)
        if header is None:
            if len(nums) != 2:
                raise ParseError(f"line {lineno}: header must be 'k n'")
            header = nums
        else:
            edges.append(nums)
    if header is None:
        raise ParseError("missing 'k n' header")
    k, n = header
    return Hypergraph(n, k, tuple(tuple(e) for e in edges))


def parse_json(text: str) -> Hypergraph:
    try:
        doc = json.loads(text)
        k, n, edges = int(doc["k"]), int(doc["n"]), doc["edges"]
    except (ValueError, KeyError, TypeError) as exc:
        raise ParseError(f"bad JSON hypergraph: {exc}") from exc
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise ParseError("'edges' must be a list of lists")
    return Hypergraph(n, k, tuple(tuple(_parse_ints(e, 0)) for e in edges))


def parse(text: str) -> Hypergraph:
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


def read(path) -> Hypergraph:
    return parse(Path(path).read_text())


def serialize(G: Hypergraph) -> str:
    lines = [f"{G.k} {G.n}"]
    lines += [" ".join(map(str, e)) for e in G.edges]
    return "\n".join(lines) + "\n"


def to_json(G: Hypergraph) -> dict:
    return {"k": G.k, "n": G.n, "edges": [list(e) for e in G.edges]}


def write(G: Hypergraph, path) -> None:
    Path(path).write_text(serialize(G))
