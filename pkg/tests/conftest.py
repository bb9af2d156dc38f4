import itertools

import numpy as np
import pytest
from hypothesis import strategies as st

from hyperspec.core import Hypergraph
from hyperspec.generators import FIXTURES, fixture, random_connected


@pytest.fixture(scope="session")
def fixtures():
    return {name: fixture(name) for name in FIXTURES}


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_connected_batch(count, seed, **kw):
    rng = np.random.default_rng(seed)
    return [random_connected(rng, **kw) for _ in range(count)]


@st.composite
def hypergraphs(draw, max_n=9, ks=(2, 3, 4), min_edges=0):
    """Arbitrary valid k-uniform hypergraphs (possibly disconnected, with isolated vertices)."""
    k = draw(st.sampled_from(ks))
    n = draw(st.integers(min_value=k, max_value=max_n))
    pool = list(itertools.combinations(range(1, n + 1), k))
    idx = draw(st.lists(st.integers(0, len(pool) - 1), unique=True, min_size=min_edges, max_size=min(len(pool), 3 * n)))
    edges = [pool[i] for i in idx]
    # shuffle vertex order inside edges; the model must sort them
    edges = [tuple(draw(st.permutations(e))) for e in edges]
    return Hypergraph(n, k, tuple(edges))
