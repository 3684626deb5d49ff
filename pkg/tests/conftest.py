"""Shared fixtures: compiled kernels, small-graph corpora, data file paths."""

from __future__ import annotations

import random
from itertools import combinations
from pathlib import Path

import pytest

from hamconnect import _kernels
from hamconnect.enumerate_small import EnumFilter, enumerate_graphs
from hamconnect.graphs import Graph, is_connected

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

TWO_CONNECTED_N8 = DATA_DIR / "two_connected_n8.g6"
PLANAR_3C_N8 = DATA_DIR / "planar3c_n8.g6"
PLANAR_3C_CUBIC_N8 = DATA_DIR / "planar3c_cubic_n8.g6"


@pytest.fixture(scope="session", autouse=True)
def compiled_kernels():
    """Compile (or load from disk cache) every kernel once per session."""
    _kernels.warm_up()


def all_labeled_graphs(n: int):
    """Every labeled simple graph on n vertices, all 2^C(n,2) of them."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        yield Graph.from_edges(n, edges)


def random_connected_graph(rng: random.Random, n_lo: int = 4, n_hi: int = 10) -> Graph:
    """One random connected graph, biased toward sparse instances."""
    n = rng.randint(n_lo, n_hi)
    hi = 0.5 if n >= 9 else 0.7
    while True:
        p = rng.uniform(0.15, hi)
        edges = [e for e in combinations(range(n), 2) if rng.random() < p]
        g = Graph.from_edges(n, edges)
        if is_connected(g):
            return g


@pytest.fixture(scope="session")
def random_corpus():
    """A fixed batch of random connected graphs on 4..10 vertices."""
    rng = random.Random(20260822)
    return [random_connected_graph(rng) for _ in range(120)]


@pytest.fixture(scope="session")
def two_connected_classes():
    """Isomorphism class representatives of the 2-connected graphs, n = 3..7."""
    return {
        n: list(enumerate_graphs(EnumFilter(n, connectivity=2))) for n in range(3, 8)
    }


@pytest.fixture(scope="session")
def all_classes_small():
    """All isomorphism classes on up to 6 vertices."""
    return {n: list(enumerate_graphs(EnumFilter(n))) for n in range(7)}
