"""Per-pair path length spectra and the pair-path filter modes.

For distinct vertices u, v the path length set is the set of edge
counts of simple u-v paths.  A graph has the k-vertex pair property
(``has_path_property(g, k)``) when every pair of distinct vertices is
joined by a path on exactly k vertices, that is by a path of length
k - 1.  Spanning that property over ranges of k gives the four filter
modes used by the streaming pipeline:

* all:  pass every graph through,
* full: the property holds for every k from 3 to n,
* any:  some k in [3, n] fails,
* last: some k in the upper window [ceil(n/2) + 1, n] fails.

A PathLengthAnalyzer owns one graph and memoizes search work across
queries: the first query touching a start vertex enumerates all simple
paths from it up to the largest length anyone asked about, so later
queries at smaller k are table lookups.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError
from .hamilton import MAX_SEARCH_VERTICES


class FilterMode(str, Enum):
    ALL = "all"
    FULL = "full"
    ANY = "any"
    LAST = "last"


@dataclass(frozen=True)
class PathPropertyWitness:
    """A failing vertex count k plus one pair with no path of length k - 1."""

    k: int
    pair: tuple[int, int]


def mode_window(mode: FilterMode, n: int) -> tuple[int, int]:
    """Inclusive k-range of pair properties the mode inspects (may be empty)."""
    if mode in (FilterMode.FULL, FilterMode.ANY):
        return 3, n
    if mode is FilterMode.LAST:
        return (n + 1) // 2 + 1, n
    return 3, 2


class PathLengthAnalyzer:
    """Memoized path length queries against one graph."""

    def __init__(self, g: Graph) -> None:
        if g.n < 2:
            raise GraphError("path length queries need at least two vertices")
        if g.n > MAX_SEARCH_VERTICES:
            raise GraphError(
                f"search kernels handle at most {MAX_SEARCH_VERTICES} vertices, got {g.n}"
            )
        self.graph = g
        self._adj = np.array(g.adj, dtype=np.int64)
        self._masks = np.zeros((g.n, g.n), dtype=np.int64)
        self._bound = [0] * g.n

    def _ensure(self, start: int, bound: int) -> None:
        if bound > self._bound[start]:
            self._masks[start, :] = 0
            _kernels.path_lengths_from(self.graph.n, self._adj, start, bound, self._masks[start])
            self._bound[start] = bound

    def lengths_between(self, u: int, v: int, upto: int | None = None) -> set[int]:
        """Edge counts of simple u-v paths, up to ``upto`` (default: all)."""
        g = self.graph
        g._check_vertex(u)
        g._check_vertex(v)
        if u == v:
            raise GraphError("path lengths need two distinct endpoints")
        bound = g.n - 1 if upto is None else min(upto, g.n - 1)
        self._ensure(u, bound)
        mask = int(self._masks[u, v])
        return {l for l in range(1, bound + 1) if (mask >> l) & 1}

    def has_length(self, u: int, v: int, length: int) -> bool:
        self._ensure(u, length)
        return bool((int(self._masks[u, v]) >> length) & 1)

    def has_path_property(self, k: int) -> bool:
        """Does every pair of distinct vertices have a path on k vertices?"""
        n = self.graph.n
        if not 2 <= k <= n:
            raise GraphError(f"vertex count k={k} outside [2, {n}]")
        return self._first_failing_pair(k) is None

    def _first_failing_pair(self, k: int) -> tuple[int, int] | None:
        n = self.graph.n
        for u in range(n):
            self._ensure(u, k - 1)
            for v in range(u + 1, n):
                if not (int(self._masks[u, v]) >> (k - 1)) & 1:
                    return u, v
        return None

    def first_violation(self, k_lo: int, k_hi: int) -> PathPropertyWitness | None:
        """Smallest failing k in [k_lo, k_hi] with its first failing pair."""
        n = self.graph.n
        for k in range(max(k_lo, 2), min(k_hi, n) + 1):
            pair = self._first_failing_pair(k)
            if pair is not None:
                return PathPropertyWitness(k, pair)
        return None

    def classify(self, mode: FilterMode) -> bool:
        """Does the graph pass the given filter mode?

        Queries run from the top of the mode's window downward, so the
        long searches come first and everything below is memoized.
        """
        mode = FilterMode(mode)
        if mode is FilterMode.ALL:
            return True
        k_lo, k_hi = mode_window(mode, self.graph.n)
        if mode is FilterMode.FULL:
            for k in range(k_hi, k_lo - 1, -1):
                if not self.has_path_property(k):
                    return False
            return True
        for k in range(k_hi, k_lo - 1, -1):
            if not self.has_path_property(k):
                return True
        return False


def path_length_set(g: Graph, u: int, v: int) -> set[int]:
    """Edge counts of all simple u-v paths."""
    return PathLengthAnalyzer(g).lengths_between(u, v)


def has_path_property(g: Graph, k: int) -> bool:
    """Every pair of distinct vertices joined by a path on k vertices?"""
    return PathLengthAnalyzer(g).has_path_property(k)


def classify(g: Graph, mode: FilterMode) -> bool:
    """Pass/fail under one filter mode (fresh analyzer; see PathLengthAnalyzer)."""
    return PathLengthAnalyzer(g).classify(mode)
