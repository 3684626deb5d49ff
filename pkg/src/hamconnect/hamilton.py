"""Deciding hamiltonian-connectedness with the compiled backtracking scan.

A graph is hamiltonian-connected when every pair of distinct vertices
is joined by a path through all vertices.  The scan picks the lowest
vertex that still has an unresolved partner, grows paths depth-first
from it (neighbors in ascending id order), records every full-length
endpoint in a witness matrix, and gives up on a start vertex only after
exhausting its tree, at which point any unresolved partner settles the
answer negatively.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError

MAX_SEARCH_VERTICES = 62

RULES_ALL: tuple[int, ...] = (1, 2, 3, 4, 5)


def _adjacency_array(g: Graph) -> np.ndarray:
    if g.n > MAX_SEARCH_VERTICES:
        raise GraphError(f"search kernels handle at most {MAX_SEARCH_VERTICES} vertices, got {g.n}")
    return np.array(g.adj, dtype=np.int64)


def _rules_bitfield(enabled_rules: tuple[int, ...]) -> int:
    field = 0
    for r in enabled_rules:
        if r not in (1, 2, 3, 4, 5):
            raise GraphError(f"unknown backtracking rule {r}")
        field |= 1 << (r - 1)
    return field


@dataclass(frozen=True)
class WitnessMatrix:
    """Symmetric boolean table: found[u, v] once a hamiltonian u-v path was seen."""

    n: int
    found: np.ndarray

    def pair(self, u: int, v: int) -> bool:
        return bool(self.found[u, v])

    def all_pairs_found(self) -> bool:
        n = self.n
        return bool(np.all(self.found | np.eye(n, dtype=bool)))


def is_hamiltonian_connected(
    g: Graph, enabled_rules: tuple[int, ...] = RULES_ALL
) -> tuple[bool, WitnessMatrix]:
    """Decide hamiltonian-connectedness; needs at least two vertices.

    The returned witness matrix is fully set off the diagonal exactly
    when the answer is True.  enabled_rules selects which backtracking
    rules run; the decision does not depend on the selection, only the
    running time does.
    """
    if g.n < 2:
        raise GraphError("hamiltonian-connectedness needs at least two vertices")
    adj = _adjacency_array(g)
    M = np.zeros((g.n, g.n), dtype=np.uint8)
    ok = bool(_kernels.ham_connected_scan(g.n, adj, _rules_bitfield(enabled_rules), M))
    return ok, WitnessMatrix(g.n, M.astype(bool))


def hamiltonian_path_exists(g: Graph, u: int, v: int) -> bool:
    """Is there a hamiltonian path with endpoints u and v?"""
    return find_hamiltonian_path(g, u, v) is not None


def find_hamiltonian_path(g: Graph, u: int, v: int) -> list[int] | None:
    """A hamiltonian u-v path as a vertex list, or None."""
    if g.n < 2:
        raise GraphError("hamiltonian paths need at least two vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("endpoints must differ")
    adj = _adjacency_array(g)
    out = np.empty(g.n, dtype=np.int64)
    if _kernels.ham_path_single(g.n, adj, u, v, out):
        return [int(x) for x in out]
    return None
