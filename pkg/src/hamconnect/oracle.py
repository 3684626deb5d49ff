"""Slow reference implementations used to check the fast search code.

Everything here is deliberately naive: plain recursive enumeration with
no pruning beyond the visited set, written against the pure Python
Graph type only.  The point is independence from the compiled kernels,
so nothing from the rest of the package is imported.

Each call carries an expansion budget.  When the budget runs out the
search raises instead of returning a partial answer, so an oracle
result is always exact.
"""

from __future__ import annotations

from .graphs import Graph, GraphError

DEFAULT_BUDGET = 10**9

MAX_SPECTRUM_VERTICES = 36
MAX_HAMCONN_VERTICES = 12


class OracleBudgetExceeded(RuntimeError):
    """The naive search ran out of its expansion budget; result unknown."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int) -> None:
        self.left = limit

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise OracleBudgetExceeded(
                "naive search exceeded its expansion budget; "
                "the query is inconclusive, not false"
            )


def all_path_lengths_naive(g: Graph, u: int, v: int, budget: int = DEFAULT_BUDGET) -> set[int]:
    """Edge counts of all simple u-v paths, by exhaustive enumeration."""
    if g.n > MAX_SPECTRUM_VERTICES:
        raise GraphError(f"naive path enumeration capped at {MAX_SPECTRUM_VERTICES} vertices")
    if u == v:
        raise GraphError("path lengths need two distinct endpoints")
    g._check_vertex(u)
    g._check_vertex(v)
    b = _Budget(budget)
    found: set[int] = set()

    def walk(at: int, visited: int, length: int) -> None:
        b.spend()
        if at == v:
            found.add(length)
            return
        m = g.adj[at] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            walk(w, visited | (1 << w), length + 1)

    walk(u, 1 << u, 0)
    return found


def all_cycle_lengths_naive(g: Graph, budget: int = DEFAULT_BUDGET) -> set[int]:
    """Lengths of all simple cycles, by exhaustive enumeration.

    Each cycle is rooted at its smallest vertex; only larger vertices are
    visited from the root, so every cycle is seen (twice, once per
    direction, which is harmless for a set of lengths).
    """
    if g.n > MAX_SPECTRUM_VERTICES:
        raise GraphError(f"naive cycle enumeration capped at {MAX_SPECTRUM_VERTICES} vertices")
    b = _Budget(budget)
    found: set[int] = set()

    def walk(root: int, at: int, visited: int, length: int) -> None:
        b.spend()
        if length >= 2 and (g.adj[at] >> root) & 1:
            found.add(length + 1)
        m = g.adj[at] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if w > root:
                walk(root, w, visited | (1 << w), length + 1)

    for root in range(g.n):
        walk(root, root, 1 << root, 0)
    return found


def ham_connected_naive(g: Graph, budget: int = DEFAULT_BUDGET) -> bool:
    """Hamiltonian-connectedness by per-pair exhaustive path search."""
    if g.n > MAX_HAMCONN_VERTICES:
        raise GraphError(f"naive hamiltonian-connectedness capped at {MAX_HAMCONN_VERTICES} vertices")
    if g.n < 2:
        raise GraphError("hamiltonian-connectedness needs at least two vertices")
    b = _Budget(budget)
    full = (1 << g.n) - 1

    def reaches(at: int, v: int, visited: int) -> bool:
        b.spend()
        if visited == full:
            return at == v
        if at == v:
            return False
        m = g.adj[at] & ~visited
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if reaches(w, v, visited | (1 << w)):
                return True
        return False

    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not reaches(u, v, 1 << u):
                return False
    return True
