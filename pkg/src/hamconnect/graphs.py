"""Bitmask graphs, the graph6 codec, connectivity tests and isomorphism.

Graphs are simple, undirected and unlabeled beyond integer vertex ids
0..n-1.  Adjacency is stored as one Python int per vertex, bit u of
``adj[v]`` meaning uv is an edge.  Everything in this module is pure
Python; the compiled kernels keep their own copies of the hot loops.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_VERTICES = 64
MAX_GRAPH6_VERTICES = 62

GRAPH6_HEADER = ">>graph6<<"


class GraphError(ValueError):
    """Invalid graph construction or out-of-range argument."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on at most 64 vertices.

    ``adj[v]`` is the neighborhood of v as a bitmask.  The constructor
    checks symmetry, absence of loops and the vertex cap, so a Graph
    that exists is always well formed.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"adjacency row {v} mentions vertices >= {self.n}")
            if (row >> v) & 1:
                raise GraphError(f"loop at vertex {v}")
        for v, row in enumerate(self.adj):
            m = row
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self.adj[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list; duplicate edges collapse."""
        if not 0 <= n <= MAX_VERTICES:
            raise GraphError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted (u, v) pairs with u < v."""
        out = []
        for v in range(self.n):
            m = self.adj[v] >> (v + 1) << (v + 1)
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((v, u))
        out.sort()
        return out

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(row.bit_count() for row in self.adj))

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        m = self.adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            yield u

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under a permutation: vertex v goes to perm[v]."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise GraphError("relabel argument is not a permutation of 0..n-1")
        return Graph.from_edges(self.n, [(p[u], p[v]) for u, v in self.edges()])

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + list(extra))

    def without_edges(self, gone: Iterable[tuple[int, int]]) -> "Graph":
        drop = {(min(u, v), max(u, v)) for u, v in gone}
        for u, v in drop:
            if not self.has_edge(u, v):
                raise GraphError(f"cannot remove absent edge ({u}, {v})")
        return Graph.from_edges(self.n, [e for e in self.edges() if e not in drop])

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} outside 0..{self.n - 1}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


# ---------------------------------------------------------------------------
# graph6 codec
#
# Standard format: one byte 63+n for the order (n <= 62 here), then the
# upper triangle of the adjacency matrix read column by column, packed
# big-endian into 6-bit groups, each group offset by 63.  Padding bits
# are zero.

def _triangle_bits(g: Graph) -> list[int]:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append((g.adj[j] >> i) & 1)
    return bits


def encode_graph6(g: Graph) -> str:
    """Encode a graph of order at most 62 as a graph6 line (no header)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise Graph6Error(f"graph6 supports at most {MAX_GRAPH6_VERTICES} vertices, got {g.n}")
    out = [chr(63 + g.n)]
    bits = _triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = (group << 1) | b
        out.append(chr(63 + group))
    return "".join(out)


def decode_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line.  A leading '>>graph6<<' header is tolerated."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER) :]
    if not text:
        raise Graph6Error("empty graph6 line")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside the graph6 range [63, 126]")
    n = ord(text[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error(f"order {n} exceeds the {MAX_GRAPH6_VERTICES}-vertex graph6 limit")
    nbits = n * (n - 1) // 2
    expect = 1 + (nbits + 5) // 6
    if len(text) != expect:
        raise Graph6Error(f"line of length {len(text)} where order {n} needs {expect} bytes")
    bits = []
    for ch in text[1:]:
        group = ord(ch) - 63
        for k in range(5, -1, -1):
            bits.append((group >> k) & 1)
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str]]:
    """Yield (line_number, payload) for nonblank lines, headers stripped.

    Line numbers are 1-based.  A line consisting only of the header is
    skipped; a header glued to a payload yields the payload.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if line.startswith(GRAPH6_HEADER):
            line = line[len(GRAPH6_HEADER) :]
        if line:
            yield lineno, line


# ---------------------------------------------------------------------------
# connectivity

def _component(adj: tuple[int, ...] | list[int], mask: int) -> int:
    """Vertices reachable inside mask from its lowest member, as a bitmask."""
    if mask == 0:
        return 0
    comp = mask & -mask
    frontier = comp
    while frontier:
        grown = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            grown |= adj[v]
        grown &= mask & ~comp
        comp |= grown
        frontier = grown
    return comp


def is_connected(g: Graph) -> bool:
    """Connectivity of the whole vertex set; graphs on 0 or 1 vertices count."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component(g.adj, full) == full


def is_k_connected(g: Graph, k: int) -> bool:
    """Brute-force k-connectivity for k in {1, 2, 3}.

    True iff the graph has more than k vertices and stays connected
    after deleting any set of fewer than k vertices.
    """
    if k not in (1, 2, 3):
        raise GraphError(f"k-connectivity implemented for k in 1..3, got {k}")
    if g.n <= k:
        return False
    full = (1 << g.n) - 1
    for size in range(k):
        for gone in combinations(range(g.n), size):
            mask = full
            for v in gone:
                mask &= ~(1 << v)
            if _component(g.adj, mask) != mask:
                return False
    return True


# ---------------------------------------------------------------------------
# isomorphism
#
# Degree-partition guided backtracking, meant for n <= 16.  Colors are
# refined by iterating (own color, multiset of neighbor colors) until
# stable, then vertices of one graph are mapped class by class.

def _refine_colors(g: Graph) -> list[int]:
    color = [g.degree(v) for v in range(g.n)]
    rank = {c: i for i, c in enumerate(sorted(set(color)))}
    color = [rank[c] for c in color]
    while True:
        sigs = []
        for v in range(g.n):
            neigh = sorted(color[u] for u in g.neighbors(v))
            sigs.append((color[v], tuple(neigh)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == color:
            return color
        color = new


def _class_profile(g: Graph, color: list[int]) -> list[tuple[int, int]]:
    counts: dict[int, int] = {}
    for c in color:
        counts[c] = counts.get(c, 0) + 1
    return sorted(counts.items())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism by refinement plus backtracking."""
    if g.n != h.n:
        return False
    if g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    cg = _refine_colors(g)
    ch = _refine_colors(h)
    if _class_profile(g, cg) != _class_profile(h, ch):
        return False
    n = g.n
    # map vertices of g in order of ascending class size, ties by id
    size: dict[int, int] = {}
    for c in cg:
        size[c] = size.get(c, 0) + 1
    order = sorted(range(n), key=lambda v: (size[cg[v]], cg[v], v))
    targets = [[w for w in range(n) if ch[w] == cg[v]] for v in order]
    image = [-1] * n
    used = [False] * n

    def place(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in targets[i]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if ((g.adj[v] >> u) & 1) != ((h.adj[w] >> image[u]) & 1):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if place(i + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    return place(0)
