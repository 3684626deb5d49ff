"""Exact builders for the graph families the test suite measures.

Three families live here, each returned as a LabeledGraph so callers can
refer to vertices by role name instead of raw id:

* ``smallest_counterexample``: an 8-vertex cubic planar graph that is
  hamiltonian-connected yet has a pair of vertices with no path on five
  vertices, together with its one- and two-extra-edge variants.

* ``odd_length_gap_base`` / ``odd_length_gap_family``: a 16-vertex cubic
  planar hamiltonian-connected graph with an adjacent pair missing all
  short odd path lengths, and its expansion that stretches the run of
  missing odd lengths by 4 per round while adding 6 vertices.

* ``cycle_gap_gadget`` / ``cycle_gap_family``: a 6-vertex gadget and the
  cubic hamiltonian-connected ring of k copies whose cycle spectrum is
  sparse: {4}, the values 3m+2 for m < k, and the interval [3k, 6k].

Vertex ids are fixed and documented so graph6 output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, GraphError


class ConstructionError(GraphError):
    """A family builder was asked for something outside its domain."""


@dataclass(frozen=True)
class LabeledGraph:
    """A graph plus a role-name-to-vertex map and an optional marked pair."""

    graph: Graph
    roles: dict[str, int] = field(default_factory=dict)
    distinguished_pair: tuple[int, int] | None = None

    def role_lines(self) -> list[str]:
        """Sidecar text map, one role=vertex line per role."""
        return [f"{name}={v}" for name, v in self.roles.items()]

    def vertex(self, role: str) -> int:
        return self.roles[role]


# ---------------------------------------------------------------------------
# the 8-vertex counterexample and its edge variants
#
# Vertices carry roles v1..v8 (ids 0..7).  The marked pair is (v3, v4):
# these two are adjacent but no path between them uses exactly five
# vertices, in any variant.

_SMALL_EDGES = (
    (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 7), (5, 6), (6, 7),
)
_SMALL_EXTRA_E1 = (2, 7)
_SMALL_EXTRA_E2 = (3, 6)

SMALL_COUNTEREXAMPLE_VARIANTS = ("base", "e1", "e2", "both")


def smallest_counterexample(variant: str = "base") -> LabeledGraph:
    """The 8-vertex cubic planar counterexample, optionally with extra edges.

    variant: "base" for the 12-edge graph, "e1" or "e2" for the two
    13-edge one-extra-edge forms, "both" for the 14-edge form with both
    extra edges (no longer planar).
    """
    extra = {
        "base": (),
        "e1": (_SMALL_EXTRA_E1,),
        "e2": (_SMALL_EXTRA_E2,),
        "both": (_SMALL_EXTRA_E1, _SMALL_EXTRA_E2),
    }.get(variant)
    if extra is None:
        raise ConstructionError(
            f"unknown variant {variant!r}; choose from {SMALL_COUNTEREXAMPLE_VARIANTS}"
        )
    g = Graph.from_edges(8, _SMALL_EDGES + tuple(extra))
    roles = {f"v{i + 1}": i for i in range(8)}
    return LabeledGraph(g, roles, distinguished_pair=(2, 3))


# ---------------------------------------------------------------------------
# the odd-length-gap family
#
# The base graph has 16 vertices: an outer frame u0..u8 and a 7-vertex
# pattern with roles a..g.  The adjacent pair (a, c) has no connecting
# path of length 3, 5, 7 or 9.  One expansion round deletes edges ac and
# bc, splices in six vertices a', a'', b', b'', c', c'', and hands the
# roles to the new vertices so the next round applies verbatim; each
# round extends the run of missing odd lengths by two entries (4 in
# length) and keeps the graph cubic, planar and hamiltonian-connected.

_GAP_BASE_EDGES = (
    (7, 5), (5, 4), (4, 7), (7, 8), (8, 6), (6, 5),
    (15, 14), (14, 13), (14, 12), (11, 12), (11, 13), (13, 10),
    (10, 11), (15, 9), (9, 10), (9, 2), (3, 12), (2, 3),
    (0, 2), (1, 3), (6, 0), (1, 4), (0, 1), (8, 15),
)

_GAP_BASE_ROLES = {
    "u0": 0, "u1": 1, "u2": 2, "u3": 3, "u4": 4,
    "u5": 5, "u6": 6, "u7": 7, "u8": 8,
    "f": 9, "a": 10, "b": 11, "e": 12, "c": 13, "d": 14, "g": 15,
}

# the pattern the expansion must reproduce on the relabeled roles
_PATTERN_EDGES = (
    ("a", "b"), ("a", "c"), ("b", "c"), ("b", "e"), ("c", "d"),
    ("d", "e"), ("d", "g"), ("f", "g"), ("a", "f"),
)
_PATTERN_INTERNAL_DEGREE = {"a": 3, "b": 3, "c": 3, "d": 3, "e": 2, "f": 2, "g": 2}


def _check_pattern(g: Graph, roles: dict[str, int]) -> None:
    for x, y in _PATTERN_EDGES:
        if not g.has_edge(roles[x], roles[y]):
            raise ConstructionError(f"expansion lost pattern edge {x}{y}")
    for name, want in _PATTERN_INTERNAL_DEGREE.items():
        v = roles[name]
        if g.degree(v) != 3:
            raise ConstructionError(f"pattern vertex {name} is not cubic after expansion")
        inside = sum(
            1 for x, y in _PATTERN_EDGES if name in (x, y)
        )
        if inside != want:
            raise ConstructionError(f"pattern vertex {name} has wrong internal degree")


def odd_length_gap_base() -> LabeledGraph:
    """The 16-vertex base graph; pair (a, c) misses path lengths 3, 5, 7, 9."""
    g = Graph.from_edges(16, _GAP_BASE_EDGES)
    roles = dict(_GAP_BASE_ROLES)
    _check_pattern(g, roles)
    return LabeledGraph(g, roles, distinguished_pair=(roles["a"], roles["c"]))


def odd_length_gap_family(k: int) -> LabeledGraph:
    """k expansion rounds on the base graph: 16 + 6k vertices.

    The distinguished pair (a, c) of the result misses every odd path
    length from 3 up to 9 + 4k.
    """
    if k < 0:
        raise ConstructionError(f"expansion count must be nonnegative, got {k}")
    lab = odd_length_gap_base()
    g = lab.graph
    roles = dict(lab.roles)
    for _ in range(k):
        a, b, c = roles["a"], roles["b"], roles["c"]
        m = g.n
        a1, a2, b1, b2, c1, c2 = m, m + 1, m + 2, m + 3, m + 4, m + 5
        edges = [e for e in g.edges() if e not in {tuple(sorted((a, c))), tuple(sorted((b, c)))}]
        edges += [
            (a, a1), (a1, c), (a1, a2), (a2, b2), (a2, c2),
            (b1, b), (b1, c1), (b1, b2), (b2, c2), (c1, c), (c1, c2),
        ]
        g = Graph.from_edges(m + 6, edges)
        roles.update({"a": a2, "b": b2, "c": c2, "d": c1, "e": b1, "f": a1, "g": c})
        _check_pattern(g, roles)
        if any(g.degree(v) != 3 for v in range(g.n)):
            raise ConstructionError("expansion broke cubicity")
    return LabeledGraph(g, roles, distinguished_pair=(roles["a"], roles["c"]))


# ---------------------------------------------------------------------------
# the cycle-gap family
#
# The gadget is a 6-vertex graph with cycle lengths {4, 5} only.  The
# ring construction takes k >= 2 copies, labels copy i's vertices
# v{i}_1..v{i}_6, and joins consecutive copies (cyclically) by the two
# edges v{i}_3 - v{i+1}_1 and v{i}_6 - v{i+1}_4, which makes the result
# cubic.

_GADGET_EDGES = ((0, 1), (1, 2), (2, 5), (3, 4), (4, 5), (1, 3), (0, 4))


def cycle_gap_gadget() -> LabeledGraph:
    """The 6-vertex building block; its only cycle lengths are 4 and 5."""
    g = Graph.from_edges(6, _GADGET_EDGES)
    roles = {f"v{i + 1}": i for i in range(6)}
    return LabeledGraph(g, roles)


def cycle_gap_family(k: int) -> LabeledGraph:
    """Cyclic chain of k gadget copies on 6k vertices, cubic for k >= 2."""
    if k < 2:
        raise ConstructionError(f"the ring needs at least 2 copies, got {k}")
    edges: list[tuple[int, int]] = []
    roles: dict[str, int] = {}
    for i in range(k):
        base = 6 * i
        edges += [(base + u, base + v) for u, v in _GADGET_EDGES]
        for j in range(6):
            roles[f"v{i + 1}_{j + 1}"] = base + j
    for i in range(k):
        nxt = 6 * ((i + 1) % k)
        base = 6 * i
        edges.append((base + 2, nxt + 0))
        edges.append((base + 5, nxt + 3))
    g = Graph.from_edges(6 * k, edges)
    if any(g.degree(v) != 3 for v in range(g.n)):
        raise ConstructionError("ring construction is not cubic")
    return LabeledGraph(g, roles)


def expected_cycle_gap_spectrum(k: int) -> set[int]:
    """The cycle length set the ring of k gadgets is designed to have."""
    if k < 2:
        raise ConstructionError(f"the ring needs at least 2 copies, got {k}")
    return {4} | {3 * m + 2 for m in range(1, k)} | set(range(3 * k, 6 * k + 1))
