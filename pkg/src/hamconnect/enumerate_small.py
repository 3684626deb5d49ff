"""Isomorphism-free exhaustive enumeration of graphs on up to 8 vertices.

Every labeled graph is a bitmask over the upper adjacency triangle
(2^28 masks at n = 8).  The compiled kernel walks mask ranges, filters
by minimum degree and connectivity, canonicalizes survivors, and pools
canonical forms in a hash table; the driver then emits one Graph per
canonical form in ascending mask order, which makes the output
deterministic and duplicate-free.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError

MAX_ENUM_VERTICES = 8

_TABLE_SIZE = 1 << 16  # all 12346 graphs on 8 vertices fit with slack

ProgressFn = Callable[[int, int, int], None]


@dataclass(frozen=True)
class EnumFilter:
    """What to keep: order, minimum degree, connectivity in {0, 1, 2, 3}."""

    n: int
    min_degree: int = 0
    connectivity: int = 0

    def validate(self) -> None:
        if not 0 <= self.n <= MAX_ENUM_VERTICES:
            raise GraphError(f"enumeration handles 0..{MAX_ENUM_VERTICES} vertices, got {self.n}")
        if self.min_degree < 0:
            raise GraphError(f"minimum degree must be nonnegative, got {self.min_degree}")
        if self.connectivity not in (0, 1, 2, 3):
            raise GraphError(f"connectivity requirement must be 0..3, got {self.connectivity}")


def _triangle_rowbits(n: int) -> np.ndarray:
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            rows[i] |= 1 << idx
            rows[j] |= 1 << idx
            idx += 1
    return np.array(rows, dtype=np.int64)


def _mask_to_graph(n: int, mask: int) -> Graph:
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> idx) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def enumerate_graphs(filt: EnumFilter, progress: ProgressFn | None = None) -> Iterator[Graph]:
    """Yield one representative per isomorphism class passing the filter.

    progress, if given, is called after each mask chunk with
    (masks_done, masks_total, classes_found).
    """
    filt.validate()
    n = filt.n
    if n <= 1:
        # a single (empty) graph exists; the connectivity test needs n > k
        degree_ok = n == 0 or filt.min_degree <= 0
        conn_ok = filt.connectivity == 0 or n > filt.connectivity
        if degree_ok and conn_ok:
            yield Graph(n, (0,) * n)
        return
    if n <= filt.connectivity:
        return
    total = 1 << (n * (n - 1) // 2)
    rowbits = _triangle_rowbits(n)
    table = np.full(_TABLE_SIZE, -1, dtype=np.int64)
    chunk = min(total, 1 << 22)
    found = 0
    for lo in range(0, total, chunk):
        hi = min(lo + chunk, total)
        found += int(
            _kernels.enum_chunk(
                n, lo, hi, filt.min_degree, filt.connectivity, rowbits, table
            )
        )
        if progress is not None:
            progress(hi, total, found)
    keys = np.sort(table[table != -1])
    assert len(keys) == found
    for key in keys:
        yield _mask_to_graph(n, int(key))
