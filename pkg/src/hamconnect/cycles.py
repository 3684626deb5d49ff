"""Whole-graph cycle spectra and how contiguous they are.

The cycle spectrum is the set of lengths of simple cycles.  The search
roots each cycle at its smallest vertex, walks only through larger
vertices, and dedups the two traversal directions, stopping early once
every length from 3 to n has been confirmed.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from . import _kernels
from .graphs import Graph, GraphError
from .hamilton import MAX_SEARCH_VERTICES


def cycle_spectrum(g: Graph) -> set[int]:
    """Set of simple cycle lengths; empty for graphs on under 3 vertices."""
    if g.n > MAX_SEARCH_VERTICES:
        raise GraphError(f"search kernels handle at most {MAX_SEARCH_VERTICES} vertices, got {g.n}")
    if g.n < 3:
        return set()
    mask = int(_kernels.cycle_lengths(g.n, np.array(g.adj, dtype=np.int64)))
    return {l for l in range(3, g.n + 1) if (mask >> l) & 1}


class GapMetrics(NamedTuple):
    cardinality: int
    longest_run: int
    run_ratio: float


def spectrum_gap_metrics(spectrum: set[int], n: int) -> GapMetrics:
    """Size, longest run of consecutive members, and run size relative to n.

    A spectrum of {n} alone gives (1, 1, 1/n); an empty spectrum gives
    zeros.  The ratio says how small the largest contiguous block of
    cycle lengths is compared to the graph's order.
    """
    if n < 1:
        raise GraphError(f"order must be positive, got {n}")
    if not spectrum:
        return GapMetrics(0, 0, 0.0)
    values = sorted(spectrum)
    best = 1
    run = 1
    for prev, cur in zip(values, values[1:]):
        run = run + 1 if cur == prev + 1 else 1
        best = max(best, run)
    return GapMetrics(len(values), best, best / n)
