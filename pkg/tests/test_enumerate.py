"""Isomorphism-free enumeration: counts, completeness, determinism."""

from __future__ import annotations

import os
import random

import numpy as np
import pytest

from hamconnect import _kernels
from hamconnect.enumerate_small import EnumFilter, enumerate_graphs
from hamconnect.graphs import (
    Graph,
    GraphError,
    are_isomorphic,
    decode_graph6,
    encode_graph6,
    is_connected,
    is_k_connected,
)

from conftest import TWO_CONNECTED_N8, all_labeled_graphs, random_connected_graph

# class counts for simple graphs: all, connected, 2-connected
ALL_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}
# starting at n = 2: the >k-vertices rule excludes K1, see TestCounts
CONNECTED_COUNTS = {2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
TWO_CONNECTED_COUNTS = {3: 1, 4: 3, 5: 10, 6: 56, 7: 468}


def canonical_mask(g: Graph) -> int:
    scratch = np.zeros((10, max(g.n, 1)), dtype=np.int64)
    return int(_kernels.canonical_form(g.n, np.array(g.adj, dtype=np.int64), scratch))


class TestFilters:
    def test_validation(self):
        with pytest.raises(GraphError):
            EnumFilter(9).validate()
        with pytest.raises(GraphError):
            EnumFilter(-1).validate()
        with pytest.raises(GraphError):
            EnumFilter(5, min_degree=-1).validate()
        with pytest.raises(GraphError):
            EnumFilter(5, connectivity=4).validate()
        EnumFilter(8, min_degree=3, connectivity=3).validate()


class TestCounts:
    def test_all_graphs(self):
        for n, want in ALL_COUNTS.items():
            assert sum(1 for _ in enumerate_graphs(EnumFilter(n))) == want

    def test_connected_graphs(self):
        for n, want in CONNECTED_COUNTS.items():
            got = sum(1 for _ in enumerate_graphs(EnumFilter(n, connectivity=1)))
            assert got == want

    def test_two_connected_graphs(self, two_connected_classes):
        for n, want in TWO_CONNECTED_COUNTS.items():
            assert len(two_connected_classes[n]) == want

    def test_trivial_sizes(self):
        assert [g.n for g in enumerate_graphs(EnumFilter(0))] == [0]
        assert [g.edge_count for g in enumerate_graphs(EnumFilter(1))] == [0]
        # k-connectivity requires more than k vertices, so K1 does not
        # count as 1-connected and K2 is the first 1-connected graph
        assert list(enumerate_graphs(EnumFilter(1, connectivity=1))) == []
        assert len(list(enumerate_graphs(EnumFilter(2, connectivity=1)))) == 1

    def test_min_degree_filter(self):
        got = list(enumerate_graphs(EnumFilter(5, min_degree=2)))
        brute = set()
        for g in all_labeled_graphs(5):
            if min(g.degree_sequence()) >= 2:
                brute.add(canonical_mask(g))
        assert {canonical_mask(g) for g in got} == brute


class TestSoundness:
    def test_emitted_graphs_satisfy_their_filter(self):
        for g in enumerate_graphs(EnumFilter(6, min_degree=2, connectivity=2)):
            assert min(g.degree_sequence()) >= 2
            assert is_k_connected(g, 2)

    def test_pairwise_non_isomorphic(self, all_classes_small):
        for n in range(5, 7):
            classes = all_classes_small[n]
            for i, g in enumerate(classes):
                for h in classes[i + 1 :]:
                    assert not are_isomorphic(g, h)

    def test_complete_at_five_vertices(self, all_classes_small):
        reps = {canonical_mask(g): g for g in all_classes_small[5]}
        assert len(reps) == ALL_COUNTS[5]
        for g in all_labeled_graphs(5):
            assert canonical_mask(g) in reps

    def test_canonical_form_is_relabeling_invariant(self):
        rng = random.Random(7)
        for _ in range(60):
            g = random_connected_graph(rng, n_lo=2, n_hi=8)
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert canonical_mask(g) == canonical_mask(g.relabel(perm))

    def test_cut_vertex_kernel_matches_reference(self, all_classes_small):
        for n in range(2, 7):
            for g in all_classes_small[n]:
                adj = np.array(g.adj, dtype=np.int64)
                kernel_2conn = not _kernels._articulation_or_disconnected(g.n, adj)
                assert kernel_2conn == (is_k_connected(g, 2) if g.n > 2 else is_connected(g))

    def test_deterministic_output(self):
        first = [encode_graph6(g) for g in enumerate_graphs(EnumFilter(6, connectivity=2))]
        second = [encode_graph6(g) for g in enumerate_graphs(EnumFilter(6, connectivity=2))]
        assert first == second
        masks = [canonical_mask(g) for g in enumerate_graphs(EnumFilter(6, connectivity=2))]
        assert masks == sorted(masks)


class TestShippedCorpus:
    def test_file_shape(self):
        lines = TWO_CONNECTED_N8.read_text().splitlines()
        assert len(lines) == 7123
        sample = random.Random(3).sample(lines, 200)
        for payload in sample:
            g = decode_graph6(payload)
            assert g.n == 8
            assert encode_graph6(g) == payload
            assert is_k_connected(g, 2)
            # corpus lines are canonical representatives
            adj = np.array(g.adj, dtype=np.int64)
            scratch = np.zeros((10, 8), dtype=np.int64)
            mask = 0
            for j, (u, v) in enumerate([(i, j) for j in range(8) for i in range(j)]):
                if g.has_edge(u, v):
                    mask |= 1 << j
            assert int(_kernels.canonical_form(8, adj, scratch)) == mask

    @pytest.mark.skipif(
        not os.environ.get("HAMCONNECT_RUN_SLOW"),
        reason="full n=8 enumeration takes about two minutes; set HAMCONNECT_RUN_SLOW=1",
    )
    def test_file_matches_fresh_enumeration(self):
        fresh = [encode_graph6(g) for g in enumerate_graphs(EnumFilter(8, connectivity=2))]
        assert fresh == TWO_CONNECTED_N8.read_text().splitlines()
