"""Cycle spectrum and spectrum gap metrics."""

from __future__ import annotations

from itertools import permutations

import pytest

from hamconnect.constructions import cycle_gap_family, expected_cycle_gap_spectrum
from hamconnect.cycles import cycle_spectrum, spectrum_gap_metrics
from hamconnect.graphs import Graph, GraphError
from hamconnect.oracle import all_cycle_lengths_naive

from test_graphs import complete_graph, cycle_graph, path_graph, petersen_graph


def has_hamiltonian_cycle(g: Graph) -> bool:
    """Brute-force second opinion, fixing vertex 0 as the cycle start."""
    if g.n < 3:
        return False
    for order in permutations(range(1, g.n)):
        cyc = (0,) + order
        if all(g.has_edge(cyc[i], cyc[(i + 1) % g.n]) for i in range(g.n)):
            return True
    return False


class TestCycleSpectrum:
    def test_hand_checked(self):
        assert cycle_spectrum(Graph(0, ())) == set()
        assert cycle_spectrum(path_graph(4)) == set()
        assert cycle_spectrum(cycle_graph(6)) == {6}
        assert cycle_spectrum(complete_graph(4)) == {3, 4}
        assert cycle_spectrum(complete_graph(7)) == {3, 4, 5, 6, 7}
        assert cycle_spectrum(petersen_graph()) == {5, 6, 8, 9}

    def test_oversize_rejected(self):
        with pytest.raises(GraphError):
            cycle_spectrum(Graph(63, tuple([0] * 63)))

    def test_matches_oracle(self, two_connected_classes, random_corpus):
        graphs = two_connected_classes[5] + two_connected_classes[6]
        graphs += [g for g in random_corpus if g.n <= 8][:40]
        for g in graphs:
            assert cycle_spectrum(g) == all_cycle_lengths_naive(g)

    def test_top_length_is_hamiltonicity(self, two_connected_classes):
        for n in (5, 6):
            for g in two_connected_classes[n]:
                assert (n in cycle_spectrum(g)) == has_hamiltonian_cycle(g)

    def test_family_spectra_match_design(self):
        for k in (2, 3, 4):
            g = cycle_gap_family(k).graph
            assert cycle_spectrum(g) == expected_cycle_gap_spectrum(k)


class TestGapMetrics:
    def test_empty_spectrum(self):
        assert spectrum_gap_metrics(set(), 5) == (0, 0, 0.0)

    def test_single_run(self):
        card, run, ratio = spectrum_gap_metrics({6}, 6)
        assert (card, run) == (1, 1)
        assert ratio == pytest.approx(1 / 6)
        assert spectrum_gap_metrics({3, 4, 5}, 5) == (3, 3, 3 / 5)

    def test_broken_runs(self):
        card, run, ratio = spectrum_gap_metrics({3, 4, 6, 7, 8}, 8)
        assert (card, run) == (5, 3)
        assert ratio == pytest.approx(3 / 8)

    def test_designed_family_metrics(self):
        spec = cycle_spectrum(cycle_gap_family(3).graph)
        card, run, ratio = spectrum_gap_metrics(spec, 18)
        # spectrum is {4, 5, 8} with everything from 9 to 18, so the
        # longest consecutive run is 8..18
        assert (card, run) == (13, 11)
        assert ratio == pytest.approx(11 / 18)

    def test_rejects_empty_host(self):
        with pytest.raises(GraphError):
            spectrum_gap_metrics({3}, 0)
