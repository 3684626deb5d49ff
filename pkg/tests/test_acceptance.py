"""Acceptance gate: one test per stated deliverable, a pass/fail line each.

Run with -s to see the criterion lines; each test also enforces its
stated runtime budget where one exists.
"""

from __future__ import annotations

import os
import random
import time
from itertools import combinations

import pytest

from hamconnect.cli import main
from hamconnect.constructions import (
    cycle_gap_family,
    cycle_gap_gadget,
    expected_cycle_gap_spectrum,
    odd_length_gap_family,
    smallest_counterexample,
)
from hamconnect.cycles import cycle_spectrum
from hamconnect.enumerate_small import EnumFilter, enumerate_graphs
from hamconnect.graphs import are_isomorphic, decode_graph6, encode_graph6
from hamconnect.hamilton import is_hamiltonian_connected
from hamconnect.oracle import (
    all_cycle_lengths_naive,
    all_path_lengths_naive,
    ham_connected_naive,
)
from hamconnect.pathspectra import PathLengthAnalyzer
from hamconnect.pipeline import run_filter

from conftest import (
    PLANAR_3C_CUBIC_N8,
    PLANAR_3C_N8,
    TWO_CONNECTED_N8,
    random_connected_graph,
)
from test_graphs import complete_graph, graph6_reference


def summary_counts(report):
    return report.graphs_seen, report.ham_connected, report.counterexamples


@pytest.fixture(scope="module")
def corpus_flagged():
    with open(TWO_CONNECTED_N8) as fh:
        report = run_filter(fh, "last")
    return [decode_graph6(f.graph6) for f in report.flagged]


def test_criterion_01_counterexample_counts_up_to_seven(tmp_path, capsys):
    expected = {
        3: (1, 1, 0),
        4: (3, 1, 0),
        5: (10, 3, 0),
        6: (56, 13, 0),
        7: (468, 116, 0),
    }
    t0 = time.monotonic()
    for n, want in expected.items():
        assert main(["enum", "--n", str(n), "--connectivity", "2"]) == 0
        stream = tmp_path / f"two_connected_{n}.g6"
        stream.write_text(capsys.readouterr().out)
        code = main(["filter", "--input", str(stream), "--mode", "last", "--stage", "both"])
        assert code == 0, f"no counterexamples expected at n={n}"
        s_line = capsys.readouterr().out.splitlines()[-1].split("\t")
        assert tuple(int(x) for x in s_line[1:4]) == want, f"n={n}"
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    print(f"criterion 1: PASS (orders 3..7 exact, {elapsed:.1f}s)")


def test_criterion_02_counterexample_counts_at_eight(capsys):
    t0 = time.monotonic()
    code = main(["filter", "--input", str(TWO_CONNECTED_N8), "--mode", "last", "--stage", "both"])
    elapsed = time.monotonic() - t0
    assert code == 1, "the three known counterexamples must be reported"
    s_line = capsys.readouterr().out.splitlines()[-1]
    assert s_line == "S\t7123\t2009\t3\t0"
    assert elapsed < 60.0
    print(f"criterion 2: PASS (7123/2009/3 from the shipped corpus, {elapsed:.1f}s)")


@pytest.mark.skipif(
    not os.environ.get("HAMCONNECT_RUN_SLOW"),
    reason="fresh n=8 enumeration takes about two minutes; set HAMCONNECT_RUN_SLOW=1",
)
def test_criterion_02_counts_at_eight_from_scratch():
    t0 = time.monotonic()
    lines = (encode_graph6(g) for g in enumerate_graphs(EnumFilter(8, connectivity=2)))
    report = run_filter(lines, "last")
    elapsed = time.monotonic() - t0
    assert summary_counts(report) == (7123, 2009, 3)
    assert elapsed < 4 * 3600
    print(f"criterion 2: PASS (7123/2009/3 enumerated from scratch, {elapsed:.0f}s)")


def test_criterion_03_flagged_graphs_pairwise_non_isomorphic(corpus_flagged):
    a, b, c = corpus_flagged
    assert not are_isomorphic(a, b)
    assert not are_isomorphic(a, c)
    assert not are_isomorphic(b, c)
    print("criterion 3: PASS (three flagged graphs, pairwise non-isomorphic)")


@pytest.mark.xfail(
    strict=True,
    reason="the third flagged graph needs both optional edges: it is isomorphic "
    "to the 'both' variant and to none of base/e1/e2 (and e1, e2 are isomorphic "
    "to each other, so those three names cover only two isomorphism classes)",
)
def test_criterion_03_flagged_graphs_match_single_edge_variants(corpus_flagged):
    variants = [smallest_counterexample(v).graph for v in ("base", "e1", "e2")]
    missed = [
        i
        for i, g in enumerate(corpus_flagged)
        if not any(are_isomorphic(g, h) for h in variants)
    ]
    if missed:
        print(f"criterion 3 (named-variant form): FAIL (flagged graph(s) {missed} match none)")
    assert not missed


def test_criterion_03_flagged_graphs_match_construction_variants(corpus_flagged):
    a, b, c = corpus_flagged
    assert are_isomorphic(a, smallest_counterexample("base").graph)
    assert are_isomorphic(b, smallest_counterexample("e1").graph)
    assert are_isomorphic(b, smallest_counterexample("e2").graph)
    assert are_isomorphic(c, smallest_counterexample("both").graph)
    print(
        "criterion 3: PASS (flagged classes are exactly base, one-extra-edge, "
        "both-extra-edges)"
    )


def test_criterion_04_marked_pair_misses_length_four():
    t0 = time.monotonic()
    for variant in ("base", "e1", "e2"):
        lab = smallest_counterexample(variant)
        assert is_hamiltonian_connected(lab.graph)[0], variant
        an = PathLengthAnalyzer(lab.graph)
        assert not an.has_path_property(5), variant
        u, v = lab.vertex("v3"), lab.vertex("v4")
        assert not an.has_length(u, v, 4), variant
    elapsed = time.monotonic() - t0
    assert elapsed < 1.0
    print(f"criterion 4: PASS (three variants fail the 5-vertex property, {elapsed:.2f}s)")


def test_criterion_05_odd_length_gaps_scale():
    t0 = time.monotonic()
    for k in (0, 1, 2):
        lab = odd_length_gap_family(k)
        assert is_hamiltonian_connected(lab.graph)[0], f"k={k}"
        an = PathLengthAnalyzer(lab.graph)
        lens = an.lengths_between(*lab.distinguished_pair, upto=9 + 4 * k)
        assert lens & set(range(3, 9 + 4 * k + 1, 2)) == set(), f"k={k}"
        for i in range(4, 10 + 4 * k + 1, 2):
            assert not an.has_path_property(i), f"k={k}, i={i}"
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    print(f"criterion 5: PASS (k=0..2 odd gaps and even-property failures, {elapsed:.1f}s)")


def test_criterion_06_cycle_gap_rings_scale():
    t0 = time.monotonic()
    for k in (2, 3, 4, 5):
        g = cycle_gap_family(k).graph
        assert is_hamiltonian_connected(g)[0], f"k={k}"
        assert cycle_spectrum(g) == expected_cycle_gap_spectrum(k), f"k={k}"
    elapsed = time.monotonic() - t0
    assert elapsed < 600.0
    print(f"criterion 6: PASS (rings k=2..5 match the designed spectra, {elapsed:.1f}s)")


@pytest.mark.parametrize(
    "path,want",
    [(PLANAR_3C_N8, (257, 246, 2)), (PLANAR_3C_CUBIC_N8, (2, 1, 1))],
    ids=["planar", "planar-cubic"],
)
def test_criterion_07_planar_three_connected_spot_check(path, want):
    if not path.exists():
        pytest.skip(f"planar corpus {path.name} not present")
    with open(path) as fh:
        report = run_filter(fh, "last")
    assert summary_counts(report) == want
    print(f"criterion 7: PASS ({path.name}: {want[0]}/{want[1]}/{want[2]})")


def test_criterion_08_oracle_equivalence_sweep(two_connected_classes):
    t0 = time.monotonic()
    rng = random.Random(8220626)
    graphs = [random_connected_graph(rng) for _ in range(1000)]
    for n in range(3, 8):
        graphs += two_connected_classes[n]
    queries = 0
    for g in graphs:
        assert is_hamiltonian_connected(g)[0] == ham_connected_naive(g)
        assert cycle_spectrum(g) == all_cycle_lengths_naive(g)
        queries += 2
        an = PathLengthAnalyzer(g)
        for u, v in combinations(range(g.n), 2):
            assert an.lengths_between(u, v) == all_path_lengths_naive(g, u, v)
            queries += 1
    elapsed = time.monotonic() - t0
    assert elapsed < 30 * 60.0
    print(
        f"criterion 8: PASS ({len(graphs)} graphs, {queries} queries, "
        f"zero disagreements, {elapsed:.1f}s)"
    )


def test_criterion_09_reports_identical_across_worker_counts(two_connected_classes):
    lines = [encode_graph6(g) for g in two_connected_classes[7]]
    reports = [
        "\n".join(run_filter(lines, "last", workers=w).machine_lines())
        for w in (1, 4, 32)
    ]
    assert reports[0] == reports[1] == reports[2]
    print("criterion 9: PASS (workers 1, 4, 32 byte-identical on the order-7 corpus)")


def test_criterion_10_codec_round_trips_and_reference_encoder():
    checked = 0
    for path in (TWO_CONNECTED_N8, PLANAR_3C_N8, PLANAR_3C_CUBIC_N8):
        if not path.exists():
            continue
        for payload in path.read_text().splitlines():
            g = decode_graph6(payload)
            assert encode_graph6(g) == payload
            assert graph6_reference(g) == payload
            checked += 1
    labs = [smallest_counterexample(v) for v in ("base", "e1", "e2", "both")]
    labs += [odd_length_gap_family(k) for k in (0, 1, 2)]
    labs += [cycle_gap_gadget()] + [cycle_gap_family(k) for k in (2, 3, 4, 5)]
    for lab in labs:
        line = encode_graph6(lab.graph)
        assert decode_graph6(line) == lab.graph
        assert graph6_reference(lab.graph) == line
        checked += 1
    assert encode_graph6(complete_graph(2)) == "A_" == graph6_reference(complete_graph(2))
    print(f"criterion 10: PASS ({checked} graphs round-tripped against two encoders)")
