"""Two-stage streaming filter over graph6 input.

Stage one keeps the hamiltonian-connected graphs; stage two classifies
each survivor under one of the four pair-path filter modes.  A graph
that passes the configured stages is "flagged": with modes any/last the
flag carries a witness (the smallest failing vertex count k in the
mode's window plus the first pair missing a path of length k - 1), and
the witnessed flags are what the report counts as counterexamples.

Work is sheeted into fixed-size batches that a process pool evaluates;
results are reduced strictly in input order, so the report, the flagged
list and all output bytes are identical whatever the worker count.

Inputs on fewer than two vertices cannot be hamiltonian-connected in
the sense used here (the definition quantifies over pairs of distinct
vertices reachable only when n >= 2), so the filter drops them at
stage one rather than erroring.
"""

from __future__ import annotations

import multiprocessing
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import _kernels
from .constructions import (
    LabeledGraph,
    cycle_gap_family,
    cycle_gap_gadget,
    expected_cycle_gap_spectrum,
    odd_length_gap_family,
    smallest_counterexample,
)
from .cycles import cycle_spectrum, spectrum_gap_metrics
from .graphs import Graph6Error, GraphError, decode_graph6, iter_graph6
from .hamilton import is_hamiltonian_connected
from .pathspectra import FilterMode, PathLengthAnalyzer, mode_window

DEFAULT_BATCH_SIZE = 64

STAGES = ("1", "2", "both")

_ERROR, _NOT_SURVIVOR, _PASS, _FLAG = 0, 1, 2, 3


class PipelineInputError(ValueError):
    """Undecodable graph6 input in strict mode; carries the line number."""

    def __init__(self, lineno: int, reason: str) -> None:
        super().__init__(f"line {lineno}: {reason}")
        self.lineno = lineno
        self.reason = reason


@dataclass(frozen=True)
class FlaggedGraph:
    """One flagged input: its line number, raw graph6, optional witness."""

    lineno: int
    graph6: str
    witness_k: int | None = None
    witness_pair: tuple[int, int] | None = None


@dataclass
class FilterReport:
    mode: FilterMode
    stage: str
    graphs_seen: int = 0
    ham_connected: int = 0
    counterexamples: int = 0
    skipped: int = 0
    truncated: bool = False
    flagged: list[FlaggedGraph] = field(default_factory=list)

    def machine_lines(self) -> Iterator[str]:
        """Tab-separated flagged records followed by one summary line."""
        for f in self.flagged:
            if f.witness_k is None:
                yield f"F\t{f.lineno}\t{f.graph6}\t-\t-\t-"
            else:
                u, v = f.witness_pair
                yield f"F\t{f.lineno}\t{f.graph6}\t{f.witness_k}\t{u}\t{v}"
        yield self.summary_line()

    def summary_line(self) -> str:
        return (
            f"S\t{self.graphs_seen}\t{self.ham_connected}"
            f"\t{self.counterexamples}\t{self.skipped}"
        )

    def human_summary(self) -> str:
        lines = [
            f"mode {self.mode.value}, stage {self.stage}",
            f"graphs seen            {self.graphs_seen}",
            f"hamiltonian-connected  {self.ham_connected}",
            f"counterexamples        {self.counterexamples}",
        ]
        if self.skipped:
            lines.append(f"skipped lines          {self.skipped}")
        if self.truncated:
            lines.append("flagged list truncated")
        return "\n".join(lines)


def _evaluate_one(payload: str, mode: FilterMode, stage: str):
    try:
        g = decode_graph6(payload)
    except Graph6Error as exc:
        return _ERROR, str(exc), None
    if stage in ("1", "both"):
        if g.n < 2:
            return _NOT_SURVIVOR, None, None
        ok, _ = is_hamiltonian_connected(g)
        if not ok:
            return _NOT_SURVIVOR, None, None
        if stage == "1":
            return _FLAG, None, None
    if g.n < 2:
        passes = mode in (FilterMode.ALL, FilterMode.FULL)
        return (_FLAG, None, None) if passes else (_PASS, None, None)
    analyzer = PathLengthAnalyzer(g)
    if not analyzer.classify(mode):
        return _PASS, None, None
    if mode in (FilterMode.ANY, FilterMode.LAST):
        witness = analyzer.first_violation(*mode_window(mode, g.n))
        return _FLAG, witness.k, witness.pair
    return _FLAG, None, None


def _evaluate_batch(job):
    batch, mode_value, stage = job
    mode = FilterMode(mode_value)
    out = []
    for lineno, payload in batch:
        code, wk, wpair = _evaluate_one(payload, mode, stage)
        out.append((lineno, payload, code, wk, wpair))
    return out


def _batches(lines: Iterable[str], size: int) -> Iterator[list[tuple[int, str]]]:
    batch: list[tuple[int, str]] = []
    for item in iter_graph6(lines):
        batch.append(item)
        if len(batch) >= size:
            yield batch
            batch = []
    if batch:
        yield batch


def run_filter(
    lines: Iterable[str],
    mode: FilterMode | str,
    stage: str = "both",
    workers: int = 1,
    lenient: bool = False,
    max_flagged: int | None = None,
    batch_size: int = DEFAULT_BATCH_SIZE,
    on_flagged: Callable[[FlaggedGraph], None] | None = None,
    progress: Callable[[int], None] | None = None,
) -> FilterReport:
    """Filter a graph6 stream; see the module docstring for semantics.

    lines is any iterable of text lines ('>>graph6<<' headers and blank
    lines are skipped).  In strict mode an undecodable line raises
    PipelineInputError; with lenient=True it is counted and skipped.
    max_flagged caps how many flagged payloads are collected (counts
    stay complete).  on_flagged fires for each collected flag in input
    order.
    """
    mode = FilterMode(mode)
    if stage not in STAGES:
        raise ValueError(f"stage must be one of {STAGES}, got {stage!r}")
    if workers < 1:
        raise ValueError(f"worker count must be positive, got {workers}")
    if batch_size < 1:
        raise ValueError(f"batch size must be positive, got {batch_size}")
    report = FilterReport(mode=mode, stage=stage)
    jobs = ((batch, mode.value, stage) for batch in _batches(lines, batch_size))

    def reduce_batch(results) -> None:
        for lineno, payload, code, wk, wpair in results:
            if code == _ERROR:
                if not lenient:
                    raise PipelineInputError(lineno, wk)
                report.skipped += 1
                continue
            report.graphs_seen += 1
            if code == _NOT_SURVIVOR:
                continue
            report.ham_connected += 1
            if code != _FLAG:
                continue
            if wk is not None:
                report.counterexamples += 1
            if max_flagged is not None and len(report.flagged) >= max_flagged:
                report.truncated = True
                continue
            entry = FlaggedGraph(lineno, payload, wk, wpair)
            report.flagged.append(entry)
            if on_flagged is not None:
                on_flagged(entry)
        if progress is not None:
            progress(report.graphs_seen)

    if workers == 1:
        for job in jobs:
            reduce_batch(_evaluate_batch(job))
        return report

    _kernels.warm_up()  # compile before forking so children share the cache
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        ctx = multiprocessing.get_context("spawn")
    with ctx.Pool(processes=workers) as pool:
        for results in pool.imap(_evaluate_batch, jobs, chunksize=1):
            reduce_batch(results)
    return report


# ---------------------------------------------------------------------------
# building a family member and measuring it in one step

FAMILIES = ("fig1", "h", "f", "ga")
ANALYSES = ("hamconn", "pathspec", "cyclespec", "gaps")


@dataclass
class AnalysisOutcome:
    """A built family member, its analysis results, and expectation checks.

    results maps analysis names to values (bool, sorted length lists, or
    gap metrics).  failures lists every designed-in property of the
    family that a requested analysis contradicted; an empty list means
    everything asked about matched the design.
    """

    family: str
    labeled: LabeledGraph
    results: dict[str, object] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    @property
    def expectations_ok(self) -> bool:
        return not self.failures


def build_family(family: str, variant: str = "base", k: int | None = None) -> LabeledGraph:
    """Construct one member: fig1 variants, h/f by index, or the gadget."""
    if family == "fig1":
        return smallest_counterexample(variant)
    if family == "h":
        return odd_length_gap_family(0 if k is None else k)
    if family == "f":
        return cycle_gap_family(2 if k is None else k)
    if family == "ga":
        return cycle_gap_gadget()
    raise GraphError(f"unknown family {family!r}; choose from {FAMILIES}")


def run_construct_and_analyze(
    family: str,
    variant: str = "base",
    k: int | None = None,
    analyses: Iterable[str] = (),
) -> AnalysisOutcome:
    """Build a family member and run the requested analyses against it.

    Analyses that touch a designed-in property also verify it: the fig1
    variants and both gap families must be hamiltonian-connected; the
    fig1 base/e1/e2 pair (v3, v4) and the h-family pair (a, c) must miss
    their designed path lengths; the f-family spectrum must equal its
    closed form.  The fig1 "both" variant's pair behavior is reported
    but not checked, being a measured fact rather than a designed one.
    """
    lab = build_family(family, variant, k)
    out = AnalysisOutcome(family, lab)
    kk = 0 if k is None else k
    for name in analyses:
        if name == "hamconn":
            ok, _ = is_hamiltonian_connected(lab.graph)
            out.results["hamconn"] = ok
            if family != "ga" and not ok:
                out.failures.append(f"{family} member is not hamiltonian-connected")
        elif name == "pathspec":
            if lab.distinguished_pair is None:
                raise GraphError(f"family {family!r} has no distinguished pair")
            u, v = lab.distinguished_pair
            lens = PathLengthAnalyzer(lab.graph).lengths_between(u, v)
            out.results["pathspec"] = sorted(lens)
            if family == "fig1" and variant != "both" and 4 in lens:
                out.failures.append("pair (v3, v4) has a path of length 4")
            if family == "h":
                banned = set(range(3, 9 + 4 * kk + 1, 2))
                hit = sorted(lens & banned)
                if hit:
                    out.failures.append(f"pair (a, c) has paths of banned odd lengths {hit}")
        elif name == "cyclespec":
            spec = cycle_spectrum(lab.graph)
            out.results["cyclespec"] = sorted(spec)
            if family == "f":
                want = expected_cycle_gap_spectrum(2 if k is None else k)
                if spec != want:
                    out.failures.append(
                        f"cycle spectrum {sorted(spec)} differs from designed {sorted(want)}"
                    )
        elif name == "gaps":
            spec = cycle_spectrum(lab.graph)
            out.results["gaps"] = spectrum_gap_metrics(spec, lab.graph.n)
        else:
            raise GraphError(f"unknown analysis {name!r}; choose from {ANALYSES}")
    return out
