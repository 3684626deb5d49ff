"""Command line front end.

Subcommands:

* filter:    two-stage graph6 stream filter (the table reproducer)
* enum:      exhaustive isomorphism-free enumeration for n <= 8
* construct: build a family member, optionally verifying its design
* analyze:   per-graph measurements over a graph6 stream
* oracle:    the same measurements via the slow reference code

Exit codes: 0 on success, 1 when a property violation was found (a
witnessed counterexample from filter, a construct expectation failure,
or an oracle comparison mismatch), 2 on unusable input or arguments.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, TextIO

from . import oracle as oracle_mod
from .cycles import cycle_spectrum, spectrum_gap_metrics
from .enumerate_small import EnumFilter, enumerate_graphs
from .graphs import Graph6Error, GraphError, decode_graph6, encode_graph6, iter_graph6
from .hamilton import is_hamiltonian_connected
from .pathspectra import FilterMode, PathLengthAnalyzer
from .pipeline import (
    ANALYSES,
    FAMILIES,
    PipelineInputError,
    run_construct_and_analyze,
    run_filter,
)


def _open_input(path: str) -> TextIO:
    if path == "-":
        return sys.stdin
    try:
        return open(path, "r")
    except OSError as exc:
        raise SystemExit(_fail(f"cannot open {path}: {exc.strerror}"))


def _fail(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise SystemExit(_fail(f"expected a vertex pair like 0,3 but got {text!r}"))
    return u, v


def _cmd_filter(args: argparse.Namespace) -> int:
    flagged_file = open(args.output_flagged, "w") if args.output_flagged else None

    def emit(entry) -> None:
        if flagged_file is not None:
            flagged_file.write(entry.graph6 + "\n")

    progress = None
    if args.progress:
        def progress(done: int) -> None:
            if done % 64000 == 0:
                print(f"{done} graphs processed", file=sys.stderr)

    stream = _open_input(args.input)
    try:
        report = run_filter(
            stream,
            mode=args.mode,
            stage=args.stage,
            workers=args.workers,
            lenient=args.lenient,
            max_flagged=args.max_flagged,
            batch_size=args.batch_size,
            on_flagged=emit,
            progress=progress,
        )
    except PipelineInputError as exc:
        return _fail(str(exc))
    finally:
        if flagged_file is not None:
            flagged_file.close()
        if stream is not sys.stdin:
            stream.close()
    for line in report.machine_lines():
        print(line)
    print(report.human_summary(), file=sys.stderr)
    return 1 if report.counterexamples else 0


def _cmd_enum(args: argparse.Namespace) -> int:
    try:
        filt = EnumFilter(args.n, args.min_degree, args.connectivity)
        count = 0
        for g in enumerate_graphs(filt):
            print(encode_graph6(g))
            count += 1
    except GraphError as exc:
        return _fail(str(exc))
    print(f"{count} graphs", file=sys.stderr)
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    analyses = [name for name in ANALYSES if getattr(args, name)]
    try:
        outcome = run_construct_and_analyze(args.family, args.variant, args.k, analyses)
    except GraphError as exc:
        return _fail(str(exc))
    lab = outcome.labeled
    print(encode_graph6(lab.graph))
    if args.roles == "-":
        for line in lab.role_lines():
            print(line)
    elif args.roles:
        with open(args.roles, "w") as fh:
            for line in lab.role_lines():
                fh.write(line + "\n")
    for name in analyses:
        print(f"{name}: {_format_result(outcome.results[name])}", file=sys.stderr)
    for failure in outcome.failures:
        print(f"violation: {failure}", file=sys.stderr)
    return 0 if outcome.expectations_ok else 1


def _format_result(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return ",".join(str(x) for x in value)
    if hasattr(value, "cardinality"):
        return (
            f"card:{value.cardinality},run:{value.longest_run},ratio:{value.run_ratio:.6f}"
        )
    return str(value)


def _analysis_fields(args: argparse.Namespace, g, naive: bool, budget: int) -> list[str]:
    fields = []
    if args.hamconn:
        if naive:
            ok = oracle_mod.ham_connected_naive(g, budget)
        else:
            ok, _ = is_hamiltonian_connected(g)
        fields.append(f"hamconn={'true' if ok else 'false'}")
    if args.pathspec:
        u, v = _parse_pair(args.pathspec)
        if naive:
            lens = oracle_mod.all_path_lengths_naive(g, u, v, budget)
        else:
            lens = PathLengthAnalyzer(g).lengths_between(u, v)
        fields.append(f"pathspec({u},{v})=" + ",".join(str(x) for x in sorted(lens)))
    if args.cyclespec or args.gaps:
        spec = oracle_mod.all_cycle_lengths_naive(g, budget) if naive else cycle_spectrum(g)
        if args.cyclespec:
            fields.append("cyclespec=" + ",".join(str(x) for x in sorted(spec)))
        if args.gaps:
            m = spectrum_gap_metrics(spec, g.n)
            fields.append(f"gaps=card:{m.cardinality},run:{m.longest_run},ratio:{m.run_ratio:.6f}")
    return fields


def _run_measurements(args: argparse.Namespace, naive: bool) -> int:
    stream = _open_input(args.input)
    budget = getattr(args, "budget", oracle_mod.DEFAULT_BUDGET)
    compare = getattr(args, "compare", False)
    mismatches = 0
    try:
        for lineno, payload in iter_graph6(stream):
            try:
                g = decode_graph6(payload)
            except Graph6Error as exc:
                return _fail(f"line {lineno}: {exc}")
            try:
                fields = _analysis_fields(args, g, naive, budget)
                if compare:
                    fast = _analysis_fields(args, g, False, budget)
                    if fast != fields:
                        print(f"{lineno}\t{payload}\tMISMATCH naive={fields} fast={fast}")
                        mismatches += 1
                        continue
            except (GraphError, oracle_mod.OracleBudgetExceeded) as exc:
                return _fail(f"line {lineno}: {exc}")
            print("\t".join([str(lineno), payload] + fields))
    finally:
        if stream is not sys.stdin:
            stream.close()
    return 1 if mismatches else 0


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(prog="hamconnect", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("filter", help="two-stage filter over a graph6 stream")
    p.add_argument("--input", default="-", help="graph6 file or - for stdin")
    p.add_argument("--mode", default="last", choices=[m.value for m in FilterMode])
    p.add_argument("--stage", default="both", choices=["1", "2", "both"])
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--batch-size", type=int, default=64)
    p.add_argument("--output-flagged", metavar="FILE", help="write flagged graphs as graph6")
    p.add_argument("--lenient", action="store_true", help="skip undecodable lines")
    p.add_argument("--max-flagged", type=int, default=None)
    p.add_argument("--progress", action="store_true")
    p.set_defaults(fn=_cmd_filter)

    p = sub.add_parser("enum", help="enumerate isomorphism classes for n <= 8")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int, default=0)
    p.add_argument("--connectivity", type=int, default=0, choices=[0, 1, 2, 3])
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("construct", help="build a family member")
    p.add_argument("--family", required=True, choices=list(FAMILIES))
    p.add_argument("--variant", default="base", choices=["base", "e1", "e2", "both"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--roles", metavar="FILE", help="role map sidecar (- for stdout)")
    p.add_argument("--hamconn", action="store_true")
    p.add_argument("--pathspec", action="store_true", help="distinguished pair lengths")
    p.add_argument("--cyclespec", action="store_true")
    p.add_argument("--gaps", action="store_true")
    p.set_defaults(fn=_cmd_construct)

    for name, naive in (("analyze", False), ("oracle", True)):
        p = sub.add_parser(name, help=("slow reference " if naive else "") + "per-graph measurements")
        p.add_argument("--input", default="-", help="graph6 file or - for stdin")
        p.add_argument("--hamconn", action="store_true")
        p.add_argument("--pathspec", metavar="U,V", help="path lengths between a pair")
        p.add_argument("--cyclespec", action="store_true")
        p.add_argument("--gaps", action="store_true")
        if naive:
            p.add_argument("--budget", type=int, default=oracle_mod.DEFAULT_BUDGET)
            p.add_argument("--compare", action="store_true", help="diff against the fast code")
        p.set_defaults(fn=lambda a, _n=naive: _run_measurements(a, _n))

    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
