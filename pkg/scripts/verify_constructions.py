#!/usr/bin/env python3
"""Walk every construction family and verify its designed properties.

Covers the 8-vertex counterexample variants, the odd-length-gap family
up to --max-h rounds, and the cycle-gap rings up to --max-f copies.
Exit code 1 if anything measured contradicts the design.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamconnect.pipeline import run_construct_and_analyze


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-h", type=int, default=2, help="odd-gap rounds (28 vertices at 2)")
    ap.add_argument("--max-f", type=int, default=5, help="ring copies (30 vertices at 5)")
    args = ap.parse_args()

    jobs = [("fig1", v, None) for v in ("base", "e1", "e2", "both")]
    jobs += [("h", "base", k) for k in range(args.max_h + 1)]
    jobs += [("f", "base", k) for k in range(2, args.max_f + 1)]
    jobs.append(("ga", "base", None))

    failures = 0
    for family, variant, k in jobs:
        analyses = {
            "fig1": ("hamconn", "pathspec", "cyclespec"),
            "h": ("hamconn", "pathspec"),
            "f": ("hamconn", "cyclespec", "gaps"),
            "ga": ("cyclespec",),
        }[family]
        t0 = time.time()
        out = run_construct_and_analyze(family, variant, k, analyses)
        took = time.time() - t0
        tag = family if family in ("ga",) else (
            f"{family}/{variant}" if family == "fig1" else f"{family} k={k}"
        )
        n = out.labeled.graph.n
        status = "ok" if out.expectations_ok else "VIOLATION"
        print(f"{tag:10s} n={n:2d}  {status}  ({took:.1f}s)")
        for name in analyses:
            print(f"    {name}: {out.results[name]}")
        for failure in out.failures:
            print(f"    problem: {failure}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
