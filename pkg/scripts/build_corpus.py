#!/usr/bin/env python3
"""Enumerate graphs into a graph6 corpus file.

The shipped data/two_connected_n8.g6 was produced by

    python3 scripts/build_corpus.py --n 8 --connectivity 2 \
        --out data/two_connected_n8.g6

Output is deterministic (one line per isomorphism class, ascending
canonical order), so rebuilding the file reproduces it byte for byte.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamconnect.enumerate_small import EnumFilter, enumerate_graphs
from hamconnect.graphs import encode_graph6


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, required=True, help="number of vertices (0..8)")
    ap.add_argument("--min-degree", type=int, default=0)
    ap.add_argument("--connectivity", type=int, default=0, choices=(0, 1, 2, 3))
    ap.add_argument("--out", type=Path, required=True)
    args = ap.parse_args()

    t0 = time.time()

    def progress(done: int, total: int, found: int) -> None:
        pct = 100.0 * done / total
        print(f"  {pct:5.1f}% of masks, {found} classes, {time.time()-t0:.0f}s", file=sys.stderr)

    filt = EnumFilter(args.n, args.min_degree, args.connectivity)
    count = 0
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w") as fh:
        for g in enumerate_graphs(filt, progress=progress):
            fh.write(encode_graph6(g) + "\n")
            count += 1
    print(f"wrote {count} graphs to {args.out} in {time.time()-t0:.0f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
