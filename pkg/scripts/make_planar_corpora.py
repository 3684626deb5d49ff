#!/usr/bin/env python3
"""Extract planar 3-connected corpora from a 2-connected graph6 file.

The shipped planar files were produced from the n = 8 corpus by

    python3 scripts/make_planar_corpora.py \
        --input data/two_connected_n8.g6 \
        --out data/planar3c_n8.g6 \
        --cubic-out data/planar3c_cubic_n8.g6

Each input line is kept when the graph is 3-connected and planar
(networkx certifies planarity); the cubic file additionally demands
3-regularity.  Input order is preserved, so the output is as
deterministic as the input.  The same corpora can be produced with
plantri; this route only needs the enumerator that built the input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import networkx as nx

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from hamconnect.graphs import decode_graph6, is_k_connected, iter_graph6


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", type=Path, required=True, help="graph6 file to filter")
    ap.add_argument("--out", type=Path, required=True, help="planar 3-connected output")
    ap.add_argument("--cubic-out", type=Path, help="cubic subset output (optional)")
    args = ap.parse_args()

    kept = cubic = 0
    args.out.parent.mkdir(parents=True, exist_ok=True)
    cubic_fh = open(args.cubic_out, "w") if args.cubic_out else None
    with open(args.input) as fh, open(args.out, "w") as out:
        for _, payload in iter_graph6(fh):
            g = decode_graph6(payload)
            if not is_k_connected(g, 3):
                continue
            if not nx.check_planarity(nx.Graph(g.edges()), counterexample=False)[0]:
                continue
            out.write(payload + "\n")
            kept += 1
            if cubic_fh and g.degree_sequence() == (3,) * g.n:
                cubic_fh.write(payload + "\n")
                cubic += 1
    if cubic_fh:
        cubic_fh.close()
        print(f"kept {kept} planar 3-connected, {cubic} cubic", file=sys.stderr)
    else:
        print(f"kept {kept} planar 3-connected", file=sys.stderr)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
