#!/usr/bin/env python3
"""Stage-by-stage timing of the pipeline on a large generated instance,
plus a standalone peeling benchmark (1e5 nodes / 1e6 edges by default).
Prints wall times and peak RSS.
"""

import argparse
import random
import resource
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from dualdense import (DcsOptions, Graph, build_alignment_graph, extract_dcs,
                       generate_planted, peel)


def rss_gb() -> float:
    return resource.getrusage(resource.RUSAGE_SELF).ru_maxrss / (1024 ** 2)


def timed(label, fn):
    t0 = time.monotonic()
    out = fn()
    print(f"  {label:<28} {time.monotonic() - t0:>7.1f}s   rss {rss_gb():.2f} GB")
    return out


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--nodes", type=int, default=100_000)
    ap.add_argument("--edges", type=int, default=500_000)
    ap.add_argument("--planted-size", type=int, default=8)
    ap.add_argument("--delta", type=int, default=2)
    ap.add_argument("--seed", type=int, default=99)
    ap.add_argument("--peel-edges", type=int, default=1_000_000)
    args = ap.parse_args()

    n = args.nodes
    pair_count = n * (n - 1) // 2
    p_phys = max(args.edges - (n - 1), 0) / pair_count
    p_conc = args.edges / pair_count

    print(f"pipeline benchmark: n={n}, target edges={args.edges}, delta={args.delta}")
    inst = timed("generate instance", lambda: generate_planted(
        n, args.planted_size, seed=args.seed,
        background_edge_prob=p_conc, physical_edge_prob=p_phys))
    dn = inst.dual
    print(f"  conceptual edges {dn.conceptual.edge_count}, "
          f"physical edges {dn.physical.edge_count}")
    ag = timed("build alignment graph", lambda: build_alignment_graph(dn, args.delta))
    print(f"  alignment edges {ag.graph.edge_count}")
    timed("peel alignment graph", lambda: peel(ag.graph))
    result = timed("full pipeline", lambda: extract_dcs(dn, DcsOptions(delta=args.delta)))
    print(f"  DCS size {len(result.nodes)}, density {result.conceptual_density:.3f}, "
          f"recovered planted: {result.nodes == inst.planted}")

    m = args.peel_edges
    print(f"peel benchmark: n={n}, m={m}, random weights")
    rng = random.Random(args.seed)
    edges = set()
    while len(edges) < m:
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    g = timed("build graph", lambda: Graph(
        [str(i) for i in range(n)],
        [(u, v, 1.0 - rng.random()) for u, v in sorted(edges)]))
    timed("peel", lambda: peel(g))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
