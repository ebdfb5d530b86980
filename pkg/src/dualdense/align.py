"""Weighted alignment-graph construction.

The two networks are merged into a single weighted graph over composite
nodes (one per correspondence pair).  For every conceptually adjacent pair
of composite nodes: physical adjacency yields a Match edge carrying the
conceptual weight; a physical hop distance d with 2 <= d <= delta yields a
Gap(d) edge weighted by the selected gap rule; anything farther yields no
edge.  delta = infinity turns the distance test into same-component
reachability.
"""

from __future__ import annotations

import math
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .dualnet import DualNetwork
from .errors import ConfigError
from .graph import Graph

MATCH = "match"
GAP = "gap"


class GapWeightRule(Enum):
    """How a gap edge derives its weight from the conceptual weight w_c of
    endpoints at physical hop distance d.

    CONCEPTUAL keeps w_c unchanged (the endpoints are directly adjacent in
    the conceptual network, so the one-edge path average is w_c itself).
    PER_HOP spreads w_c over the physical detour, w_c / d, penalizing long
    gaps.  PER_HOP is the default throughout.
    """

    CONCEPTUAL = "conceptual"
    PER_HOP = "per-hop"


def gap_weight(rule: GapWeightRule, w_c: float, d: int) -> float:
    """Weight assigned to a gap edge with conceptual weight w_c spanning a
    physical detour of d >= 2 hops."""
    if w_c <= 0:
        raise ValueError(f"conceptual weight must be positive, got {w_c}")
    if d < 2:
        raise ValueError(f"gap distance must be at least 2, got {d}")
    if rule is GapWeightRule.CONCEPTUAL:
        return w_c
    if rule is GapWeightRule.PER_HOP:
        return w_c / d
    raise ConfigError(f"unknown gap weight rule: {rule!r}")


@dataclass
class AlignmentGraph:
    """A weighted graph over composite nodes plus per-edge match/gap tags.

    Composite node k corresponds to correspondence pair k; its label joins
    the conceptual and physical labels with '|'.  ``kinds`` maps each edge
    (u, v) with u < v to ("match", 1) or ("gap", d).
    """

    graph: Graph
    kinds: dict[tuple[int, int], tuple[str, int]]
    delta: float
    gap_mode: GapWeightRule

    def kind_of(self, u: int, v: int) -> tuple[str, int]:
        return self.kinds[(u, v) if u < v else (v, u)]


def check_delta(delta) -> float:
    """Normalize the gap threshold: a positive integer or math.inf."""
    if delta == math.inf:
        return math.inf
    if isinstance(delta, bool) or not isinstance(delta, int):
        raise ConfigError(f"delta must be a positive integer or infinity, got {delta!r}")
    if delta < 1:
        raise ConfigError(f"delta must be at least 1, got {delta}")
    return delta


def _hop_distances(g: Graph, source: int, targets: set[int], cap: float) -> dict[int, int]:
    """BFS from source, truncated at depth cap, reporting distances to the
    requested targets only.  Stops early once every target is resolved."""
    found: dict[int, int] = {}
    remaining = set(targets)
    if source in remaining:
        found[source] = 0
        remaining.discard(source)
    dist = {source: 0}
    queue = deque([source])
    while queue and remaining:
        x = queue.popleft()
        d = dist[x]
        if d >= cap:
            break
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = d + 1
                if y in remaining:
                    found[y] = d + 1
                    remaining.discard(y)
                    if not remaining:
                        return found
                queue.append(y)
    return found


def build_alignment_graph(dn: DualNetwork, delta=4,
                          gap_mode: GapWeightRule = GapWeightRule.PER_HOP,
                          workers: int = 1) -> AlignmentGraph:
    """Merge a dual network into its weighted alignment graph.

    Candidate edges are the conceptual edges whose endpoints are both
    covered by the correspondence (every alignment edge requires conceptual
    adjacency, so scanning all composite-node pairs is never needed).
    Physical hop distances are resolved by per-source BFS truncated at
    delta; with ``workers`` > 1 the BFS batches run on a thread pool, and
    the result is identical to sequential construction because edges are
    assembled afterwards in conceptual-edge order.
    """
    delta = check_delta(delta)
    if not isinstance(gap_mode, GapWeightRule):
        raise ConfigError(f"unknown gap weight rule: {gap_mode!r}")

    labels = [f"{c}|{p}" for c, p in dn.correspondence.pairs]

    # Candidate scan: conceptual edges between covered nodes.
    candidates: list[tuple[int, int, float, int, int]] = []
    for ci, cj, w in dn.conceptual.edges():
        ki = dn.pair_of_conceptual.get(ci)
        kj = dn.pair_of_conceptual.get(cj)
        if ki is None or kj is None:
            continue
        candidates.append((ki, kj, w, dn.pair_physical[ki], dn.pair_physical[kj]))

    # Distance queries for the non-adjacent candidates, grouped per source.
    queries: dict[int, set[int]] = {}
    physical = dn.physical
    if delta >= 2:
        for ki, kj, w, pi, pj in candidates:
            if not physical.has_edge(pi, pj):
                src, dst = (pi, pj) if pi < pj else (pj, pi)
                queries.setdefault(src, set()).add(dst)

    resolved: dict[int, dict[int, int]] = {}
    sources = sorted(queries)
    if workers > 1 and len(sources) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = pool.map(lambda s: _hop_distances(physical, s, queries[s], delta), sources)
            resolved = dict(zip(sources, results))
    else:
        for s in sources:
            resolved[s] = _hop_distances(physical, s, queries[s], delta)

    edges: list[tuple[int, int, float]] = []
    kinds: dict[tuple[int, int], tuple[str, int]] = {}
    for ki, kj, w, pi, pj in candidates:
        key = (ki, kj) if ki < kj else (kj, ki)
        if physical.has_edge(pi, pj):
            edges.append((ki, kj, w))
            kinds[key] = (MATCH, 1)
        elif delta >= 2:
            src, dst = (pi, pj) if pi < pj else (pj, pi)
            d = resolved.get(src, {}).get(dst)
            if d is not None and d <= delta:
                edges.append((ki, kj, gap_weight(gap_mode, w, d)))
                kinds[key] = (GAP, d)

    return AlignmentGraph(Graph(labels, edges), kinds, delta, gap_mode)
