"""Densest-subgraph extraction on a weighted graph.

``peel`` is the greedy 2-approximation: repeatedly remove the node with
minimum weighted degree, track the density of every suffix, and return the
densest one.  ``exact_densest`` enumerates all subsets (small graphs only)
and serves as the oracle the greedy result is checked against.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field

from .graph import Graph, density


@dataclass
class PeelTrace:
    """Audit trail of one peeling run.

    ``density_at_prefix[i]`` is the density of the graph remaining before
    the i-th removal, so the subgraph certified by prefix i is
    ``removal_order[i:]``.  When several prefixes tie on the best density,
    ``best_prefix_index`` is the latest (smallest surviving subgraph) and
    all tied indices are recorded.
    """

    removal_order: list[int]
    density_at_prefix: list[float]
    best_prefix_index: int
    tied_prefix_indices: list[int] = field(default_factory=list)

    @property
    def best_density(self) -> float:
        return self.density_at_prefix[self.best_prefix_index]


@dataclass
class DensestResult:
    nodes: frozenset[int]
    density: float
    exact: bool


def peel(g: Graph, audit: bool = False) -> tuple[DensestResult, PeelTrace]:
    """Greedy peeling by minimum current volume (weighted degree).

    Ties on volume break toward the lowest node index, which makes every
    trace reproducible.  Volumes are maintained by incremental subtraction
    on a lazy min-heap; ``audit=True`` recomputes every live volume from
    scratch at each step and asserts agreement (test/debug builds).
    """
    n = g.n
    if n == 0:
        raise ValueError("cannot peel an empty graph")

    vols = [math.fsum(w for _, w in g.incident(v)) for v in range(n)]
    alive = [True] * n
    remaining = n
    total = g.total_weight
    heap: list[tuple[float, int]] = [(vols[v], v) for v in range(n)]
    heapq.heapify(heap)

    removal_order: list[int] = []
    densities: list[float] = []
    while remaining:
        densities.append(2.0 * total / remaining)
        while True:
            val, v = heapq.heappop(heap)
            if alive[v] and val == vols[v]:
                break
        if audit:
            for u in range(n):
                if not alive[u]:
                    continue
                fresh = math.fsum(w for x, w in g.incident(u) if alive[x])
                drift = abs(fresh - vols[u])
                assert drift <= 1e-9 * max(1.0, abs(fresh)), (
                    f"volume drift {drift} on node {u} at step {len(removal_order)}")
        removal_order.append(v)
        alive[v] = False
        remaining -= 1
        total -= vols[v]
        for u, w in g.incident(v):
            if alive[u]:
                vols[u] -= w
                heapq.heappush(heap, (vols[u], u))

    best = max(densities)
    tied = [i for i, d in enumerate(densities) if d == best]
    best_index = tied[-1]
    trace = PeelTrace(removal_order, densities, best_index, tied)
    nodes = frozenset(removal_order[best_index:])
    return DensestResult(nodes, density(g, nodes), exact=False), trace


DEFAULT_EXACT_LIMIT = 20


def exact_densest(g: Graph, limit: int = DEFAULT_EXACT_LIMIT) -> DensestResult:
    """Exhaustive maximum-density subset, for small graphs.

    Subset weights are built up by bitmask dynamic programming over all
    2^n - 1 candidates.  Ties break toward the smallest lexicographic
    node-index sequence.
    """
    n = g.n
    if n == 0:
        raise ValueError("cannot solve an empty graph")
    if n > limit:
        raise ValueError(f"graph has {n} nodes; exact solver is limited to {limit}")

    nbrs = [list(g.neighbors(v)) for v in range(n)]
    wts = [[g.weight(v, u) for u in nbrs[v]] for v in range(n)]

    size = 1 << n
    weight_of = [0.0] * size
    best_density = 0.0
    best_mask = 1  # singleton {0}: density 0, lexicographic minimum
    for mask in range(1, size):
        low = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << low)
        add = 0.0
        row = nbrs[low]
        wrow = wts[low]
        for i in range(len(row)):
            if rest >> row[i] & 1:
                add += wrow[i]
        w = weight_of[rest] + add
        weight_of[mask] = w
        d = 2.0 * w / mask.bit_count()
        if d > best_density:
            best_density = d
            best_mask = mask
        elif d == best_density and _mask_key(mask) < _mask_key(best_mask):
            best_mask = mask

    nodes = frozenset(v for v in range(n) if best_mask >> v & 1)
    return DensestResult(nodes, density(g, nodes), exact=True)


def _mask_key(mask: int) -> tuple[int, ...]:
    return tuple(v for v in range(mask.bit_length()) if mask >> v & 1)
