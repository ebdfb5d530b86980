"""Shared test fixtures: random instance generators and independent
brute-force oracles (kept deliberately naive so they never share code paths
with the implementations they check)."""

from __future__ import annotations

import random
from collections import deque
from itertools import combinations

from dualdense import Correspondence, DualNetwork, Graph


def random_graph(rng: random.Random, n: int, p: float, weighted: bool = True) -> Graph:
    labels = [f"u{i}" for i in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                w = 1.0 - rng.random() if weighted else 1.0
                edges.append((u, v, w))
    return Graph(labels, edges)


def random_dual_network(rng: random.Random, n: int, p_phys: float = 0.3,
                        p_shared: float = 0.5, p_extra: float = 0.2) -> DualNetwork:
    """Random dual network (n >= 2) with at least one edge present in both
    graphs, so the alignment graph is never trivially empty."""
    assert n >= 2
    labels = [f"u{i}" for i in range(n)]
    phys_pairs = set()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p_phys:
                phys_pairs.add((u, v))
    if not phys_pairs:
        phys_pairs.add((0, 1))
    conc = {}
    for (u, v) in sorted(phys_pairs):
        if rng.random() < p_shared:
            conc[(u, v)] = 1.0 - rng.random()
    if not conc:
        u, v = sorted(phys_pairs)[0]
        conc[(u, v)] = 1.0 - rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in conc and rng.random() < p_extra:
                conc[(u, v)] = 1.0 - rng.random()
    physical = Graph(labels, [(u, v, 1.0) for u, v in sorted(phys_pairs)])
    conceptual = Graph(labels, [(u, v, w) for (u, v), w in sorted(conc.items())])
    corr = Correspondence(tuple((lab, lab) for lab in labels))
    return DualNetwork(conceptual, physical, corr)


def subset_density(g: Graph, members) -> float:
    """Direct 2*W(S)/|S| via explicit edge enumeration."""
    S = set(members)
    total = 0.0
    for u, v, w in g.edges():
        if u in S and v in S:
            total += w
    return 2.0 * total / len(S)


def brute_densest(g: Graph) -> tuple[float, frozenset[int]]:
    """Best density over every nonempty subset, by full enumeration."""
    best_d = 0.0
    best_s = frozenset([0])
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            d = subset_density(g, combo)
            if d > best_d:
                best_d, best_s = d, frozenset(combo)
    return best_d, best_s


def physically_connected(dn: DualNetwork, pair_ids) -> bool:
    """Independent BFS connectivity check on the induced physical subgraph."""
    S = set(pair_ids)
    if len(S) <= 1:
        return True
    phys = {dn.pair_physical[k]: k for k in S}
    start = next(iter(phys))
    seen = {start}
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y in dn.physical.neighbors(x):
            if y in phys and y not in seen:
                seen.add(y)
                queue.append(y)
    return len(seen) == len(phys)


def brute_dcs(dn: DualNetwork, max_size: int | None = None) -> tuple[float, frozenset[int]]:
    """Exact DCS by powerset enumeration: physically connected pair subsets
    of size >= 2 (singleton {0} fallback), maximizing conceptual density."""
    n = dn.pair_count
    max_size = n if max_size is None else min(max_size, n)
    conc_idx = dn.pair_conceptual
    best = None
    for size in range(2, max_size + 1):
        for combo in combinations(range(n), size):
            if not physically_connected(dn, combo):
                continue
            d = subset_density(dn.conceptual, [conc_idx[k] for k in combo])
            key = (-d, size, combo)
            if best is None or key < best[0]:
                best = (key, frozenset(combo), d)
    if best is None:
        return 0.0, frozenset([0])
    return best[2], best[1]


def bfs_hops(g: Graph, src: int, dst: int) -> int | None:
    """Plain BFS hop distance, independent of the library BFS."""
    if src == dst:
        return 0
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                if y == dst:
                    return dist[y]
                queue.append(y)
    return None
