"""Undirected weighted graph with string labels and dense integer indices.

Every other module consumes this representation: adjacency lists sorted by
neighbor index (which makes every traversal deterministic), strictly
positive edge weights, and weight 1.0 everywhere for unweighted graphs.
Graphs are immutable after construction; concurrent reads are safe.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from typing import Iterable, Iterator, Optional, Sequence

IndexEdge = tuple[int, int, float]
LabelEdge = tuple[str, str, float]


class Graph:
    """Simple undirected graph: no self-loops, no parallel edges, weights > 0.

    Nodes are indices ``0..n-1``; ``labels[i]`` is the external name of node
    ``i`` and the label->index mapping is bijective.  Duplicate edges in the
    input collapse to the maximum weight and are counted in
    ``duplicates_collapsed``.
    """

    __slots__ = ("labels", "_index", "_nbrs", "_wts", "edge_count",
                 "total_weight", "duplicates_collapsed")

    def __init__(self, labels: Sequence[str], edges: Iterable[IndexEdge]):
        self.labels: tuple[str, ...] = tuple(labels)
        index: dict[str, int] = {}
        for i, lab in enumerate(self.labels):
            if lab in index:
                raise ValueError(f"duplicate node label {lab!r}")
            index[lab] = i
        self._index = index
        n = len(self.labels)

        collapsed: dict[tuple[int, int], float] = {}
        duplicates = 0
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v})")
            if u == v:
                raise ValueError(f"self-loop on node {self.labels[u]!r}")
            if not isinstance(w, (int, float)) or not math.isfinite(w) or w <= 0:
                raise ValueError(f"edge weight must be a positive finite number, got {w!r}")
            key = (u, v) if u < v else (v, u)
            if key in collapsed:
                duplicates += 1
                if w > collapsed[key]:
                    collapsed[key] = float(w)
            else:
                collapsed[key] = float(w)

        nbrs: list[list[int]] = [[] for _ in range(n)]
        wts: list[list[float]] = [[] for _ in range(n)]
        # Iterating pairs in sorted order leaves every adjacency list sorted
        # by neighbor index.
        for (u, v) in sorted(collapsed):
            w = collapsed[(u, v)]
            nbrs[u].append(v)
            wts[u].append(w)
            nbrs[v].append(u)
            wts[v].append(w)
        self._nbrs = nbrs
        self._wts = wts
        self.edge_count = len(collapsed)
        self.total_weight = math.fsum(collapsed.values())
        self.duplicates_collapsed = duplicates

    @classmethod
    def from_label_edges(cls, edges: Iterable[LabelEdge],
                         nodes: Iterable[str] = ()) -> "Graph":
        """Build a graph from ``(src_label, dst_label, weight)`` triples.

        Labels are interned to dense indices in first-appearance order;
        ``nodes`` seeds extra (possibly isolated) labels ahead of the edges.
        """
        labels: list[str] = []
        index: dict[str, int] = {}

        def intern(lab: str) -> int:
            i = index.get(lab)
            if i is None:
                i = len(labels)
                index[lab] = i
                labels.append(lab)
            return i

        for lab in nodes:
            intern(lab)
        index_edges = [(intern(a), intern(b), w) for a, b, w in edges]
        return cls(labels, index_edges)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index_of(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise ValueError(f"unknown node label {label!r}") from None

    def has_label(self, label: str) -> bool:
        return label in self._index

    def neighbors(self, u: int) -> Sequence[int]:
        return self._nbrs[u]

    def incident(self, u: int) -> Iterator[tuple[int, float]]:
        return zip(self._nbrs[u], self._wts[u])

    def degree(self, u: int) -> int:
        return len(self._nbrs[u])

    def weight(self, u: int, v: int) -> Optional[float]:
        """Weight of edge (u, v), or None if absent."""
        if len(self._nbrs[v]) < len(self._nbrs[u]):
            u, v = v, u
        row = self._nbrs[u]
        i = bisect_left(row, v)
        if i < len(row) and row[i] == v:
            return self._wts[u][i]
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return self.weight(u, v) is not None

    def edges(self) -> Iterator[IndexEdge]:
        """All edges exactly once, as (u, v, w) with u < v, sorted."""
        for u in range(self.n):
            row = self._nbrs[u]
            wrow = self._wts[u]
            for i in range(len(row)):
                v = row[i]
                if v > u:
                    yield u, v, wrow[i]

    def label_edges(self) -> Iterator[LabelEdge]:
        for u, v, w in self.edges():
            yield self.labels[u], self.labels[v], w

    def is_unit_weighted(self) -> bool:
        return all(w == 1.0 for row in self._wts for w in row)

    def subgraph(self, members: Iterable[int]) -> "Graph":
        """Induced subgraph; labels preserved, indices re-densified."""
        order = sorted(set(members))
        remap = {old: new for new, old in enumerate(order)}
        edges = []
        for old in order:
            for v, w in self.incident(old):
                if v > old and v in remap:
                    edges.append((remap[old], remap[v], w))
        return Graph([self.labels[i] for i in order], edges)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.edge_count})"


def _check_members(g: Graph, members: Iterable[int]) -> set[int]:
    S = set(members)
    for v in S:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise ValueError(f"node {v!r} is not in the graph")
    return S


def vol(g: Graph, members: Iterable[int], v: int) -> float:
    """Sum of weights of edges from v to neighbors inside the member set."""
    S = _check_members(g, members)
    if v not in S:
        raise ValueError(f"node {v} is not a member of the given set")
    return math.fsum(w for u, w in g.incident(v) if u in S)


def density(g: Graph, members: Iterable[int]) -> float:
    """Average per-node induced volume: twice the induced edge weight over
    the node count.  Singletons and edgeless sets have density 0."""
    S = _check_members(g, members)
    if not S:
        raise ValueError("density of an empty node set is undefined")
    total = math.fsum(w for v in S for u, w in g.incident(v) if u in S)
    return total / len(S)


def shortest_path_hops(g: Graph, u: int, v: int,
                       cap: float = math.inf) -> Optional[tuple[int, list[int]]]:
    """Hop distance and one shortest path from u to v, ignoring weights.

    Returns None when v is farther than ``cap`` hops (or unreachable).
    Sorted adjacency makes the returned path deterministic: ties are broken
    by the lowest neighbor index at each expansion.
    """
    _check_members(g, (u, v))
    if u == v:
        return 0, [u]
    parent = {u: -1}
    queue = deque([(u, 0)])
    while queue:
        x, d = queue.popleft()
        if d >= cap:
            break
        for y in g.neighbors(x):
            if y not in parent:
                parent[y] = x
                if y == v:
                    path = [v]
                    while path[-1] != u:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return d + 1, path
                queue.append((y, d + 1))
    return None


def connected_components(g: Graph, members: Iterable[int] | None = None) -> list[list[int]]:
    """Partition of the member set into maximal mutually reachable blocks
    within the induced subgraph, ordered by smallest contained index."""
    S = _check_members(g, members) if members is not None else set(range(g.n))
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in sorted(S):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if y in S and y not in seen:
                    seen.add(y)
                    comp.append(y)
                    queue.append(y)
        comp.sort()
        components.append(comp)
    return components


def is_connected(g: Graph, members: Iterable[int]) -> bool:
    """True for empty sets, singletons, and internally connected sets."""
    return len(connected_components(g, members)) <= 1


def graphs_equal(a: Graph, b: Graph) -> bool:
    """Label-level equality: same label set, same weighted edges."""
    if set(a.labels) != set(b.labels):
        return False
    def edge_map(g: Graph) -> dict[tuple[str, str], float]:
        out = {}
        for la, lb, w in g.label_edges():
            key = (la, lb) if la < lb else (lb, la)
            out[key] = w
        return out
    return edge_map(a) == edge_map(b)
