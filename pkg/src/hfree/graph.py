"""Immutable simple undirected graphs with stable integer vertex labels.

Every mutating operation returns a new :class:`Graph`; labels are never
re-indexed, so a reduced graph can always be traced back to its source.
"""

from __future__ import annotations

import math
from collections import deque
from collections.abc import Iterable, Mapping

Edge = tuple[int, int]
EdgeSet = frozenset[Edge]
VertexSet = frozenset[int]


def canonical_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def edge_set(pairs: Iterable[tuple[int, int]], host: Graph | None = None) -> EdgeSet:
    """Canonicalize ``pairs`` into an :data:`EdgeSet`.

    With ``host`` given, every pair must be an edge of it.
    """
    es = frozenset(canonical_edge(u, v) for u, v in pairs)
    if host is not None:
        for u, v in es:
            if not host.has_edge(u, v):
                raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return es


class Graph:
    __slots__ = ("_adj", "_m", "_hash")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[tuple[int, int]] = ()):
        adj: dict[int, set[int]] = {int(v): set() for v in vertices}
        for u, v in edges:
            u, v = canonical_edge(int(u), int(v))
            if u not in adj or v not in adj:
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside the vertex set")
            adj[u].add(v)
            adj[v].add(u)
        self._adj: dict[int, frozenset[int]] = {v: frozenset(adj[v]) for v in sorted(adj)}
        self._m = sum(len(ns) for ns in self._adj.values()) // 2
        self._hash: int | None = None

    @classmethod
    def _from_adjacency(cls, adj: Mapping[int, frozenset[int]]) -> Graph:
        # caller guarantees symmetry and sorted keys
        g = cls.__new__(cls)
        g._adj = dict(adj)
        g._m = sum(len(ns) for ns in g._adj.values()) // 2
        g._hash = None
        return g

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]]) -> Graph:
        edges = list(edges)
        return cls({x for e in edges for x in e}, edges)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(self._adj)

    @property
    def num_vertices(self) -> int:
        return len(self._adj)

    @property
    def num_edges(self) -> int:
        return self._m

    def neighbors(self, v: int) -> frozenset[int]:
        try:
            return self._adj[v]
        except KeyError:
            raise ValueError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        ns = self._adj.get(u)
        return ns is not None and v in ns

    def edges(self) -> list[Edge]:
        """All edges, lexicographically sorted."""
        return sorted((u, v) for u, ns in self._adj.items() for v in ns if u < v)

    def edge_set(self) -> EdgeSet:
        return frozenset(self.edges())

    def sorted_neighbors(self, v: int) -> list[int]:
        return sorted(self.neighbors(v))

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self):
        return iter(self._adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self._adj), tuple(self.edges())))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(vertices={list(self._adj)}, edges={self.edges()})"


def _check_vertices(g: Graph, vs: Iterable[int]) -> None:
    for v in vs:
        if v not in g:
            raise ValueError(f"vertex {v} not in graph")


def max_degree(g: Graph) -> int:
    return max((len(g.neighbors(v)) for v in g), default=0)


def bfs_distances(g: Graph, sources: Iterable[int]) -> dict[int, float]:
    """Hop distance from every vertex to the nearest source.

    Unreachable vertices map to ``math.inf``; with no sources every vertex
    is unreachable.
    """
    sources = list(sources)
    _check_vertices(g, sources)
    dist: dict[int, float] = {v: math.inf for v in g}
    queue = deque()
    for s in sources:
        if dist[s] != 0:
            dist[s] = 0
            queue.append(s)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors(u):
            if dist[w] > du:
                dist[w] = du
                queue.append(w)
    return dist


def closed_neighborhood(g: Graph, vs: Iterable[int]) -> VertexSet:
    vs = frozenset(vs)
    _check_vertices(g, vs)
    out = set(vs)
    for v in vs:
        out.update(g.neighbors(v))
    return frozenset(out)


def endpoints_of(es: Iterable[Edge]) -> VertexSet:
    return frozenset(x for e in es for x in e)


def delete_vertices(g: Graph, vs: Iterable[int]) -> Graph:
    vs = frozenset(vs)
    _check_vertices(g, vs)
    if not vs:
        return g
    return Graph._from_adjacency(
        {v: ns - vs for v, ns in g._adj.items() if v not in vs}
    )


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = frozenset(keep)
    _check_vertices(g, keep)
    return delete_vertices(g, frozenset(g.vertices) - keep)


def delete_edges(g: Graph, es: Iterable[tuple[int, int]]) -> Graph:
    es = edge_set(es)
    if not es:
        return g
    adj = dict(g._adj)
    removed: dict[int, set[int]] = {}
    for u, v in es:
        if not g.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge of the graph")
        removed.setdefault(u, set()).add(v)
        removed.setdefault(v, set()).add(u)
    for v, gone in removed.items():
        adj[v] = adj[v] - gone
    return Graph._from_adjacency(adj)


def is_connected(g: Graph) -> bool:
    if len(g) == 0:
        return True
    first = next(iter(g))
    return all(d != math.inf for d in bfs_distances(g, [first]).values())


def degeneracy_order(g: Graph) -> list[int]:
    """Vertices in smallest-last order (ties broken by label)."""
    deg = {v: len(g.neighbors(v)) for v in g}
    remaining = set(g.vertices)
    order = []
    while remaining:
        v = min(remaining, key=lambda x: (deg[x], x))
        order.append(v)
        remaining.discard(v)
        for w in g.neighbors(v):
            if w in remaining:
                deg[w] -= 1
    return order


def _has_clique(g: Graph, candidates: frozenset[int], size: int) -> bool:
    if size == 0:
        return True
    if len(candidates) < size:
        return False
    for v in sorted(candidates):
        candidates = candidates - {v}
        if _has_clique(g, candidates & g.neighbors(v), size - 1):
            return True
        if len(candidates) < size:
            return False
    return False


def is_clique_free(g: Graph, t: int) -> bool:
    """True iff ``g`` has no clique on ``t`` vertices."""
    if t < 2:
        raise ValueError(f"clique order must be at least 2, got {t}")
    order = degeneracy_order(g)
    position = {v: i for i, v in enumerate(order)}
    # every clique is found from its earliest vertex, among later neighbours
    for v in order:
        later = frozenset(w for w in g.neighbors(v) if position[w] > position[v])
        if _has_clique(g, later, t - 1):
            return False
    return True
