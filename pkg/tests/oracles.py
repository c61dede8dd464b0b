"""Brute-force reference implementations, kept independent of the package paths they check."""

from __future__ import annotations

from collections import deque
from itertools import combinations, permutations

from hfree.graph import Graph


def induces(g: Graph, vs, h: Graph) -> bool:
    """Does ``vs`` induce a copy of ``h`` in ``g``? Checks every bijection."""
    vs = sorted(vs)
    hv = list(h.vertices)
    if len(vs) != len(hv):
        return False
    for perm in permutations(vs):
        m = dict(zip(hv, perm))
        if all(g.has_edge(m[a], m[b]) == h.has_edge(a, b) for a, b in combinations(hv, 2)):
            return True
    return False


def brute_embeddings(g: Graph, members) -> list[tuple[tuple[int, ...], int]]:
    out = []
    for i, h in enumerate(members):
        for vs in combinations(g.vertices, len(h)):
            if induces(g, vs, h):
                out.append((tuple(vs), i))
    return sorted(out)


def brute_free(g: Graph, members) -> bool:
    return not brute_embeddings(g, members)


def brute_min_deletion(g: Graph, members) -> int:
    """Size of a minimum deletion set by plain subset enumeration."""
    edges = g.edges()
    for size in range(len(edges) + 1):
        for combo in combinations(edges, size):
            h = Graph(g.vertices, [e for e in edges if e not in combo])
            if brute_free(h, members):
                return size
    raise AssertionError("unreachable: deleting every edge is always enough")


def distances(g: Graph, sources) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(sources)
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in dist:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(1, n + 1), 2))
    return Graph(range(1, n + 1), [p for i, p in enumerate(pairs) if mask >> i & 1])
