"""Seeded random graphs for the verification campaigns."""

from __future__ import annotations

import random
from itertools import combinations

from hfree.graph import Graph


def _candidate_pairs(n: int, edge_prob: float, rng: random.Random) -> list[tuple[int, int]]:
    pairs = list(combinations(range(1, n + 1), 2))
    rng.shuffle(pairs)
    return [p for p in pairs if rng.random() < edge_prob]


def gen_bounded_degree(n: int, delta: int, edge_prob: float, seed: int) -> Graph:
    """Random graph on 1..n with maximum degree at most ``delta``.

    Pairs are proposed in random order, each with probability
    ``edge_prob``, and accepted while both endpoints have spare degree.
    """
    if n < 1 or delta < 1:
        raise ValueError("need n >= 1 and delta >= 1")
    rng = random.Random(seed)
    deg = dict.fromkeys(range(1, n + 1), 0)
    edges = []
    for u, v in _candidate_pairs(n, edge_prob, rng):
        if deg[u] < delta and deg[v] < delta:
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph(range(1, n + 1), edges)


def _has_clique(adj: dict[int, set[int]], candidates: set[int], size: int) -> bool:
    if size == 0:
        return True
    for v in sorted(candidates):
        if len(candidates) < size:
            return False
        candidates = candidates - {v}
        if _has_clique(adj, candidates & adj[v], size - 1):
            return True
    return False


def gen_clique_free(n: int, t: int, edge_prob: float, seed: int) -> Graph:
    """Random K_t-free graph; a proposed edge is rejected if it would close a K_t."""
    if n < 1 or t < 3:
        raise ValueError("need n >= 1 and t >= 3")
    rng = random.Random(seed)
    adj: dict[int, set[int]] = {v: set() for v in range(1, n + 1)}
    edges = []
    for u, v in _candidate_pairs(n, edge_prob, rng):
        if _has_clique(adj, adj[u] & adj[v], t - 2):
            continue
        adj[u].add(v)
        adj[v].add(u)
        edges.append((u, v))
    return Graph(range(1, n + 1), edges)
