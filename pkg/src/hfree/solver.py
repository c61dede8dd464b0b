"""Exact solvers for H-free Edge Deletion and the layered deletion trace."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations

from hfree.graph import EdgeSet, Graph, delete_edges, edge_set
from hfree.patterns import PatternFamily, embedding_edges, enumerate_induced, find_one_induced

log = logging.getLogger(__name__)

BRUTE_FORCE_EDGE_GUARD = 25


@dataclass(frozen=True)
class ProblemInstance:
    graph: Graph
    budget: int

    def __post_init__(self):
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")


@dataclass(frozen=True)
class Solution:
    edges: EdgeSet
    optimal: bool

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DeletionTrace:
    """Layers M_1..M_l of a deletion set, with suffix unions S_j and prefixes T_j.

    ``suffixes[j-1]`` is S_j for j = 1..depth+1 and ``prefixes[j]`` is T_j
    for j = 0..depth.
    """

    layers: tuple[EdgeSet, ...]
    suffixes: tuple[EdgeSet, ...]
    prefixes: tuple[EdgeSet, ...]

    @property
    def depth(self) -> int:
        return len(self.layers)


def verify_hds(g: Graph, es, fam: PatternFamily) -> bool:
    return find_one_induced(delete_edges(g, edge_set(es, g)), fam) is None


def _copy_masks(g: Graph, fam: PatternFamily, index: dict) -> list[int]:
    masks = set()
    for emb in enumerate_induced(g, fam):
        mask = 0
        for e in embedding_edges(g, emb):
            mask |= 1 << index[e]
        masks.add(mask)
    return sorted(masks)


def solve_bruteforce(inst: ProblemInstance, fam: PatternFamily) -> Solution | None:
    """Least deletion set of size <= budget, by exhaustive search.

    Subsets are tried by size, then lexicographically over sorted edges, so
    the optimum returned is deterministic.
    """
    g = inst.graph
    edges = g.edges()
    if len(edges) > BRUTE_FORCE_EDGE_GUARD:
        log.warning("brute force over %d edges exceeds the guard of %d", len(edges), BRUTE_FORCE_EDGE_GUARD)
    index = {e: i for i, e in enumerate(edges)}
    # a deletion set must touch every copy already present in g
    masks = _copy_masks(g, fam, index)
    if not masks:
        return Solution(frozenset(), True)
    for size in range(1, min(inst.budget, len(edges)) + 1):
        for combo in combinations(range(len(edges)), size):
            chosen = 0
            for i in combo:
                chosen |= 1 << i
            if not all(m & chosen for m in masks):
                continue
            cand = [edges[i] for i in combo]
            if find_one_induced(delete_edges(g, cand), fam) is None:
                return Solution(frozenset(cand), True)
    return None


def minimum_deletion_size(g: Graph, fam: PatternFamily, limit: int | None = None) -> int | None:
    """Size of a minimum deletion set, or None if it exceeds ``limit``."""
    budget = g.num_edges if limit is None else limit
    sol = solve_bruteforce(ProblemInstance(g, budget), fam)
    return None if sol is None else len(sol)


def _branch(g: Graph, fam: PatternFamily, budget: int, deleted: frozenset, seen: set) -> frozenset | None:
    emb = find_one_induced(g, fam)
    if emb is None:
        return deleted
    if budget == 0:
        return None
    for e in embedding_edges(g, emb):
        nxt = deleted | {e}
        if (nxt, budget - 1) in seen:
            continue
        seen.add((nxt, budget - 1))
        found = _branch(delete_edges(g, [e]), fam, budget - 1, nxt, seen)
        if found is not None:
            return found
    return None


def solve_branching(inst: ProblemInstance, fam: PatternFamily, minimize: bool = True) -> Solution | None:
    """Bounded search tree: branch on the edges of one induced copy.

    Every deletion set must remove an edge of each copy present in the
    current graph, so the tree has depth at most the budget. With
    ``minimize`` the budget is raised from 0 upwards and the first hit is
    a proven optimum.
    """
    budgets = range(inst.budget + 1) if minimize else [inst.budget]
    for b in budgets:
        found = _branch(inst.graph, fam, b, frozenset(), set())
        if found is not None:
            return Solution(found, minimize)
    return None


def mhds_trace(g: Graph, m, fam: PatternFamily) -> DeletionTrace:
    """Split a deletion set into layers.

    Layer j holds the not-yet-used edges of ``m`` that lie on an induced
    copy in the graph with all earlier layers deleted. Stops at the first
    empty layer.
    """
    m = edge_set(m, g)
    if not verify_hds(g, m, fam):
        raise ValueError("edge set is not a deletion set for the family")
    layers: list[EdgeSet] = []
    used: frozenset = frozenset()
    current = g
    while True:
        on_copy = set()
        for emb in enumerate_induced(current, fam):
            on_copy.update(embedding_edges(current, emb))
        layer = frozenset((m - used) & on_copy)
        if not layer:
            break
        layers.append(layer)
        used |= layer
        current = delete_edges(current, layer)
    suffixes = []
    for j in range(len(layers) + 1):
        suffixes.append(frozenset().union(*layers[j:]))
    prefixes = tuple(m - suffixes[j] for j in range(len(layers) + 1))
    return DeletionTrace(tuple(layers), tuple(suffixes), prefixes)
