"""Forbidden pattern families and induced-subgraph search.

Embeddings are reported once per (vertex set, pattern) pair, ordered
lexicographically by sorted vertex labels and then by pattern index.
"""

from __future__ import annotations

import math
import re
import warnings
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from hfree.graph import Graph, VertexSet, bfs_distances, is_connected


def diameter(h: Graph) -> int:
    if len(h) == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for v in h:
        dist = bfs_distances(h, [v])
        far = max(dist.values())
        if far == math.inf:
            raise ValueError("diameter of a disconnected graph is undefined")
        best = max(best, int(far))
    return best


def complete_graph(t: int) -> Graph:
    return Graph(range(1, t + 1), [(i, j) for i in range(1, t + 1) for j in range(i + 1, t + 1)])


def star_graph(s: int) -> Graph:
    """K_{1,s} with centre 1."""
    return Graph(range(1, s + 2), [(1, j) for j in range(2, s + 2)])


def path_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])


_TOKEN = r"K1,\d+|K\d+|P\d+|C\d+"
_FAMILY_RE = re.compile(rf"(?:{_TOKEN})(?:,(?:{_TOKEN}))*")


def builtin_pattern(name: str) -> Graph:
    """Graph named by ``K<t>``, ``K1,<s>``, ``P<l>`` (l vertices) or ``C<l>``."""
    m = re.fullmatch(r"K1,(\d+)", name)
    if m and int(m[1]) >= 1:
        return star_graph(int(m[1]))
    m = re.fullmatch(r"([KPC])(\d+)", name)
    if m:
        kind, size = m[1], int(m[2])
        if kind == "K" and size >= 1:
            return complete_graph(size)
        if kind == "P" and size >= 1:
            return path_graph(size)
        if kind == "C" and size >= 3:
            return cycle_graph(size)
    raise ValueError(f"unrecognised pattern name {name!r}")


def split_family_names(text: str) -> list[str]:
    """Split ``"K3,K1,3,P4"`` into ``["K3", "K1,3", "P4"]``."""
    text = text.replace(" ", "")
    if not _FAMILY_RE.fullmatch(text):
        raise ValueError(f"unrecognised family specification {text!r}")
    return re.findall(_TOKEN, text)


@dataclass(frozen=True)
class Embedding:
    pattern_index: int
    vertices: VertexSet

    def key(self) -> tuple[tuple[int, ...], int]:
        return tuple(sorted(self.vertices)), self.pattern_index


class _Plan:
    """Backtracking order for one pattern rooted at one of its vertices.

    Each step after the root maps a pattern vertex adjacent to an earlier
    one, so candidates come from a single neighbourhood in the host.
    """

    __slots__ = ("root_degree", "steps")

    def __init__(self, h: Graph, root: int):
        order = [root]
        seen = {root}
        i = 0
        while i < len(order):
            for w in h.sorted_neighbors(order[i]):
                if w not in seen:
                    seen.add(w)
                    order.append(w)
            i += 1
        pos = {v: j for j, v in enumerate(order)}
        self.root_degree = h.degree(root)
        self.steps = []
        for j in range(1, len(order)):
            p = order[j]
            earlier_adj = [pos[w] for w in h.neighbors(p) if pos[w] < j]
            earlier_non = [i for i in range(j) if i not in earlier_adj]
            self.steps.append((min(earlier_adj), tuple(earlier_adj), tuple(earlier_non), h.degree(p)))


class PatternFamily:
    """A finite family of connected forbidden graphs, each on at least 2 vertices."""

    def __init__(self, members: Iterable[Graph], names: Iterable[str | None] | None = None):
        members = list(members)
        names = list(names) if names is not None else [None] * len(members)
        if len(names) != len(members):
            raise ValueError("names and members differ in length")
        kept: list[Graph] = []
        kept_names: list[str | None] = []
        for h, name in zip(members, names):
            if len(h) < 2:
                raise ValueError("patterns must have at least 2 vertices")
            if not is_connected(h):
                raise ValueError(f"pattern {name or h!r} is disconnected")
            if any(are_isomorphic(h, other) for other in kept):
                warnings.warn(f"dropping isomorphic duplicate pattern {name or h!r}", stacklevel=2)
                continue
            kept.append(h)
            kept_names.append(name)
        if not kept:
            raise ValueError("pattern family is empty")
        self.members: tuple[Graph, ...] = tuple(kept)
        self.names: tuple[str | None, ...] = tuple(kept_names)
        self.diameters = tuple(diameter(h) for h in kept)
        self.max_diameter = max(self.diameters)
        self.star_arity = _least(_star_arity(h) for h in kept)
        self.clique_order = _least(_clique_order(h) for h in kept)
        self._plans = [[_Plan(h, r) for r in h] for h in kept]
        self._sizes = [len(h) for h in kept]

    @classmethod
    def from_names(cls, spec: str | Sequence[str]) -> PatternFamily:
        names = split_family_names(spec) if isinstance(spec, str) else list(spec)
        return cls((builtin_pattern(n) for n in names), names)

    def label(self) -> str:
        return ",".join(n if n is not None else f"H{i}" for i, n in enumerate(self.names))

    def smallest_member(self) -> Graph:
        """Fewest vertices, then fewest edges, then earliest in the family."""
        return min(self.members, key=lambda h: (len(h), h.num_edges))

    def __len__(self) -> int:
        return len(self.members)

    def __repr__(self) -> str:
        return f"PatternFamily({self.label()})"

    def _anchored(self, g: Graph, anchor: int) -> list[Embedding]:
        """Embeddings whose least vertex is ``anchor``, in report order."""
        found: set[tuple[tuple[int, ...], int]] = set()
        anchor_deg = g.degree(anchor)
        for idx, plans in enumerate(self._plans):
            for plan in plans:
                if plan.root_degree > anchor_deg:
                    continue
                for vs in _extend(g, plan.steps, [anchor], anchor):
                    found.add((tuple(sorted(vs)), idx))
        return [Embedding(i, frozenset(vs)) for vs, i in sorted(found)]


def _extend(g: Graph, steps, assigned: list[int], floor: int) -> Iterator[list[int]]:
    j = len(assigned) - 1
    if j == len(steps):
        yield assigned
        return
    parent, adj, non, need = steps[j]
    for x in g.neighbors(assigned[parent]):
        if x <= floor or x in assigned:
            continue
        nx_ = g.neighbors(x)
        if len(nx_) < need:
            continue
        if all(assigned[i] in nx_ for i in adj) and not any(assigned[i] in nx_ for i in non):
            assigned.append(x)
            yield from _extend(g, steps, assigned, floor)
            assigned.pop()


def _least(values: Iterable[int | None]) -> int | None:
    present = [v for v in values if v is not None]
    return min(present) if present else None


def _star_arity(h: Graph) -> int | None:
    # K_{1,s} with s > 1; K_{1,1} = K2 is treated as a clique only
    n = len(h)
    s = n - 1
    if s > 1 and h.num_edges == s and any(h.degree(v) == s for v in h):
        return s
    return None


def _clique_order(h: Graph) -> int | None:
    n = len(h)
    if n > 2 and h.num_edges == n * (n - 1) // 2:
        return n
    return None


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if len(a) != len(b) or a.num_edges != b.num_edges:
        return False
    if sorted(a.degree(v) for v in a) != sorted(b.degree(v) for v in b):
        return False
    if not is_connected(a) or not is_connected(b):
        return _brute_isomorphic(a, b)
    return find_one_induced(a, _single(b)) is not None


def _brute_isomorphic(a: Graph, b: Graph) -> bool:
    from itertools import permutations

    av, bv = a.vertices, b.vertices
    bedges = b.edge_set()
    for perm in permutations(bv):
        m = dict(zip(av, perm))
        if all((min(m[u], m[v]), max(m[u], m[v])) in bedges for u, v in a.edges()):
            return True
    return False


def _single(h: Graph) -> PatternFamily:
    fam = PatternFamily.__new__(PatternFamily)
    fam.members = (h,)
    fam.names = (None,)
    fam._plans = [[_Plan(h, r) for r in h]]
    fam._sizes = [len(h)]
    return fam


def enumerate_induced(g: Graph, fam: PatternFamily) -> list[Embedding]:
    out: list[Embedding] = []
    for v in g:
        out.extend(fam._anchored(g, v))
    return out


def find_one_induced(g: Graph, fam: PatternFamily) -> Embedding | None:
    for v in g:
        hits = fam._anchored(g, v)
        if hits:
            return hits[0]
    return None


def is_free(g: Graph, fam: PatternFamily) -> bool:
    return find_one_induced(g, fam) is None


def occupied_vertices(g: Graph, fam: PatternFamily) -> VertexSet:
    out: set[int] = set()
    for emb in enumerate_induced(g, fam):
        out.update(emb.vertices)
    return frozenset(out)


def embedding_edges(g: Graph, emb: Embedding) -> list[tuple[int, int]]:
    """Edges of ``g`` inside the embedded vertex set, sorted."""
    vs = sorted(emb.vertices)
    return [(u, w) for i, u in enumerate(vs) for w in vs[i + 1:] if g.has_edge(u, w)]
