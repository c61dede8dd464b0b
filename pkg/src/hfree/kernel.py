"""Distance-based kernelization for H-free Edge Deletion.

Two reductions are provided:

* Rule 0, for inputs of maximum degree Delta: drop every vertex farther
  than (1 + log_{2Delta/(2Delta-1)} k) * D from the vertices lying on an
  induced forbidden copy.
* Rule 1, for K_t-free inputs when the family contains a star K_{1,s}:
  the same with radius (2 + log_{2d/(2d-1)} k) * D, measured from the
  occupied vertices together with every vertex of degree above
  d = R(s, t-1) - 1.

The keep-radius above is not the radius the size bound counts with: the
bound measures from the endpoints of the first deletion layer, one
diameter further out, i.e. (2 + log k) * D for Rule 0 and (3 + log k) * D
for Rule 1.

Integer distances are compared against the real threshold exactly:
x <= (a + log_r k) * D holds iff r^(x - aD) <= k^D, which is decided in
integer arithmetic with r = 2delta / (2delta - 1).
"""

from __future__ import annotations

import math
from fractions import Fraction
from dataclasses import dataclass, field
from enum import Enum

import mpmath
from mpmath import iv

from hfree.graph import Graph, VertexSet, bfs_distances, closed_neighborhood, delete_vertices, is_clique_free, max_degree
from hfree.patterns import PatternFamily, complete_graph, find_one_induced, occupied_vertices, star_graph
from hfree.ramsey import degree_cap
from hfree.solver import ProblemInstance

INT64_MAX = 2**63 - 1


class Rule(str, Enum):
    RULE0 = "rule0"
    RULE1 = "rule1"
    TRIVIAL_YES = "trivial_yes"
    TRIVIAL_NO = "trivial_no"


@dataclass(frozen=True)
class KernelParams:
    """Degree bound ``delta`` (Delta or d), family diameter and budget."""

    delta: int
    diameter: int
    budget: int
    exponent_p: float = field(init=False)

    def __post_init__(self):
        if self.delta < 2:
            raise ValueError(f"degree bound must be at least 2, got {self.delta}")
        if self.diameter < 1:
            raise ValueError(f"diameter must be at least 1, got {self.diameter}")
        if self.budget < 0:
            raise ValueError(f"budget must be non-negative, got {self.budget}")
        with mpmath.workprec(80):
            p = mpmath.log(self.delta) / mpmath.log(mpmath.mpf(2 * self.delta) / (2 * self.delta - 1))
        object.__setattr__(self, "exponent_p", float(p))


@dataclass(frozen=True)
class KernelResult:
    instance: ProblemInstance
    rule: Rule
    removed: VertexSet
    params: KernelParams
    threshold: float | None = None
    radius: int | None = None
    bound: int | None = None
    bound_saturated: bool = False
    centers: VertexSet = frozenset()

    def to_dict(self) -> dict:
        g = self.instance.graph
        return {
            "rule": self.rule.value,
            "budget": self.instance.budget,
            "kernel_vertices": g.num_vertices,
            "kernel_edges": g.num_edges,
            "kept": list(g.vertices) if self.rule in (Rule.RULE0, Rule.RULE1) else [],
            "removed": sorted(self.removed),
            "threshold": self.threshold,
            "radius": self.radius,
            "bound": self.bound,
            "bound_saturated": self.bound_saturated,
            "delta": self.params.delta,
            "diameter": self.params.diameter,
            "exponent_p": self.params.exponent_p,
        }


def _check_budget(params: KernelParams) -> None:
    if params.budget < 1:
        raise ValueError("thresholds and bounds need a budget of at least 1")


def _threshold(params: KernelParams, offset: int) -> float:
    _check_budget(params)
    ratio = 2 * params.delta / (2 * params.delta - 1)
    return (offset + math.log(params.budget) / math.log(ratio)) * params.diameter


def _radius(params: KernelParams, offset: int) -> int:
    """Largest integer x with x <= (offset + log_r k) * D."""
    _check_budget(params)
    num, den = 2 * params.delta, 2 * params.delta - 1
    k_pow = params.budget ** params.diameter
    x = offset * params.diameter
    while num ** (x + 1 - offset * params.diameter) <= k_pow * den ** (x + 1 - offset * params.diameter):
        x += 1
    return x


def _exact_ceil(raw) -> int:
    # raw mpf tuple (sign, mantissa, exponent, bitcount); avoids any rounding
    sign, man, exp, _ = raw
    man, exp = int(man), int(exp)
    value = Fraction(man * 2**exp) if exp >= 0 else Fraction(man, 2**-exp)
    return math.ceil(-value if sign else value)


def _ceil_bound(coef: int, params: KernelParams, delta_exp: int) -> tuple[int, bool]:
    """Ceiling of coef * delta^delta_exp * k^(p*D + 1), saturated at INT64_MAX."""
    _check_budget(params)
    delta, D, k = params.delta, params.diameter, params.budget
    if k == 1:
        value = coef * delta**delta_exp
        return (value, False) if value <= INT64_MAX else (INT64_MAX, True)
    saved = iv.prec
    try:
        prec = 96
        while True:
            iv.prec = prec
            p = iv.log(delta) / iv.log(iv.mpf(2 * delta) / (2 * delta - 1))
            x = coef * iv.mpf(delta) ** delta_exp * iv.mpf(k) ** (p * D + 1)
            lo, hi = (_exact_ceil(raw) for raw in x._mpi_)
            if lo == hi:
                break
            prec *= 2
    finally:
        iv.prec = saved
    return (lo, False) if lo <= INT64_MAX else (INT64_MAX, True)


def rule0_threshold(params: KernelParams) -> float:
    return _threshold(params, 1)


def rule0_radius(params: KernelParams) -> int:
    """Integer keep-radius of Rule 0: floor of :func:`rule0_threshold`."""
    return _radius(params, 1)


def kernel_bound_rule0(params: KernelParams) -> int:
    """ceil(2 * Delta^(2D+1) * k^(pD+1)), saturated at INT64_MAX."""
    return _ceil_bound(2, params, 2 * params.diameter + 1)[0]


def rule1_threshold(params: KernelParams) -> float:
    return _threshold(params, 2)


def rule1_radius(params: KernelParams) -> int:
    return _radius(params, 2)


def kernel_bound_rule1(params: KernelParams) -> int:
    """ceil(8 * d^(3D+1) * k^(pD+1)), saturated at INT64_MAX."""
    return _ceil_bound(8, params, 3 * params.diameter + 1)[0]


def high_degree_vertices(g: Graph, d: int) -> VertexSet:
    if d < 1:
        raise ValueError(f"degree threshold must be positive, got {d}")
    return frozenset(v for v in g if g.degree(v) >= d + 1)


def _trivial_yes(inst: ProblemInstance, params: KernelParams) -> KernelResult:
    return KernelResult(ProblemInstance(Graph(), inst.budget), Rule.TRIVIAL_YES, frozenset(inst.graph.vertices), params)


def _trivial_no(inst: ProblemInstance, params: KernelParams, payload: Graph) -> KernelResult:
    return KernelResult(ProblemInstance(payload, 0), Rule.TRIVIAL_NO, frozenset(inst.graph.vertices), params)


def _reduce(inst, params, rule, centers, radius, threshold, bound) -> KernelResult:
    g = inst.graph
    dist = bfs_distances(g, centers)
    drop = frozenset(v for v in g if dist[v] > radius)
    kept = delete_vertices(g, drop)
    value, saturated = bound
    return KernelResult(
        ProblemInstance(kept, inst.budget), rule, drop, params,
        threshold=threshold, radius=radius, bound=value, bound_saturated=saturated, centers=frozenset(centers),
    )


def apply_rule0(inst: ProblemInstance, fam: PatternFamily, delta: int | None = None) -> KernelResult:
    """Drop vertices beyond the Rule 0 radius from the occupied vertices.

    The degree bound is measured from the graph; ``delta``, if given, only
    asserts an upper limit on it. Bounds below 2 are raised to 2, which is
    still a valid degree bound.
    """
    g, k = inst.graph, inst.budget
    measured = max_degree(g)
    if delta is not None and measured > delta:
        raise ValueError(f"graph has maximum degree {measured}, above the asserted {delta}")
    params = KernelParams(max(measured, 2), fam.max_diameter, k)
    occupied = occupied_vertices(g, fam)
    if not occupied:
        return _trivial_yes(inst, params)
    if k == 0:
        return _trivial_no(inst, params, fam.smallest_member())
    bound = _ceil_bound(2, params, 2 * params.diameter + 1)
    return _reduce(inst, params, Rule.RULE0, occupied, rule0_radius(params), rule0_threshold(params), bound)


def kernelize_bounded_degree(inst: ProblemInstance, fam: PatternFamily, delta: int | None = None) -> KernelResult:
    """Rule 0 followed by the size check; oversize reductions become (H, 0)."""
    result = apply_rule0(inst, fam, delta)
    if result.rule is Rule.RULE0 and result.instance.graph.num_vertices > result.bound:
        return _trivial_no(inst, result.params, fam.smallest_member())
    return result


def _apply_ramsey_rule(inst: ProblemInstance, fam: PatternFamily, s: int, t: int, payload: Graph) -> KernelResult:
    g, k = inst.graph, inst.budget
    # degree_cap is below 2 only for tiny (s, t); any larger cap stays sound
    d = max(degree_cap(s, t), 2)
    params = KernelParams(d, fam.max_diameter, k)
    occupied = occupied_vertices(g, fam)
    if not occupied:
        return _trivial_yes(inst, params)
    if k == 0:
        return _trivial_no(inst, params, payload)
    centers = occupied | high_degree_vertices(g, d)
    bound = _ceil_bound(8, params, 3 * params.diameter + 1)
    return _reduce(inst, params, Rule.RULE1, centers, rule1_radius(params), rule1_threshold(params), bound)


def apply_rule1(inst: ProblemInstance, fam: PatternFamily, t: int) -> KernelResult:
    """Rule 1 on a K_t-free input; the family must contain a star K_{1,s}, s > 1."""
    if fam.star_arity is None:
        raise ValueError("Rule 1 needs a star K_{1,s} with s > 1 in the family")
    if not is_clique_free(inst.graph, t):
        raise ValueError(f"input graph contains K_{t}")
    s = fam.star_arity
    return _apply_ramsey_rule(inst, fam, s, t, star_graph(s))


def apply_rule1_starfree(inst: ProblemInstance, fam: PatternFamily, s: int) -> KernelResult:
    """Rule 1 with the roles swapped: K_t in the family, K_{1,s}-free input."""
    if fam.clique_order is None:
        raise ValueError("swapped Rule 1 needs a clique K_t with t > 2 in the family")
    if s < 2:
        raise ValueError(f"star arity must be at least 2, got {s}")
    if find_one_induced(inst.graph, PatternFamily([star_graph(s)])) is not None:
        raise ValueError(f"input graph contains an induced K_1,{s}")
    t = fam.clique_order
    return _apply_ramsey_rule(inst, fam, s, t, complete_graph(t))


def _rule1_size_check(inst: ProblemInstance, result: KernelResult, payload: Graph) -> KernelResult:
    if result.rule is Rule.RULE1 and result.instance.graph.num_vertices > result.bound:
        return _trivial_no(inst, result.params, payload)
    return result


def kernelize_ktfree(inst: ProblemInstance, fam: PatternFamily, t: int) -> KernelResult:
    result = apply_rule1(inst, fam, t)
    return _rule1_size_check(inst, result, star_graph(fam.star_arity))


def kernelize_starfree(inst: ProblemInstance, fam: PatternFamily, s: int) -> KernelResult:
    result = apply_rule1_starfree(inst, fam, s)
    return _rule1_size_check(inst, result, complete_graph(fam.clique_order))


def counting_bound(g: Graph, centers, delta: int) -> float:
    """Vertex-count bound from depth-limited delta-ary BFS trees.

    Splits ``centers`` into V1 (degree <= delta) and V2 (degree > delta) and
    returns |V1| * delta^(c+1) + |N[V2]| * delta^c, where c is the largest
    distance from ``centers`` realized in ``g``. Every vertex of degree
    above ``delta`` must be a centre.
    """
    centers = frozenset(centers)
    if any(g.degree(v) > delta for v in g if v not in centers):
        raise ValueError("a vertex of degree above the bound is not a centre")
    if len(g) == 0:
        return 0
    dist = bfs_distances(g, centers)
    c = max(dist.values())
    if c == math.inf:
        return math.inf
    c = int(c)
    v1 = [v for v in centers if g.degree(v) <= delta]
    v2 = [v for v in centers if g.degree(v) > delta]
    return len(v1) * delta ** (c + 1) + len(closed_neighborhood(g, v2)) * delta**c
