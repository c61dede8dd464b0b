"""Equivalence checks between instances and their kernels, and seeded campaigns."""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from hfree.generators import gen_bounded_degree, gen_clique_free
from hfree.graph import Graph, max_degree
from hfree.kernel import KernelResult, kernelize_bounded_degree, kernelize_ktfree, kernelize_starfree
from hfree.patterns import PatternFamily, is_free, star_graph
from hfree.solver import BRUTE_FORCE_EDGE_GUARD, ProblemInstance, Solution, solve_bruteforce

SCHEMA_VERSION = 1
MODES = ("bounded", "ktfree", "starfree")


class GuardExceeded(ValueError):
    pass


@dataclass
class RunReport:
    mode: str
    family: str
    n: int
    m: int
    max_degree: int
    rows: list[dict] = field(default_factory=list)
    t: int | None = None
    s: int | None = None
    seed: int | None = None
    verified: bool = False
    agree: bool | None = None
    timings: dict = field(default_factory=dict)
    schema_version: int = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return asdict(self)

    def disagreements(self) -> list[dict]:
        return [r for r in self.rows if r.get("agree") is False]


def kernelize(inst: ProblemInstance, fam: PatternFamily, mode: str, t: int | None = None, s: int | None = None) -> KernelResult:
    if mode == "bounded":
        return kernelize_bounded_degree(inst, fam)
    if mode == "ktfree":
        if t is None:
            raise ValueError("ktfree mode needs t")
        return kernelize_ktfree(inst, fam, t)
    if mode == "starfree":
        if s is None:
            raise ValueError("starfree mode needs s")
        return kernelize_starfree(inst, fam, s)
    raise ValueError(f"unknown mode {mode!r}")


class _Oracle:
    """Brute-force decisions, memoized per graph up to a fixed budget ceiling."""

    def __init__(self, fam: PatternFamily, ceiling: int):
        self.fam = fam
        self.ceiling = ceiling
        self._cache: dict[Graph, Solution | None] = {}

    def best(self, g: Graph) -> Solution | None:
        if g not in self._cache:
            self._cache[g] = solve_bruteforce(ProblemInstance(g, self.ceiling), self.fam)
        return self._cache[g]

    def decide(self, inst: ProblemInstance) -> bool:
        if inst.budget > self.ceiling:
            raise ValueError("budget above the oracle ceiling")
        sol = self.best(inst.graph)
        return sol is not None and len(sol) <= inst.budget


def verify_equivalence(
    g: Graph,
    fam: PatternFamily,
    mode: str,
    t: int | None = None,
    k_max: int = 3,
    s: int | None = None,
    seed: int | None = None,
) -> RunReport:
    """Kernelize at every k in 0..k_max and compare brute-force answers."""
    if g.num_edges > BRUTE_FORCE_EDGE_GUARD:
        raise GuardExceeded(f"{g.num_edges} edges exceeds the brute-force guard of {BRUTE_FORCE_EDGE_GUARD}")
    report = RunReport(mode, fam.label(), g.num_vertices, g.num_edges, max_degree(g), t=t, s=s, seed=seed, verified=True)
    oracle = _Oracle(fam, k_max)
    t_kernel = t_solve = 0.0
    for k in range(k_max + 1):
        inst = ProblemInstance(g, k)
        start = time.perf_counter()
        result = kernelize(inst, fam, mode, t, s)
        t_kernel += time.perf_counter() - start
        start = time.perf_counter()
        pre = oracle.decide(inst)
        post = oracle.decide(result.instance)
        t_solve += time.perf_counter() - start
        row = result.to_dict()
        row.update(k=k, pre=pre, post=post, agree=pre == post)
        report.rows.append(row)
    report.agree = all(r["agree"] for r in report.rows)
    report.timings = {"kernelize_s": t_kernel, "solve_s": t_solve}
    return report


def campaign_graph(mode: str, seed: int, max_n: int = 10) -> Graph:
    """Instance for one campaign seed; a pure function of (mode, seed).

    ``bounded`` draws max-degree-3 graphs, ``ktfree`` K4-free graphs and
    ``starfree`` claw-free graphs, all within the brute-force guard.
    """
    rng = random.Random(f"{mode}:{seed}")
    while True:
        n = rng.randint(3, max_n)
        p = rng.uniform(0.15, 0.75)
        sub = rng.getrandbits(32)
        if mode == "bounded":
            g = gen_bounded_degree(n, 3, p, sub)
        elif mode == "ktfree":
            g = gen_clique_free(n, 4, p, sub)
        elif mode == "starfree":
            g = gen_bounded_degree(n, 4, p, sub)
            if not is_free(g, PatternFamily([star_graph(3)])):
                continue
        else:
            raise ValueError(f"unknown mode {mode!r}")
        if g.num_edges <= BRUTE_FORCE_EDGE_GUARD:
            return g


def _campaign_task(args) -> RunReport:
    mode, names, seed, t, s, k_cap, max_n = args
    fam = PatternFamily.from_names(names)
    g = campaign_graph(mode, seed, max_n)
    k_max = g.num_edges if k_cap is None else min(g.num_edges, k_cap)
    return verify_equivalence(g, fam, mode, t=t, k_max=k_max, s=s, seed=seed)


def run_campaign(
    mode: str,
    family: str,
    seeds,
    t: int | None = None,
    s: int | None = None,
    k_cap: int | None = None,
    max_n: int = 10,
    jobs: int = 1,
) -> list[RunReport]:
    """Verify one report per seed, k ranging over 0..min(|E|, k_cap)."""
    tasks = [(mode, family, seed, t, s, k_cap, max_n) for seed in seeds]
    if jobs <= 1:
        return [_campaign_task(a) for a in tasks]
    with ProcessPoolExecutor(jobs) as pool:
        return list(pool.map(_campaign_task, tasks))
