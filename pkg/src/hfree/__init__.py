"""Polynomial kernels for H-free Edge Deletion on bounded-degree and K_t-free graphs."""

from hfree.graph import (
    Graph,
    bfs_distances,
    closed_neighborhood,
    delete_edges,
    delete_vertices,
    edge_set,
    endpoints_of,
    is_clique_free,
    max_degree,
)
from hfree.kernel import (
    KernelParams,
    KernelResult,
    Rule,
    apply_rule0,
    apply_rule1,
    kernel_bound_rule0,
    kernel_bound_rule1,
    kernelize_bounded_degree,
    kernelize_ktfree,
    kernelize_starfree,
)
from hfree.patterns import Embedding, PatternFamily, builtin_pattern, enumerate_induced, find_one_induced, occupied_vertices
from hfree.ramsey import RamseyBound, degree_cap, ramsey_upper
from hfree.solver import DeletionTrace, ProblemInstance, Solution, mhds_trace, solve_branching, solve_bruteforce, verify_hds

__version__ = "0.1.0"
