"""Distance domination on generalized de Bruijn and Kautz digraphs.

The package computes, constructs, and certifies minimum distance-k
dominating sets of the two parametric digraph families on {0, ..., n-1}:

* de Bruijn arcs: x -> (d*x + i) mod n for i in 0..d-1
* Kautz arcs:     x -> (-d*x - i) mod n for i in 1..d

Closed-form interval arithmetic handles consecutive sets, constructive
rules settle most instances outright, and an exhaustive branch-and-bound
oracle provides ground truth at small scale.  Every exact answer returned
anywhere carries a witness set that has been re-verified against the arc
definitions.
"""

from .construct import (AnchorWitness, CongruenceWitness, ConstructionError,
                        GammaResult, build_anchor_run, build_lower_prefix,
                        build_prefix_cover, build_window_run, classify,
                        congruence_witness, debruijn_power_gamma, find_anchor,
                        gcd_condition, prefix_condition, remainder_window)
from .digraph import (DEBRUIJN, FAMILIES, KAUTZ, Ball, GeneralizedDigraph,
                      VertexSet, ball, export_graph,
                      interval_out_neighborhood,
                      ith_out_neighborhood_interval, out_neighbors,
                      set_out_neighborhood)
from .domination import (Bounds, DominationCertificate, bounds,
                         is_consecutive_set, verify)
from .modular import (ModInterval, ceil_div, geometric_sum,
                      interval_union_is_consecutive, mod_interval,
                      solve_linear_congruence)
from .oracle import (ABSENT, FOUND, INCONCLUSIVE, CoverageTable,
                     MinDominationResult, OracleLimits, SearchResult,
                     coverage_table, exists_dominating_of_size,
                     kernel_backend, min_dominating)

__version__ = "0.1.0"

__all__ = [
    "ABSENT", "AnchorWitness", "Ball", "Bounds", "CongruenceWitness",
    "ConstructionError", "CoverageTable", "DEBRUIJN", "DominationCertificate",
    "FAMILIES", "FOUND", "GammaResult", "GeneralizedDigraph", "INCONCLUSIVE",
    "KAUTZ", "MinDominationResult", "ModInterval", "OracleLimits",
    "SearchResult", "VertexSet", "ball", "bounds", "build_anchor_run",
    "build_lower_prefix", "build_prefix_cover", "build_window_run",
    "ceil_div", "classify", "congruence_witness", "coverage_table",
    "debruijn_power_gamma", "exists_dominating_of_size", "export_graph",
    "find_anchor", "gcd_condition", "geometric_sum",
    "interval_out_neighborhood", "interval_union_is_consecutive",
    "is_consecutive_set", "ith_out_neighborhood_interval", "kernel_backend",
    "min_dominating", "mod_interval", "out_neighbors", "prefix_condition",
    "remainder_window", "set_out_neighborhood", "solve_linear_congruence",
    "verify",
]
