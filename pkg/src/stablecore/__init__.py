"""Exact maximum-stable-set structure of small graphs.

The package computes stability numbers, the family of maximum stable sets
and its intersection (the core), maximum matchings, Koenig-Egervary status
and quasi-regularizability, and runs every structural statement it relies
on as an executable predicate over graph corpora.
"""

from .graph import (
    Bipartition,
    Graph,
    GraphFormatError,
    bipartition,
    closed_neighborhood,
    emit_edge_list,
    emit_graph6,
    induced_subgraph,
    is_bipartite,
    isolated_vertices,
    neighborhood,
    non_edges,
    odd_cycle,
    parse_edge_list,
    parse_graph6,
    with_edge,
)
from .matching import (
    MatchingReport,
    can_match_into,
    hall_condition_on_core,
    is_koenig_egervary,
    matching_number,
    maximum_matching,
)
from .quasi_reg import (
    canonical_obstruction,
    is_quasi_regularizable,
    is_quasi_regularizable_by_enumeration,
)
from .stable_sets import (
    DEFAULT_OMEGA_CAP,
    Obstruction,
    StableReport,
    core,
    core_complement_subgraph,
    core_size,
    enumerate_maximum_stable_sets,
    is_maximum_stable_set,
    is_stable_set,
    min_deficient_stable_set,
    stability_number,
    stable_report,
)
from .theorems import (
    CLASSIFICATIONS,
    TheoremVerdict,
    check_alpha_plus_by_definition,
    classify,
    predicate_ids,
    run_suite,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "CLASSIFICATIONS",
    "DEFAULT_OMEGA_CAP",
    "Graph",
    "GraphFormatError",
    "MatchingReport",
    "Obstruction",
    "StableReport",
    "TheoremVerdict",
    "bipartition",
    "can_match_into",
    "canonical_obstruction",
    "check_alpha_plus_by_definition",
    "classify",
    "closed_neighborhood",
    "core",
    "core_complement_subgraph",
    "core_size",
    "emit_edge_list",
    "emit_graph6",
    "enumerate_maximum_stable_sets",
    "hall_condition_on_core",
    "induced_subgraph",
    "is_bipartite",
    "is_koenig_egervary",
    "is_maximum_stable_set",
    "is_quasi_regularizable",
    "is_quasi_regularizable_by_enumeration",
    "is_stable_set",
    "isolated_vertices",
    "matching_number",
    "maximum_matching",
    "min_deficient_stable_set",
    "neighborhood",
    "non_edges",
    "odd_cycle",
    "parse_edge_list",
    "parse_graph6",
    "predicate_ids",
    "run_suite",
    "stability_number",
    "stable_report",
    "with_edge",
]
