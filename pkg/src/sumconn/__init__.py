"""Exact sum-connectivity and Randic indices over bicyclic graphs.

The package couples an exact radical-arithmetic core with an
isomorphism-free enumerator of connected bicyclic graphs, the named
extremal families, and a verification harness that checks the extremal
theorems exhaustively at small n.
"""

from ._version import __version__
from .errors import CapacityError
from .graph import Graph, canonical_code, canonical_graph, from_graph6, to_graph6
from .invariants import (
    all_maximum_matchings,
    edge_product_signature,
    edge_sum_signature,
    has_perfect_matching,
    matching_number,
    matching_number_bruteforce,
    randic,
    sum_connectivity,
)
from .radical import RadicalSum
from .enumeration import (
    all_bicyclic,
    all_bicyclic_filter,
    base_graphs,
    bicyclic_with_matching,
    budget_n,
)
from .families import (
    build_b1_1,
    build_b1_2,
    build_b2,
    build_b3_1,
    build_b3_2,
    build_b4_plus_pendant,
    build_bnab,
    build_bnm,
    build_h6,
    build_unm,
    cycle,
    family_min_n,
    members_b1_1,
    members_b1_2,
    members_b2,
    members_b3_1,
    members_b3_2,
    path,
)
from .transforms import (
    attach_path,
    contract_and_pendant,
    merge_paths,
    rewire_to_path_end,
)
from .verify import (
    ExtremalReport,
    check_scalar_lemmas,
    closed_form,
    report_json,
    run_suites,
    spot_check_cited_lemmas,
    verify_max_over_class,
    verify_min_over_class,
)

__all__ = [
    "__version__",
    "CapacityError",
    "Graph",
    "RadicalSum",
    "all_bicyclic",
    "all_bicyclic_filter",
    "all_maximum_matchings",
    "attach_path",
    "base_graphs",
    "bicyclic_with_matching",
    "budget_n",
    "build_b1_1",
    "build_b1_2",
    "build_b2",
    "build_b3_1",
    "build_b3_2",
    "build_b4_plus_pendant",
    "build_bnab",
    "build_bnm",
    "build_h6",
    "build_unm",
    "canonical_code",
    "canonical_graph",
    "check_scalar_lemmas",
    "closed_form",
    "contract_and_pendant",
    "cycle",
    "edge_product_signature",
    "edge_sum_signature",
    "ExtremalReport",
    "family_min_n",
    "from_graph6",
    "has_perfect_matching",
    "matching_number",
    "matching_number_bruteforce",
    "members_b1_1",
    "members_b1_2",
    "members_b2",
    "members_b3_1",
    "members_b3_2",
    "merge_paths",
    "path",
    "randic",
    "report_json",
    "rewire_to_path_end",
    "run_suites",
    "spot_check_cited_lemmas",
    "sum_connectivity",
    "to_graph6",
    "verify_max_over_class",
    "verify_min_over_class",
]
