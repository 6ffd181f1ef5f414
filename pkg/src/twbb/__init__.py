"""Exact anytime treewidth: branch and bound over elimination orders.

Quick start::

    from twbb import Graph, solve
    g = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    report = solve(g)
    report.best_width   # 2, with report.optimal True
"""

from .bounds import (
    LowerBoundResult,
    mcs_lb,
    mcs_lb_max,
    minor_min_width,
    minwidth_lb,
    state_lower_bound,
)
from .decomposition import (
    TreeDecomposition,
    ValidationReport,
    build_decomposition,
    is_chordal,
    is_perfect_elimination_order,
    merge_contained_bags,
    triangulate,
    validate_decomposition,
)
from .formats import (
    ParseError,
    parse_dimacs_col,
    parse_pace_gr,
    parse_pace_td,
    write_pace_gr,
    write_pace_td,
)
from .generators import (
    PartialKTreeSpec,
    RandomGraphSpec,
    gen_partial_ktree,
    gen_random,
    mycielski,
    queen_graph,
)
from .graph import Graph, GraphError, connected_components, width_of_order
from .heuristics import (
    EliminationOrder,
    HeuristicConfig,
    best_upper_bound,
    max_cardinality_order,
    min_fill_order,
    min_width_order,
)
from .oracle import OracleResult, exact_treewidth, exact_treewidth_permutations
from .reduction import ReductionOutcome, apply_reductions, edge_addition, reduce_state
from .solver import (
    RunReport,
    SearchState,
    SolverConfig,
    expand,
    prune_fill_subset,
    prune_mutual_simplicial,
    prune_sibling_order,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "EliminationOrder",
    "Graph",
    "GraphError",
    "HeuristicConfig",
    "LowerBoundResult",
    "OracleResult",
    "ParseError",
    "PartialKTreeSpec",
    "RandomGraphSpec",
    "ReductionOutcome",
    "RunReport",
    "SearchState",
    "SolverConfig",
    "TreeDecomposition",
    "ValidationReport",
    "apply_reductions",
    "best_upper_bound",
    "build_decomposition",
    "connected_components",
    "edge_addition",
    "exact_treewidth",
    "exact_treewidth_permutations",
    "expand",
    "gen_partial_ktree",
    "gen_random",
    "is_chordal",
    "is_perfect_elimination_order",
    "max_cardinality_order",
    "mcs_lb",
    "mcs_lb_max",
    "merge_contained_bags",
    "min_fill_order",
    "min_width_order",
    "minor_min_width",
    "minwidth_lb",
    "mycielski",
    "parse_dimacs_col",
    "parse_pace_gr",
    "parse_pace_td",
    "prune_fill_subset",
    "prune_mutual_simplicial",
    "prune_sibling_order",
    "queen_graph",
    "reduce_state",
    "solve",
    "state_lower_bound",
    "triangulate",
    "validate_decomposition",
    "width_of_order",
    "write_pace_gr",
    "write_pace_td",
]
