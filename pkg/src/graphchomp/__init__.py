"""Exact solver and verification lab for subset take-away on simplicial
complexes, including graph chomp."""

from .canon import (
    CanonicalizationBoundError,
    CanonicalKey,
    canonical_key,
    isomorphic,
    position_key,
)
from .closed_forms import (
    FormulaResult,
    bipartite_value,
    complete_graph_value,
    complete_npartite_value,
    forest_value,
    gmk_recurrence,
    gmk_value,
)
from .complexes import (
    GraphStats,
    IllegalMoveError,
    InvalidInputError,
    SimplicialComplex,
    close_down,
    components,
    graph_stats,
    is_graph,
    load_complex,
    mask_of,
    moves,
    remove_face,
    save_complex,
    vertices_of,
)
from .engine import (
    BudgetExceededError,
    EngineConfig,
    GrundyRecord,
    TableCapacityError,
    TranspositionTable,
    classify,
    grundy,
    mex,
    nim_sum,
    optimal_move,
)
from .oracle import OracleBudgetError, oracle_grundy
from .symmetry import (
    Involution,
    ReductionTrace,
    find_reduction,
    fixed_point_set,
    is_simplest_form,
    reduce_to_simplest,
    validate_involution,
)

__all__ = [
    "BudgetExceededError",
    "CanonicalKey",
    "CanonicalizationBoundError",
    "EngineConfig",
    "FormulaResult",
    "GraphStats",
    "GrundyRecord",
    "IllegalMoveError",
    "InvalidInputError",
    "Involution",
    "OracleBudgetError",
    "ReductionTrace",
    "SimplicialComplex",
    "TableCapacityError",
    "TranspositionTable",
    "bipartite_value",
    "canonical_key",
    "classify",
    "close_down",
    "complete_graph_value",
    "complete_npartite_value",
    "components",
    "find_reduction",
    "fixed_point_set",
    "forest_value",
    "gmk_recurrence",
    "gmk_value",
    "graph_stats",
    "grundy",
    "is_graph",
    "is_simplest_form",
    "isomorphic",
    "load_complex",
    "mask_of",
    "mex",
    "moves",
    "nim_sum",
    "optimal_move",
    "oracle_grundy",
    "position_key",
    "reduce_to_simplest",
    "remove_face",
    "save_complex",
    "validate_involution",
    "vertices_of",
]

__version__ = "0.1.0"
