"""Longest common subsequence of two sequences excluding a pattern as a substring."""

from .automaton import (
    ConstraintPattern,
    EmptyPatternError,
    TransitionTable,
    build_prefix_function,
    build_transition_table,
    sigma,
    sigma_string,
)
from .dp import (
    DpTensor,
    InconsistentTensorError,
    SolveOutcome,
    backtrace,
    max_sigma,
    solve_naive,
    solve_optimized,
)
from .reference import (
    ChenChaoTable,
    OracleResult,
    OracleSizeError,
    brute_force_oracle,
    chen_chao_solve,
    plain_lcs,
    validate_witness,
)

__all__ = [
    "ChenChaoTable",
    "ConstraintPattern",
    "DpTensor",
    "EmptyPatternError",
    "InconsistentTensorError",
    "OracleResult",
    "OracleSizeError",
    "SolveOutcome",
    "TransitionTable",
    "backtrace",
    "brute_force_oracle",
    "build_prefix_function",
    "build_transition_table",
    "chen_chao_solve",
    "max_sigma",
    "plain_lcs",
    "sigma",
    "sigma_string",
    "solve_naive",
    "solve_optimized",
    "validate_witness",
]
