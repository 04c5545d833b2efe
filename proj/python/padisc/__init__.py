"""Exact p-adic discrepancy, permutation-polynomial and pair-correlation tools."""

from ._core import (
    DomainError,
    EnumerationLimitError,
    Error,
    InternalError,
    ParseError,
    PrecisionError,
    abs_p,
    associated,
    ball_level,
    classify,
    coefficients,
    dickson_entries,
    digits,
    evaluate,
    exhaustive_search,
    f_statistic,
    is_permutation_mod,
    match_against_table,
    meijer_check,
    monna,
    padic_discrepancy,
    pair_count,
    real_extreme_discrepancy,
    render,
    roots_mod,
    run_cli,
    sequence,
    threshold_level,
    valuation,
)

__version__ = "0.1.0"
