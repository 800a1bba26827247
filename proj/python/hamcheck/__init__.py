"""Exact symbolic checks for Hamiltonian operators of type 1+0 and their
compatibility with first-order quasilinear systems."""

from ._core import (
    Condition,
    Degenerate,
    DimensionMismatch,
    Error,
    Expr,
    LoadError,
    ParseError,
    PreconditionViolation,
    Problem,
    ReportSet,
    builtin_names,
    check_compat,
    check_operator,
    oracle,
    run_cli,
)

__all__ = [
    "Condition",
    "Degenerate",
    "DimensionMismatch",
    "Error",
    "Expr",
    "LoadError",
    "ParseError",
    "PreconditionViolation",
    "Problem",
    "ReportSet",
    "builtin_names",
    "check_compat",
    "check_operator",
    "oracle",
    "run_cli",
]
