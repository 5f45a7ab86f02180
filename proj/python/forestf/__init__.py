"""Exact computations in Thompson's group F over the {x0, x1} generating set.

Elements are represented by reduced forest diagrams; lengths, normal and
anti-normal forms, minimum-length words and Cayley-graph experiments are all
exact.
"""

from ._core import (
    BudgetError,
    Diagram,
    PreconditionError,
    WordParseError,
    apply,
    dead_end_counts,
    evaluate,
    growth_series,
    identity,
    iso_ratio,
    predict_delta,
    rewrite_to_anti_normal,
    sphere_sizes,
    x0x1_length,
)

__all__ = [
    "BudgetError",
    "Diagram",
    "PreconditionError",
    "WordParseError",
    "apply",
    "dead_end_counts",
    "evaluate",
    "growth_series",
    "identity",
    "iso_ratio",
    "predict_delta",
    "rewrite_to_anti_normal",
    "sphere_sizes",
    "x0x1_length",
]

__version__ = "0.1.0"
