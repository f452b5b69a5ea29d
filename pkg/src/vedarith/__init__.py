"""Digit-level natural-number arithmetic with a cross-product multiplier,
a straight (at-sight) divider, conventional restoring/non-restoring
baselines, square-and-multiply modular exponentiation and a small RSA
pipeline, plus a benchmark harness comparing the algorithms (and the
compiled kernels against the pure-Python ones)."""

from .backend import active_name, available, use
from .baseline_arith import (
    nonrestoring_divide,
    restoring_divide,
    shift_add_multiply,
)
from .modexp import Strategy, mod_mul, mod_pow, mod_reduce
from .numeral import Base, Natural, Ordering, parse
from .vedic_div import DivResult, divide
from .vedic_mul import multiply, structure_report

__version__ = "0.1.0"

__all__ = [
    "Base",
    "DivResult",
    "Natural",
    "Ordering",
    "Strategy",
    "active_name",
    "available",
    "divide",
    "mod_mul",
    "mod_pow",
    "mod_reduce",
    "multiply",
    "nonrestoring_divide",
    "parse",
    "restoring_divide",
    "shift_add_multiply",
    "structure_report",
    "use",
    "__version__",
]
