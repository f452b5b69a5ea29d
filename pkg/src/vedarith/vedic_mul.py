"""Cross-product ("vertically and crosswise") multiplication.

The product of two digit sequences is assembled from per-column cross
products: column c sums every digit pair whose indices add to c.  Each
digit-by-digit product stands in for one small parallel multiply unit; a
single carry-resolution sweep then turns the column sums into digits.
For 4-bit digits this is exactly the classic decomposition of a 16x16
multiply into sixteen 4x4 units feeding seven cross-product columns.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend, numeral
from .numeral import Natural

GROUP_BITS = (1, 2, 4, 8)


@dataclass(frozen=True)
class ColumnSum:
    """Pre-carry accumulator for one cross-product column."""

    column_index: int
    value: int


@dataclass(frozen=True)
class StructureReport:
    """How many d x d multiply units and cross-product columns an N-bit
    operand pair decomposes into."""

    operand_bits: int
    group_bits: int
    module_count: int
    column_count: int


def cross_column(x: Natural, y: Natural, c: int) -> ColumnSum:
    """Sum of x[i] * y[j] over all i + j = c; digits past the canonical
    length read as zero, so columns beyond the last are empty."""
    numeral.same_base(x, y)
    if c < 0:
        raise ValueError("column index must be nonnegative")
    xs, ys = x.digits, y.digits
    total = 0
    lo = max(0, c - len(ys) + 1)
    hi = min(c, len(xs) - 1)
    for i in range(lo, hi + 1):
        total += xs[i] * ys[c - i]
    return ColumnSum(c, total)


def multiply(x: Natural, y: Natural) -> Natural:
    """Product via cross-product column sums and one carry sweep."""
    base = numeral.same_base(x, y)
    out = backend.kernels().mul_vedic(list(x.digits), list(y.digits), int(base))
    return numeral._from_canonical(tuple(out), base)


def structure_report(operand_bits: int, group_bits: int) -> StructureReport:
    """Block/column counts when N-bit operands are split into d-bit groups."""
    if group_bits not in GROUP_BITS:
        raise ValueError(f"group width must be one of {GROUP_BITS}")
    if operand_bits <= 0 or operand_bits % group_bits != 0:
        raise ValueError(
            f"operand width must be a positive multiple of {group_bits}"
        )
    groups = operand_bits // group_bits
    return StructureReport(
        operand_bits=operand_bits,
        group_bits=group_bits,
        module_count=groups * groups,
        column_count=2 * groups - 1,
    )
