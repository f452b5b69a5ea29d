"""Conventional baselines: restoring/non-restoring division and a shift-add
multiplier.

The dividers are the classic bit-serial hardware formulations, so operands
are converted to base 2 on entry and results converted back on exit; the
multiplier scans multiplier digits in the operands' own base.  These exist
as correctness cross-checks and benchmark opponents for the straight
divider and the cross-product multiplier.
"""

from __future__ import annotations

from . import backend, numeral
from .numeral import Base, Natural
from .vedic_div import DivResult


def restoring_divide(dividend: Natural, divisor: Natural) -> DivResult:
    """Bit-serial restoring division (subtract, restore on underflow)."""
    result, _ = restoring_divide_stats(dividend, divisor)
    return result


def restoring_divide_stats(
    dividend: Natural, divisor: Natural
) -> tuple[DivResult, int]:
    """Also reports the subtract-attempt count, which is exactly the bit
    length of the dividend."""
    base = numeral.same_base(dividend, divisor)
    if divisor.is_zero():
        raise ZeroDivisionError("division by zero")
    q, r, attempts = backend.kernels().div_restoring(
        numeral.to_bits(dividend), numeral.to_bits(divisor)
    )
    return _bits_result(q, r, base), attempts


def nonrestoring_divide(dividend: Natural, divisor: Natural) -> DivResult:
    """Bit-serial non-restoring division (alternate add/subtract, one final
    add-back when the last partial is negative)."""
    result, _ = nonrestoring_divide_stats(dividend, divisor)
    return result


def nonrestoring_divide_stats(
    dividend: Natural, divisor: Natural
) -> tuple[DivResult, int]:
    base = numeral.same_base(dividend, divisor)
    if divisor.is_zero():
        raise ZeroDivisionError("division by zero")
    q, r, steps = backend.kernels().div_nonrestoring(
        numeral.to_bits(dividend), numeral.to_bits(divisor)
    )
    return _bits_result(q, r, base), steps


def shift_add_multiply(x: Natural, y: Natural) -> Natural:
    """Accumulate one shifted, digit-scaled copy of x per digit of y."""
    base = numeral.same_base(x, y)
    out = backend.kernels().mul_shift_add(list(x.digits), list(y.digits), int(base))
    return numeral._from_canonical(tuple(out), base)


def _bits_result(q_bits: list, r_bits: list, base: Base) -> DivResult:
    return DivResult(
        numeral.from_bits(q_bits, base), numeral.from_bits(r_bits, base)
    )
