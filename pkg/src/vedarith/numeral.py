"""Natural numbers as little-endian digit sequences in a small set of radixes.

A value is an immutable tuple of digits plus the base it lives in.  Zero is
the empty tuple, so canonical form is unique and equality is structural.
Mixed-base operations are rejected instead of silently converted.

Digits are never packed into machine words: every algorithm in this package
works digit by digit, which is the whole point of the library.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class ParseError(ValueError):
    """A numeral string could not be parsed; carries the offending offset."""

    def __init__(self, message: str, offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class BaseMismatchError(ValueError):
    """Two operands with different bases were combined."""


class UnderflowError(ArithmeticError):
    """Subtraction would have produced a negative value."""


class Base(enum.IntEnum):
    """Supported radixes.  Power-of-two bases map to fixed digit widths."""

    BIN = 2
    QUAT = 4
    DEC = 10
    HEX = 16
    BYTE = 256

    @property
    def digit_bits(self) -> int:
        """Bits per digit (1/2/4/8); undefined for base 10."""
        if self is Base.DEC:
            raise ValueError("base 10 digits have no fixed bit width")
        return _DIGIT_BITS[int(self)]


_DIGIT_BITS = {2: 1, 4: 2, 16: 4, 256: 8}

# Base 16 is the default: one digit per 4-bit group.
DEFAULT_BASE = Base.HEX


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


@dataclass(frozen=True, slots=True)
class Natural:
    """Unsigned integer as little-endian digits (digits[0] least significant).

    The constructor canonicalizes: trailing most-significant zeros are
    stripped, so the zero value is always the empty tuple.
    """

    digits: tuple[int, ...]
    base: Base = DEFAULT_BASE

    def __post_init__(self):
        base = Base(self.base)
        digits = tuple(self.digits)
        n = len(digits)
        while n > 0 and digits[n - 1] == 0:
            n -= 1
        if n != len(digits):
            digits = digits[:n]
        for d in digits:
            if not 0 <= d < base:
                raise ValueError(f"digit {d} out of range for base {int(base)}")
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "base", base)

    def is_zero(self) -> bool:
        return not self.digits

    def __bool__(self) -> bool:
        return bool(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __repr__(self) -> str:
        return f"Natural({format(self)!r}, base={int(self.base)})"


def _from_canonical(digits: tuple[int, ...], base: Base) -> Natural:
    """Wrap digits that are already canonical and range-checked (kernel
    outputs), skipping constructor validation."""
    x = object.__new__(Natural)
    object.__setattr__(x, "digits", digits)
    object.__setattr__(x, "base", base)
    return x


def zero(base: Base = DEFAULT_BASE) -> Natural:
    return Natural((), base)


def one(base: Base = DEFAULT_BASE) -> Natural:
    return Natural((1,), base)


_HEX_VALUES = {c: int(c, 16) for c in "0123456789abcdefABCDEF"}


def parse(text: str, base: Base = DEFAULT_BASE) -> Natural:
    """Parse a numeral string into a canonical Natural.

    Base 2/4/10/16 use one character per digit; base 256 uses hex with two
    characters per digit (odd-length input is padded with a leading zero).
    """
    base = Base(base)
    if not text:
        raise ParseError("empty numeral", offset=0)
    values = []
    for i, ch in enumerate(text):
        v = _HEX_VALUES.get(ch)
        if v is None or (base is not Base.BYTE and v >= int(base)):
            raise ParseError(
                f"invalid digit {ch!r} for base {int(base)} at offset {i}", offset=i
            )
        values.append(v)
    if base is Base.BYTE:
        if len(values) % 2:
            values.insert(0, 0)
        digits = [values[i] * 16 + values[i + 1] for i in range(0, len(values), 2)]
    else:
        digits = values
    digits.reverse()
    return Natural(tuple(digits), base)


def format(x: Natural) -> str:
    """Format a Natural; inverse of parse.  Zero formats as "0"."""
    if x.is_zero():
        return "0"
    if x.base is Base.BYTE:
        text = "".join("%02x" % d for d in reversed(x.digits))
        return text.lstrip("0") or "0"
    if x.base is Base.HEX:
        return "".join("%x" % d for d in reversed(x.digits))
    return "".join(str(d) for d in reversed(x.digits))


def same_base(a: Natural, b: Natural) -> Base:
    if a.base is not b.base:
        raise BaseMismatchError(
            f"operands have different bases: {int(a.base)} vs {int(b.base)}"
        )
    return a.base


def compare(a: Natural, b: Natural) -> Ordering:
    """Total order on values of the same base."""
    same_base(a, b)
    if len(a.digits) != len(b.digits):
        return Ordering.LESS if len(a.digits) < len(b.digits) else Ordering.GREATER
    for da, db in zip(reversed(a.digits), reversed(b.digits)):
        if da != db:
            return Ordering.LESS if da < db else Ordering.GREATER
    return Ordering.EQUAL


def add(a: Natural, b: Natural) -> Natural:
    """Digit-wise addition with carry propagation (each carry is 0 or 1)."""
    beta = int(same_base(a, b))
    xs, ys = a.digits, b.digits
    if len(xs) < len(ys):
        xs, ys = ys, xs
    out = []
    carry = 0
    for i, d in enumerate(xs):
        t = d + carry
        if i < len(ys):
            t += ys[i]
        if t >= beta:
            t -= beta
            carry = 1
        else:
            carry = 0
        out.append(t)
    if carry:
        out.append(1)
    return Natural(tuple(out), a.base)


def sub(a: Natural, b: Natural) -> Natural:
    """Digit-wise subtraction with borrow; requires a >= b."""
    beta = int(same_base(a, b))
    if compare(a, b) is Ordering.LESS:
        raise UnderflowError("subtraction underflow: minuend is smaller")
    out = []
    borrow = 0
    for i, d in enumerate(a.digits):
        t = d - borrow - (b.digits[i] if i < len(b.digits) else 0)
        if t < 0:
            t += beta
            borrow = 1
        else:
            borrow = 0
        out.append(t)
    return Natural(tuple(out), a.base)


def shift_digits(x: Natural, k: int) -> Natural:
    """Shift by whole digits: k >= 0 multiplies by base**k, k < 0 floor-divides."""
    if x.is_zero():
        return x
    if k >= 0:
        return Natural((0,) * k + x.digits, x.base)
    return Natural(x.digits[-k:], x.base)


def to_int(x: Natural) -> int:
    """Value as a machine integer.  Conversion/oracle plumbing only: the
    arithmetic operations themselves never round-trip through this."""
    v = 0
    for d in reversed(x.digits):
        v = v * int(x.base) + d
    return v


def from_int(value: int, base: Base = DEFAULT_BASE) -> Natural:
    """Build a canonical Natural from a nonnegative machine integer."""
    if value < 0:
        raise ValueError("Natural cannot represent a negative value")
    beta = int(Base(base))
    digits = []
    while value:
        value, d = divmod(value, beta)
        digits.append(d)
    return Natural(tuple(digits), base)


def convert(x: Natural, base: Base) -> Natural:
    """Re-express the same value in another base."""
    base = Base(base)
    if x.base is base:
        return x
    return from_int(to_int(x), base)


def bit_length(x: Natural) -> int:
    if x.is_zero():
        return 0
    if x.base is Base.DEC:
        return to_int(x).bit_length()
    d = x.base.digit_bits
    return (len(x.digits) - 1) * d + x.digits[-1].bit_length()


def to_bits(x: Natural) -> list[int]:
    """Little-endian bit list of the value (canonical: no leading zeros)."""
    if x.base is Base.DEC:
        v = to_int(x)
        return [(v >> i) & 1 for i in range(v.bit_length())]
    width = x.base.digit_bits
    bits = []
    for d in x.digits:
        for i in range(width):
            bits.append((d >> i) & 1)
    while bits and bits[-1] == 0:
        bits.pop()
    return bits


def from_bits(bits: list[int], base: Base = DEFAULT_BASE) -> Natural:
    """Inverse of to_bits for any supported base."""
    base = Base(base)
    if base is Base.DEC:
        v = 0
        for b in reversed(bits):
            v = v * 2 + b
        return from_int(v, base)
    width = base.digit_bits
    digits = []
    for i in range(0, len(bits), width):
        d = 0
        for j, b in enumerate(bits[i : i + width]):
            d |= b << j
        digits.append(d)
    return Natural(tuple(digits), base)
