"""Shared helpers: integer oracles, seeded operand streams, backend-aware
test sizing."""

from __future__ import annotations

import pytest

from vedarith import backend, numeral, selftest
from vedarith.numeral import Base
from vedarith.randgen import Lcg64

ALL_BASES = (Base.BIN, Base.QUAT, Base.DEC, Base.HEX, Base.BYTE)


def nat(value: int, base: Base = Base.HEX):
    return numeral.from_int(value, base)


def val(x) -> int:
    return numeral.to_int(x)


def scaled(full: int, reduced: int) -> int:
    """Full iteration counts on the compiled kernels, reduced on pure."""
    return full if backend.active_name() == "compiled" else reduced


def repeated_subtraction_divmod(x: int, y: int) -> tuple[int, int]:
    # the ground-floor division oracle; only usable for small quotients
    q, r = 0, x
    while r >= y:
        r -= y
        q += 1
    return q, r


def random_value(rng: Lcg64, max_digits: int, base: Base) -> int:
    ndigits = rng.below(max_digits + 1)
    v = 0
    for _ in range(ndigits):
        v = v * int(base) + rng.below(int(base))
    return v


@pytest.fixture(scope="session")
def division_small_suite():
    """The exhaustive three-way division sweep, shared by several tests."""
    return selftest.division_agreement_small()


@pytest.fixture(scope="session")
def toy_keypair():
    from vedarith import rsa

    return rsa.keygen(nat(61), nat(53), nat(17))
