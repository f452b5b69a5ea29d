"""Textbook RSA at desk scale: five-step key generation, encryption
L = M**J mod N and decryption M = L**I mod N, all on the package's own
modular exponentiation.

The message space is a single residue 0 <= M < N: no padding, no blocking,
no side-channel hardening.  This is an educational arithmetic exercise,
not production cryptography.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from . import modexp, numeral, vedic_mul
from .baseline_arith import shift_add_multiply
from .modexp import DEFAULT_STRATEGY, Strategy
from .numeral import Base, Natural, Ordering
from .randgen import Lcg64


class KeyFileError(ValueError):
    """A key file did not match the expected line format."""


class MessageTooLargeError(ValueError):
    """Message or ciphertext is not below the modulus."""


@dataclass(frozen=True)
class RsaPublicKey:
    modulus: Natural
    exponent: Natural


@dataclass(frozen=True)
class RsaPrivateKey:
    modulus: Natural
    exponent: Natural


@dataclass(frozen=True)
class KeyPair:
    public: RsaPublicKey
    private: RsaPrivateKey
    p: Natural
    q: Natural
    totient: Natural


# Strong-pseudoprime witnesses: exact for every candidate below 3.3e24,
# far beyond anything this package generates.
MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Below this, plain trial division is cheap and settles primality exactly.
_TRIAL_LIMIT = 1 << 20


def is_prime(n: Natural, strategy: Strategy = DEFAULT_STRATEGY) -> bool:
    """Exact primality test: trial division for small values, deterministic
    Miller-Rabin (witnesses above) beyond, with the modular exponentiations
    running on this package's own arithmetic."""
    v = numeral.to_int(n)
    if v < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if v == p:
            return True
        if v % p == 0:
            return False
    if v < _TRIAL_LIMIT:
        f = 41
        while f * f <= v:
            if v % f == 0:
                return False
            f += 2
        return True
    return _miller_rabin(n, strategy)


def _miller_rabin(n: Natural, strategy: Strategy) -> bool:
    base = n.base
    one = numeral.one(base)
    n_minus_1 = numeral.sub(n, one)
    # n - 1 = d * 2**s with d odd
    bits = numeral.to_bits(n_minus_1)
    s = 0
    while bits[s] == 0:
        s += 1
    d = numeral.from_bits(bits[s:], Base.BIN)
    for w in MR_WITNESSES:
        a = numeral.from_int(w, base)
        x = modexp.mod_pow(a, d, n, strategy)
        if numeral.compare(x, one) is Ordering.EQUAL:
            continue
        if numeral.compare(x, n_minus_1) is Ordering.EQUAL:
            continue
        witness_of_compositeness = True
        for _ in range(s - 1):
            x = modexp.mod_mul(x, x, n, strategy)
            if numeral.compare(x, n_minus_1) is Ordering.EQUAL:
                witness_of_compositeness = False
                break
        if witness_of_compositeness:
            return False
    return True


def extended_gcd(
    a: Natural, b: Natural
) -> tuple[Natural, int, Natural, int, Natural]:
    """gcd plus signed coefficients: returns (g, x_sign, x_mag, y_sign, y_mag)
    with x*a + y*b = g.  Signs are +1/-1 carried separately because Natural
    is unsigned."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    base = numeral.same_base(a, b)
    g, x, y = _ext_gcd_ints(numeral.to_int(a), numeral.to_int(b))
    return (
        numeral.from_int(g, base),
        1 if x >= 0 else -1,
        numeral.from_int(abs(x), base),
        1 if y >= 0 else -1,
        numeral.from_int(abs(y), base),
    )


def _ext_gcd_ints(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def keygen(
    p: Natural, q: Natural, j: Natural, strategy: Strategy = DEFAULT_STRATEGY
) -> KeyPair:
    """Build a key pair from chosen primes and public exponent.

    Checks every stated precondition, derives the private exponent as the
    inverse of j modulo (p-1)(q-1) and re-verifies j*i = 1 (mod totient)
    with the package's own modular arithmetic before returning.
    """
    base = numeral.same_base(p, q)
    numeral.same_base(p, j)
    if not is_prime(p, strategy):
        raise ValueError(f"p = {numeral.format(p)} is not prime")
    if not is_prime(q, strategy):
        raise ValueError(f"q = {numeral.format(q)} is not prime")
    if numeral.compare(p, q) is Ordering.EQUAL:
        raise ValueError("primes p and q must be distinct")
    one = numeral.one(base)
    modulus = vedic_mul.multiply(p, q)
    # cross-check the modulus with the second multiplier
    if numeral.compare(modulus, shift_add_multiply(p, q)) is not Ordering.EQUAL:
        raise AssertionError("multiplier cross-check failed for the modulus")
    totient = vedic_mul.multiply(numeral.sub(p, one), numeral.sub(q, one))
    if (
        numeral.compare(j, one) is not Ordering.GREATER
        or numeral.compare(j, totient) is not Ordering.LESS
    ):
        raise ValueError("public exponent must satisfy 1 < j < (p-1)(q-1)")
    g, _, _, _, _ = extended_gcd(j, totient)
    if numeral.compare(g, one) is not Ordering.EQUAL:
        raise ValueError(
            "public exponent shares a factor with (p-1)(q-1): "
            f"gcd = {numeral.format(g)}"
        )
    j_int = numeral.to_int(j)
    k_int = numeral.to_int(totient)
    _, x, _ = _ext_gcd_ints(j_int, k_int)
    private_exp = numeral.from_int(x % k_int, base)
    check = modexp.mod_mul(j, private_exp, totient, strategy)
    if numeral.compare(check, one) is not Ordering.EQUAL:
        raise AssertionError("private exponent failed the inverse check")
    return KeyPair(
        public=RsaPublicKey(modulus, j),
        private=RsaPrivateKey(modulus, private_exp),
        p=p,
        q=q,
        totient=totient,
    )


# Deterministic public-exponent candidates tried before random draws.
_J_CANDIDATES = (3, 5, 17, 257, 65537)


def keygen_random(
    bits: int,
    seed: int,
    base: Base = numeral.DEFAULT_BASE,
    strategy: Strategy = DEFAULT_STRATEGY,
) -> KeyPair:
    """Seeded key generation: primes of bits//2 bits each are drawn from the
    LCG and retried until prime and distinct; identical seeds give identical
    key pairs."""
    if bits < 8:
        raise ValueError("modulus width must be at least 8 bits")
    rng = Lcg64(seed)
    half = bits // 2
    p = _draw_prime(rng, half, base, strategy)
    while True:
        q = _draw_prime(rng, half, base, strategy)
        if numeral.compare(p, q) is not Ordering.EQUAL:
            break
    one = numeral.one(base)
    totient = vedic_mul.multiply(numeral.sub(p, one), numeral.sub(q, one))
    k_int = numeral.to_int(totient)
    j_int = None
    for cand in _J_CANDIDATES:
        if 1 < cand < k_int and math.gcd(cand, k_int) == 1:
            j_int = cand
            break
    while j_int is None:
        cand = rng.below(k_int - 3) + 3
        if math.gcd(cand, k_int) == 1:
            j_int = cand
    return keygen(p, q, numeral.from_int(j_int, base), strategy)


def _draw_prime(rng: Lcg64, nbits: int, base: Base, strategy: Strategy) -> Natural:
    while True:
        v = rng.bits(nbits) | (1 << (nbits - 1)) | 1  # full width, odd
        candidate = numeral.from_int(v, base)
        if is_prime(candidate, strategy):
            return candidate


def encrypt(
    m: Natural, key: RsaPublicKey, strategy: Strategy = DEFAULT_STRATEGY
) -> Natural:
    """Cipher residue m**J mod N; m must be below the modulus."""
    if numeral.compare(m, key.modulus) is not Ordering.LESS:
        raise MessageTooLargeError("message must be smaller than the modulus")
    return modexp.mod_pow(m, key.exponent, key.modulus, strategy)


def decrypt(
    l: Natural, key: RsaPrivateKey, strategy: Strategy = DEFAULT_STRATEGY
) -> Natural:
    """Message residue l**I mod N; l must be below the modulus."""
    if numeral.compare(l, key.modulus) is not Ordering.LESS:
        raise MessageTooLargeError("ciphertext must be smaller than the modulus")
    return modexp.mod_pow(l, key.exponent, key.modulus, strategy)


# --- key files -------------------------------------------------------------
#
# Text format, one item per line, nothing else allowed:
#   base=16
#   n=<numeral>
#   exp=<numeral>
#   kind=public|private

_KEY_FIELDS = ("base", "n", "exp", "kind")


def save_key(path, key: RsaPublicKey | RsaPrivateKey) -> None:
    kind = "public" if isinstance(key, RsaPublicKey) else "private"
    base = key.modulus.base
    lines = [
        f"base={int(base)}",
        f"n={numeral.format(key.modulus)}",
        f"exp={numeral.format(key.exponent)}",
        f"kind={kind}",
    ]
    Path(path).write_text("\n".join(lines) + "\n")


def load_key(path) -> RsaPublicKey | RsaPrivateKey:
    fields: dict[str, str] = {}
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        name, sep, value = line.partition("=")
        if not sep or name not in _KEY_FIELDS:
            raise KeyFileError(f"unknown line {lineno}: {line!r}")
        if name in fields:
            raise KeyFileError(f"duplicate field {name!r} on line {lineno}")
        fields[name] = value
    missing = [f for f in _KEY_FIELDS if f not in fields]
    if missing:
        raise KeyFileError(f"missing fields: {', '.join(missing)}")
    try:
        base = Base(int(fields["base"]))
    except ValueError as exc:
        raise KeyFileError(f"unsupported base {fields['base']!r}") from exc
    modulus = numeral.parse(fields["n"], base)
    exponent = numeral.parse(fields["exp"], base)
    if fields["kind"] == "public":
        return RsaPublicKey(modulus, exponent)
    if fields["kind"] == "private":
        return RsaPrivateKey(modulus, exponent)
    raise KeyFileError(f"kind must be public or private, got {fields['kind']!r}")


def message_to_natural(data: bytes, base: Base = numeral.DEFAULT_BASE) -> Natural:
    """Big-endian byte-string encoding of a short message."""
    v = int.from_bytes(data, "big")
    return numeral.from_int(v, base)


def natural_to_message(x: Natural) -> bytes:
    v = numeral.to_int(x)
    return v.to_bytes((v.bit_length() + 7) // 8, "big") if v else b""
