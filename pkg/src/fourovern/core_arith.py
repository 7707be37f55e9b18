"""Exact integer and rational arithmetic on a fixed working width.

Anything that can grow is routed through the checked helpers, so a value
that would leave the signed 128-bit range raises CheckedOverflowError
carrying its operands instead of silently continuing.  Fractions are
reduced eagerly, which makes equality structural.

Primality is deterministic (trial division backed by a fixed Miller-Rabin
witness set), factorization is trial division against a cached, growable
prime table.  Both are exact; neither is probabilistic.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import lru_cache
from math import gcd as _math_gcd, isqrt
from typing import Iterator, Sequence

INT128_MAX = (1 << 127) - 1
INT128_MIN = -(1 << 127)

# Deterministic Miller-Rabin witnesses; exact for every n below this bound
# (comfortably past 64-bit), which is where trial division stops being viable.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_EXACT_BOUND = 3_317_044_064_679_887_385_961_981

_TRIAL_BOUND = 1000  # small primes tried before Miller-Rabin kicks in


class CheckedOverflowError(OverflowError):
    """A checked operation left the signed 128-bit working range."""

    def __init__(self, op: str, a: int, b: int) -> None:
        super().__init__(f"{op}({a}, {b}) leaves the signed 128-bit range")
        self.op = op
        self.operands = (a, b)


def checked_add(a: int, b: int) -> int:
    """a + b, or CheckedOverflowError if the sum leaves the working range."""
    r = a + b
    if r > INT128_MAX or r < INT128_MIN:
        raise CheckedOverflowError("add", a, b)
    return r


def checked_mul(a: int, b: int) -> int:
    """a * b, or CheckedOverflowError if the product leaves the working range."""
    r = a * b
    if r > INT128_MAX or r < INT128_MIN:
        raise CheckedOverflowError("mul", a, b)
    return r


def gcd(a: int, b: int) -> int:
    """Greatest common divisor of two nonnegative integers, not both zero."""
    if a < 0 or b < 0:
        raise ValueError(f"gcd expects nonnegative inputs, got ({a}, {b})")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return _math_gcd(a, b)


@dataclass(frozen=True)
class Fraction:
    """A positive rational, always stored reduced."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.num < 1 or self.den < 1:
            raise ValueError(f"fraction must be positive: {self.num}/{self.den}")
        g = _math_gcd(self.num, self.den)
        if g > 1:
            object.__setattr__(self, "num", self.num // g)
            object.__setattr__(self, "den", self.den // g)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


# ---------------------------------------------------------------------------
# prime table (cached sieve, grown on demand)

_sieve_limit = 0
_primes: list[int] = []


def _extend_sieve(limit: int) -> None:
    global _sieve_limit, _primes
    limit = max(limit, 1 << 16, 2 * _sieve_limit)
    flags = bytearray(b"\x01") * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            start = p * p
            flags[start :: p] = b"\x00" * ((limit - start) // p + 1)
    _primes = [i for i, f in enumerate(flags) if f]
    _sieve_limit = limit


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, ascending."""
    if limit < 2:
        return []
    if limit > _sieve_limit:
        _extend_sieve(limit)
    return _primes[: bisect_right(_primes, limit)]


def iter_primes() -> Iterator[int]:
    """2, 3, 5, ... without end, extending the cached sieve as needed."""
    i = 0
    while True:
        if i >= len(_primes):
            _extend_sieve(2 * _sieve_limit if _sieve_limit else 1 << 16)
        yield _primes[i]
        i += 1


# ---------------------------------------------------------------------------
# factorization, divisors, primality

@dataclass(frozen=True)
class Factorization:
    """Complete prime factorization as ascending (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = 1
        for p, e in self.pairs:
            out = checked_mul(out, p**e)
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


@lru_cache(maxsize=1 << 16)
def _factor_pairs(n: int) -> tuple[tuple[int, int], ...]:
    m = n
    pairs: list[tuple[int, int]] = []
    for p in iter_primes():
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            pairs.append((p, e))
    if m > 1:
        pairs.append((m, 1))
    return tuple(pairs)


def factorize(n: int) -> Factorization:
    """Prime factorization by trial division; deterministic and exact.

    Practical for n whose second-largest prime factor fits a sieve, i.e.
    everything sweep-scale; not meant for cryptographic sizes.
    """
    if n < 2:
        raise ValueError(f"factorize expects n >= 2, got {n}")
    return Factorization(_factor_pairs(n))


def divisors(n: int) -> list[int]:
    """All divisors of n, ascending (so starting at 1 and ending at n)."""
    if n < 1:
        raise ValueError(f"divisors expects n >= 1, got {n}")
    if n == 1:
        return [1]
    divs = [1]
    for p, e in _factor_pairs(n):
        grown = []
        pk = 1
        for _ in range(e + 1):
            for d in divs:
                grown.append(d * pk)
            pk *= p
        divs = grown
    divs.sort()
    return divs


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Trial division by primes up to 1000 settles everything below 1000**2;
    beyond that the fixed witness set decides exactly up to its proven
    bound (well past 64 bits).  Larger inputs raise rather than guess.
    """
    if n < 2:
        return False
    for p in primes_up_to(min(_TRIAL_BOUND, isqrt(n))):
        if n % p == 0:
            return n == p
    if n < (_TRIAL_BOUND + 1) ** 2:
        return True
    if n >= _MR_EXACT_BOUND:
        raise ValueError(f"is_prime: {n} exceeds the deterministic witness range")
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def unit_sum(xs: Sequence[int]) -> Fraction:
    """Exact reduced sum of 1/x over xs, with checked arithmetic throughout."""
    if not xs:
        raise ValueError("unit_sum of an empty sequence")
    num, den = 0, 1
    for x in xs:
        if x < 1:
            raise ValueError(f"unit fractions need positive denominators, got {x}")
        num = checked_add(checked_mul(num, x), den)
        den = checked_mul(den, x)
        g = _math_gcd(num, den)
        num //= g
        den //= g
    return Fraction(num, den)
