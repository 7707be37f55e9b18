"""Witness-based constructions for 4/n, n odd.

A witness is a tuple (delta, k, m, a, t) with delta | n, k odd, m = 3
(mod 4), a*m = delta + k, t = (m+1)/4 and a*t*n = 0 (mod k).  From it the
exact decomposition

    4/n = 1/(a*t*n/k) + 1/(a*t*(n/delta)) + 1/(t*n)

follows, with distinct parts whenever n has no divisor congruent to 3 mod
4.  theorem3_search scans for witnesses under a k bound; theorem4_*
specialize k to a divisor d of n, where the congruence holds for free and
only delta + d needs a qualifying m.

The no-divisor-3-mod-4 hypothesis is advisory: it is checked and reported
as a warning, but acceptance always rests on the exact-sum and
distinctness validation of the built triple.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from .core_arith import checked_mul, divisors, factorize
from .triples import ConstructionError, Method, UnitTriple, make_triple

DEFAULT_K_BOUND = 999


class HypothesisViolation(ValueError):
    """A witness tuple breaks one of the construction's requirements."""


class HypothesisWarning(UserWarning):
    """n has a divisor 3 (mod 4); the construction is validated numerically anyway."""


@dataclass(frozen=True)
class Th3Params:
    """Witness (delta, k, m, a, t) with a*m == delta + k and t == (m+1)/4."""

    delta: int
    k: int
    m: int
    a: int
    t: int

    @classmethod
    def from_divisor_k_m(cls, delta: int, k: int, m: int) -> "Th3Params":
        if m < 3 or m % 4 != 3:
            raise HypothesisViolation(f"m must be 3 (mod 4), got {m}")
        if (delta + k) % m:
            raise HypothesisViolation(f"m={m} does not divide delta+k={delta + k}")
        return cls(delta, k, m, (delta + k) // m, (m + 1) // 4)


def has_divisor_3_mod_4(n: int) -> bool:
    """True iff some divisor of n is 3 (mod 4).

    Equivalent to having a prime divisor 3 (mod 4): a product of odd primes
    all 1 (mod 4) stays 1 (mod 4).
    """
    if n < 1:
        raise ValueError(f"expected positive n, got {n}")
    if n == 1:
        return False
    return any(p % 4 == 3 for p, _ in factorize(n).pairs)


def _warn_hypothesis(n: int) -> None:
    if has_divisor_3_mod_4(n):
        warnings.warn(
            f"n={n} has a divisor congruent to 3 mod 4; the witness construction"
            " is outside its stated hypothesis and may fail distinctness",
            HypothesisWarning,
            stacklevel=3,
        )


def _validate(n: int, w: Th3Params) -> None:
    if n < 1 or n % 2 == 0:
        raise HypothesisViolation(f"n must be odd and positive, got {n}")
    if w.delta < 1 or n % w.delta:
        raise HypothesisViolation(f"delta={w.delta} does not divide n={n}")
    if w.k < 1 or w.k % 2 == 0:
        raise HypothesisViolation(f"k must be an odd positive integer, got {w.k}")
    if w.m < 3 or w.m % 4 != 3:
        raise HypothesisViolation(f"m must be 3 (mod 4), got {w.m}")
    if w.a < 1 or w.a * w.m != w.delta + w.k:
        raise HypothesisViolation(f"a*m == delta+k fails for {w}")
    if w.t != (w.m + 1) // 4:
        raise HypothesisViolation(f"t == (m+1)/4 fails for {w}")
    if checked_mul(w.a * w.t, n) % w.k:
        raise HypothesisViolation(f"a*t*n is not divisible by k={w.k} for {w}")


def _construct(n: int, w: Th3Params, method: Method) -> UnitTriple:
    _validate(n, w)
    at = w.a * w.t
    atn = checked_mul(at, n)
    x1 = atn // w.k
    x2 = checked_mul(at, n // w.delta)
    x3 = checked_mul(w.t, n)
    return make_triple((x1, x2, x3), 4, n, method)


def theorem3_construct(n: int, params: Th3Params) -> UnitTriple:
    """Build and validate the triple (a*t*n/k, a*t*(n/delta), t*n) for 4/n.

    Violated witness requirements raise HypothesisViolation; a built triple
    with repeated parts raises ConstructionError (under the stated
    hypothesis that cannot happen, so seeing it would disprove the
    construction rather than the input).
    """
    _warn_hypothesis(n)
    return _construct(n, params, Method.THEOREM_3_SEARCH)


@lru_cache(maxsize=1 << 14)
def _m_candidates(s: int) -> tuple[int, ...]:
    """Divisors of s congruent to 3 mod 4, ascending."""
    return tuple(m for m in divisors(s) if m % 4 == 3)


def theorem3_search(
    n: int, k_bound: int = DEFAULT_K_BOUND
) -> tuple[UnitTriple, Th3Params] | None:
    """Bounded witness scan: delta ascending over divisors of n, then odd k
    up to k_bound, then m ascending over divisors of delta + k.

    Returns the first witness whose congruence holds and whose triple
    validates.  None means the bounded search is exhausted, not that no
    witness exists.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"theorem3_search needs odd n >= 3, got {n}")
    if k_bound < 1:
        raise ValueError(f"k_bound must be positive, got {k_bound}")
    _warn_hypothesis(n)
    for delta in divisors(n):
        for k in range(1, k_bound + 1, 2):
            for m in _m_candidates(delta + k):
                a = (delta + k) // m
                t = (m + 1) // 4
                if checked_mul(a * t, n) % k:
                    continue
                w = Th3Params(delta, k, m, a, t)
                try:
                    return _construct(n, w, Method.THEOREM_3_SEARCH), w
                except ConstructionError:
                    continue
    return None


def _theorem4_attempt(n: int, delta: int, d: int) -> tuple[UnitTriple, Th3Params] | None:
    ms = _m_candidates(delta + d)
    if not ms:
        return None
    w = Th3Params.from_divisor_k_m(delta, d, ms[0])
    return _construct(n, w, Method.THEOREM_4), w


def theorem4_construct(n: int, delta: int, d: int) -> tuple[UnitTriple, Th3Params] | None:
    """Witness with k = d for divisors delta, d of n.

    Uses the smallest divisor of delta + d congruent to 3 mod 4 (any one
    works, smallest keeps the parts minimal); returns None when there is
    none.  The congruence on a*t*n holds automatically because d | n.
    """
    if n < 1 or n % 2 == 0:
        raise HypothesisViolation(f"n must be odd and positive, got {n}")
    if delta < 1 or n % delta or d < 1 or n % d:
        raise HypothesisViolation(f"delta={delta} and d={d} must divide n={n}")
    _warn_hypothesis(n)
    return _theorem4_attempt(n, delta, d)


def theorem4_search(n: int) -> tuple[UnitTriple, Th3Params] | None:
    """First divisor pair (delta, d) of n, in ascending lexicographic order,
    whose sum admits a qualifying m and whose triple validates."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"theorem4_search needs odd n >= 3, got {n}")
    _warn_hypothesis(n)
    divs = divisors(n)
    for delta in divs:
        for d in divs:
            try:
                found = _theorem4_attempt(n, delta, d)
            except ConstructionError:
                continue
            if found is not None:
                return found
    return None
