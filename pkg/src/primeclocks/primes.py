"""Primality testing, prime search, and residue-class classification.

Primality is decided by trial division against a small prime table followed
by deterministic Miller-Rabin.  The witness set used is known to be exact for
every input below 3.3e24, which comfortably covers the supported search range.
"""

from __future__ import annotations

from enum import Enum
from functools import lru_cache

from .errors import NotPrimeError, SearchRangeError

#: Largest value `next_prime_greater` will search up to.
MAX_SEARCH = 2**63 - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

# Deterministic Miller-Rabin witnesses, exact for n < 3_317_044_064_679_887_385_961_981.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class PrimeClass(Enum):
    """Residue class of a prime: 2, or odd with (p-1)/2 even (1 mod 4) / odd (3 mod 4)."""

    TWO = "two"
    ONE_MOD_4 = "1mod4"
    THREE_MOD_4 = "3mod4"


@lru_cache(maxsize=65536)
def is_prime(x: int) -> bool:
    """Return True iff x is prime (deterministic for the whole supported range)."""
    if x < 2:
        return False
    for p in _SMALL_PRIMES:
        if x == p:
            return True
        if x % p == 0:
            return False
    d = x - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        y = pow(a, d, x)
        if y == 1 or y == x - 1:
            continue
        for _ in range(s - 1):
            y = y * y % x
            if y == x - 1:
                break
        else:
            return False
    return True


def classify(p: int) -> PrimeClass:
    """Classify a prime as TWO, ONE_MOD_4, or THREE_MOD_4.

    Raises NotPrimeError for non-primes.
    """
    if not is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    if p == 2:
        return PrimeClass.TWO
    return PrimeClass.THREE_MOD_4 if ((p - 1) // 2) % 2 else PrimeClass.ONE_MOD_4


def next_prime_greater(x: int, class_filter: PrimeClass | None = None) -> int:
    """Smallest prime strictly greater than x, optionally restricted to a class.

    Raises SearchRangeError if the search would pass MAX_SEARCH, or if the
    filter can never match (PrimeClass.TWO with x >= 2).
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if class_filter is PrimeClass.TWO:
        if x < 2:
            return 2
        raise SearchRangeError("no prime equal to 2 exists above 1")
    candidate = x + 1
    if candidate <= 2:
        candidate = 2
    while True:
        if candidate > MAX_SEARCH:
            raise SearchRangeError(f"prime search passed the supported bound {MAX_SEARCH}")
        if is_prime(candidate) and (class_filter is None or classify(candidate) is class_filter):
            return candidate
        candidate += 1 if candidate == 2 else 2 if candidate % 2 else 1
