"""Shared strategies and oracles for the test suite."""

from __future__ import annotations

import hypothesis.strategies as st

from primeclocks import ClockSum, PrimeClock

SMALL_PRIMES = (2, 3, 5, 7)

ALL_SMALL_CLOCKS = tuple(PrimeClock(p, t) for p in SMALL_PRIMES for t in range(p))


def clocks_st():
    return st.sampled_from(ALL_SMALL_CLOCKS)


def clock_sums_st(modulus: int = 2, max_size: int = 6):
    return st.lists(clocks_st(), max_size=max_size).map(
        lambda cs: ClockSum(tuple(cs), modulus)
    )


def trial_division_is_prime(x: int) -> bool:
    """Independent primality oracle: plain trial division."""
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True
