import random

import pytest

from conftest import trial_division_is_prime
from primeclocks import primes
from primeclocks.errors import NotPrimeError, SearchRangeError
from primeclocks.primes import PrimeClass, classify, is_prime, next_prime_greater


def sieve(limit: int) -> list[bool]:
    flags = [True] * limit
    flags[0] = flags[1] = False
    for p in range(2, int(limit**0.5) + 1):
        if flags[p]:
            flags[p * p :: p] = [False] * len(flags[p * p :: p])
    return flags


def test_is_prime_examples():
    assert is_prime(4051)
    assert not is_prime(1)
    assert is_prime(2**20 + 7)  # == 1048583, checked by trial division


def test_is_prime_small_range_against_trial_division():
    for x in range(10_000):
        assert is_prime(x) == trial_division_is_prime(x), x


def test_is_prime_exhaustive_below_one_million():
    flags = sieve(1_000_000)
    for x in range(1_000_000):
        assert is_prime(x) == flags[x], x


def test_is_prime_random_against_trial_division():
    rng = random.Random(1)
    for _ in range(2_000):
        x = rng.randrange(1_000_000)
        assert is_prime(x) == trial_division_is_prime(x), x


def test_classify_examples():
    assert classify(7) is PrimeClass.THREE_MOD_4
    assert classify(5) is PrimeClass.ONE_MOD_4
    assert classify(2) is PrimeClass.TWO


def test_classify_rejects_composites():
    with pytest.raises(NotPrimeError):
        classify(6)
    with pytest.raises(NotPrimeError):
        classify(1)


def test_classify_partitions_odd_primes():
    flags = sieve(100_000)
    for p in range(3, 100_000, 2):
        if not flags[p]:
            continue
        cls = classify(p)
        assert cls in (PrimeClass.ONE_MOD_4, PrimeClass.THREE_MOD_4)
        assert (cls is PrimeClass.ONE_MOD_4) == (p % 4 == 1)
        assert (cls is PrimeClass.THREE_MOD_4) == (p % 4 == 3)


def test_next_prime_greater_examples():
    assert next_prime_greater(4) == 5
    assert next_prime_greater(4, PrimeClass.THREE_MOD_4) == 7
    assert next_prime_greater(2**20) == 1048583  # trial-division scan oracle


def test_next_prime_greater_random_against_sieve():
    flags = sieve(1_100_000)
    rng = random.Random(2)
    for _ in range(10_000):
        x = rng.randrange(1, 1_000_000)
        p = next_prime_greater(x)
        assert p > x and flags[p]
        assert not any(flags[y] for y in range(x + 1, p))


def test_next_prime_greater_class_filter():
    flags = sieve(10_000)
    rng = random.Random(3)
    for _ in range(200):
        x = rng.randrange(1, 9_000)
        p1 = next_prime_greater(x, PrimeClass.ONE_MOD_4)
        p3 = next_prime_greater(x, PrimeClass.THREE_MOD_4)
        assert flags[p1] and p1 % 4 == 1
        assert flags[p3] and p3 % 4 == 3
        assert not any(flags[y] and y % 4 == 1 for y in range(x + 1, p1))
        assert not any(flags[y] and y % 4 == 3 for y in range(x + 1, p3))


def test_next_prime_greater_two_filter():
    assert next_prime_greater(1, PrimeClass.TWO) == 2
    with pytest.raises(SearchRangeError):
        next_prime_greater(2, PrimeClass.TWO)


def test_next_prime_greater_range_errors():
    with pytest.raises(ValueError):
        next_prime_greater(0)
    with pytest.raises(SearchRangeError):
        next_prime_greater(primes.MAX_SEARCH)
