"""Named verification suites behind the `verify` CLI command.

Each check re-derives a known identity from scratch (bundled reference
vectors, mask-based brute force, exhaustive subset walks) and compares it
against the public API, so a PASS here is an end-to-end statement about the
package, not about the test helper.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from itertools import combinations

from . import core, evaluator, gf2, reference_data
from .core import ClockSum, PrimeClock
from .primes import PrimeClass, classify, is_prime

SUITES = ("paper-tables", "group-laws", "lemmas", "all")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, ok, "" if ok else detail)


def reference_table_checks() -> list[CheckResult]:
    """Reproduce every bundled reference column, the 16 two-variable
    functions, the 2-bit multiplier, and the gate-circuit cross-check."""
    results = []
    for table in reference_data.REFERENCE_TABLES:
        for col in table.columns:
            s = core.parse_sum(col.sum_text, table.modulus)
            if col.projected:
                got = tuple(core.sum_eval(s, m) for m in range(len(col.values)))
            else:
                clock = s.clocks[0]
                got = tuple(core.clock_eval(clock, m) for m in range(len(col.values)))
            results.append(
                _check(f"{table.key}:{col.sum_text}", got == col.values, f"got {got}")
            )

    for name, bits, sum_text in reference_data.TWO_VAR_CATALOG:
        s = core.parse_sum(sum_text)
        got = evaluator.truth_table_of(s, 2).bits
        results.append(_check(f"two-var:{name}", got == bits, f"got {got} want {bits}"))

    mult_tables = [
        evaluator.truth_table_of(core.parse_sum(text), 4)
        for _, text in reference_data.MULTIPLIER_SUMS
    ]
    for j, (name, _) in enumerate(reference_data.MULTIPLIER_SUMS):
        got = "".join(reference_data.MULTIPLIER_TABLE[i][j] for i in range(16))
        results.append(
            _check(f"multiplier:{name}", mult_tables[j].bits == got, f"got {mult_tables[j].bits}")
        )
    arithmetic_ok = all(
        reference_data.MULTIPLIER_TABLE[i] == format((i >> 2) * (i & 3), "04b")
        for i in range(16)
    )
    results.append(_check("multiplier:against-arithmetic", arithmetic_ok))

    circuit = core.parse_sum("[7,3]+[13,6]")
    agree = all(
        evaluator.gate_circuit_reference(x0, x1, x2, x3)
        == evaluator.clock_sum_bit(circuit, x0 + 2 * x1 + 4 * x2 + 8 * x3)
        for x0 in (0, 1)
        for x1 in (0, 1)
        for x2 in (0, 1)
        for x3 in (0, 1)
    )
    results.append(_check("gate-circuit-cross-check", agree))
    return results


def _window_values(clocks: tuple[PrimeClock, ...], indices: range) -> tuple[int, ...]:
    return tuple(core.sum_eval(ClockSum(clocks, 2), i) for i in indices)


def subset_window_count(p: int) -> int:
    """Distinct value strings over indices 1..p across all 2**p clock subsets."""
    masks = []
    for t in range(p):
        m = 0
        for i in range(1, p + 1):
            if ((t + i) % p) & 1:
                m |= 1 << (i - 1)
        masks.append(m)
    seen = {0}
    current = 0
    gray = 0
    for k in range(1, 1 << p):
        g = k ^ (k >> 1)
        current ^= masks[(gray ^ g).bit_length() - 1]
        gray = g
        seen.add(current)
    return len(seen)


def half_subset_window_count(p: int) -> int:
    """Distinct strings over indices 1..p-1 from subsets of size <= (p-1)/2 plus zero."""
    seen = {(0,) * (p - 1)}
    for size in range(1, (p - 1) // 2 + 1):
        for offsets in combinations(range(p), size):
            clocks = tuple(PrimeClock(p, t) for t in offsets)
            seen.add(_window_values(clocks, range(1, p)))
    return len(seen)


def group_law_checks(samples: int = 20, seed: int = 0) -> list[CheckResult]:
    """Isomorphism cardinalities, matrix rank identities, and sampled group laws."""
    results = []
    for p in (3, 7, 11):
        got = subset_window_count(p)
        results.append(_check(f"distinct-subset-strings:p={p}", got == 1 << p, f"got {got}"))
    for p in (5, 13):
        got = half_subset_window_count(p)
        results.append(
            _check(f"distinct-half-subset-strings:p={p}", got == 1 << (p - 1), f"got {got}")
        )

    for p in (7, 11, 19):
        got = gf2.rank(gf2.clock_matrix(p, range(1, p + 1)))
        results.append(_check(f"full-rank:p={p}", got == p, f"got {got}"))
    for p in (5, 13, 17):
        got = gf2.rank(gf2.clock_matrix(p, range(1, p)))
        results.append(_check(f"rank-p-minus-1:p={p}", got == p - 1, f"got {got}"))

    rng = random.Random(seed)

    def random_sum(modulus: int) -> ClockSum:
        pairs = []
        for _ in range(rng.randint(0, 5)):
            p = rng.choice((2, 3, 5, 7))
            pairs.append((p, rng.randrange(p)))
        return core.clock_sum(pairs, modulus)

    laws_ok = True
    for modulus in (2, 3, 5):
        for _ in range(samples):
            a, b, c = (random_sum(modulus) for _ in range(3))
            ab, ba = core.add(a, b), core.add(b, a)
            assoc_l = core.add(ab, c)
            assoc_r = core.add(a, core.add(b, c))
            with_identity = core.add(a, ClockSum((), modulus))
            for m in range(core.lcm_horizon(a, b, c)):
                pointwise = (core.sum_eval(a, m) + core.sum_eval(b, m)) % modulus
                if core.sum_eval(ab, m) != pointwise:
                    laws_ok = False
                if core.sum_eval(ab, m) != core.sum_eval(ba, m):
                    laws_ok = False
                if core.sum_eval(assoc_l, m) != core.sum_eval(assoc_r, m):
                    laws_ok = False
                if core.sum_eval(with_identity, m) != core.sum_eval(a, m):
                    laws_ok = False
    results.append(_check("group-laws-sampled", laws_ok))

    self_inverse_ok = True
    for _ in range(samples):
        s = random_sum(2)
        doubled = core.add(s, core.inverse(s))
        if any(core.sum_eval(doubled, m) for m in range(core.lcm_horizon(s))):
            self_inverse_ok = False
    results.append(_check("self-inverse-mod2-sampled", self_inverse_ok))
    return results


def _mask_min_period(bits: int, window: int, divisors: list[int]) -> int:
    """Smallest divisor d with bit m == bit m+d for all m in [0, window)."""
    full = (1 << window) - 1
    for d in divisors:
        if ((bits ^ (bits >> d)) & full) == 0:
            return d
    raise AssertionError("no divisor matched the window")


def _window_min_shift(bits: int, span: int, limit: int) -> int | None:
    """Smallest d in 1..limit with bit m == bit m+d for all m in [0, span-d)."""
    for d in range(1, limit + 1):
        if ((bits ^ (bits >> d)) & ((1 << (span - d)) - 1)) == 0:
            return d
    return None


def length_lemma_check(p: int) -> bool:
    """Every subset of 1..p-1 of the p clocks has period p, the full wheel 1.

    Brute force scans every shift on a [0, 2p) window (long enough to be
    conclusive for p-periodic sequences); the package period op must agree.
    """
    span = 2 * p
    masks = []
    for t in range(p):
        m = 0
        r = t
        for i in range(span):
            if r & 1:
                m |= 1 << i
            r = r + 1 if r + 1 < p else 0
        masks.append(m)
    clock_objs = [PrimeClock(p, t) for t in range(p)]
    current = 0
    gray = 0
    for k in range(1, 1 << p):
        g = k ^ (k >> 1)
        current ^= masks[(gray ^ g).bit_length() - 1]
        gray = g
        size = g.bit_count()
        expected = 1 if size == p else p
        if _window_min_shift(current, span, p) != expected:
            return False
        s = ClockSum(tuple(c for j, c in enumerate(clock_objs) if (g >> j) & 1), 2)
        if core.period(s) != expected:
            return False
    return True


def period_formula_vs_bruteforce(prime_set: tuple[int, ...] = (2, 3, 5, 7)) -> int:
    """Mismatch count between the package period and mask brute force over
    every subset of all clocks of the given primes."""
    clocks = [(p, t) for p in prime_set for t in range(p)]
    objs = [PrimeClock(p, t) for p, t in clocks]
    lcm = math.lcm(*prime_set)
    span = 2 * lcm
    masks = []
    for p, t in clocks:
        m = 0
        r = t
        for i in range(span):
            if r & 1:
                m |= 1 << i
            r = r + 1 if r + 1 < p else 0
        masks.append(m)
    divisors = sorted(math.prod(sub) for r in range(len(prime_set) + 1) for sub in combinations(prime_set, r))
    mismatches = 0
    current = 0
    gray = 0
    for k in range(1 << len(clocks)):
        if k:
            g = k ^ (k >> 1)
            current ^= masks[(gray ^ g).bit_length() - 1]
            gray = g
        brute = _mask_min_period(current, lcm, divisors)
        s = ClockSum(tuple(c for j, c in enumerate(objs) if (gray >> j) & 1), 2)
        if core.period(s) != brute:
            mismatches += 1
    return mismatches


def full_wheel_check(max_prime: int = 199) -> bool:
    """Sum of all p clocks is constant 1 (3 mod 4) or 0 (1 mod 4) on [0, 2p)."""
    two_wheel = core.clock_sum([(2, 0), (2, 1)])
    if any(core.sum_eval(two_wheel, m) != 1 for m in range(4)):
        return False
    for p in range(3, max_prime + 1, 2):
        if not is_prime(p):
            continue
        wheel = core.clock_sum([(p, t) for t in range(p)])
        want = 1 if classify(p) is PrimeClass.THREE_MOD_4 else 0
        if any(core.sum_eval(wheel, m) != want for m in range(2 * p)):
            return False
    return True


def lemma_checks(max_prime: int = 199) -> list[CheckResult]:
    """Exhaustive period lemma, full-wheel constants, and the subset period oracle."""
    results = []
    for p in (3, 5, 7, 11, 13):
        if p > max_prime:
            continue
        results.append(_check(f"length-lemma:p={p}", length_lemma_check(p)))
    results.append(_check(f"full-wheel-parity:p<={max_prime}", full_wheel_check(max_prime)))
    mismatches = period_formula_vs_bruteforce()
    results.append(
        _check("period-oracle:primes-2-3-5-7", mismatches == 0, f"{mismatches} mismatches")
    )
    return results


def run_suite(suite: str, max_prime: int | None = None) -> list[CheckResult]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    results = []
    if suite in ("paper-tables", "all"):
        results.extend(reference_table_checks())
    if suite in ("group-laws", "all"):
        results.extend(group_law_checks())
    if suite in ("lemmas", "all"):
        results.extend(lemma_checks(max_prime if max_prime is not None else 199))
    return results
