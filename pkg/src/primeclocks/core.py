"""Prime clocks and clock sums: evaluation, reduction, periods, equality.

A clock pairs a prime modulus p with a starting offset t and denotes the
sequence m -> (m + t) mod p.  A clock sum combines finitely many clocks and
projects the integer total into Z_n for a fixed modulus n >= 2; the empty sum
is the constant 0.  All values here are immutable and all operations pure, so
everything is safe to share between threads and to evaluate in any partition
order.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from . import primes
from .errors import (
    InvalidClockError,
    ModulusMismatchError,
    NotPrimeError,
    ParseError,
    PeriodGuardError,
    UnsupportedModulusError,
)

#: Cap on the lcm horizon brute-forced by `period` and walked by `equal`.
DEFAULT_PERIOD_GUARD = 10**7


@dataclass(frozen=True, order=True)
class PrimeClock:
    """A clock [p, t]: prime modulus p, starting offset 0 <= t < p."""

    p: int
    t: int

    def __post_init__(self) -> None:
        if not primes.is_prime(self.p):
            raise NotPrimeError(f"clock modulus {self.p} is not prime")
        if not 0 <= self.t < self.p:
            raise InvalidClockError(f"offset {self.t} outside [0, {self.p}) for [{self.p},{self.t}]")

    def __call__(self, m: int) -> int:
        return (m + self.t) % self.p

    def __str__(self) -> str:
        return f"[{self.p},{self.t}]"


@dataclass(frozen=True)
class ClockSum:
    """An ordered sequence of clocks projected into Z_modulus.

    Structural equality is by sequence and modulus; use `equal` for the
    functional (pointwise) notion.
    """

    clocks: tuple[PrimeClock, ...] = field(default=())
    modulus: int = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "clocks", tuple(self.clocks))
        if self.modulus < 2:
            raise InvalidClockError(f"modulus must be >= 2, got {self.modulus}")
        for c in self.clocks:
            if not isinstance(c, PrimeClock):
                raise InvalidClockError(f"not a prime clock: {c!r}")

    def __call__(self, m: int) -> int:
        return sum_eval(self, m)

    def __len__(self) -> int:
        return len(self.clocks)

    def __str__(self) -> str:
        return format_sum(self)


def clock_sum(pairs: Iterable[tuple[int, int]], modulus: int = 2) -> ClockSum:
    """Build a ClockSum from (p, t) pairs."""
    return ClockSum(tuple(PrimeClock(p, t) for p, t in pairs), modulus)


def clock_eval(clock: PrimeClock, m: int) -> int:
    """Raw clock value (m + t) mod p."""
    return (m + clock.t) % clock.p


def sum_eval(s: ClockSum, m: int) -> int:
    """Value of the sum at m: the integer total of all residues, mod modulus."""
    return sum((m + c.t) % c.p for c in s.clocks) % s.modulus


def add(a: ClockSum, b: ClockSum) -> ClockSum:
    """Concatenate two sums over the same modulus (pointwise addition in Z_n)."""
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"moduli differ: {a.modulus} vs {b.modulus}")
    return ClockSum(a.clocks + b.clocks, a.modulus)


def reduce_sum(s: ClockSum) -> ClockSum:
    """Canonical non-repeating form: sort by (p, t) and cancel duplicate pairs.

    Pair cancellation relies on [p,t] + [p,t] vanishing pointwise, which holds
    only with modulus 2; other moduli are rejected.
    """
    if s.modulus != 2:
        raise UnsupportedModulusError("reduction is only defined for modulus 2")
    counts = Counter(s.clocks)
    kept = tuple(c for c in sorted(counts) if counts[c] % 2)
    return ClockSum(kept, 2)


def distinct_primes(*sums: ClockSum) -> tuple[int, ...]:
    """Sorted distinct clock moduli appearing in the given sums."""
    return tuple(sorted({c.p for s in sums for c in s.clocks}))


def lcm_horizon(*sums: ClockSum) -> int:
    """lcm of the distinct primes in the given sums (1 when all are empty).

    Every sum repeats with this period, so it bounds every pointwise check.
    """
    ps = distinct_primes(*sums)
    return math.lcm(*ps) if ps else 1


def period(s: ClockSum, guard: int = DEFAULT_PERIOD_GUARD) -> int:
    """Exact minimal period of the sum.

    Modulus 2 uses the closed form: after reduction, each prime's clock group
    contributes p unless the group is the full wheel of all p offsets (which
    is constant and contributes 1).  Other moduli brute-force the smallest
    divisor of the prime lcm, guarded by `guard` evaluations.
    """
    if s.modulus == 2:
        counts = Counter(c.p for c in reduce_sum(s).clocks)
        result = 1
        for p, length in counts.items():
            if length < p:
                result *= p
        return result

    ps = distinct_primes(s)
    horizon = math.lcm(*ps) if ps else 1
    if horizon > guard:
        raise PeriodGuardError(f"lcm {horizon} exceeds guard {guard}")
    values = [sum_eval(s, m) for m in range(2 * horizon)]
    for d in _divisors_of_squarefree(ps):
        if all(values[m] == values[m + d] for m in range(horizon)):
            return d
    raise AssertionError("period must divide the lcm of the clock primes")


def _divisors_of_squarefree(ps: Sequence[int]) -> list[int]:
    """All divisors of the product of distinct primes, ascending."""
    divs = []
    for r in range(len(ps) + 1):
        for sub in combinations(ps, r):
            divs.append(math.prod(sub))
    return sorted(divs)


def equal(a: ClockSum, b: ClockSum, guard: int = DEFAULT_PERIOD_GUARD) -> bool:
    """Pointwise equality, decided over one full lcm of all primes involved.

    The horizon is exact (no early exit): both sums repeat with the combined
    lcm, so agreement on [0, lcm) is agreement everywhere.
    """
    if a.modulus != b.modulus:
        raise ModulusMismatchError(f"moduli differ: {a.modulus} vs {b.modulus}")
    horizon = lcm_horizon(a, b)
    if horizon > guard:
        raise PeriodGuardError(f"lcm {horizon} exceeds guard {guard}")
    return all(sum_eval(a, m) == sum_eval(b, m) for m in range(horizon))


def inverse(s: ClockSum) -> ClockSum:
    """Group inverse.  With modulus 2 every sum is its own inverse."""
    if s.modulus != 2:
        raise UnsupportedModulusError("inverse is only provided for modulus 2")
    return s


_TOKEN = re.compile(r"\s*(\[|\]|,|\+|\d+)")


def parse_sum(text: str, modulus: int = 2) -> ClockSum:
    """Parse clock-sum text: '0' for the empty sum, else terms like [7,3]+[13,6].

    Whitespace between tokens is ignored.  Primes and offset ranges are
    validated; errors name the offending token.
    """
    tokens: list[str] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:].strip()
            if not rest:
                break
            raise ParseError(f"unexpected character {rest[0]!r} in clock sum")
        tokens.append(m.group(1))
        pos = m.end()
    if not tokens:
        raise ParseError("empty clock-sum text")
    if tokens == ["0"]:
        return ClockSum((), modulus)

    def expect(i: int, want: str) -> None:
        if i >= len(tokens):
            raise ParseError(f"clock sum ended early, expected {want!r}")
        if tokens[i] != want and not (want == "int" and tokens[i].isdigit()):
            raise ParseError(f"expected {want!r} but found {tokens[i]!r}")

    clocks = []
    i = 0
    while True:
        expect(i, "[")
        expect(i + 1, "int")
        expect(i + 2, ",")
        expect(i + 3, "int")
        expect(i + 4, "]")
        p, t = int(tokens[i + 1]), int(tokens[i + 3])
        try:
            clocks.append(PrimeClock(p, t))
        except (NotPrimeError, InvalidClockError) as exc:
            raise ParseError(f"invalid clock [{p},{t}]: {exc}") from exc
        i += 5
        if i == len(tokens):
            return ClockSum(tuple(clocks), modulus)
        expect(i, "+")
        i += 1


def format_sum(s: ClockSum) -> str:
    """Canonical text: terms sorted by (p, t), '+'-joined, '0' when empty."""
    if not s.clocks:
        return "0"
    return "+".join(f"[{c.p},{c.t}]" for c in sorted(s.clocks))
