"""Synthesis of modulus-2 clock sums that compute a given truth table.

Single-prime synthesis picks one prime p greater than the table length and
inverts the evaluation map of p-clock subsets by GF(2) solving.  The two
residue classes of p need different systems:

* 3 mod 4 primes: subsets of the p clocks hit every bit pattern on indices
  1..p exactly once, so the p x p system over those rows (with index 0 folded
  onto index p by periodicity) has a unique solution.
* 1 mod 4 primes: the value at 0 cannot be prescribed directly because every
  p-clock sum has even bit-parity over a full period.  The system uses rows
  1..p-1, the unconstrained pad bit at the last row is chosen so that parity
  forces the required value at 0, and the solution is normalized to the
  representative with at most (p-1)/2 clocks (its complement computes the
  same function).

Basis synthesis solves against the truncated columns of several primes at
once and can search the solution coset for a smaller clock count.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from . import evaluator, gf2, primes
from .core import ClockSum, PrimeClock
from .errors import NotPrimeError, PrimeTooSmallError, UnsolvableError
from .primes import PrimeClass
from .truthtable import TruthTable, truth_table_to_index

__all__ = [
    "SynthesisMethod",
    "SynthesisReport",
    "TruthTable",
    "basis_rank",
    "synthesize_over_basis",
    "synthesize_single_prime",
    "truth_table_to_index",
]

#: Cap on the total clock count (sum of primes) of a synthesis basis.
MAX_BASIS_CLOCKS = 1 << 16

#: Default number of coset candidates examined when minimizing.
DEFAULT_BUDGET = 1 << 16


class SynthesisMethod(Enum):
    SINGLE_PRIME = "single"
    BASIS = "basis"


@dataclass(frozen=True)
class SynthesisReport:
    """A synthesized sum plus provenance of how it was found."""

    sum: ClockSum
    method: SynthesisMethod
    prime_used: int | None
    primes_used: tuple[int, ...] | None
    minimized: bool
    clock_count: int


def _check_round_trip(result: ClockSum, table: TruthTable) -> None:
    got = evaluator.truth_table_of(result, table.arity)
    if got.bits != table.bits:
        raise UnsolvableError("synthesized sum does not reproduce the table (internal bug)")


@lru_cache(maxsize=64)
def _single_prime_system(p: int) -> tuple[gf2.Elimination, PrimeClass]:
    cls = primes.classify(p)
    rows = range(1, p + 1) if cls is PrimeClass.THREE_MOD_4 else range(1, p)
    return gf2.Elimination(gf2.clock_matrix(p, rows)), cls


def synthesize_single_prime(
    table: TruthTable,
    prime: int | None = None,
    force_three_mod_four: bool = False,
) -> SynthesisReport:
    """Find a sum of p-clocks for one prime p > 2**arity that computes `table`.

    With no prime given, the smallest prime above the table length is used
    (restricted to 3 mod 4 primes when `force_three_mod_four`).  The result is
    unique for 3 mod 4 primes and the shorter of the two complementary
    solutions for 1 mod 4 primes; the round trip is verified before returning.
    """
    size = 1 << table.arity
    if prime is None:
        wanted = PrimeClass.THREE_MOD_4 if force_three_mod_four else None
        prime = primes.next_prime_greater(size, wanted)
    else:
        if not primes.is_prime(prime):
            raise NotPrimeError(f"{prime} is not prime")
        if prime <= size:
            raise PrimeTooSmallError(f"prime {prime} must exceed table length {size}")
        if force_three_mod_four and primes.classify(prime) is not PrimeClass.THREE_MOD_4:
            raise ValueError(f"{prime} is not a 3 mod 4 prime")

    system, cls = _single_prime_system(prime)
    if cls is PrimeClass.THREE_MOD_4:
        # Rows are indices 1..p; index 0 is pinned through row p (period p).
        rhs = 0
        for i in range(1, size):
            if table.bit(i):
                rhs |= 1 << (i - 1)
        if table.bit(0):
            rhs |= 1 << (prime - 1)
        b = gf2.BitVector(prime, rhs)
    else:
        # Rows are indices 1..p-1; the last pad bit fixes the parity so that
        # the even full-period parity of every p-clock sum forces bit 0.
        rhs = 0
        for i in range(1, size):
            if table.bit(i):
                rhs |= 1 << (i - 1)
        if rhs.bit_count() & 1 != table.bit(0):
            rhs |= 1 << (prime - 2)
        b = gf2.BitVector(prime - 1, rhs)

    x = system.solve(b)
    if x is None:
        raise UnsolvableError(f"no {prime}-clock solution found (internal bug)")
    bits = x.bits
    if cls is PrimeClass.ONE_MOD_4 and bits.bit_count() > (prime - 1) // 2:
        bits ^= (1 << prime) - 1  # complement set computes the same function

    result = ClockSum(
        tuple(PrimeClock(prime, t) for t in range(prime) if (bits >> t) & 1), 2
    )
    _check_round_trip(result, table)
    return SynthesisReport(
        sum=result,
        method=SynthesisMethod.SINGLE_PRIME,
        prime_used=prime,
        primes_used=None,
        minimized=False,
        clock_count=len(result),
    )


def _basis_matrix(prime_list: tuple[int, ...], nrows: int) -> tuple[gf2.BitMatrix, list[tuple[int, int]]]:
    columns: list[tuple[int, int]] = [(q, t) for q in prime_list for t in range(q)]
    rows = []
    for i in range(nrows):
        acc = 0
        for j, (q, t) in enumerate(columns):
            if ((t + i) % q) & 1:
                acc |= 1 << j
        rows.append(acc)
    return gf2.BitMatrix(nrows, len(columns), rows), columns


def basis_rank(prime_list: list[int] | tuple[int, ...], arity: int) -> int:
    """Rank of the truncated clock-column matrix over the first 2**arity rows.

    Rank 2**arity means every truth table of this arity is representable over
    the basis; below that, `synthesize_over_basis` can report unsolvable.
    """
    matrix, _ = _basis_matrix(tuple(prime_list), 1 << arity)
    return gf2.rank(matrix)


def synthesize_over_basis(
    table: TruthTable,
    prime_list: list[int] | tuple[int, ...],
    minimize: bool = False,
    budget: int = DEFAULT_BUDGET,
) -> SynthesisReport | None:
    """Find a sum over clocks of the given primes computing `table`, or None.

    Unlike the single-prime route the system may be unsolvable; None means the
    basis does not span this table.  With `minimize`, up to `budget` members
    of the solution coset are examined and the smallest clock count wins;
    `minimized` is flagged only when the whole coset was enumerated.
    """
    plist = tuple(prime_list)
    if not plist:
        raise ValueError("at least one prime required")
    for q in plist:
        if not primes.is_prime(q):
            raise NotPrimeError(f"{q} is not prime")
    if len(set(plist)) != len(plist):
        raise ValueError("primes must be distinct")
    if sum(plist) > MAX_BASIS_CLOCKS:
        raise ValueError(f"basis clock count {sum(plist)} exceeds cap {MAX_BASIS_CLOCKS}")

    size = 1 << table.arity
    matrix, columns = _basis_matrix(plist, size)
    system = gf2.Elimination(matrix)
    b = gf2.BitVector(size, sum(1 << i for i in range(size) if table.bit(i)))
    x = system.solve(b)
    if x is None:
        return None

    best = x.bits
    fully_enumerated = False
    if minimize:
        basis = [v.bits for v in system.nullspace()]
        dim = len(basis)
        if dim < 63 and (1 << dim) <= budget:
            count = 1 << dim
            fully_enumerated = True
        else:
            count = budget
        # Gray-code walk: consecutive candidates differ by one basis vector.
        current = x.bits
        best_weight = current.bit_count()
        gray = 0
        for k in range(1, count):
            g = k ^ (k >> 1)
            flipped = (gray ^ g).bit_length() - 1
            gray = g
            current ^= basis[flipped]
            w = current.bit_count()
            if w < best_weight:
                best_weight = w
                best = current

    clocks = sorted(columns[j] for j in range(len(columns)) if (best >> j) & 1)
    result = ClockSum(tuple(PrimeClock(q, t) for q, t in clocks), 2)
    _check_round_trip(result, table)
    return SynthesisReport(
        sum=result,
        method=SynthesisMethod.BASIS,
        prime_used=None,
        primes_used=plist,
        minimized=minimize and fully_enumerated,
        clock_count=len(result),
    )
