"""Dense GF(2) linear algebra on word-packed bit rows.

Rows and vectors are Python ints used as bitsets (bit j = column j), which
gives word-parallel XOR for free.  Elimination is plain Gauss-Jordan with the
pivot chosen as the first set bit left to right, so reduced forms, solutions,
and nullspace bases are deterministic.  `Elimination` records the reducing
transform so one factorization can solve many right-hand sides.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import primes
from .errors import DimensionMismatchError, NotPrimeError


@dataclass(frozen=True)
class BitVector:
    """Fixed-length bit vector; bits beyond `length` are zero by construction."""

    length: int
    bits: int = 0

    def __post_init__(self) -> None:
        if self.length < 0:
            raise ValueError(f"negative length {self.length}")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside the declared length")

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> BitVector:
        acc = 0
        n = 0
        for v in values:
            if v & 1:
                acc |= 1 << n
            n += 1
        return cls(n, acc)

    @classmethod
    def from_support(cls, length: int, indices: Iterable[int]) -> BitVector:
        acc = 0
        for i in indices:
            acc |= 1 << i
        return cls(length, acc)

    def bit(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def weight(self) -> int:
        return self.bits.bit_count()

    def support(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.length) if (self.bits >> i) & 1)

    def to_bits(self) -> tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.length))

    def __xor__(self, other: BitVector) -> BitVector:
        if self.length != other.length:
            raise DimensionMismatchError("vector lengths differ")
        return BitVector(self.length, self.bits ^ other.bits)


class BitMatrix:
    """Row-major bit matrix; each row an int with bit j = column j."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[int] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("negative dimensions")
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self._rows = [0] * nrows
        else:
            if len(rows) != nrows:
                raise DimensionMismatchError(f"expected {nrows} rows, got {len(rows)}")
            for r in rows:
                if r < 0 or r >> ncols:
                    raise ValueError("row bits outside the declared width")
            self._rows = list(rows)

    @classmethod
    def identity(cls, n: int) -> BitMatrix:
        return cls(n, n, [1 << i for i in range(n)])

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> BitMatrix:
        if not rows:
            return cls(0, 0)
        ncols = rows[0].length
        return cls(len(rows), ncols, [r.bits for r in rows])

    def row(self, i: int) -> BitVector:
        return BitVector(self.ncols, self._rows[i])

    def row_ints(self) -> list[int]:
        return list(self._rows)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError((i, j))
        return (self._rows[i] >> j) & 1

    def copy(self) -> BitMatrix:
        return BitMatrix(self.nrows, self.ncols, self._rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self._rows) == (other.nrows, other.ncols, other._rows)

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"


def clock_matrix(p: int, row_indices: Sequence[int]) -> BitMatrix:
    """Matrix of p-clock parity columns: entry(row i, col t) = ((t + i) mod p) mod 2.

    Row for index i is the base parity pattern rotated right by i mod p.
    """
    if not primes.is_prime(p):
        raise NotPrimeError(f"{p} is not prime")
    mask = (1 << p) - 1
    base = sum(1 << j for j in range(1, p, 2))
    rows = []
    for i in row_indices:
        r = i % p
        rows.append(base if r == 0 else ((base >> r) | (base << (p - r))) & mask)
    return BitMatrix(len(rows), p, rows)


class Elimination:
    """Gauss-Jordan reduction of a matrix, with the row transform recorded.

    Solving a right-hand side b applies the recorded transform (one parity
    per row) and reads pivots off the reduced rows, so repeated solves
    against one matrix cost O(rows) popcounts each.
    """

    __slots__ = ("nrows", "ncols", "rows", "trans", "pivot_cols", "free_cols", "rank")

    def __init__(self, matrix: BitMatrix):
        self.nrows = matrix.nrows
        self.ncols = matrix.ncols
        rows = matrix.row_ints()
        trans = [1 << i for i in range(self.nrows)]
        pivot_cols: list[int] = []
        pivot_row = 0
        for col in range(self.ncols):
            if pivot_row == self.nrows:
                break
            mask = 1 << col
            found = -1
            for r in range(pivot_row, self.nrows):
                if rows[r] & mask:
                    found = r
                    break
            if found < 0:
                continue
            rows[pivot_row], rows[found] = rows[found], rows[pivot_row]
            trans[pivot_row], trans[found] = trans[found], trans[pivot_row]
            prow = rows[pivot_row]
            ptrans = trans[pivot_row]
            for r in range(self.nrows):
                if r != pivot_row and rows[r] & mask:
                    rows[r] ^= prow
                    trans[r] ^= ptrans
            pivot_cols.append(col)
            pivot_row += 1
        self.rows = rows
        self.trans = trans
        self.pivot_cols = pivot_cols
        self.rank = len(pivot_cols)
        pivots = set(pivot_cols)
        self.free_cols = [c for c in range(self.ncols) if c not in pivots]

    def solve(self, b: BitVector) -> BitVector | None:
        """One solution (free variables zero) of M x = b, or None if inconsistent."""
        if b.length != self.nrows:
            raise DimensionMismatchError(f"rhs length {b.length} != rows {self.nrows}")
        bb = b.bits
        x = 0
        for r in range(self.rank):
            if (self.trans[r] & bb).bit_count() & 1:
                x |= 1 << self.pivot_cols[r]
        for r in range(self.rank, self.nrows):
            if (self.trans[r] & bb).bit_count() & 1:
                return None
        return BitVector(self.ncols, x)

    def nullspace(self) -> list[BitVector]:
        """Basis of the nullspace, one vector per free column, ascending."""
        out = []
        for f in self.free_cols:
            fmask = 1 << f
            v = fmask
            for r in range(self.rank):
                if self.rows[r] & fmask:
                    v |= 1 << self.pivot_cols[r]
            out.append(BitVector(self.ncols, v))
        return out


@dataclass(frozen=True)
class SolveResult:
    solution: BitVector | None
    rank: int
    nullspace: tuple[BitVector, ...]


def mat_vec(matrix: BitMatrix, x: BitVector) -> BitVector:
    """Product M x over GF(2)."""
    if x.length != matrix.ncols:
        raise DimensionMismatchError(f"vector length {x.length} != cols {matrix.ncols}")
    acc = 0
    for i, row in enumerate(matrix.row_ints()):
        if (row & x.bits).bit_count() & 1:
            acc |= 1 << i
    return BitVector(matrix.nrows, acc)


def solve(matrix: BitMatrix, b: BitVector) -> SolveResult:
    """Solve M x = b; the returned solution is re-multiplied as a self-check."""
    elim = Elimination(matrix)
    x = elim.solve(b)
    if x is not None and mat_vec(matrix, x) != b:
        raise AssertionError("solver self-check failed: M x != b")
    return SolveResult(x, elim.rank, tuple(elim.nullspace()))


def rank(matrix: BitMatrix) -> int:
    """GF(2) rank via elimination."""
    return Elimination(matrix).rank
