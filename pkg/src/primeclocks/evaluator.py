"""Per-index bit evaluation of modulus-2 clock sums and truth-table extraction.

The serial path mirrors the defining recipe exactly: one residue per clock,
then the parity of their integer total.  The parallel path computes the same
bit under a no-ordering contract: per-clock values are produced independently
and combined by an associative, commutative reduction, either XOR of per-clock
parity bits (default) or a residue total whose low bit is taken.  Table
extraction partitions the index range into contiguous chunks reassembled by
position, so results are bit-identical for any worker count.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from functools import reduce
from operator import xor

from .core import ClockSum
from .errors import UnsupportedModulusError
from .truthtable import TruthTable

VARIANTS = ("xor", "residue")


def _require_mod2(s: ClockSum) -> None:
    if s.modulus != 2:
        raise UnsupportedModulusError("bit evaluation requires modulus 2")


def clock_sum_bit(s: ClockSum, i: int) -> int:
    """Serial evaluation: residues r_k = (t_k + i) mod q_k, then (sum r_k) mod 2."""
    _require_mod2(s)
    return sum((i + c.t) % c.p for c in s.clocks) % 2


def clock_sum_bit_parallel(s: ClockSum, i: int, variant: str = "xor") -> int:
    """Order-independent evaluation, bit-identical to `clock_sum_bit`.

    'xor' reduces per-clock parity bits by exclusive-or; 'residue' reduces the
    independent residues by addition and takes the low bit.
    """
    _require_mod2(s)
    if variant == "xor":
        return reduce(xor, (((i + c.t) % c.p) & 1 for c in s.clocks), 0)
    if variant == "residue":
        return sum((i + c.t) % c.p for c in s.clocks) & 1
    raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")


def _chunk_bits(s: ClockSum, lo: int, hi: int, variant: str) -> str:
    """Bits of the sum on [lo, hi) as a '0'/'1' string.

    Each clock walks the chunk with a rolling residue; no state is shared
    between chunks, so any partition of the index range composes exactly.
    """
    width = hi - lo
    if variant == "xor":
        acc = bytearray(width)
        for c in s.clocks:
            q = c.p
            r = (lo + c.t) % q
            for k in range(width):
                acc[k] ^= r & 1
                r += 1
                if r == q:
                    r = 0
    else:
        totals = [0] * width
        for c in s.clocks:
            q = c.p
            r = (lo + c.t) % q
            for k in range(width):
                totals[k] += r
                r += 1
                if r == q:
                    r = 0
        acc = bytearray(v & 1 for v in totals)
    return bytes(b + 48 for b in acc).decode("ascii")


def truth_table_of(s: ClockSum, arity: int, workers: int = 1, variant: str = "xor") -> TruthTable:
    """First 2**arity bits of the sum as a TruthTable.

    `workers` only partitions the work; the result is identical for every
    worker count and for both reduction variants.
    """
    _require_mod2(s)
    if arity < 1:
        raise ValueError(f"arity must be >= 1, got {arity}")
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    size = 1 << arity
    workers = max(1, min(workers, size))
    if workers == 1:
        return TruthTable(arity, _chunk_bits(s, 0, size, variant))
    step = -(-size // workers)
    bounds = [(lo, min(lo + step, size)) for lo in range(0, size, step)]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(lambda lh: _chunk_bits(s, lh[0], lh[1], variant), bounds)
        bits = "".join(parts)
    return TruthTable(arity, bits)


def gate_circuit_reference(x0: int, x1: int, x2: int, x3: int) -> int:
    """Fixed four-input gate formula used as an independent cross-check oracle.

    Matches [7,3]+[13,6] at index x0 + 2*x1 + 4*x2 + 8*x3.
    """
    term1 = (not (x0 and x1)) and (not x2) and x3
    term2 = x0 and x1 and x2 and (not x3)
    term3 = (not x2) and (not x3)
    return int(bool(term1 or term2 or term3))
