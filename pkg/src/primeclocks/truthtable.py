"""Truth tables of Boolean functions as '0'/'1' strings, index 0 leftmost.

Index i is the most-significant-bit-first integer value of the input string,
so the two-variable order is 00, 01, 10, 11.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class TruthTable:
    """A Boolean function of `arity` inputs as its 2**arity output bits."""

    arity: int
    bits: str

    def __post_init__(self) -> None:
        if self.arity < 1:
            raise ValueError(f"arity must be >= 1, got {self.arity}")
        if len(self.bits) != 1 << self.arity:
            raise ValueError(f"expected {1 << self.arity} bits, got {len(self.bits)}")
        if self.bits.strip("01"):
            raise ValueError("truth-table bits must be '0'/'1' characters")

    @classmethod
    def from_string(cls, text: str) -> TruthTable:
        n = len(text)
        if n < 2 or n & (n - 1):
            raise ValueError(f"truth-table length {n} is not a power of two >= 2")
        return cls(n.bit_length() - 1, text)

    @classmethod
    def from_bits(cls, arity: int, values: Iterable[int]) -> TruthTable:
        return cls(arity, "".join("1" if v & 1 else "0" for v in values))

    def bit(self, i: int) -> int:
        return 1 if self.bits[i] == "1" else 0

    def __str__(self) -> str:
        return self.bits

    def __len__(self) -> int:
        return len(self.bits)


def truth_table_to_index(input_bits: str, arity: int | None = None) -> int:
    """Table index of an input assignment, read most-significant-bit first."""
    if arity is not None and len(input_bits) != arity:
        raise ValueError(f"input length {len(input_bits)} != arity {arity}")
    if not input_bits or input_bits.strip("01"):
        raise ValueError(f"input must be a nonempty '0'/'1' string, got {input_bits!r}")
    return int(input_bits, 2)
