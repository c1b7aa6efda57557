"""Bundled known-good vectors for small clocks and sums.

Used by the `verify` command and the acceptance tests.  Columns marked
projected=False list raw clock residues; projected columns list values after
projection into Z_modulus.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class ReferenceColumn:
    sum_text: str
    values: tuple[int, ...]
    projected: bool = True


@dataclass(frozen=True)
class ReferenceTable:
    key: str
    modulus: int
    columns: tuple[ReferenceColumn, ...]


REFERENCE_TABLES: tuple[ReferenceTable, ...] = (
    ReferenceTable(
        key="mixed-clock-sums-mod2",
        modulus=2,
        columns=(
            ReferenceColumn("[2,0]", (0, 1, 0, 1, 0, 1), projected=False),
            ReferenceColumn("[3,1]", (1, 2, 0, 1, 2, 0), projected=False),
            ReferenceColumn("[2,0]+[3,1]", (1, 1, 0, 0, 0, 1)),
            ReferenceColumn("[7,3]", (3, 4, 5, 6, 0, 1), projected=False),
            ReferenceColumn("[13,6]", (6, 7, 8, 9, 10, 11), projected=False),
            ReferenceColumn("[7,3]+[13,6]", (1, 1, 1, 1, 0, 0)),
        ),
    ),
    ReferenceTable(
        key="four-clock-sum-mod5",
        modulus=5,
        columns=(
            ReferenceColumn("[5,3]", (3, 4, 0, 1, 2, 3, 4, 0, 1), projected=False),
            ReferenceColumn("[7,6]", (6, 0, 1, 2, 3, 4, 5, 6, 0), projected=False),
            ReferenceColumn("[11,3]", (3, 4, 5, 6, 7, 8, 9, 10, 0), projected=False),
            ReferenceColumn("[13,0]", (0, 1, 2, 3, 4, 5, 6, 7, 8), projected=False),
            ReferenceColumn("[5,3]+[7,6]+[11,3]+[13,0]", (2, 4, 3, 2, 1, 0, 4, 3, 4)),
        ),
    ),
    ReferenceTable(
        key="two-three-clock-sums-mod2",
        modulus=2,
        columns=(
            ReferenceColumn("[2,0]", (0, 1, 0, 1, 0, 1, 0, 1), projected=False),
            ReferenceColumn("[2,1]", (1, 0, 1, 0, 1, 0, 1, 0), projected=False),
            ReferenceColumn("[3,0]", (0, 1, 2, 0, 1, 2, 0, 1), projected=False),
            ReferenceColumn("[3,1]", (1, 2, 0, 1, 2, 0, 1, 2), projected=False),
            ReferenceColumn("[2,0]+[3,0]", (0, 0, 0, 1, 1, 1, 0, 0)),
            ReferenceColumn("[2,1]+[3,0]", (1, 1, 1, 0, 0, 0, 1, 1)),
            ReferenceColumn("[2,0]+[3,1]", (1, 1, 0, 0, 0, 1, 1, 1)),
        ),
    ),
    ReferenceTable(
        key="seven-clock-sums-mod2",
        modulus=2,
        columns=(
            ReferenceColumn("[7,0]", (0, 1, 0, 1, 0, 1, 0)),
            ReferenceColumn("[7,1]", (1, 0, 1, 0, 1, 0, 0)),
            ReferenceColumn("[7,2]", (0, 1, 0, 1, 0, 0, 1)),
            ReferenceColumn("[7,3]", (1, 0, 1, 0, 0, 1, 0)),
            ReferenceColumn("[7,0]+[7,2]+[7,3]", (1, 0, 1, 0, 0, 0, 1)),
            ReferenceColumn("[7,1]+[7,2]+[7,3]", (0, 1, 0, 1, 1, 1, 1)),
        ),
    ),
    ReferenceTable(
        key="five-clock-sums-mod2",
        modulus=2,
        columns=(
            ReferenceColumn("[5,0]", (0, 1, 0, 1, 0, 0)),
            ReferenceColumn("[5,1]", (1, 0, 1, 0, 0, 1)),
            ReferenceColumn("[5,2]", (0, 1, 0, 0, 1, 0)),
            ReferenceColumn("[5,3]", (1, 0, 0, 1, 0, 1)),
            ReferenceColumn("[5,4]", (0, 0, 1, 0, 1, 0)),
            ReferenceColumn("[5,0]+[5,1]", (1, 1, 1, 1, 0, 1)),
            ReferenceColumn("[5,2]+[5,3]+[5,4]", (1, 1, 1, 1, 0, 1)),
        ),
    ),
)

#: The 16 two-variable Boolean functions: (name, truth table, clock sum).
TWO_VAR_CATALOG: tuple[tuple[str, str, str], ...] = (
    ("const-1", "1111", "[2,0]+[2,1]"),
    ("const-0", "0000", "[2,0]+[2,0]"),
    ("x", "0011", "[2,1]+[3,1]"),
    ("y", "0101", "[2,0]"),
    ("not-x", "1100", "[2,0]+[3,1]"),
    ("not-y", "1010", "[2,1]"),
    ("and", "0001", "[2,0]+[3,0]"),
    ("or", "0111", "[2,0]+[3,2]"),
    ("implies", "1101", "[3,0]+[3,1]"),
    ("implied-by", "1011", "[3,1]+[3,2]"),
    ("xnor", "1001", "[3,1]"),
    ("xor", "0110", "[3,0]+[3,2]"),
    ("nor", "1000", "[2,1]+[3,2]"),
    ("nand", "1110", "[2,1]+[3,0]"),
    ("not-x-and-y", "0100", "[3,0]"),
    ("x-and-not-y", "0010", "[3,2]"),
)

#: Clock sums computing the four output bits of 2-bit multiplication,
#: most significant first; index = the 4 input bits read MSB first.
MULTIPLIER_SUMS: tuple[tuple[str, str], ...] = (
    ("product-bit-3", "[2,1]+[5,0]+[11,1]+[11,6]"),
    ("product-bit-2", "[5,0]+[7,0]+[7,2]+[11,4]"),
    ("product-bit-1", "[2,0]+[2,1]+[3,0]+[5,2]+[11,0]+[11,1]"),
    ("product-bit-0", "[2,0]+[7,3]+[7,4]+[7,5]+[11,10]"),
)

#: Expected multiplier outputs per input index, bits ordered as above.
MULTIPLIER_TABLE: tuple[str, ...] = (
    "0000", "0000", "0000", "0000",
    "0000", "0001", "0010", "0011",
    "0000", "0010", "0100", "0110",
    "0000", "0011", "0110", "1001",
)
