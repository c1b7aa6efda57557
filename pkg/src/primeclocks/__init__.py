"""Prime clocks as computational primitives.

Clock sums over prime moduli, their periods and group structure, and
synthesis of a clock sum computing any Boolean truth table by GF(2) solving.
"""

from .core import (
    DEFAULT_PERIOD_GUARD,
    ClockSum,
    PrimeClock,
    add,
    clock_eval,
    clock_sum,
    equal,
    format_sum,
    inverse,
    lcm_horizon,
    parse_sum,
    period,
    reduce_sum,
    sum_eval,
)
from .errors import ClockError
from .evaluator import (
    clock_sum_bit,
    clock_sum_bit_parallel,
    gate_circuit_reference,
    truth_table_of,
)
from .primes import PrimeClass, classify, is_prime, next_prime_greater
from .synthesis import (
    SynthesisMethod,
    SynthesisReport,
    basis_rank,
    synthesize_over_basis,
    synthesize_single_prime,
)
from .truthtable import TruthTable, truth_table_to_index

__version__ = "0.1.0"

__all__ = [
    "ClockError",
    "ClockSum",
    "DEFAULT_PERIOD_GUARD",
    "PrimeClass",
    "PrimeClock",
    "SynthesisMethod",
    "SynthesisReport",
    "TruthTable",
    "add",
    "basis_rank",
    "classify",
    "clock_eval",
    "clock_sum",
    "clock_sum_bit",
    "clock_sum_bit_parallel",
    "equal",
    "format_sum",
    "gate_circuit_reference",
    "inverse",
    "is_prime",
    "lcm_horizon",
    "next_prime_greater",
    "parse_sum",
    "period",
    "reduce_sum",
    "sum_eval",
    "synthesize_over_basis",
    "synthesize_single_prime",
    "truth_table_of",
    "truth_table_to_index",
]
