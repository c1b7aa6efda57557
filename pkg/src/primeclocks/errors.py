"""Exception hierarchy shared across the package."""


class ClockError(Exception):
    """Base class for all primeclocks errors."""


class NotPrimeError(ClockError):
    """A value required to be prime is not."""


class InvalidClockError(ClockError):
    """Clock or sum violates a structural invariant (offset range, modulus)."""


class ParseError(ClockError):
    """Clock-sum text does not conform to the grammar."""


class ModulusMismatchError(ClockError):
    """Two sums with different moduli were combined or compared."""


class UnsupportedModulusError(ClockError):
    """Operation is only defined for a specific modulus (usually 2)."""


class PeriodGuardError(ClockError):
    """The lcm evaluation horizon exceeds the configured guard."""


class SearchRangeError(ClockError):
    """Prime search left the supported integer range."""


class DimensionMismatchError(ClockError):
    """Matrix/vector dimensions do not agree."""


class PrimeTooSmallError(ClockError):
    """Synthesis prime does not exceed the truth-table length."""


class UnsolvableError(ClockError):
    """A system that is guaranteed solvable had no solution (internal bug)."""
