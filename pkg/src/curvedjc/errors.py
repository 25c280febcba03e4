"""Exception types shared across the package.

The CLI maps :class:`ConfigError` to exit code 2 and
:class:`InvariantViolation` (and subclasses) to exit code 3.
"""


class CurvedJCError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CurvedJCError, ValueError):
    """An argument is outside the mathematical domain of an operation."""


class DimensionError(CurvedJCError, ValueError):
    """A matrix or truncation dimension is invalid."""


class ConfigError(CurvedJCError):
    """A scenario configuration failed to parse or validate."""


class InvariantViolation(CurvedJCError):
    """A numerical invariant was violated during a computation.

    ``invariant`` names the violated invariant so the CLI can report it.
    """

    def __init__(self, invariant: str, message: str):
        self.invariant = invariant
        super().__init__(f"{invariant}: {message}")


class NormalizationError(InvariantViolation):
    """A state or distribution deviates from unit norm beyond tolerance."""

    def __init__(self, message: str):
        super().__init__("normalization", message)


class TruncationError(InvariantViolation):
    """Probability mass beyond the Fock-space truncation is too large."""

    def __init__(self, message: str):
        super().__init__("truncation-tail", message)


class SymmetryError(InvariantViolation):
    """A matrix that must be Hermitian is not, beyond tolerance."""

    def __init__(self, message: str):
        super().__init__("hermitian-symmetry", message)


class UndefinedStatisticError(CurvedJCError, ArithmeticError):
    """A statistic is undefined for the given state (e.g. division by <n>=0)."""
