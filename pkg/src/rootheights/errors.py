"""Exception hierarchy shared by the library and the CLI."""


class RootHeightsError(Exception):
    """Base class for every error raised by this package."""


class DomainError(RootHeightsError, ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(RootHeightsError, ValueError):
    """A documented precondition of an operation does not hold."""


class ConsistencyError(RootHeightsError, AssertionError):
    """An internal invariant failed; indicates a bug or corrupt input data."""


class NotFiniteTypeError(RootHeightsError):
    """Root closure exceeded the height cap."""


class CapExceededError(RootHeightsError):
    """An enumeration exceeded a configured size cap.

    ``cap_name`` identifies which cap was hit so the CLI can report it.
    """

    def __init__(self, cap_name: str, cap: int, message: str) -> None:
        super().__init__(message)
        self.cap_name = cap_name
        self.cap = cap


class WeylGroupTooLargeError(CapExceededError):
    def __init__(self, cap: int) -> None:
        super().__init__("weyl_order_cap", cap, f"Weyl group too large: order exceeds cap {cap}")


class PartitionCapError(CapExceededError):
    def __init__(self, cap: int) -> None:
        super().__init__("partition_cap", cap, f"too many vector partitions: count exceeds cap {cap}")


class TruncationError(RootHeightsError, KeyError):
    """Requested a coefficient above the truncation height of a series."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class MalformedKostkaError(RootHeightsError, ValueError):
    """A polynomial cannot be read as a sum of monomials t^m with m >= 1."""


class MonotonicityError(RootHeightsError):
    """Root counts by height are not weakly decreasing."""
