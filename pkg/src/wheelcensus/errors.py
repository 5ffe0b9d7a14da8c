"""Exception types shared across the package."""


class CensusError(Exception):
    """Base class for all wheelcensus errors."""


class BudgetExceededError(CensusError, ValueError):
    """An enumeration was requested beyond the supported size."""


class CountOverflowError(CensusError, OverflowError):
    """An exact count left the 128-bit unsigned range."""


class NoClosedFormError(CensusError, ValueError):
    """No closed formula is known for the requested (p, n)."""
