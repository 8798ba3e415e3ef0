"""Exception types shared across the package."""


class GentransError(Exception):
    """Base class for all package errors."""


class InvalidInput(GentransError, ValueError):
    """Malformed type, rank, node, weight or dimension vector."""


class OutsideTableRange(GentransError, ValueError):
    """Type or rank outside the range covered by the classification tables."""


class BudgetExceeded(GentransError, RuntimeError):
    """A computation exceeded its configured work budget."""


class OracleTooLarge(GentransError, ValueError):
    """Representation space too large for the numerical orbit oracle."""
