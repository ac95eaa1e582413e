"""Exception types shared across the package."""


class QhookError(Exception):
    """Base class for all package-specific errors."""


class ExponentBeyondTruncation(QhookError):
    """A coefficient beyond a series' recorded truncation order was requested."""


class NonUnitConstantTerm(QhookError):
    """Series inversion requires a constant term of +1 or -1 over the integers."""


class InvalidDomain(QhookError):
    """Input partition violates the domain constraints of the map."""


class UnknownName(QhookError):
    """Requested series name is not in the catalog."""


class InsufficientTable(QhookError):
    """A lookup table does not cover the requested index range."""


class RangeBeyondTruncation(QhookError):
    """A check range exceeds the truncation order of its series."""


class UnsupportedMode(QhookError):
    """The requested verification mode is not available for this claim."""


class UnknownSelector(QhookError):
    """Requested check selector is not in the registry."""


class UnsupportedGenfun(QhookError):
    """No generating-function route exists for the requested parameters."""
