"""Exception types shared across the package."""


class HilbQdimError(Exception):
    """Base class for all errors raised by hilbqdim."""


class InvalidLabelError(HilbQdimError, ValueError):
    """Unknown root-system label or rank outside the allowed range."""


class DimensionMismatchError(HilbQdimError, ValueError):
    """Vectors or characters from different root systems were combined."""


class NotDominantError(HilbQdimError, ValueError):
    """A highest weight with a negative fundamental coordinate."""


class ResourceGuardError(HilbQdimError):
    """A computation would exceed its configured size guard."""


class UnsupportedError(HilbQdimError):
    """The requested computation cannot be done from the available data."""


class NotACharacterError(HilbQdimError, ValueError):
    """A weight system is not a nonnegative combination of irreducible characters."""


class IntegralityError(HilbQdimError, ArithmeticError):
    """A coefficient expected to be a rational integer was not one.

    This signals an implementation bug; it is never a valid result.
    """
