class GrasscalcError(Exception):
    """Base class for all computation errors raised by this package."""


class ResourceLimitError(GrasscalcError):
    """A brute-force expansion exceeded its configured size bound."""


class SingularMatrixError(GrasscalcError):
    """Exact matrix inversion hit a zero determinant."""


class UnsupportedFamilyError(GrasscalcError):
    """An operation was asked for a bundle family it does not cover."""
