"""Exception hierarchy shared by every module of the package."""


class SolidAngleError(Exception):
    """Base class for all errors raised by :mod:`solidangle`."""


class DomainError(SolidAngleError, ValueError):
    """An argument lies outside the range where the formula is defined."""


class NormalizationError(DomainError):
    """A vector is too far from unit length to be silently renormalized."""


class DegenerateGeometryError(SolidAngleError, ValueError):
    """The input geometry does not define the requested quantity.

    Raised for coincident or antipodal neighbours, too few vertices,
    zero-length tangents, curves through the origin and stationary points.
    """


class QuadratureError(SolidAngleError, ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""
