"""Domain exceptions shared across the package.

The class name doubles as the machine-readable error code in service
responses and CLI diagnostics.
"""


class GeometryError(Exception):
    """Base class for every domain error raised by this package."""


class InvalidPoint(GeometryError):
    """Coordinate vector cannot represent a projective point (all zero)."""


class InvalidIndexSet(GeometryError):
    """Index set is empty, out of range, or not strictly increasing."""


class DimensionMismatch(GeometryError):
    """Operands live in different ambient projective spaces."""


class ProjectionUndefined(GeometryError):
    """Point lies in the center of the requested projection."""


class InvalidArgument(GeometryError):
    """Argument outside the documented domain of an operation."""


class DegenerateTriangle(GeometryError):
    """Triangle vertices are collinear."""


class PointNotOnSide(GeometryError):
    """Cevian foot does not lie on the required side line."""


class IndeterminateRatio(GeometryError):
    """Both monomials of the ratio product vanish (0/0)."""


class NotOnSurface(GeometryError):
    """Tuple violates the blowup surface equations."""


class NotOnHypersurface(GeometryError):
    """Line triple violates the product hypersurface equation."""


class NotInImage(GeometryError):
    """Hypersurface point admits no completion to a surface point."""


class WrongArity(GeometryError):
    """Operation invoked for an unsupported face dimension."""


class OffTorus(GeometryError):
    """Instance has a zero coordinate; the algebraic criteria require none."""


class NotRankOneCompletable(GeometryError):
    """Partial matrix rows are not proportional on shared columns."""
