"""Exception hierarchy for geometric and numerical failure modes."""


class GeometryError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(GeometryError):
    """Arguments outside the documented domain (bad curvature sign, non-unit
    direction, parameters out of range, malformed Euler characteristic)."""


class OffModelError(InvalidInputError):
    """A 4-vector is too far off its quadric model to be repaired."""


class UndefinedDirectionError(GeometryError):
    """No unique initial direction exists (coincident or antipodal points)."""


class RegularityError(GeometryError):
    """Degenerate first fundamental form; the immersion is not regular there."""


class QuadratureFailureError(GeometryError):
    """Gauss-Bonnet integral does not round to an even integer; resolution too
    low or the surface is not a valid closed atlas."""


class FocalSingularityError(GeometryError):
    """An offset reached or passed a focal distance; parallel-surface
    quantities are singular there."""


class IllConditionedError(GeometryError):
    """A denominator is too small for a meaningful result."""


class SolverError(GeometryError):
    """The closest-point refinement failed to converge."""


class OracleUnreliableError(GeometryError):
    """Too many Monte Carlo samples were discarded for the estimate to count."""
