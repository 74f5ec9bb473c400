"""Exception hierarchy.

Every error raised by the core modules derives from :class:`K3WallsError`,
which the CLI maps to exit code 3.  Configuration problems raise
:class:`ConfigError` (exit code 2).
"""


class K3WallsError(ValueError):
    """Base class for precondition failures in the core operations."""


class ZeroClass(K3WallsError):
    pass


class NotSpherical(K3WallsError):
    pass


class ZeroCharge(K3WallsError):
    pass


class OutsideHalfPlane(K3WallsError):
    pass


class NonPositiveRank(K3WallsError):
    pass


class NonPositiveSlope(K3WallsError):
    pass


class ProportionalClasses(K3WallsError):
    pass


class EmptyRegion(K3WallsError):
    pass


class DegeneratePath(K3WallsError):
    """The imaginary part of the central charge of v vanishes along the path."""


class ForeignWall(K3WallsError):
    pass


class UnderdeterminedSystem(K3WallsError):
    pass


class NotOrthogonal(K3WallsError):
    pass


class ZeroVector(K3WallsError):
    pass


class HypothesisFailed(K3WallsError):
    pass


class ConfigError(ValueError):
    """Malformed or incomplete analysis configuration."""


class UnsupportedFormat(ConfigError):
    pass
