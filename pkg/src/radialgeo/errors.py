"""Exception hierarchy shared by all modules."""


class GeometryError(Exception):
    """Base class for every error raised by radialgeo."""


class DomainError(GeometryError, ValueError):
    """A point or parameter lies outside the domain of the conformal factor or surface."""


class RegularityError(GeometryError):
    """Immersion is not regular (|X_u x X_v| too small)."""


class NotIsothermalError(GeometryError):
    """Parametrization is not orthogonal/isothermal where the formula needs it."""


class StepError(GeometryError, ValueError):
    pass


class ParametrizationError(GeometryError):
    """Sampled curve is not parametrized by g-arclength."""


class NoBracketError(GeometryError):
    """The root scan found no sign change."""


class HypothesisError(NoBracketError):
    """The curvature function w(t) does not dominate c0 at the left end of the scan."""


class SingularCoefficientError(GeometryError):
    """The leading coefficient of the profile ODE crossed zero."""
