"""Curvature, geodesics and rotation surfaces in R^3 with radial conformal metrics delta/F(t)^2."""

__version__ = "0.1.0"

from .errors import (DomainError, GeometryError, HypothesisError, NoBracketError,  # noqa: E402
                     NotIsothermalError, ParametrizationError, RegularityError,
                     SingularCoefficientError, StepError)
from .metric import EUCLIDEAN, EXP, RADIAL, ConformalFactor, custom_factor, parse_factor  # noqa: E402
from .surface import SurfaceSpec, catalog, curvature_at, jet  # noqa: E402
from .conformal import ConformalCurvature, transform  # noqa: E402

__all__ = [
    "__version__", "GeometryError", "DomainError", "RegularityError", "NotIsothermalError",
    "StepError", "ParametrizationError", "NoBracketError", "HypothesisError",
    "SingularCoefficientError", "ConformalFactor", "EUCLIDEAN", "RADIAL", "EXP",
    "custom_factor", "parse_factor", "SurfaceSpec", "catalog", "curvature_at", "jet",
    "ConformalCurvature", "transform",
]
