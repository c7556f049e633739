"""The radial model F(t) = sqrt(t) of S^2 x R.

Psi(x) = (x/|x|, log|x|) identifies R^3 minus the origin, with metric
<,>/|x|^2, with the product of the unit round sphere and the line.  The
inversion x -> x/<x,x> is an isometry of the same metric.  Differentials are
closed form so that the isometry residuals sit at rounding level.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .conformal import transform
from .errors import DomainError
from .metric import RADIAL, ORIGIN_RADIUS, ConformalFactor, metric_inner
from .surface import curvature_at, grid_points, sphere_origin

__all__ = [
    "ProductPoint", "psi", "psi_inv", "psi_differential", "product_inner",
    "psi_isometry_residual", "inversion", "inversion_differential",
    "inversion_isometry_residual", "SphereReport", "sphere_report",
]


@dataclass(frozen=True)
class ProductPoint:
    p: np.ndarray
    h: float


def _check(x):
    x = np.asarray(x, dtype=float)
    r = float(np.linalg.norm(x))
    if r <= ORIGIN_RADIUS:
        raise DomainError("the origin is not in the radial model")
    return x, r


def psi(x) -> ProductPoint:
    x, r = _check(x)
    return ProductPoint(x / r, math.log(r))


def psi_inv(pp: ProductPoint) -> np.ndarray:
    return math.exp(pp.h) * np.asarray(pp.p, dtype=float)


def psi_differential(x, v):
    """dPsi_x(v) as (tangent vector to S^2 at x/|x|, height component)."""
    x, r = _check(x)
    p = x / r
    v = np.asarray(v, dtype=float)
    radial = float(p @ v)
    return (v - radial * p) / r, radial / r


def product_inner(a, b) -> float:
    """Product metric of the unit sphere and the line on (tangent, height) pairs."""
    return float(a[0] @ b[0]) + a[1] * b[1]


def psi_isometry_residual(x, v, w) -> float:
    """|g_x(v, w) - <dPsi v, dPsi w>_{S^2 x R}| for the radial model."""
    lhs = metric_inner(RADIAL, x, v, w)
    return abs(lhs - product_inner(psi_differential(x, v), psi_differential(x, w)))


def inversion(x) -> np.ndarray:
    x, r = _check(x)
    return x / (r * r)


def inversion_differential(x, v) -> np.ndarray:
    """d/dx (x/<x,x>) applied to v: (v - 2 <x,v> x / t) / t."""
    x, r = _check(x)
    t = r * r
    v = np.asarray(v, dtype=float)
    return (v - 2.0 * float(x @ v) * x / t) / t


def inversion_isometry_residual(x, v, w, factor: ConformalFactor = RADIAL) -> float:
    """|g_x(v, w) - g_{f(x)}(df v, df w)| for the inversion f."""
    lhs = metric_inner(factor, x, v, w)
    rhs = metric_inner(factor, inversion(x), inversion_differential(x, v),
                       inversion_differential(x, w))
    return abs(lhs - rhs)


@dataclass(frozen=True)
class SphereReport:
    R: float
    factor: str
    KE: float
    K: float
    H: float
    max_lam: float

    @property
    def totally_geodesic_residual(self) -> float:
        return self.max_lam

    def as_dict(self) -> dict:
        return {"R": self.R, "factor": self.factor, "KE": self.KE, "K": self.K, "H": self.H,
                "totally_geodesic_residual": self.max_lam}


def sphere_report(R: float, factor: ConformalFactor = RADIAL, grid=(8, 8)) -> SphereReport:
    """Ambient curvatures of the origin sphere of radius R sampled on a grid.

    KE, H and max_lam are worst-case absolute values; K is the sample farthest from 1.
    """
    spec = sphere_origin(R)
    ke = hh = lam = 0.0
    k_far = None
    for u, v in grid_points(spec, grid):
        c = transform(factor, curvature_at(spec, u, v))
        ke = max(ke, abs(c.KE))
        hh = max(hh, abs(c.H))
        lam = max(lam, abs(c.lam1), abs(c.lam2))
        if k_far is None or abs(c.K - 1.0) > abs(k_far - 1.0):
            k_far = c.K
    return SphereReport(float(R), factor.label, ke, float(k_far), hh, lam)
