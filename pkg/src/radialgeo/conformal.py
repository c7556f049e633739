"""Curvatures of a surface in (R^3, delta/F^2) from its Euclidean curvature data.

With q = <N, grad F> = 2 h'(t) nu the ambient principal curvatures are
-lam~_i where lam~_i = F lam_i - q, hence

    H~   = F H + q                       (mean of -lam~_i)
    K~_E = lam~_1 lam~_2 = F^2 K + 2 F H q + q^2

and the intrinsic curvature of the induced metric E/F^2 is

    K~ = F^2 K + 4 (h h'' - h'^2)(t - nu^2) + 4 h h' (1 + H nu).

All three depend only on (t, nu, H, K, lam_i), so no parametrization is assumed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .metric import RADIAL, ConformalFactor, factor_eval
from .surface import EuclideanCurvature, inversion_normal

__all__ = [
    "ConformalCurvature",
    "transform",
    "gauss_conformal",
    "weingarten_functionals",
    "inversion_mean_curvature_check",
]


@dataclass(frozen=True)
class ConformalCurvature:
    lam1: float
    lam2: float
    H: float
    KE: float
    K: float
    # K~_E assembled from Euclidean data without forming lam~_i (cross-check)
    KE_euclid: float

    @property
    def W1(self) -> float:
        return self.KE + self.H**2 - self.K

    @property
    def W2(self) -> float:
        return 2.0 * self.KE - self.K

    @property
    def H_from_lam(self) -> float:
        """(lam~_1 + lam~_2)/2, i.e. -H~; kept to make the sign choice explicit."""
        return 0.5 * (self.lam1 + self.lam2)


def gauss_conformal(factor: ConformalFactor, eucl: EuclideanCurvature) -> float:
    """Gauss curvature of the induced metric <,>/F^2 at the point of ``eucl``."""
    h, dh, ddh = factor_eval(factor, eucl.t)
    return (h * h * eucl.K + 4.0 * (h * ddh - dh * dh) * (eucl.t - eucl.nu**2)
            + 4.0 * h * dh * (1.0 + eucl.H * eucl.nu))


def transform(factor: ConformalFactor, eucl: EuclideanCurvature) -> ConformalCurvature:
    h, dh, _ = factor_eval(factor, eucl.t)
    q = 2.0 * dh * eucl.nu
    l1 = h * eucl.lam1 - q
    l2 = h * eucl.lam2 - q
    return ConformalCurvature(
        lam1=l1,
        lam2=l2,
        H=h * eucl.H + q,
        KE=l1 * l2,
        K=gauss_conformal(factor, eucl),
        KE_euclid=h * h * eucl.K + 2.0 * h * eucl.H * q + q * q,
    )


def weingarten_functionals(eucl: EuclideanCurvature, factor: ConformalFactor = RADIAL):
    """(W1, W2, edsghw_residual) of the radial model from Euclidean data.

    W1 = K~_E + H~^2 - K~ = H (t H + 2 nu) and W2 = 2 K~_E - K~ = t K + 2 nu H;
    the EDSGHW residual t K + 2 nu H coincides with W2.
    """
    if factor.kind != "radial":
        raise ValueError("Weingarten functionals are defined for the radial model only")
    factor_eval(factor, eucl.t)
    t, nu, H = eucl.t, eucl.nu, eucl.H
    w2 = t * eucl.K + 2.0 * nu * H
    return H * (t * H + 2.0 * nu), w2, w2


def inversion_mean_curvature_check(eucl: EuclideanCurvature,
                                   inverted: EuclideanCurvature) -> dict:
    """Compare H_I of the inverted immersion with t H + 2 nu and t H - 2 nu.

    H_I is taken with respect to the inverted normal N - 2 nu X / t, i.e. the
    cross-product normal of the inverted immersion is flipped if it points the
    other way.
    """
    if eucl.t <= 0.0:
        raise DomainError("point at the origin")
    sign = float(np.sign(inverted.N @ inversion_normal(eucl))) or 1.0
    h_inv = sign * inverted.H
    plus = abs(eucl.t * eucl.H + 2.0 * eucl.nu - h_inv)
    minus = abs(eucl.t * eucl.H - 2.0 * eucl.nu - h_inv)
    scale = 1e-9 * max(1.0, abs(h_inv))
    match = ("both" if plus <= scale and minus <= scale else
             "plus" if plus <= scale else "minus" if minus <= scale else "none")
    return {"H_I": h_inv, "normal_sign": sign, "residual_plus": plus,
            "residual_minus": minus, "match": match}
