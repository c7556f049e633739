"""Rotation surfaces X = (phi cos v, phi sin v, u) with constant extrinsic curvature.

With a^2 = 1 + phi'^2, nu = (-phi + u phi')/a and t = u^2 + phi^2 the ambient
extrinsic curvature of a rotation surface equals c0 exactly when

    [F + 2 phi h' (-phi + u phi')] [F phi'' - 2 a^2 h' (-phi + u phi')] = -c0 a^4 phi.

Origin spheres solve this with c0 = w(R^2), w(t) = ((F - 2 h' t)/sqrt(t))^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import bisect

from .errors import DomainError, HypothesisError, NoBracketError, SingularCoefficientError
from .metric import ConformalFactor, factor_eval
from .ode import rk4

__all__ = [
    "RotationProfile", "sphere_profile", "extrinsic_residual", "e3_residual",
    "e3_residual_printed", "sphere_extrinsic", "curvature_radius_function",
    "RadiusRoots", "radius_for_curvature", "solve_profile", "profile_rhs",
]

SCAN_RANGE = (1e-6, 1e6)
SCAN_NODES = 2000
SINGULAR_TOL = 1e-10


@dataclass(frozen=True)
class RotationProfile:
    """Generating curve u -> (phi, phi', phi'') on ``interval``."""

    func: Callable[[float], tuple[float, float, float]] = field(repr=False)
    interval: tuple[float, float]
    u: np.ndarray | None = field(default=None, repr=False)
    phi: np.ndarray | None = field(default=None, repr=False)
    dphi: np.ndarray | None = field(default=None, repr=False)

    def __call__(self, u: float):
        lo, hi = self.interval
        if not lo - 1e-12 <= u <= hi + 1e-12:
            raise DomainError(f"u={u} outside profile interval {self.interval}")
        return self.func(u)

    def surface(self, v_range=(0.0, 2.0 * math.pi)):
        from .surface import rotation_profile
        return rotation_profile(self.func, (*self.interval, *v_range))


def sphere_profile(R: float, shrink: float = 1e-3) -> RotationProfile:
    def func(u):
        p = math.sqrt(R * R - u * u)
        return p, -u / p, -R * R / p**3
    d = shrink * 2.0 * R
    return RotationProfile(func, (-R + d, R - d))


def _pieces(factor, profile, u):
    p, dp, ddp = profile(u)
    if p <= 0.0:
        raise DomainError(f"phi({u}) = {p} is not positive")
    h, dh, _ = factor_eval(factor, u * u + p * p)
    a2 = 1.0 + dp * dp
    m = -p + u * dp
    return p, dp, ddp, h, dh, a2, m


def extrinsic_residual(factor: ConformalFactor, profile, u: float, c0: float) -> float:
    """Left side minus right side of the constant extrinsic curvature equation at u.

    Equals -a^4 phi (K~_E - c0), so it vanishes iff K~_E = c0 at u.
    """
    p, dp, ddp, h, dh, a2, m = _pieces(factor, profile, u)
    return (h + 2.0 * p * dh * m) * (h * ddp - 2.0 * a2 * dh * m) + c0 * a2 * a2 * p


def e3_residual(profile, u: float, c0: float) -> float:
    """The same equation for F = exp(-t) with the common factor exp(-2t) cleared.

    [1 + 2 phi^2 - 2 u phi phi'] [phi'' + 2 a^2 (-phi + u phi')] + c0 a^4 phi e^{2t}
    """
    p, dp, ddp = profile(u)
    a2 = 1.0 + dp * dp
    t = u * u + p * p
    return ((1.0 + 2.0 * p * p - 2.0 * u * p * dp) * (ddp + 2.0 * a2 * (-p + u * dp))
            + c0 * a2 * a2 * p * math.exp(2.0 * t))


def e3_residual_printed(profile, u: float, c0: float) -> float:
    """Residual of the published E_3 form
    [1 + 2 phi^2 - 2 u phi phi'] phi'' + a^2 [4 phi phi'^2 + 2 phi + 2 u phi'] = -c0 a^4 phi e^{2t}.

    Kept for comparison only; it does not vanish on the origin spheres (see tests).
    """
    p, dp, ddp = profile(u)
    a2 = 1.0 + dp * dp
    t = u * u + p * p
    return ((1.0 + 2.0 * p * p - 2.0 * u * p * dp) * ddp
            + a2 * (4.0 * p * dp * dp + 2.0 * p + 2.0 * u * dp)
            + c0 * a2 * a2 * p * math.exp(2.0 * t))


def curvature_radius_function(factor: ConformalFactor, t: float) -> float:
    """w(t) = ((F(t) - 2 h'(t) t) / sqrt(t))^2, the extrinsic curvature of S(0, sqrt t)."""
    h, dh, _ = factor_eval(factor, t, allow_zero=True)
    return (h - 2.0 * dh * t) ** 2 / t


def sphere_extrinsic(factor: ConformalFactor, R: float) -> float:
    """Extrinsic curvature (F(R^2) - 2 h'(R^2) R^2)^2 / R^2 of the origin sphere of radius R."""
    if not R > 0:
        raise DomainError(f"radius must be positive, got {R!r}")
    return curvature_radius_function(factor, R * R)


@dataclass(frozen=True)
class RadiusRoots:
    R: float
    roots: list[float]
    brackets: list[tuple[float, float]]
    w_min: float


def radius_for_curvature(factor: ConformalFactor, c0: float, t_range=SCAN_RANGE,
                         nodes: int = SCAN_NODES) -> RadiusRoots:
    """Radii R with w(R^2) = c0: log-spaced scan in t, then bisection in each bracket."""
    if not c0 > 0:
        raise ValueError("c0 must be positive")
    ts = np.geomspace(t_range[0], t_range[1], nodes)
    ws = np.array([curvature_radius_function(factor, t) for t in ts])
    if ws[0] < c0:
        raise HypothesisError(
            f"w(t_min={ts[0]:g}) = {ws[0]:.6g} < c0 = {c0:.6g} for factor {factor.label}")
    diff = ws - c0
    brackets = []
    for i in range(nodes - 1):
        if diff[i] == 0.0:
            brackets.append((ts[i], ts[i]))
        elif diff[i] * diff[i + 1] < 0.0:
            brackets.append((ts[i], ts[i + 1]))
    if not brackets:
        raise NoBracketError(f"no sign change of w - c0 on t in {t_range}")

    def g(t):
        return curvature_radius_function(factor, t) - c0

    roots = []
    for lo, hi in brackets:
        t = lo if lo == hi else bisect(g, lo, hi, xtol=1e-15 * lo, rtol=4 * np.finfo(float).eps,
                                       maxiter=400)
        roots.append(math.sqrt(t))
    return RadiusRoots(min(roots), sorted(roots), brackets, float(ws.min()))


def profile_rhs(factor: ConformalFactor, c0: float):
    """phi'' as a function of (u, phi, phi') from the constant-curvature equation."""

    def rhs(u, p, dp):
        if p <= 0.0:
            raise DomainError(f"phi reached {p} at u={u}")
        h, dh, _ = factor_eval(factor, u * u + p * p)
        a2 = 1.0 + dp * dp
        m = -p + u * dp
        # c0 = 0 factors the equation; follow the lam~_1 = 0 branch, no division
        if c0 == 0.0:
            return 2.0 * a2 * dh * m / h
        lead = h + 2.0 * p * dh * m
        if abs(lead) < SINGULAR_TOL:
            raise SingularCoefficientError(f"leading coefficient {lead:.3g} at u={u}, phi={p}")
        return (-c0 * a2 * a2 * p / lead + 2.0 * a2 * dh * m) / h

    return rhs


def solve_profile(factor: ConformalFactor, c0: float, phi0: float, dphi0: float,
                  span: tuple[float, float], step: float = 1e-3, u0: float = 0.0) -> RotationProfile:
    """Integrate the profile ODE from (u0, phi0, dphi0) across ``span`` with RK4.

    Raises SingularCoefficientError if the phi'' coefficient vanishes and
    DomainError if phi stops being positive before the end of ``span``.
    """
    lo, hi = span
    if not lo <= u0 <= hi:
        raise ValueError("u0 must lie in span")
    acc = profile_rhs(factor, c0)

    def rhs(u, y):
        return np.array([y[1], acc(u, y[0], y[1])])

    pieces = []
    for length in (lo - u0, hi - u0):
        if length == 0.0:
            continue
        s, ys, stopped = rk4(rhs, [phi0, dphi0], u0, length, step)
        if stopped:
            raise DomainError(f"profile left the domain near u={s[-1]:.6g}")
        pieces.append((s, ys))
    if not pieces:
        raise ValueError("empty span")
    us = np.concatenate([p[0] for p in pieces])
    ys = np.concatenate([p[1] for p in pieces])
    order = np.argsort(us)
    us, ys = us[order], ys[order]
    keep = np.concatenate([[True], np.diff(us) > 0])
    us, ys = us[keep], ys[keep]
    spline = CubicHermiteSpline(us, ys[:, 0], ys[:, 1])
    dspline = CubicHermiteSpline(us, ys[:, 1], [acc(u, p, dp) for u, (p, dp) in zip(us, ys)])

    def func(u):
        p, dp = float(spline(u)), float(dspline(u))
        return p, dp, acc(u, p, dp)

    return RotationProfile(func, (float(us[0]), float(us[-1])), us, ys[:, 0], ys[:, 1])

