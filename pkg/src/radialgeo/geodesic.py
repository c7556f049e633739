"""Geodesics of (R^3, delta/F^2): equation, integration and residual tests."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ParametrizationError
from .metric import ConformalFactor, christoffel, factor_eval
from .ode import rk4

__all__ = [
    "GeodesicState", "Trajectory", "gspeed", "geodesic_rhs", "christoffel_acceleration",
    "normalize", "integrate", "geodesic_residual", "radial_line", "origin_circle",
    "straight_line", "circle_residual_closed_form", "circle_radius_drift",
]


@dataclass(frozen=True)
class GeodesicState:
    x: np.ndarray
    xdot: np.ndarray


def gspeed(factor: ConformalFactor, x, xdot) -> float:
    x = np.asarray(x, dtype=float)
    h = factor_eval(factor, float(x @ x))[0]
    return float(np.linalg.norm(xdot)) / abs(h)


def geodesic_rhs(factor: ConformalFactor, x, xdot) -> np.ndarray:
    """d^2x/ds^2 of a geodesic through (x, xdot), radial form of the equation.

    a_k = -(2 x_k h'/h) (sum_{i!=k} xdot_i^2 - xdot_k^2)
          + (4 h'/h) xdot_k sum_{i!=k} x_i xdot_i
    """
    x = np.asarray(x, dtype=float)
    xd = np.asarray(xdot, dtype=float)
    h, dh, _ = factor_eval(factor, float(x @ x))
    r = dh / h
    sq = xd * xd
    dot = x * xd
    others_sq = sq.sum() - sq
    others_dot = dot.sum() - dot
    return -2.0 * x * r * (others_sq - sq) + 4.0 * r * xd * others_dot


def christoffel_acceleration(factor: ConformalFactor, x, xdot) -> np.ndarray:
    """-Gamma^k_ij xdot_i xdot_j from the full Christoffel table."""
    xd = np.asarray(xdot, dtype=float)
    return -np.einsum("kij,i,j->k", christoffel(factor, x), xd, xd)


def normalize(factor: ConformalFactor, x, xdot) -> GeodesicState:
    """Rescale ``xdot`` to unit g-speed."""
    x = np.asarray(x, dtype=float)
    xd = np.asarray(xdot, dtype=float)
    sp = gspeed(factor, x, xd)
    if sp == 0.0:
        raise ValueError("zero initial velocity")
    return GeodesicState(x, xd / sp)


@dataclass(frozen=True)
class Trajectory:
    factor: ConformalFactor
    s: np.ndarray
    x: np.ndarray
    xdot: np.ndarray
    exited_domain: bool

    def __len__(self):
        return len(self.s)

    @property
    def gspeed(self) -> np.ndarray:
        return np.array([gspeed(self.factor, p, v) for p, v in zip(self.x, self.xdot)])

    @property
    def residual(self) -> np.ndarray:
        """|d(xdot)/ds - geodesic_rhs| with d/ds from finite differences of the samples."""
        if len(self.s) < 3:
            return np.zeros(len(self.s))
        acc = np.gradient(self.xdot, self.s, axis=0, edge_order=2)
        rhs = np.array([geodesic_rhs(self.factor, p, v) for p, v in zip(self.x, self.xdot)])
        return np.linalg.norm(acc - rhs, axis=1)

    @property
    def end(self) -> GeodesicState:
        return GeodesicState(self.x[-1], self.xdot[-1])


def integrate(factor: ConformalFactor, x0, xdot0, length: float, step: float) -> Trajectory:
    """Classical RK4 integration of the geodesic through (x0, xdot0).

    The initial velocity is renormalized to unit g-speed.  If the solution
    leaves the factor's domain the trajectory is truncated and
    ``exited_domain`` is set.
    """
    st = normalize(factor, x0, xdot0)

    def rhs(_s, y):
        return np.concatenate([y[3:], geodesic_rhs(factor, y[:3], y[3:])])

    def stop(_s, y):
        if not np.all(np.isfinite(y)):
            return True
        try:
            factor_eval(factor, float(y[:3] @ y[:3]))
        except DomainError:
            return True
        return False

    s, ys, stopped = rk4(rhs, np.concatenate([st.x, st.xdot]), 0.0, length, step, stop)
    return Trajectory(factor, s, ys[:, :3], ys[:, 3:], stopped)


def geodesic_residual(factor: ConformalFactor, x, dx, ddx, speed_tol: float = 1e-4) -> float:
    """max_n |x'' + Gamma(x', x')| over samples of an arclength-parametrized curve.

    ``x``, ``dx``, ``ddx`` are (N, 3) arrays of position, first and second
    derivative with respect to g-arclength.
    """
    x, dx, ddx = (np.atleast_2d(np.asarray(a, dtype=float)) for a in (x, dx, ddx))
    worst = 0.0
    for p, v, a in zip(x, dx, ddx):
        drift = abs(gspeed(factor, p, v) - 1.0)
        if drift > speed_tol:
            raise ParametrizationError(f"g-speed off by {drift:.3g} at x={p}")
        worst = max(worst, float(np.linalg.norm(a - christoffel_acceleration(factor, p, v))))
    return worst


# -- test curves parametrized by g-arclength ------------------------------------------

def radial_line(factor: ConformalFactor, direction, r0: float, s, step: float = 1e-3):
    """Radial ray x = r(s) d through r0 d with r' = F(r^2).

    r(s) is integrated numerically; the returned derivatives are exact for the
    returned r, so the residual only measures the geodesic equation.
    """
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    s = np.atleast_1d(np.asarray(s, dtype=float))

    def rhs(_s, y):
        return np.array([factor_eval(factor, y[0] * y[0])[0]])

    r = np.empty_like(s)
    for n, sn in enumerate(s):
        r[n] = rk4(rhs, [r0], 0.0, sn, step)[1][-1, 0] if sn != 0 else r0
    x, dx, ddx = [], [], []
    for rn in r:
        h, dh, _ = factor_eval(factor, rn * rn)
        x.append(rn * d)
        dx.append(h * d)
        ddx.append(2.0 * rn * h * dh * d)
    return np.array(x), np.array(dx), np.array(ddx)


def origin_circle(factor: ConformalFactor, R: float, s):
    """beta(s) = (R cos(F s/R), R sin(F s/R), 0) with F = F(R^2)."""
    s = np.atleast_1d(np.asarray(s, dtype=float))
    F = factor_eval(factor, R * R)[0]
    w = F / R
    c, sn, z = np.cos(w * s), np.sin(w * s), np.zeros_like(s)
    return (np.stack([R * c, R * sn, z], axis=1), np.stack([-F * sn, F * c, z], axis=1),
            np.stack([-F * w * c, -F * w * sn, z], axis=1))


def straight_line(factor: ConformalFactor, point, direction, taus):
    """Line point + tau d (Euclidean unit d) reparametrized by g-arclength."""
    p = np.asarray(point, dtype=float)
    d = np.asarray(direction, dtype=float)
    d = d / np.linalg.norm(d)
    x, dx, ddx = [], [], []
    for tau in np.atleast_1d(taus):
        q = p + tau * d
        h, dh, _ = factor_eval(factor, float(q @ q))
        x.append(q)
        dx.append(h * d)
        ddx.append(2.0 * dh * h * float(q @ d) * d)
    return np.array(x), np.array(dx), np.array(ddx)


def circle_residual_closed_form(factor: ConformalFactor, R: float) -> float:
    """|F^2 (1/R - 2 R h'/h)| evaluated at t = R^2."""
    h, dh, _ = factor_eval(factor, R * R)
    return abs(h * h * (1.0 / R - 2.0 * R * dh / h))


def circle_radius_drift(traj: Trajectory) -> float:
    r = np.linalg.norm(traj.x, axis=1)
    return float(np.abs(r - r[0]).max())

