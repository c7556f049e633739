"""Radial conformal metrics g = delta_ij / F(t)^2 on R^3, t = <x, x>.

A conformal factor is carried as a closed-form triple t -> (h, h', h'') so that
every derived quantity (Christoffel symbols, sectional curvature, geodesic
acceleration) can be evaluated without differentiating numerically.  The
finite-difference routines at the bottom of the module are independent oracles
that only call :func:`metric_inner`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .errors import DomainError

__all__ = [
    "ConformalFactor",
    "EUCLIDEAN",
    "RADIAL",
    "EXP",
    "custom_factor",
    "parse_factor",
    "factor_eval",
    "metric_inner",
    "christoffel",
    "sectional_curvature",
    "sectional_curvature_general",
    "curve_length",
    "christoffel_fd",
    "sectional_curvature_fd",
]

# |x| below this is treated as the origin for the radial model
ORIGIN_RADIUS = 1e-12
FD_STEP = 1e-5

Triple = tuple[float, float, float]


@dataclass(frozen=True)
class ConformalFactor:
    """Radial factor F = h(t) with its first two t-derivatives.

    ``kind`` is one of ``"euclidean"``, ``"radial"``, ``"exp"`` or ``"custom"``.
    ``tmin_exclusive`` marks factors that are singular at t = 0.
    """

    kind: str
    func: Callable[[float], Triple] = field(repr=False, compare=False)
    name: str = ""
    tmin_exclusive: bool = False

    def __call__(self, t: float) -> Triple:
        return factor_eval(self, t)

    @property
    def label(self) -> str:
        return self.name or self.kind


def _euclidean(t):
    return 1.0, 0.0, 0.0


def _radial(t):
    s = math.sqrt(t)
    return s, 0.5 / s, -0.25 / (t * s)


def _exp(t):
    e = math.exp(-t)
    return e, -e, e


EUCLIDEAN = ConformalFactor("euclidean", _euclidean, "euclidean")
RADIAL = ConformalFactor("radial", _radial, "radial", tmin_exclusive=True)
EXP = ConformalFactor("exp", _exp, "exp")


def custom_factor(h, dh, ddh, name="custom", singular_at_zero=False):
    """Build a factor from three callables of t (value, first, second derivative)."""

    def func(t):
        return float(h(t)), float(dh(t)), float(ddh(t))

    return ConformalFactor("custom", func, name, tmin_exclusive=singular_at_zero)


_NAMED = {"euclidean": EUCLIDEAN, "radial": RADIAL, "exp": EXP}
_MATH = {k: getattr(math, k) for k in ("sqrt", "exp", "log", "sin", "cos", "tan", "sinh",
                                      "cosh", "tanh", "atan", "pi", "e")}


def parse_factor(text: str) -> ConformalFactor:
    """``euclidean``, ``radial``, ``exp`` or ``custom:<h>;<h'>;<h''>``.

    Custom expressions are arithmetic in ``t`` with the usual math functions,
    e.g. ``custom:1+t;1;0``.
    """
    key = text.strip()
    if key.lower() in _NAMED:
        return _NAMED[key.lower()]
    if not key.lower().startswith("custom:"):
        raise ValueError(f"unknown factor {text!r}")
    parts = key[len("custom:"):].split(";")
    if len(parts) != 3:
        raise ValueError("custom factor needs three ';'-separated expressions h;h';h''")
    codes = []
    for expr in parts:
        try:
            code = compile(expr.strip(), "<factor>", "eval")
        except SyntaxError as exc:
            raise ValueError(f"bad factor expression {expr!r}: {exc.msg}") from None
        unknown = set(code.co_names) - set(_MATH) - {"t"}
        if unknown:
            raise ValueError(f"unknown names {sorted(unknown)} in {expr!r}")
        codes.append(code)

    def make(code):
        return lambda t: eval(code, {"__builtins__": {}}, {**_MATH, "t": t})

    return custom_factor(*(make(c) for c in codes), name=key)


def factor_eval(factor: ConformalFactor, t: float, allow_zero: bool = False) -> Triple:
    """Return (h, h', h'') at t, raising DomainError outside the factor's domain.

    ``allow_zero`` admits an underflowed h = 0 for callers that never divide by h.
    """
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"t={t!r} outside [0, inf)")
    if factor.tmin_exclusive and t < ORIGIN_RADIUS**2:
        raise DomainError(f"{factor.label} factor is singular at t={t!r}")
    h, dh, ddh = factor.func(t)
    if (h == 0.0 and not allow_zero) or not math.isfinite(h):
        raise DomainError(f"{factor.label} factor vanishes or blows up at t={t!r}")
    return h, dh, ddh


def _at(factor, x):
    x = np.asarray(x, dtype=float)
    return x, factor_eval(factor, float(x @ x))


def metric_inner(factor: ConformalFactor, x, v, w) -> float:
    """g_x(v, w) = <v, w> / F(<x, x>)^2."""
    _, (h, _, _) = _at(factor, x)
    return float(np.dot(v, w)) / (h * h)


def christoffel(factor: ConformalFactor, x) -> np.ndarray:
    """Christoffel symbols as an array ``gamma[k, i, j]`` = Gamma^k_ij.

    With F_j = 2 x_j h'(t):  Gamma^j_ii = F_j/F (i != j), Gamma^i_ij = Gamma^i_ji = -F_j/F,
    and zero when i, j, k are pairwise distinct.
    """
    x, (h, dh, _) = _at(factor, x)
    d = 2.0 * x * dh / h  # F_j / F
    gamma = np.zeros((3, 3, 3))
    for i in range(3):
        for j in range(3):
            if i != j:
                gamma[j, i, i] = d[j]
            gamma[i, i, j] = -d[j]
            gamma[i, j, i] = -d[j]
    return gamma


def _third(i, j):
    if i == j or not (0 <= i < 3 and 0 <= j < 3):
        raise ValueError(f"need two distinct axis indices in 0..2, got {i}, {j}")
    return 3 - i - j


def sectional_curvature(factor: ConformalFactor, x, i: int, j: int) -> float:
    """Sectional curvature of the coordinate plane (e_i, e_j), 0-based indices.

    Radial closed form -4 h'^2 x_k^2 + 4 h h' + 4 (x_i^2 + x_j^2)(h h'' - h'^2).
    """
    k = _third(i, j)
    x, (h, dh, ddh) = _at(factor, x)
    return float(-4.0 * dh * dh * x[k] ** 2 + 4.0 * h * dh
                 + 4.0 * (x[i] ** 2 + x[j] ** 2) * (h * ddh - dh * dh))


def sectional_curvature_general(factor: ConformalFactor, x, i: int, j: int) -> float:
    """Same curvature from the general conformal formula
    [(F_i/F)_i + (F_j/F)_j - (F_k/F)^2] F^2 with F_m = 2 x_m h'."""
    k = _third(i, j)
    x, (h, dh, ddh) = _at(factor, x)

    def dlog_dd(m):
        # d/dx_m (F_m / F)
        return 2.0 * dh / h + 4.0 * x[m] ** 2 * (h * ddh - dh * dh) / (h * h)

    fk = 2.0 * x[k] * dh / h
    return float((dlog_dd(i) + dlog_dd(j) - fk * fk) * h * h)


def curve_length(factor: ConformalFactor, samples) -> float:
    """g-length of the polyline through ``samples`` (N x 3, N >= 2).

    Each segment is integrated with Simpson's rule on its endpoints and midpoint.
    """
    p = np.asarray(samples, dtype=float)
    if p.ndim != 2 or p.shape[1] != 3 or len(p) < 2:
        raise ValueError("samples must be an (N, 3) array with N >= 2")

    def inv_f(q):
        return 1.0 / factor_eval(factor, float(q @ q))[0]

    total = 0.0
    left = inv_f(p[0])
    for a, b in zip(p[:-1], p[1:]):
        right = inv_f(b)
        mid = inv_f(0.5 * (a + b))
        total += np.linalg.norm(b - a) * (left + 4.0 * mid + right) / 6.0
        left = right
    return float(total)


# -- finite-difference oracles ------------------------------------------------

_E = np.eye(3)


def _metric_matrix(factor, x):
    return np.array([[metric_inner(factor, x, _E[a], _E[b]) for b in range(3)]
                     for a in range(3)])


def christoffel_fd(factor: ConformalFactor, x, step: float = FD_STEP) -> np.ndarray:
    """Levi-Civita symbols from central differences of :func:`metric_inner`."""
    x = np.asarray(x, dtype=float)
    dg = np.empty((3, 3, 3))  # dg[l, a, b] = d_l g_ab
    for m in range(3):
        dg[m] = (_metric_matrix(factor, x + step * _E[m])
                 - _metric_matrix(factor, x - step * _E[m])) / (2.0 * step)
    ginv = np.linalg.inv(_metric_matrix(factor, x))
    # lowered[l, i, j] = 1/2 (d_i g_jl + d_j g_il - d_l g_ij)
    lowered = 0.5 * (np.einsum("ijl->lij", dg) + np.einsum("jil->lij", dg) - dg)
    return np.einsum("kl,lij->kij", ginv, lowered)


def sectional_curvature_fd(factor: ConformalFactor, x, i: int, j: int,
                           step: float = 1e-3) -> float:
    """Sectional curvature from a finite-difference Riemann tensor.

    Christoffels come from :func:`christoffel_fd`; their derivatives from a
    second central difference with ``step``.
    """
    _third(i, j)
    x = np.asarray(x, dtype=float)
    gam = christoffel_fd(factor, x)
    dgam = np.empty((3, 3, 3, 3))  # dgam[m, k, a, b] = d_m Gamma^k_ab
    for m in range(3):
        dgam[m] = (christoffel_fd(factor, x + step * _E[m])
                   - christoffel_fd(factor, x - step * _E[m])) / (2.0 * step)
    # R^l_{ijk} = d_i G^l_jk - d_j G^l_ik + G^l_im G^m_jk - G^l_jm G^m_ik
    riem = (np.einsum("iljk->lijk", dgam) - np.einsum("jlik->lijk", dgam)
            + np.einsum("lim,mjk->lijk", gam, gam)
            - np.einsum("ljm,mik->lijk", gam, gam))
    g = _metric_matrix(factor, x)
    r_ijji = g[i] @ riem[:, i, j, j]
    return float(r_ijji / (g[i, i] * g[j, j] - g[i, j] ** 2))
