"""Parametrized surfaces, their second-order jets and Euclidean curvature data.

Orientation and sign conventions
--------------------------------
* ``N = X_u x X_v / |X_u x X_v|``.
* ``k1, k2`` are the eigenvalues of the shape matrix ``I^{-1} II`` with
  ``II = (<X_ab, N>)`` -- the principal curvatures with respect to ``N``.
* ``lam1, lam2 = -k1, -k2``.  For the rotation parametrization
  ``(phi cos v, phi sin v, u)`` this gives ``lam1 = phi''/a^3`` and
  ``lam2 = -1/(phi a)``; an origin sphere of radius R has ``lam = -1/R``.
* ``H = (k1 + k2)/2`` and ``K = k1 k2``, so ``X_uu + X_vv = 2 E H N`` holds in
  isothermal parameters and an origin sphere (inward normal) has ``H = 1/R``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from . import jet2
from .errors import DomainError, NotIsothermalError, RegularityError
from .jet2 import Jet2
from .metric import EUCLIDEAN, ConformalFactor, factor_eval

__all__ = [
    "SurfaceSpec", "SurfaceJet", "EuclideanCurvature", "IsothermalReport",
    "sphere_origin", "sphere_mercator", "sphere_general", "plane", "cone",
    "catenoid", "helicoid", "enneper", "rotation_profile", "custom", "invert_surface",
    "jet", "euclidean_curvatures", "curvature_at", "position", "grid_points", "isothermal_check",
    "intrinsic_gauss", "inversion_normal", "inversion_weingarten_residual",
    "catalog", "from_json",
]

REGULARITY_TOL = 1e-10
ORIGIN_TOL = 1e-10
POLE_SHRINK = 1e-3

Domain = tuple[float, float, float, float]
Profile = Callable[[float], tuple[float, float, float]]


@dataclass(frozen=True, eq=False)
class SurfaceSpec:
    """Immutable description of a parametrized surface over a rectangle.

    ``params`` holds the JSON-serializable parameters; callables (rotation
    profile, custom map) and the wrapped surface of an inversion live in
    ``extra``.
    """

    name: str
    params: dict = field(default_factory=dict)
    domain: Domain = (0.0, 1.0, 0.0, 1.0)
    extra: dict = field(default_factory=dict, repr=False)

    def to_json(self) -> dict:
        if self.name == "Inverted":
            return {"name": "Inverted", "params": {"inner": self.extra["inner"].to_json()},
                    "domain": list(self.domain)}
        if self.name in ("Custom", "RotationProfile"):
            raise ValueError(f"{self.name} surfaces carry callables and cannot be serialized")
        params = {k: (list(v) if isinstance(v, (tuple, list, np.ndarray)) else v)
                  for k, v in self.params.items()}
        return {"name": self.name, "params": params, "domain": list(self.domain)}

    def with_domain(self, domain) -> "SurfaceSpec":
        return replace(self, domain=tuple(float(d) for d in domain))

    def contains(self, u, v, slack=1e-12) -> bool:
        u0, u1, v0, v1 = self.domain
        return u0 - slack <= u <= u1 + slack and v0 - slack <= v <= v1 + slack


@dataclass(frozen=True)
class SurfaceJet:
    X: np.ndarray
    Xu: np.ndarray
    Xv: np.ndarray
    Xuu: np.ndarray
    Xuv: np.ndarray
    Xvv: np.ndarray

    def swapped(self) -> "SurfaceJet":
        """Jet of the same surface with u and v exchanged (reverses N)."""
        return SurfaceJet(self.X, self.Xv, self.Xu, self.Xvv, self.Xuv, self.Xuu)

    def as_jets(self) -> list[Jet2]:
        return [Jet2(*(float(a[i]) for a in (self.X, self.Xu, self.Xv, self.Xuu, self.Xuv, self.Xvv)))
                for i in range(3)]

    @classmethod
    def from_jets(cls, comps) -> "SurfaceJet":
        comps = [c if isinstance(c, Jet2) else Jet2.const(c) for c in comps]
        return cls(*(np.array([getattr(c, a) for c in comps])
                     for a in ("v", "du", "dv", "duu", "duv", "dvv")))


@dataclass(frozen=True)
class EuclideanCurvature:
    X: np.ndarray
    N: np.ndarray
    E: float
    Fmix: float
    G: float
    e: float
    f: float
    g: float
    lam1: float
    lam2: float
    H: float
    K: float
    t: float
    nu: float

    @property
    def weingarten(self) -> np.ndarray:
        """-I^{-1} II in the parameter basis (eigenvalues lam1, lam2)."""
        first = np.array([[self.E, self.Fmix], [self.Fmix, self.G]])
        second = np.array([[self.e, self.f], [self.f, self.g]])
        return -np.linalg.solve(first, second)

    def flipped(self) -> "EuclideanCurvature":
        """Same point with the opposite unit normal."""
        return replace(self, N=-self.N, e=-self.e, f=-self.f, g=-self.g,
                       lam1=-self.lam1, lam2=-self.lam2, H=-self.H, nu=-self.nu)


# -- catalog ------------------------------------------------------------------

def _shrunk(lo, hi):
    d = POLE_SHRINK * (hi - lo)
    return lo + d, hi - d


def rotation_profile(profile: Profile, domain: Domain, name="RotationProfile", **params) -> SurfaceSpec:
    """Rotation surface (phi(u) cos v, phi(u) sin v, u); profile(u) -> (phi, phi', phi'')."""
    return SurfaceSpec(name, dict(params), tuple(map(float, domain)), {"profile": profile})


def _sphere_profile(R):
    def prof(u):
        p = math.sqrt(R * R - u * u)
        return p, -u / p, -R * R / p**3
    return prof


def sphere_origin(R: float = 1.0, domain=None) -> SurfaceSpec:
    """Origin sphere as a rotation surface with phi = sqrt(R^2 - u^2)."""
    if R <= 0:
        raise ValueError("radius must be positive")
    if domain is None:
        domain = (*_shrunk(-R, R), 0.0, 2.0 * math.pi)
    return rotation_profile(_sphere_profile(R), domain, "SphereOrigin", R=float(R))


def sphere_mercator(R: float = 1.0, domain=(-2.0, 2.0, 0.0, 2.0 * math.pi)) -> SurfaceSpec:
    """Origin sphere in isothermal coordinates R(sech u cos v, sech u sin v, tanh u)."""
    return SurfaceSpec("SphereMercator", {"R": float(R)}, tuple(map(float, domain)))


def sphere_general(center=(0.0, 0.0, 0.0), r: float = 1.0,
                   domain=(-1.4, 1.4, 0.0, 2.0 * math.pi)) -> SurfaceSpec:
    return SurfaceSpec("SphereGeneral", {"center": [float(c) for c in center], "r": float(r)},
                       tuple(map(float, domain)))


def plane(normal=(0.0, 0.0, 1.0), domain=(0.5, 2.0, 0.5, 2.0)) -> SurfaceSpec:
    """Plane through the origin, X = u a + v b with (a, b, normal) right-handed."""
    return SurfaceSpec("PlaneThroughOrigin", {"normal": [float(c) for c in normal]},
                       tuple(map(float, domain)))


def cone(slope: float = 1.0, domain=(0.5, 2.0, 0.0, 2.0 * math.pi)) -> SurfaceSpec:
    """Circular cone with apex at the origin: phi(u) = slope * u."""
    s = float(slope)
    return rotation_profile(lambda u: (s * u, s, 0.0), domain, "Cone", slope=s)


def catenoid(c: float = 1.0, domain=(-1.0, 1.0, 0.0, 2.0 * math.pi)) -> SurfaceSpec:
    c = float(c)
    return rotation_profile(
        lambda u: (c * math.cosh(u / c), math.sinh(u / c), math.cosh(u / c) / c),
        domain, "Catenoid", c=c)


def helicoid(c: float = 1.0, domain=(-1.0, 1.0, 0.3, 2.0)) -> SurfaceSpec:
    """Isothermal helicoid c (sinh u cos v, sinh u sin v, v) about the x3 axis."""
    return SurfaceSpec("Helicoid", {"c": float(c)}, tuple(map(float, domain)))


def enneper(domain=(0.2, 1.0, 0.2, 1.0)) -> SurfaceSpec:
    return SurfaceSpec("Enneper", {}, tuple(map(float, domain)))


def custom(func, domain: Domain, **params) -> SurfaceSpec:
    """Surface given by ``func(u, v) -> (x1, x2, x3)`` written with :mod:`radialgeo.jet2`."""
    return SurfaceSpec("Custom", dict(params), tuple(map(float, domain)), {"map": func})


def invert_surface(spec: SurfaceSpec) -> SurfaceSpec:
    """Image of ``spec`` under x -> x / <x, x>, on the same parameter domain."""
    return SurfaceSpec("Inverted", {}, spec.domain, {"inner": spec})


def catalog() -> dict[str, SurfaceSpec]:
    """Default test surfaces, all on domains that avoid the origin."""
    return {
        "sphere_origin": sphere_origin(1.0),
        "sphere_origin_R2": sphere_origin(2.0),
        "sphere_mercator": sphere_mercator(1.0),
        "sphere_general": sphere_general((0.3, -0.2, 1.5), 0.7),
        "plane": plane((0.0, 0.0, 1.0)),
        "plane_oblique": plane((1.0, 2.0, -0.5)),
        "cone": cone(0.8),
        "catenoid": catenoid(1.0),
        "helicoid": helicoid(1.0),
        "enneper": enneper(),
        "rotation_generic": rotation_profile(
            lambda u: (2.0 + math.sin(u), math.cos(u), -math.sin(u)),
            (-1.0, 1.0, 0.0, 2.0 * math.pi), "RotationProfile"),
        "inverted_catenoid": invert_surface(catenoid(1.0)),
        "custom_torus": custom(
            lambda u, v: ((2.0 + 0.5 * jet2.cos(u)) * jet2.cos(v),
                          (2.0 + 0.5 * jet2.cos(u)) * jet2.sin(v), 0.5 * jet2.sin(u)),
            (0.1, 6.0, 0.1, 6.0), a=2.0, b=0.5),
    }


def from_json(obj) -> SurfaceSpec:
    """Inverse of :meth:`SurfaceSpec.to_json` for catalog surfaces."""
    name = obj["name"]
    p = dict(obj.get("params", {}))
    dom = obj.get("domain")
    kw = {} if dom is None else {"domain": tuple(float(d) for d in dom)}
    if name == "SphereOrigin":
        return sphere_origin(p.get("R", 1.0), **kw)
    if name == "SphereMercator":
        return sphere_mercator(p.get("R", 1.0), **kw)
    if name == "SphereGeneral":
        return sphere_general(p.get("center", (0, 0, 0)), p.get("r", 1.0), **kw)
    if name == "PlaneThroughOrigin":
        return plane(p.get("normal", (0, 0, 1)), **kw)
    if name == "Cone":
        return cone(p.get("slope", 1.0), **kw)
    if name == "Catenoid":
        return catenoid(p.get("c", 1.0), **kw)
    if name == "Helicoid":
        return helicoid(p.get("c", 1.0), **kw)
    if name == "Enneper":
        return enneper(**kw)
    if name == "Inverted":
        inner = from_json(p["inner"])
        return invert_surface(inner) if dom is None else invert_surface(inner).with_domain(dom)
    raise ValueError(f"surface {name!r} cannot be built from JSON")


# -- jets -----------------------------------------------------------------------

def _rotation_jet(prof, u, v):
    p, dp, ddp = prof(u)
    c, s = math.cos(v), math.sin(v)
    return SurfaceJet(
        np.array([p * c, p * s, u]), np.array([dp * c, dp * s, 1.0]),
        np.array([-p * s, p * c, 0.0]), np.array([ddp * c, ddp * s, 0.0]),
        np.array([-dp * s, dp * c, 0.0]), np.array([-p * c, -p * s, 0.0]))


def _plane_basis(normal):
    n = np.asarray(normal, dtype=float)
    n = n / np.linalg.norm(n)
    seed = np.eye(3)[int(np.argmin(np.abs(n)))]
    a = np.cross(seed, n)
    a /= np.linalg.norm(a)
    return a, np.cross(n, a)


def _jet_raw(spec: SurfaceSpec, u: float, v: float) -> SurfaceJet:
    name, p = spec.name, spec.params
    c, s = math.cos(v), math.sin(v)
    if "profile" in spec.extra:
        return _rotation_jet(spec.extra["profile"], u, v)
    if name == "SphereMercator":
        R = p["R"]
        sh, th = 1.0 / math.cosh(u), math.tanh(u)
        d1, d2 = -sh * th, sh * th * th - sh**3
        return SurfaceJet(
            R * np.array([sh * c, sh * s, th]), R * np.array([d1 * c, d1 * s, sh * sh]),
            R * np.array([-sh * s, sh * c, 0.0]), R * np.array([d2 * c, d2 * s, -2.0 * sh * sh * th]),
            R * np.array([-d1 * s, d1 * c, 0.0]), R * np.array([-sh * c, -sh * s, 0.0]))
    if name == "SphereGeneral":
        r, ctr = p["r"], np.asarray(p["center"], dtype=float)
        cu, su = math.cos(u), math.sin(u)
        return SurfaceJet(
            ctr + r * np.array([cu * c, cu * s, su]), r * np.array([-su * c, -su * s, cu]),
            r * np.array([-cu * s, cu * c, 0.0]), r * np.array([-cu * c, -cu * s, -su]),
            r * np.array([su * s, -su * c, 0.0]), r * np.array([-cu * c, -cu * s, 0.0]))
    if name == "PlaneThroughOrigin":
        a, b = _plane_basis(p["normal"])
        z = np.zeros(3)
        return SurfaceJet(u * a + v * b, a, b, z, z, z)
    if name == "Helicoid":
        k = p["c"]
        ch, sh = math.cosh(u), math.sinh(u)
        return SurfaceJet(
            k * np.array([sh * c, sh * s, v]), k * np.array([ch * c, ch * s, 0.0]),
            k * np.array([-sh * s, sh * c, 1.0]), k * np.array([sh * c, sh * s, 0.0]),
            k * np.array([-ch * s, ch * c, 0.0]), k * np.array([-sh * c, -sh * s, 0.0]))
    if name == "Enneper":
        return SurfaceJet(
            np.array([u - u**3 / 3 + u * v * v, v - v**3 / 3 + u * u * v, u * u - v * v]),
            np.array([1 - u * u + v * v, 2 * u * v, 2 * u]),
            np.array([2 * u * v, 1 - v * v + u * u, -2 * v]),
            np.array([-2 * u, 2 * v, 2.0]), np.array([2 * v, 2 * u, 0.0]),
            np.array([2 * u, -2 * v, -2.0]))
    if name == "Inverted":
        comps = _jet_raw(spec.extra["inner"], u, v).as_jets()
        t = comps[0] * comps[0] + comps[1] * comps[1] + comps[2] * comps[2]
        if t.v <= ORIGIN_TOL:
            raise DomainError(f"inner surface meets the origin at (u, v)=({u}, {v})")
        return SurfaceJet.from_jets([x / t for x in comps])
    if name == "Custom":
        uu, vv = Jet2.variables(u, v)
        return SurfaceJet.from_jets(spec.extra["map"](uu, vv))
    raise ValueError(f"unknown surface {name!r}")


def jet(spec: SurfaceSpec, u: float, v: float) -> SurfaceJet:
    """Second-order jet of ``spec`` at (u, v).

    Raises DomainError outside the parameter rectangle and RegularityError where
    |X_u x X_v| <= 1e-10.
    """
    if not spec.contains(u, v):
        raise DomainError(f"(u, v)=({u}, {v}) outside domain {spec.domain}")
    j = _jet_raw(spec, u, v)
    if np.linalg.norm(np.cross(j.Xu, j.Xv)) <= REGULARITY_TOL:
        raise RegularityError(f"{spec.name} is singular at (u, v)=({u}, {v})")
    return j


def euclidean_curvatures(j: SurfaceJet) -> EuclideanCurvature:
    cross = np.cross(j.Xu, j.Xv)
    area = float(np.linalg.norm(cross))
    if area <= REGULARITY_TOL:
        raise RegularityError("degenerate tangent plane")
    N = cross / area
    E, Fm, G = float(j.Xu @ j.Xu), float(j.Xu @ j.Xv), float(j.Xv @ j.Xv)
    e, f, g = float(j.Xuu @ N), float(j.Xuv @ N), float(j.Xvv @ N)
    det = E * G - Fm * Fm
    H = (e * G - 2.0 * f * Fm + g * E) / (2.0 * det)
    K = (e * g - f * f) / det
    shape = np.linalg.solve([[E, Fm], [Fm, G]], [[e, f], [f, g]])
    scale = abs(shape[0, 0]) + abs(shape[1, 1]) + 1.0
    if abs(shape[0, 1]) <= 1e-13 * scale and abs(shape[1, 0]) <= 1e-13 * scale:
        k1, k2 = shape[0, 0], shape[1, 1]
    else:
        root = math.sqrt(max(H * H - K, 0.0))
        k1, k2 = H + root, H - root
    X = np.asarray(j.X, dtype=float)
    return EuclideanCurvature(X=X, N=N, E=E, Fmix=Fm, G=G, e=e, f=f, g=g,
                              lam1=-float(k1), lam2=-float(k2), H=H, K=K,
                              t=float(X @ X), nu=float(X @ N))


def position(spec: SurfaceSpec, u: float, v: float) -> np.ndarray:
    """X(u, v) without domain or regularity checks."""
    return _jet_raw(spec, u, v).X


def curvature_at(spec: SurfaceSpec, u: float, v: float) -> EuclideanCurvature:
    return euclidean_curvatures(jet(spec, u, v))


def grid_points(spec: SurfaceSpec, grid) -> list[tuple[float, float]]:
    """u-major list of (u, v) on an ``(nu, nv)`` grid spanning the domain."""
    nu, nv = grid
    u0, u1, v0, v1 = spec.domain
    return [(float(u), float(v)) for u in np.linspace(u0, u1, nu) for v in np.linspace(v0, v1, nv)]


# -- isothermality and intrinsic curvature ----------------------------------------

@dataclass(frozen=True)
class IsothermalReport:
    max_EG_diff: float
    max_Fmix: float
    max_E: float

    @property
    def orthogonal(self) -> bool:
        return self.max_Fmix < 1e-8 * self.max_E

    @property
    def isothermal(self) -> bool:
        return self.orthogonal and self.max_EG_diff < 1e-8 * self.max_E


def isothermal_check(spec: SurfaceSpec, grid=(10, 10)) -> IsothermalReport:
    d_eg = d_f = e_max = 0.0
    for u, v in grid_points(spec, grid):
        j = _jet_raw(spec, u, v)
        E, G = j.Xu @ j.Xu, j.Xv @ j.Xv
        d_eg = max(d_eg, abs(E - G))
        d_f = max(d_f, abs(j.Xu @ j.Xv))
        e_max = max(e_max, E, G)
    return IsothermalReport(float(d_eg), float(d_f), float(e_max))


def _scaled_forms(spec, factor, u, v):
    """(E~, G~, E~_v, G~_u) for the first form of ``spec`` scaled by 1/F^2.

    First derivatives come from the jet; no second fundamental form data is used.
    """
    j = _jet_raw(spec, u, v)
    E, G = j.Xu @ j.Xu, j.Xv @ j.Xv
    Ev, Gu = 2.0 * (j.Xuv @ j.Xu), 2.0 * (j.Xuv @ j.Xv)
    h, dh, _ = factor_eval(factor, float(j.X @ j.X))
    Fu, Fv = 2.0 * dh * (j.X @ j.Xu), 2.0 * dh * (j.X @ j.Xv)
    s = 1.0 / (h * h)
    return E * s, G * s, (Ev - 2.0 * E * Fv / h) * s, (Gu - 2.0 * G * Fu / h) * s


def intrinsic_gauss(spec: SurfaceSpec, grid=(10, 10), factor: ConformalFactor = EUCLIDEAN,
                    step: float = 1e-4) -> np.ndarray:
    """Gauss curvature of the first form (scaled by 1/F^2) from metric data alone.

    Uses K = -1/(2 sqrt(EG)) [(E_v/sqrt(EG))_v + (G_u/sqrt(EG))_u], valid in
    orthogonal parameters (isothermal ones included); the outer derivatives are
    central differences with ``step``.  Returns an ``(nu, nv)`` array.
    """
    rep = isothermal_check(spec, grid)
    if not rep.orthogonal:
        raise NotIsothermalError(f"{spec.name}: max |F| = {rep.max_Fmix:.3g}, need orthogonal parameters")

    def ev_term(u, v):
        E, G, Ev, _ = _scaled_forms(spec, factor, u, v)
        return Ev / math.sqrt(E * G)

    def gu_term(u, v):
        E, G, _, Gu = _scaled_forms(spec, factor, u, v)
        return Gu / math.sqrt(E * G)

    out = []
    for u, v in grid_points(spec, grid):
        E, G, _, _ = _scaled_forms(spec, factor, u, v)
        d_v = (ev_term(u, v + step) - ev_term(u, v - step)) / (2.0 * step)
        d_u = (gu_term(u + step, v) - gu_term(u - step, v)) / (2.0 * step)
        out.append(-(d_v + d_u) / (2.0 * math.sqrt(E * G)))
    return np.array(out).reshape(grid)


# -- inversion ----------------------------------------------------------------------

def inversion_normal(curv: EuclideanCurvature) -> np.ndarray:
    """Predicted unit normal N - 2 <X, N> X / <X, X> of the inverted surface."""
    return curv.N - 2.0 * curv.nu * curv.X / curv.t


def inversion_weingarten_residual(spec: SurfaceSpec, u: float, v: float) -> dict:
    """Compare the inverted surface's Weingarten matrix with t W - 2 nu Id.

    ``W`` is -I^{-1} II in the shared (u, v) basis.  The inverted matrix is
    computed twice: with the normal oriented along the predicted inversion
    normal and with the cross-product normal of the inverted immersion.
    """
    c = curvature_at(spec, u, v)
    ci = curvature_at(invert_surface(spec), u, v)
    predicted = c.t * c.weingarten - 2.0 * c.nu * np.eye(2)
    sign = float(np.sign(ci.N @ inversion_normal(c)))
    w_pred_orient = ci.weingarten * sign
    return {
        "normal_sign": sign,
        "residual_predicted_normal": float(np.abs(w_pred_orient - predicted).max()),
        "residual_cross_normal": float(np.abs(ci.weingarten - predicted).max()),
        "normal_mismatch": float(np.linalg.norm(sign * ci.N - inversion_normal(c))),
    }
