import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radialgeo.conformal import (gauss_conformal, inversion_mean_curvature_check, transform,
                                 weingarten_functionals)
from radialgeo.errors import DomainError
from radialgeo.metric import EUCLIDEAN, EXP, RADIAL
from radialgeo.surface import (catalog, catenoid, cone, curvature_at, enneper, grid_points,
                               helicoid, intrinsic_gauss, invert_surface, plane, sphere_origin)

from .conftest import LINEAR, MIXED

CATALOG = catalog()
FACTORS = [EUCLIDEAN, RADIAL, EXP, LINEAR, MIXED]
unit = st.floats(0.0, 1.0)


def point_of(name, a, b):
    spec = CATALOG[name]
    u0, u1, v0, v1 = spec.domain
    return curvature_at(spec, u0 + a * (u1 - u0), v0 + b * (v1 - v0))


# -- transform examples ----------------------------------------------------------------------

@pytest.mark.parametrize("R", [0.5, 1.0, 3.0])
def test_radial_origin_sphere_is_totally_geodesic(R):
    cc = transform(RADIAL, curvature_at(sphere_origin(R), 0.2 * R, 1.0))
    assert abs(cc.lam1) < 1e-12 and abs(cc.lam2) < 1e-12
    assert abs(cc.KE) < 1e-12 and abs(cc.H) < 1e-12
    assert cc.K == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("R", [0.5, 1.0, 2.0])
def test_exp_origin_sphere_extrinsic_curvature(R):
    cc = transform(EXP, curvature_at(sphere_origin(R), 0.1, 0.3))
    expected = (1 + 2 * R * R) ** 2 * math.exp(-2 * R * R) / (R * R)
    assert cc.KE == pytest.approx(expected, rel=1e-12)


def test_euclidean_factor_is_identity():
    c = point_of("catenoid", 0.3, 0.4)
    cc = transform(EUCLIDEAN, c)
    assert (cc.lam1, cc.lam2, cc.H, cc.KE, cc.K) == pytest.approx(
        (c.lam1, c.lam2, c.H, c.K, c.K), abs=1e-15)


# -- gauss_conformal ------------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(CATALOG))
@given(unit, unit)
def test_radial_gauss_closed_form(name, a, b):
    c = point_of(name, a, b)
    expected = c.t * c.K + 2 * c.nu * c.H + 2 * c.nu ** 2 / c.t
    assert gauss_conformal(RADIAL, c) == pytest.approx(expected, abs=1e-11)


def test_gauss_examples():
    waist = curvature_at(catenoid(), 0.0, 0.0)
    assert gauss_conformal(RADIAL, waist) == pytest.approx(1.0, abs=1e-14)
    c = point_of("enneper", 0.5, 0.5)
    assert gauss_conformal(EUCLIDEAN, c) == c.K


@pytest.mark.parametrize("name", ["sphere_origin", "sphere_mercator", "catenoid", "helicoid",
                                  "enneper", "cone", "rotation_generic", "inverted_catenoid"])
@pytest.mark.parametrize("factor", [RADIAL, EXP, MIXED])
def test_gauss_matches_intrinsic_scaled_metric(name, factor):
    spec = CATALOG[name]
    k_int = intrinsic_gauss(spec, (5, 5), factor=factor).ravel()
    k_cf = [gauss_conformal(factor, curvature_at(spec, u, v)) for u, v in grid_points(spec, (5, 5))]
    assert np.abs(k_int - k_cf).max() < 1e-4


# -- identities ---------------------------------------------------------------------------------

@pytest.mark.parametrize("name", sorted(CATALOG))
@given(unit, unit)
def test_radial_identities(name, a, b):
    c = point_of(name, a, b)
    cc = transform(RADIAL, c)
    t, nu, H, K = c.t, c.nu, c.H, c.K
    assert cc.KE == pytest.approx(t * K + 2 * nu * H + nu * nu / t, abs=1e-10)
    assert cc.H ** 2 == pytest.approx(t * H * H + 2 * nu * H + nu * nu / t, abs=1e-10)
    assert cc.KE + cc.H ** 2 - cc.K == pytest.approx(H * (t * H + 2 * nu), abs=1e-10)
    w1, w2, ed = weingarten_functionals(c)
    assert (cc.W1, cc.W2) == pytest.approx((w1, w2), abs=1e-10)
    assert ed == w2


@pytest.mark.parametrize("name", sorted(CATALOG))
@given(st.sampled_from(FACTORS), unit, unit)
def test_transform_internal_consistency(name, factor, a, b):
    cc = transform(factor, point_of(name, a, b))
    assert abs(cc.KE - cc.lam1 * cc.lam2) <= 1e-10 * max(1.0, abs(cc.KE))
    assert cc.KE == pytest.approx(cc.KE_euclid, rel=1e-10, abs=1e-12)
    assert cc.H == pytest.approx(-cc.H_from_lam, rel=1e-12, abs=1e-14)


@pytest.mark.parametrize("name", sorted(CATALOG))
@given(st.sampled_from(FACTORS), unit, unit)
def test_orientation_invariance(name, factor, a, b):
    c = point_of(name, a, b)
    x, y = transform(factor, c), transform(factor, c.flipped())
    for attr in ("W1", "W2", "K", "KE"):
        assert abs(getattr(x, attr) - getattr(y, attr)) <= 1e-14 * max(1.0, abs(getattr(x, attr)))
    assert abs(x.H ** 2 - y.H ** 2) <= 1e-14 * max(1.0, x.H ** 2)


# -- Weingarten classes -----------------------------------------------------------------------

@pytest.mark.parametrize("spec", [catenoid(), catenoid(2.5), helicoid(), enneper(), plane(),
                                  invert_surface(catenoid()), invert_surface(enneper())])
def test_minimal_surfaces_are_class_one(spec):
    for u, v in grid_points(spec, (6, 6)):
        assert abs(weingarten_functionals(curvature_at(spec, u, v))[0]) < 1e-9


@pytest.mark.parametrize("spec", [plane(), plane((1, 1, 1)), cone(0.8), cone(3.0)])
def test_planes_and_cones_are_class_two(spec):
    for u, v in grid_points(spec, (6, 6)):
        assert abs(weingarten_functionals(curvature_at(spec, u, v))[1]) < 1e-9


def test_catenoid_waist_w2():
    assert weingarten_functionals(curvature_at(catenoid(), 0.0, 0.0))[1] == pytest.approx(-1.0, abs=1e-14)


def test_cone_is_not_class_one():
    spec = cone(0.8)
    assert min(abs(weingarten_functionals(curvature_at(spec, u, v))[0])
               for u, v in grid_points(spec, (6, 6))) >= 0.1


def test_unit_sphere_functionals_frozen():
    # K~_E = H~ = 0 and K~ = 1 force W1 = W2 = -1
    c = curvature_at(sphere_origin(1.0), 0.0, 0.0)
    w1, w2, _ = weingarten_functionals(c)
    assert (w1, w2) == pytest.approx((-1.0, -1.0), abs=1e-14)


def test_functionals_need_radial_factor():
    with pytest.raises(ValueError):
        weingarten_functionals(point_of("catenoid", 0.5, 0.5), EXP)


# -- mean curvature under inversion -------------------------------------------------------------

@pytest.mark.parametrize("R", [0.5, 1.0, 2.0, 3.0])
def test_inverted_sphere_mean_curvature(R):
    spec = sphere_origin(R)
    r = inversion_mean_curvature_check(curvature_at(spec, 0.3 * R, 0.5),
                                       curvature_at(invert_surface(spec), 0.3 * R, 0.5))
    assert r["residual_plus"] < 1e-12
    assert r["residual_minus"] == pytest.approx(4 * R, rel=1e-12)
    assert r["match"] == "plus"


def test_inverted_plane_both_residuals_vanish():
    spec = plane((0.0, 1.0, 1.0))
    r = inversion_mean_curvature_check(curvature_at(spec, 1.0, 1.0),
                                       curvature_at(invert_surface(spec), 1.0, 1.0))
    assert r["residual_plus"] < 1e-14 and r["residual_minus"] < 1e-14 and r["match"] == "both"


@pytest.mark.parametrize("spec", [catenoid(), enneper(), helicoid(), cone(0.8)])
def test_inversion_mean_curvature_plus_sign(spec):
    inv = invert_surface(spec)
    for u, v in grid_points(spec, (4, 4)):
        r = inversion_mean_curvature_check(curvature_at(spec, u, v), curvature_at(inv, u, v))
        assert r["residual_plus"] < 1e-9


def test_inversion_check_rejects_origin():
    c = point_of("catenoid", 0.5, 0.5)
    bad = type(c)(**{**c.__dict__, "t": 0.0})
    with pytest.raises(DomainError):
        inversion_mean_curvature_check(bad, c)
