import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radialgeo.errors import ParametrizationError, StepError
from radialgeo.geodesic import (christoffel_acceleration, circle_radius_drift,
                                circle_residual_closed_form, geodesic_residual, geodesic_rhs,
                                gspeed, integrate, normalize, origin_circle, radial_line,
                                straight_line)
from radialgeo.metric import EUCLIDEAN, EXP, RADIAL
from radialgeo.ode import rk4

from .conftest import LINEAR, MIXED

FACTORS = [EUCLIDEAN, RADIAL, EXP, LINEAR, MIXED]
coord = st.floats(-2.0, 2.0)
vec = st.tuples(coord, coord, coord).map(np.array)
point = vec.filter(lambda p: 0.25 < np.linalg.norm(p) < 2.5)


def test_rhs_examples():
    assert not geodesic_rhs(EUCLIDEAN, [0.3, 1.0, 2.0], [1.0, -2.0, 0.5]).any()
    np.testing.assert_allclose(geodesic_rhs(RADIAL, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0]),
                               [1.0, 0.0, 0.0], atol=1e-15)


@given(st.sampled_from(FACTORS), point, st.floats(-3.0, 3.0))
def test_radial_velocity_gives_radial_acceleration(f, x, speed):
    a = geodesic_rhs(f, x, speed * x)
    assert np.linalg.norm(np.cross(a, x)) <= 1e-12 * (1 + np.linalg.norm(a)) * np.linalg.norm(x)


@given(st.sampled_from(FACTORS), point, vec)
def test_rhs_equals_christoffel_contraction(f, x, v):
    a, b = geodesic_rhs(f, x, v), christoffel_acceleration(f, x, v)
    assert np.abs(a - b).max() <= 1e-10 * max(1.0, np.abs(b).max())


def test_normalize_and_gspeed():
    st_ = normalize(RADIAL, [0.0, 2.0, 0.0], [3.0, 0.0, 4.0])
    assert gspeed(RADIAL, st_.x, st_.xdot) == pytest.approx(1.0, rel=1e-15)
    with pytest.raises(ValueError):
        normalize(RADIAL, [1.0, 0.0, 0.0], [0.0, 0.0, 0.0])


# -- integration -----------------------------------------------------------------------------

def test_radial_shot_reaches_e():
    tr = integrate(RADIAL, [1.0, 0.0, 0.0], [5.0, 0.0, 0.0], 1.0, 1e-3)
    assert len(tr) == 1001 and not tr.exited_domain
    np.testing.assert_allclose(tr.x[-1], [math.e, 0.0, 0.0], atol=1e-6)
    np.testing.assert_allclose(tr.x[:, 0], np.exp(tr.s), rtol=1e-9)


def test_euclidean_shot_is_straight():
    d = np.array([1.0, 2.0, -2.0]) / 3.0
    tr = integrate(EUCLIDEAN, [0.5, 0.0, 1.0], d, 2.0, 0.1)
    np.testing.assert_allclose(tr.x, [0.5, 0.0, 1.0] + tr.s[:, None] * d, atol=1e-14)


@pytest.mark.parametrize("R", [0.4, 1.0, 3.0])
def test_radial_circle_shot_keeps_radius(R):
    tr = integrate(RADIAL, [R, 0.0, 0.0], [0.0, 1.0, 0.0], 1.0, 1e-3)
    assert circle_radius_drift(tr) < 1e-6


def test_exp_circle_shot_drifts():
    tr = integrate(EXP, [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], 1.0, 1e-3)
    assert circle_radius_drift(tr) > 1e-2


@pytest.mark.parametrize("f", FACTORS)
def test_speed_is_conserved(f):
    tr = integrate(f, [0.6, -0.3, 0.4], [0.2, 1.0, -0.5], 1.0, 1e-3)
    assert np.abs(tr.gspeed - 1.0).max() < 1e-6


def test_fourth_order_convergence():
    errs = [np.linalg.norm(integrate(RADIAL, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1.0, h).x[-1]
                           - [math.e, 0.0, 0.0]) for h in (0.1, 0.05)]
    assert 12.0 < errs[0] / errs[1] < 20.0


def test_step_must_be_positive():
    with pytest.raises(StepError):
        integrate(RADIAL, [1.0, 0.0, 0.0], [1.0, 0.0, 0.0], 1.0, 0.0)


def test_shot_into_origin_is_truncated_and_flagged():
    tr = integrate(RADIAL, [1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], 40.0, 0.5)
    assert tr.exited_domain and tr.s[-1] < 40.0


def test_trajectory_residual_is_small():
    tr = integrate(EXP, [0.5, 0.2, 0.0], [0.0, 1.0, 0.3], 0.5, 1e-3)
    assert tr.residual.max() < 1e-5


def test_rk4_negative_length_and_last_step():
    s, y, stopped = rk4(lambda s, y: -y, [1.0], 0.0, -0.25, 0.1)
    assert not stopped and s[-1] == -0.25 and len(s) == 4
    assert y[-1, 0] == pytest.approx(math.exp(0.25), rel=1e-6)


# -- residual tests --------------------------------------------------------------------------

@pytest.mark.parametrize("f", FACTORS)
def test_radial_lines_are_geodesics(f):
    s = np.linspace(0.0, 0.5, 11)
    for d in ([1, 0, 0], [0.3, -1, 2]):
        assert geodesic_residual(f, *radial_line(f, d, 0.8, s)) < 1e-8


@pytest.mark.parametrize("R", [0.2, 1.0, 5.0])
def test_radial_circles_are_geodesics(R):
    assert geodesic_residual(RADIAL, *origin_circle(RADIAL, R, np.linspace(0, 2, 21))) < 1e-8


def test_exp_circle_residual_value():
    res = geodesic_residual(EXP, *origin_circle(EXP, 1.0, np.linspace(0, 1, 11)))
    assert res == pytest.approx(3.0 * math.exp(-2.0), abs=1e-6)
    assert res == pytest.approx(0.40600585, abs=1e-8)
    assert circle_residual_closed_form(EXP, 1.0) == pytest.approx(res, rel=1e-12)
    assert circle_residual_closed_form(RADIAL, 2.0) == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("p, d", [([0.0, 0.5, 0.0], [1, 0, 0]), ([1.0, 1.0, 0.0], [0, 0, 1]),
                                  ([0.0, 0.0, 2.0], [1, 1, 0]), ([0.6, 0.0, 0.0], [0, 1, 1])])
def test_non_radial_lines_are_not_geodesics(p, d):
    res = geodesic_residual(RADIAL, *straight_line(RADIAL, p, d, np.linspace(-0.4, 0.4, 9)))
    assert res > 1e-2


def test_radial_straight_line_is_a_geodesic():
    res = geodesic_residual(RADIAL, *straight_line(RADIAL, [0.0, 1.0, 0.0], [0, 1, 0],
                                                   np.linspace(-0.5, 0.5, 9)))
    assert res < 1e-12


def test_residual_rejects_wrong_parametrization():
    x, dx, ddx = origin_circle(RADIAL, 1.0, np.linspace(0, 1, 5))
    with pytest.raises(ParametrizationError):
        geodesic_residual(RADIAL, x, 2.0 * dx, ddx)
