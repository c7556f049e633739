import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from radialgeo.errors import DomainError
from radialgeo.metric import (EUCLIDEAN, EXP, RADIAL, christoffel, christoffel_fd, curve_length,
                              factor_eval, metric_inner, parse_factor, sectional_curvature,
                              sectional_curvature_fd, sectional_curvature_general)

from .conftest import LINEAR, MIXED

FACTORS = [EUCLIDEAN, RADIAL, EXP, LINEAR, MIXED]
coord = st.floats(-2.0, 2.0, allow_nan=False)
point = st.tuples(coord, coord, coord).filter(lambda p: 0.25 < math.hypot(*p) < 2.5).map(np.array)
factor = st.sampled_from(FACTORS)
PLANES = [(0, 1), (0, 2), (1, 2)]


# -- factor_eval ----------------------------------------------------------------------------

@pytest.mark.parametrize("f, t, expected", [
    (EUCLIDEAN, 5.0, (1.0, 0.0, 0.0)),
    (RADIAL, 4.0, (2.0, 0.25, -0.03125)),
    (EXP, 0.0, (1.0, -1.0, 1.0)),
])
def test_factor_eval_examples(f, t, expected):
    assert factor_eval(f, t) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("f, t", [(RADIAL, 0.0), (RADIAL, 1e-30), (EXP, -1.0), (EUCLIDEAN, math.nan)])
def test_factor_eval_rejects_outside_domain(f, t):
    with pytest.raises(DomainError):
        factor_eval(f, t)


def test_underflowed_factor_rejected_unless_allowed():
    with pytest.raises(DomainError):
        factor_eval(EXP, 800.0)
    assert factor_eval(EXP, 800.0, allow_zero=True)[0] == 0.0


@given(st.floats(1e-6, 1e6))
def test_radial_derivatives_closed_form(t):
    h, dh, ddh = factor_eval(RADIAL, t)
    assert dh == pytest.approx(1.0 / (2.0 * math.sqrt(t)), rel=1e-15)
    assert ddh == pytest.approx(-(t ** -1.5) / 4.0, rel=1e-14)


@given(factor, st.floats(0.05, 4.0))
def test_first_derivative_matches_finite_difference(f, t):
    step = 1e-5
    fd = (factor_eval(f, t + step)[0] - factor_eval(f, t - step)[0]) / (2 * step)
    dh = factor_eval(f, t)[1]
    assert abs(fd - dh) <= 1e-6 * max(1.0, abs(dh))


def test_parse_factor():
    assert parse_factor("radial") is RADIAL
    assert parse_factor("EXP") is EXP
    f = parse_factor("custom:1+t*t;2*t;2")
    assert f(3.0) == (10.0, 6.0, 2.0)
    for bad in ("spline", "custom:1;2", "custom:open('x');0;0", "custom:1+;0;0"):
        with pytest.raises(ValueError):
            parse_factor(bad)


# -- metric_inner -----------------------------------------------------------------------------

def test_metric_inner_examples():
    e1, e2 = np.eye(3)[0], np.eye(3)[1]
    assert metric_inner(EUCLIDEAN, [3.0, -1.0, 2.0], e1, e1) == 1.0
    assert metric_inner(RADIAL, [0.0, 0.0, 2.0], e1, e1) == 0.25
    assert metric_inner(RADIAL, [1.0, 0.0, 0.0], e1, e2) == 0.0
    with pytest.raises(DomainError):
        metric_inner(RADIAL, [0.0, 0.0, 0.0], e1, e1)


# -- Christoffel symbols ----------------------------------------------------------------------

def test_christoffel_euclidean_zero():
    assert not christoffel(EUCLIDEAN, [0.3, 1.0, -2.0]).any()


def test_christoffel_radial_at_e1():
    g = christoffel(RADIAL, [1.0, 0.0, 0.0])  # g[k, i, j]
    expected = np.zeros((3, 3, 3))
    expected[0, 0, 0] = -1.0
    expected[0, 1, 1] = expected[0, 2, 2] = 1.0
    expected[1, 0, 1] = expected[1, 1, 0] = -1.0
    expected[2, 0, 2] = expected[2, 2, 0] = -1.0
    np.testing.assert_allclose(g, expected, atol=1e-15)


@given(factor, point)
def test_christoffel_symmetry_and_sparsity(f, x):
    g = christoffel(f, x)
    assert np.array_equal(g, np.swapaxes(g, 1, 2))
    assert g[0, 1, 2] == g[1, 0, 2] == g[2, 0, 1] == 0.0


@given(factor, point)
def test_christoffel_matches_fd_oracle(f, x):
    assert np.abs(christoffel(f, x) - christoffel_fd(f, x)).max() < 1e-6


# -- sectional curvature ----------------------------------------------------------------------

@pytest.mark.parametrize("f, x, ij, expected", [
    (RADIAL, [0.0, 0.0, 1.0], (0, 1), 1.0),
    (RADIAL, [1.0, 0.0, 0.0], (0, 1), 0.0),
    (EUCLIDEAN, [0.4, -1.0, 2.0], (1, 2), 0.0),
])
def test_sectional_examples(f, x, ij, expected):
    assert sectional_curvature(f, x, *ij) == pytest.approx(expected, abs=1e-15)


def test_sectional_needs_distinct_axes():
    with pytest.raises(ValueError):
        sectional_curvature(RADIAL, [1.0, 0.0, 0.0], 1, 1)
    with pytest.raises(ValueError):
        sectional_curvature(RADIAL, [1.0, 0.0, 0.0], 0, 3)


@given(point)
def test_radial_sectional_is_xk2_over_t_and_sums_to_one(x):
    t = float(x @ x)
    ks = [sectional_curvature(RADIAL, x, i, j) for i, j in PLANES]
    assert sum(ks) == pytest.approx(1.0, abs=1e-12)
    assert ks == pytest.approx([x[2] ** 2 / t, x[1] ** 2 / t, x[0] ** 2 / t], abs=1e-12)
    assert all(-1e-15 <= k <= 1.0 + 1e-15 for k in ks)


@given(factor, point, st.sampled_from(PLANES))
def test_sectional_closed_form_equals_general_formula(f, x, ij):
    a = sectional_curvature(f, x, *ij)
    assert sectional_curvature_general(f, x, *ij) == pytest.approx(a, rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("f", [RADIAL, EXP, MIXED])
def test_sectional_closed_form_equals_fd_riemann(f, rng):
    for _ in range(5):
        x = rng.uniform(-1.2, 1.2, 3)
        for i, j in PLANES:
            assert abs(sectional_curvature(f, x, i, j) - sectional_curvature_fd(f, x, i, j)) < 1e-4


def test_radial_sectional_vanishes_on_planes_through_radial_direction():
    x = np.array([0.7, -1.1, 0.0])  # x_3 = 0, so the (e1, e2) plane contains x
    assert sectional_curvature(RADIAL, x, 0, 1) == 0.0


# -- curve length -----------------------------------------------------------------------------

def _segment(a, b, n):
    return np.linspace(a, b, n)


def test_radial_length_one_from_1_to_e():
    pts = _segment([1.0, 0.0, 0.0], [math.e, 0.0, 0.0], 200)
    assert curve_length(RADIAL, pts) == pytest.approx(1.0, abs=1e-9)


def test_euclidean_length_is_chord():
    a, b = np.array([0.3, -1.0, 2.0]), np.array([-1.0, 0.5, 0.0])
    assert curve_length(EUCLIDEAN, np.array([a, b])) == pytest.approx(np.linalg.norm(b - a), rel=1e-15)


@given(st.floats(0.1, 1.0), st.floats(1.5, 20.0))
def test_radial_length_is_log_ratio(r0, r1):
    pts = np.geomspace(r0, r1, 400)[:, None] * np.array([1.0, 0.0, 0.0])
    assert curve_length(RADIAL, pts) == pytest.approx(math.log(r1 / r0), rel=1e-8)


@given(factor)
def test_length_reversal_and_refinement(f):
    ts = np.linspace(0.0, 1.0, 1001)
    curve = np.stack([0.2 + 0.5 * np.cos(ts), 0.5 * np.sin(2 * ts), 0.3 + 0.5 * ts], axis=1)
    fine = np.linspace(0.0, 1.0, 2001)
    curve2 = np.stack([0.2 + 0.5 * np.cos(fine), 0.5 * np.sin(2 * fine), 0.3 + 0.5 * fine],
                      axis=1)
    L = curve_length(f, curve)
    assert curve_length(f, curve[::-1]) == pytest.approx(L, rel=1e-14)
    assert abs(curve_length(f, curve2) - L) < 1e-6


def test_length_input_checks():
    with pytest.raises(ValueError):
        curve_length(RADIAL, [[1.0, 0.0, 0.0]])
    with pytest.raises(DomainError):
        curve_length(RADIAL, [[1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])
