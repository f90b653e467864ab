import math

import numpy as np
import pytest
from scipy.special import digamma

from kgcoulomb.errors import IntegrandError, InvalidArgumentError
from kgcoulomb.quadrature import (gauss_legendre, integrate_interval, integrate_semi_infinite,
                                  substitution_power)
from kgcoulomb.special import log_gamma


def test_one_point_rule():
    r = gauss_legendre(1)
    assert r.nodes.tolist() == [0.0] and r.weights.tolist() == [2.0]


def test_two_point_rule():
    r = gauss_legendre(2)
    np.testing.assert_allclose(r.nodes, [-1 / math.sqrt(3), 1 / math.sqrt(3)], rtol=1e-15)
    np.testing.assert_allclose(r.weights, [1, 1], rtol=1e-15)


def test_sixteen_points_integrate_degree_thirty():
    assert gauss_legendre(16).integrate(lambda x: x ** 30) == pytest.approx(2 / 31, rel=1e-13)


@pytest.mark.parametrize("n", [3, 7, 20, 64, 200, 512])
def test_exactness_and_ordering(n):
    r = gauss_legendre(n)
    assert np.all(r.weights > 0)
    assert np.all(np.diff(r.nodes) > 0)
    for deg in (0, 2 * n - 2):
        exact = 2 / (deg + 1)
        assert r.integrate(lambda x: x ** deg) == pytest.approx(exact, rel=1e-13)
    # odd monomial of the top exact degree
    assert abs(r.integrate(lambda x: x ** (2 * n - 1))) < 1e-14


@pytest.mark.parametrize("n", [0, 513, 2.5])
def test_rule_size_rejected(n):
    with pytest.raises(InvalidArgumentError):
        gauss_legendre(n)


def test_mapped_rule():
    r = gauss_legendre(10).mapped(0, 3)
    assert r.integrate(lambda x: x ** 2) == pytest.approx(9.0, rel=1e-14)


def test_exponential():
    rep = integrate_semi_infinite(lambda r: np.exp(-r), 0)
    assert rep.converged
    assert rep.value == pytest.approx(1.0, abs=1e-12)


def test_near_critical_power():
    rep = integrate_semi_infinite(lambda r: r ** 0.123 * np.exp(-r), 0.123)
    assert rep.value == pytest.approx(math.exp(log_gamma(1.123)), abs=1e-10)


def test_divergent_endpoint_rejected():
    with pytest.raises(InvalidArgumentError):
        integrate_semi_infinite(lambda r: r ** -1.5 * np.exp(-r), -1.5)


@pytest.mark.parametrize("kwargs", [{"tol": 0}, {"tol": -1e-3}, {"decay_scale": 0}])
def test_bad_arguments(kwargs):
    with pytest.raises(InvalidArgumentError):
        integrate_semi_infinite(lambda r: np.exp(-r), 0, **kwargs)


def test_non_finite_integrand_reports_abscissa():
    def f(r):
        return np.where(r > 2.0, np.nan, np.exp(-r))

    with pytest.raises(IntegrandError) as exc:
        integrate_semi_infinite(f, 0)
    assert exc.value.abscissa > 2.0


def test_never_evaluates_endpoints():
    seen = []

    def f(r):
        seen.append(r.copy())
        return np.exp(-r) * r ** 0.5

    integrate_semi_infinite(f, 0.5, 1.0)
    assert min(a.min() for a in seen) > 0


def test_substitution_power():
    assert substitution_power(0.0) == 2
    assert substitution_power(0.123) == 2
    assert substitution_power(1.0) == 1
    assert substitution_power(-0.877) == 8
    assert substitution_power(-0.5) == 4


def test_unconverged_is_reported_not_looped():
    rep = integrate_semi_infinite(lambda r: r ** -0.99 * np.exp(-r), -0.99)
    assert not rep.converged
    assert rep.levels_used <= 12


def _battery():
    # (integrand, zero exponent, decay scale, exact value)
    cases = []
    for a in (0.0, 0.123, 0.5, 1.0, 2.5, 4.2):
        for s in (0.3, 1.0, 7.0):
            exact = math.gamma(a + 1) * s ** (a + 1)
            cases.append((lambda r, a=a, s=s: r ** a * np.exp(-r / s), a, s, exact))
            exact_log = exact * (digamma(a + 1) + math.log(s))
            cases.append((lambda r, a=a, s=s: r ** a * np.log(r) * np.exp(-r / s), a, s, exact_log))
    return cases


def test_error_estimate_battery():
    bounded = 0
    cases = _battery()
    for f, a, s, exact in cases:
        rep = integrate_semi_infinite(f, a, s, 1e-10)
        err = abs(rep.value - exact)
        if err <= rep.estimated_error:
            bounded += 1
        assert err <= 100 * max(rep.estimated_error, 1e-16 * abs(exact))
    assert bounded >= 0.95 * len(cases)


def test_converged_report_invariants():
    for f, a, s, _ in _battery():
        rep = integrate_semi_infinite(f, a, s, 1e-10)
        assert rep.converged
        assert rep.estimated_error <= rep.abs_tol
        if len(rep.history) >= 2:
            assert rep.history[-1] <= rep.history[-2]


def test_bit_identical_repeat():
    f = lambda r: r ** 0.3 * np.sin(r) ** 2 * np.exp(-r)  # noqa: E731
    a = integrate_semi_infinite(f, 2.3, 1.0, 1e-11)
    b = integrate_semi_infinite(f, 2.3, 1.0, 1e-11)
    assert a.value == b.value and a.estimated_error == b.estimated_error
    np.testing.assert_array_equal(a.nodes, b.nodes)


def test_returned_rule_reproduces_value():
    rep = integrate_semi_infinite(lambda r: r ** 2 * np.exp(-2 * r), 2.0, 0.5, 1e-12)
    assert np.dot(rep.weights, rep.nodes ** 2 * np.exp(-2 * rep.nodes)) == pytest.approx(rep.value, rel=1e-14)


def test_interval_with_log_singularities():
    # int_{-1}^{1} x^2 ln|x| dx = -2/9, with the singular point as a breakpoint
    rep = integrate_interval(lambda x: x ** 2 * np.log(np.abs(x)), -1, 1, 1e-12, breakpoints=[0.0])
    assert rep.value == pytest.approx(-2 / 9, rel=1e-11)
    rep = integrate_interval(lambda x: np.log(1 - x), -1, 1, 1e-12)
    assert rep.value == pytest.approx(2 * math.log(2) - 2, rel=1e-11)


def test_interval_rejects_empty():
    with pytest.raises(InvalidArgumentError):
        integrate_interval(np.sin, 1.0, 1.0)


def test_semi_infinite_breakpoints():
    # x^2 ln|x - 2| e^-x has a log singularity at x = 2
    def f(r):
        with np.errstate(divide="ignore"):
            return np.where(r == 2.0, 0.0, (r - 2) ** 2 * np.log(np.abs(r - 2)) * np.exp(-r))

    plain = integrate_semi_infinite(f, 0.0, 1.0, 1e-12)
    graded = integrate_semi_infinite(f, 0.0, 1.0, 1e-12, breakpoints=[2.0])
    assert graded.converged
    assert graded.levels_used < plain.levels_used
    assert graded.value == pytest.approx(plain.value, abs=1e-10)
    np.testing.assert_array_equal(integrate_semi_infinite(f, 0.0, 1.0, 1e-12, breakpoints=[2.0, 1e9]).nodes,
                                  graded.nodes)
