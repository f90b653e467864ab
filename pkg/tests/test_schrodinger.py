import math

import numpy as np
import pytest

from kgcoulomb.constants import ALPHA, PION_MASS, binding_energy, make_state, make_system
from kgcoulomb.info import fisher
from kgcoulomb.moments import moment_by_quadrature, sch_moments
from kgcoulomb.quadrature import integrate_semi_infinite
from kgcoulomb.schrodinger import sch_density, sch_energy


def test_ground_state_density(hydrogen):
    sy = make_system(3, 2.5)
    k = 7.5
    r = np.array([0.01, 0.2, 1.0])
    np.testing.assert_allclose(sch_density(sy, make_state(1, 0))(r), 4 * k ** 3 * np.exp(-2 * k * r), rtol=1e-14)


@pytest.mark.parametrize("n", range(1, 9))
def test_normalization(n):
    sy = make_system(68, PION_MASS)
    for l in range(n):
        d = sch_density(sy, make_state(n, l))
        rep = integrate_semi_infinite(lambda r: d(r) * r * r, d.zero_exponent + 2, d.decay_scale, 1e-12)
        assert abs(rep.value - 1) < 1e-10


@pytest.mark.parametrize("n, l", [(1, 0), (3, 0), (5, 2), (7, 1)])
def test_zero_count(hydrogen, n, l):
    d = sch_density(hydrogen, make_state(n, l))
    R, _ = d.radial(np.linspace(1e-3, 6 * n * n, 20000))
    R = R[np.abs(R) > 1e-12 * np.max(np.abs(R))]
    assert int(np.sum(np.signbit(R[1:]) != np.signbit(R[:-1]))) == n - l - 1


def test_energy_examples(hydrogen, pion68):
    assert sch_energy(hydrogen, make_state(1, 0)) == pytest.approx(-0.5, rel=1e-15)
    assert sch_energy(pion68, make_state(1, 0)) == pytest.approx(-PION_MASS * 68 ** 2 / 2, rel=1e-15)


def test_kg_binding_matches_to_order_gamma_squared():
    sy = make_system(0.1, PION_MASS)
    st = make_state(1, 0)
    e = abs(sch_energy(sy, st))
    diff = binding_energy(sy, st) - e
    assert abs(diff) < 5 * (0.1 * ALPHA) ** 2 * e


@pytest.mark.parametrize("n", range(1, 7))
def test_textbook_moments_vs_quadrature(n):
    sy = make_system(68, PION_MASS)
    for l in range(n):
        st = make_state(n, l)
        d, ref = sch_density(sy, st), sch_moments(sy, st)
        assert moment_by_quadrature(d, 1).value == pytest.approx(
            (3 * n * n - l * (l + 1)) / (2 * 68 * PION_MASS), rel=1e-9)
        assert moment_by_quadrature(d, 2).value == pytest.approx(ref.r2, rel=1e-9)


@pytest.mark.parametrize("n", range(1, 6))
def test_fisher_closed_form(n):
    sy = make_system(20, 3.0)
    for l in range(n):
        for m in range(-l, l + 1):
            value = fisher(sy, make_state(n, l, m), "sch")
            assert value == pytest.approx(4 * 9.0 * 400 * (n - abs(m)) / n ** 3, rel=1e-7)


def test_decay_scale():
    sy = make_system(5, 2)
    assert sch_density(sy, make_state(3, 1)).decay_scale == pytest.approx(3 / 10)


def test_radial_derivative_finite_difference(hydrogen):
    d = sch_density(hydrogen, make_state(6, 2))
    r = np.linspace(0.3, 80, 40)
    h = 1e-6 * r
    fd = (d.radial(r + h)[0] - d.radial(r - h)[0]) / (2 * h)
    der = d.radial(r)[1]
    assert np.all(np.abs(der - fd) <= 1e-6 * max(np.max(np.abs(der)), 1e-12) + 1e-6 * np.abs(der))
