import cmath
import math

import mpmath as mp
import numpy as np
import pytest

from tornheim.approx import DEFAULT_OPTIONS
from tornheim.contour import (ContourSpec, Indentation, IntegrandHandle, barnes_lemma_check,
                              integrate_contour, pfd1_residual, pfd2_residual, pfd_I, pfd_J,
                              residue_numeric, separating_contour)
from tornheim.core import a_integrand
from tornheim.errors import ContourPinch, DomainError
from tornheim.special import gamma, loggamma_vec


def test_zero_integrand():
    r = integrate_contour(IntegrandHandle(lambda e: np.zeros_like(e)), ContourSpec(0.3, 10))
    assert r.value == 0 and r.abs_err == 0


def test_gaussian_on_imaginary_axis():
    # e^{eta^2} = e^{-y^2} on Re eta = 0; d eta = i dy
    r = integrate_contour(IntegrandHandle(lambda e: np.exp(np.asarray(e) ** 2)), ContourSpec(0.0, 10))
    assert abs(r.value - 1j * math.sqrt(math.pi)) < 1e-12


def test_two_gamma_mellin_integral():
    a, b = 0.7 + 0.3j, 1.6 - 0.2j

    def f(eta):
        return np.exp(loggamma_vec(a + eta) + loggamma_vec(b - eta)) / (2j * math.pi)

    got = integrate_contour(IntegrandHandle(f), ContourSpec(0.1, 40)).value
    ref = mp.quad(lambda y: mp.gamma(a + 0.1 + 1j * y) * mp.gamma(b - 0.1 - 1j * y), [-mp.inf, 0, mp.inf]) / (2 * mp.pi)
    assert abs(got - complex(ref)) < 1e-11
    assert abs(got - complex(mp.gamma(a + b) / 2 ** (a + b))) < 1e-11


def test_tail_error_monotone():
    f = IntegrandHandle(lambda e: np.exp(loggamma_vec(0.8 + np.asarray(e)) + loggamma_vec(1.1 - np.asarray(e))))
    e10 = integrate_contour(f, ContourSpec(0.0, 10)).abs_err
    e20 = integrate_contour(f, ContourSpec(0.0, 20)).abs_err
    e40 = integrate_contour(f, ContourSpec(0.0, 40)).abs_err
    assert e10 >= e20 >= e40


def test_contour_spec_validation():
    with pytest.raises(ValueError):
        ContourSpec(0.0, 5)
    with pytest.raises(ValueError):
        ContourSpec(0.0, 40, (Indentation(0j, 0.3, "left"), Indentation(0.5 + 0j, 0.3, "right")))
    with pytest.raises(ValueError):
        Indentation(0j, 0.1, "up")


def test_residues():
    assert abs(residue_numeric(IntegrandHandle(lambda e: 1 / np.asarray(e)), 0).value - 1) < 1e-12
    g = IntegrandHandle(lambda e: np.exp(loggamma_vec(np.asarray(e))))
    assert abs(residue_numeric(g, -1).value + 1) < 1e-12
    assert abs(residue_numeric(IntegrandHandle(lambda e: 1 / np.asarray(e) ** 2), 0, order=2).value) < 1e-12


def test_contour_shift_picks_up_residue():
    s, t, u = 2.3, 2.7, 3.1
    f = a_integrand(s, t, u)
    K = 3
    v0 = integrate_contour(f, ContourSpec(K + 0.5, 40)).value
    v1 = integrate_contour(f, ContourSpec(K + 1.5, 40)).value
    res = residue_numeric(f, K + 1).value
    assert abs((v1 - v0) - 2j * math.pi * res) < 1e-9


def test_separating_contour_pinch():
    with pytest.raises(ContourPinch):
        separating_contour([0.5 + 0j], [0.5005 + 0j])


def test_separating_contour_sides():
    c = separating_contour([0.3 + 0j, -1.2 + 0j], [0j, 1 + 0j, 0.3 + 0.5j])
    sides = {(round(i.center.real, 6), round(i.center.imag, 6)): i.side for i in c.indentations}
    for p in (0.3 + 0j, -1.2 + 0j):
        if p.real >= c.x0:
            assert sides[(p.real, p.imag)] == "left"
    for p in (0j, 1 + 0j, 0.3 + 0.5j):
        if p.real <= c.x0:
            assert sides[(p.real, p.imag)] == "right"


@pytest.mark.parametrize("s, t", [(1.3, 2.1), (0.7 + 0.5j, 1.9 - 0.2j), (2.5, 2.5)])
def test_barnes(s, t):
    assert abs(barnes_lemma_check(s, t).value) < 1e-9


def test_barnes_real_params_real_residual():
    r = barnes_lemma_check(1.3, 2.1)
    assert abs(r.value.imag) <= r.abs_err + 1e-15


def _gg(s, t, p, q):
    return complex(np.exp(loggamma_vec(np.array([s, t], dtype=complex)).sum() - s * math.log(p) - t * math.log(q)))


@pytest.mark.parametrize("s, t, p, q", [(1.3, 2.1, 1, 2), (0.6, 0.9, 2, 3)])
def test_pfd1(s, t, p, q):
    assert abs(pfd1_residual(s, t, p, q).value) < 1e-8 * abs(_gg(s, t, p, q))


def test_pfd1_symmetric_point():
    s, p = 1.4 + 0.2j, 1.5
    half = 0.5 * gamma(s).value ** 2 / p ** (2 * s)
    assert abs(pfd_I(s, s, p, 2 * p).value - half) < 1e-9 * abs(half)


@pytest.mark.parametrize("s, t, p, q", [(1.3, 2.1, 1, 3), (0.8 + 0.3j, 1.4, 1, 2.5)])
def test_pfd2(s, t, p, q):
    assert abs(pfd2_residual(s, t, p, q).value) < 1e-8 * abs(_gg(s, t, p, q))


def test_pfd_preconditions():
    with pytest.raises(DomainError):
        pfd_J(1.3, 2.1, 2, 2)
    with pytest.raises(DomainError):
        pfd_I(2.0, 1.3, 1, 2)
    with pytest.raises(DomainError):
        pfd_I(-0.3, 1.3, 1, 2)


def test_quad_height_option_respected():
    opts = DEFAULT_OPTIONS.with_(quad_height=20.0)
    assert abs(barnes_lemma_check(1.3, 2.1, opts).value) < 1e-9
