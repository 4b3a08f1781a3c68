import cmath
import math

import pytest

from tornheim.appendix import (FpmOptions, F_pm, corollary_A_check, corollary_A_sides,
                               fpm_self_residual, funeq_residual, funeq_sides, h_eval)
from tornheim.core import h_contour
from tornheim.errors import DomainError, SingularPoint, SlowConvergence
from tornheim.limits import richardson
from tornheim.special import confluent_psi, riemann_zeta


def test_h_two_routes():
    a, b = h_eval(2.5, 3.5), h_contour(2.5, 3.5)
    assert abs(a.value - b.value) < 1e-10
    assert abs(a.value.imag) <= a.abs_err + 1e-15


def test_h_simple_pole_at_t1():
    # near t = 1 the Gamma(1-t) term dominates: (1-t) h(s,t) -> -zeta(s)
    s = 2.5
    lim = richardson(lambda e: e * h_eval(s, 1 - e))
    assert abs(lim.value + riemann_zeta(s).value) < 1e-6


def test_h_simple_pole_at_t2():
    s = 1.7
    lim = richardson(lambda e: e * h_eval(s, 2 - e))
    assert abs(lim.value - s * riemann_zeta(s + 1).value) < 1e-6


def test_h_refuses_positive_integer_t():
    with pytest.raises(SingularPoint):
        h_eval(2.5, 1)


def test_funeq_generic_point():
    lhs, rhs = funeq_sides(1.5 + 0.3j, 2.2 - 0.1j)
    assert abs(lhs.value - rhs.value) < 1e-6


def test_funeq_sine_term_vanishes_on_odd_hyperplane():
    assert abs(funeq_residual(0.8, 2.2, drop_sine=True).value) < 1e-6
    assert abs(funeq_residual(1.3 + 0.2j, 3.7 - 0.2j, drop_sine=True).value) < 1e-6


def test_funeq_conjugate_pair():
    s, t = 1.5 + 0.3j, 2.2 - 0.1j
    a = funeq_residual(s, t)
    b = funeq_residual(s.conjugate(), t.conjugate())
    assert abs(a.value.conjugate() - b.value) <= a.abs_err + b.abs_err + 1e-15


def test_fpm_options_validation():
    with pytest.raises(ValueError):
        FpmOptions(max_terms=5)
    with pytest.raises(ValueError):
        FpmOptions(tail_tol=0)


def test_fpm_domain():
    with pytest.raises(DomainError):
        F_pm(1, 0.2, 2.5)
    with pytest.raises(DomainError):
        F_pm(2, -0.5, 2.5)


def test_fpm_slow_convergence():
    with pytest.raises(SlowConvergence):
        F_pm(1, -0.5, 2.5, FpmOptions(max_terms=12, tail_tol=1e-12, asymptotic_terms=0))


def test_fpm_conjugation():
    p, m = F_pm(1, -0.5, 2.5), F_pm(-1, -0.5, 2.5)
    assert abs(m.value - p.value.conjugate()) <= p.abs_err + m.abs_err


def test_fpm_first_term_dominates():
    s, t = -1.5, 3.0
    f = F_pm(1, s, t).value
    first = confluent_psi(t, s + t, 2j * math.pi).value
    assert abs(first) / 10 <= abs(f) <= 10 * abs(first)


def test_fpm_self_relation():
    s, t = -0.5, 2.5
    for sign in (1, -1):
        r = fpm_self_residual(sign, s, t)
        scale = abs(cmath.exp((s + t - 1) * (math.log(2 * math.pi) + sign * 0.5j * math.pi)))
        assert abs(r.value) <= 1e-3 * max(scale, 1.0)


@pytest.mark.parametrize("s, t", [(-0.5, 2.5), (-1.5, 3.0), (-0.5, 4.5)])
def test_A_through_F_series(s, t):
    lhs, rhs = corollary_A_sides(s, t)
    assert abs(lhs.value - rhs.value) <= 1e-3 * abs(lhs.value)
    assert abs(lhs.value.imag) <= lhs.abs_err + 1e-15
    assert abs(rhs.value.imag) <= rhs.abs_err + 1e-12


def test_A_check_is_difference():
    s, t = -0.5, 2.5
    lhs, rhs = corollary_A_sides(s, t)
    assert abs(corollary_A_check(s, t).value - (lhs.value - rhs.value)) < 1e-12
