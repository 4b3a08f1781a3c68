import math
from fractions import Fraction

import pytest

from tornheim.core import tornheim_direct
from tornheim.errors import DomainError, NearSingularDenominator, ParityError
from tornheim.special import riemann_zeta
from tornheim.witten import (WittenKind, witten_at_zero, witten_dderiv_neg_even,
                             witten_deriv_neg_odd, witten_deriv_numeric, witten_eval,
                             witten_limit, witten_positive_int, zero_order_ratio)


def rel(a, b):
    return abs(a - b) / abs(b)


def test_eval_matches_direct_sum():
    assert rel(witten_eval(2).value, 4 * tornheim_direct(2, 2, 2).value) < 1e-8


def test_eval_matches_positive_int():
    assert rel(witten_eval(3).value, witten_positive_int(3).value) < 1e-8


def test_eval_conjugate_symmetry():
    s = 2.5 + 0.5j
    a, b = witten_eval(s), witten_eval(s.conjugate())
    assert abs(a.value - b.value.conjugate()) <= a.abs_err + b.abs_err


def test_eval_refuses_on_denominator_zero():
    with pytest.raises(NearSingularDenominator):
        witten_eval(2 / 3)
    with pytest.raises(NearSingularDenominator):
        witten_eval(-2 / 3 + 2)


@pytest.mark.parametrize("a", [1, 2, 3, 4, 5])
def test_positive_int_vs_direct(a):
    assert rel(witten_positive_int(a).value, 2 ** a * tornheim_direct(a, a, a).value) < 1e-8


def test_positive_int_a1():
    assert rel(witten_positive_int(1).value, 4 * riemann_zeta(3).value) < 1e-13


def test_positive_int_a2_even_zeta_form():
    # zeta(0) zeta(6) and zeta(2) zeta(4) are rational multiples of pi^6: total 4 pi^6 / 2835
    assert rel(witten_positive_int(2).value, 4 * math.pi ** 6 / 2835) < 1e-12


def test_positive_int_domain():
    with pytest.raises(DomainError):
        witten_positive_int(0)


def test_value_and_derivative_at_zero():
    value, d = witten_at_zero()
    assert value == Fraction(1, 3)
    assert abs(d.value - (4 / 3 * math.log(2) + math.log(math.pi))) < 1e-6
    assert abs(witten_limit(0).value - 1 / 3) < 1e-6


def test_signs():
    for a, sign in ((1, 1), (3, -1), (5, 1)):
        r = witten_deriv_neg_odd(a)
        assert r.kind is WittenKind.SIMPLE_ZERO and r.sign_ok
        assert (r.value_or_deriv.value.real > 0) == (sign > 0)
    for a, sign in ((2, -1), (4, 1), (6, -1)):
        r = witten_dderiv_neg_even(a)
        assert r.kind is WittenKind.DOUBLE_ZERO and r.sign_ok
        assert (r.value_or_deriv.value.real > 0) == (sign > 0)


def test_parity_guards():
    with pytest.raises(ParityError):
        witten_deriv_neg_odd(2)
    with pytest.raises(ParityError):
        witten_dderiv_neg_even(3)


def test_first_derivative_finite_difference():
    exact = witten_deriv_neg_odd(1).value_or_deriv.value
    assert rel(witten_deriv_numeric(1, 1).value, exact) < 1e-4


def test_second_derivative_finite_difference():
    exact = witten_dderiv_neg_even(2).value_or_deriv.value
    assert rel(witten_deriv_numeric(2, 2).value, exact) < 2e-2


@pytest.mark.parametrize("a, target", [(1, 2), (3, 2), (2, 4), (4, 4)])
def test_zero_orders(a, target):
    assert abs(zero_order_ratio(a) - target) <= 0.2 * target


def test_vanishes_at_negative_integers():
    for a in (1, 2, 3):
        assert abs(witten_limit(-a).value) < 1e-8
