import itertools
import math
from fractions import Fraction

import mpmath as mp
import pytest

from tornheim.closed_forms import (F_eval, F_exact, LimitPath, bridging_check, convolution_check,
                                   convolution_check_formal, corollary_values, formal_R,
                                   lemma41_A_int, lemma41_A_negb, lemma41_limit_t, lemma41_limit_u,
                                   nonpositive_ab, nonpositive_bc_limit, nonpositive_c,
                                   parity_eval, parity_exact)
from tornheim.closed_forms import _convolution_lhs
from tornheim.core import A_shifted, tornheim_continued, tornheim_direct
from tornheim.errors import DomainError, InsufficientOrder, ParityViolation, PoleError
from tornheim.limits import richardson
from tornheim.sampling import rng
from tornheim.special import riemann_zeta


def z(x):
    return riemann_zeta(x).value


# --- F --------------------------------------------------------------------

def test_F_basics():
    assert abs(F_eval(2.5, 3.5, 0).value - z(2.5) * z(3.5)) < 1e-14
    assert F_exact(0, 0, 0) == Fraction(1, 4)
    assert F_exact(-1, -1, 1) == 0
    with pytest.raises(PoleError):
        F_eval(1, 3.5, 0)
    with pytest.raises(DomainError):
        F_exact(1, 0, 0)


def test_F_exact_matches_numeric():
    for s, t, c in itertools.product(range(-3, 1), range(-3, 1), range(4)):
        assert abs(float(F_exact(s, t, c)) - F_eval(s, t, c).value) < 1e-13


# --- integer first argument -----------------------------------------------

def test_A_int_examples():
    assert abs(lemma41_A_int(0, 2.2, 1.3).value + z(3.5)) < 1e-14
    assert abs(lemma41_A_int(1, 1, 1).value + z(3)) < 1e-14
    assert lemma41_A_int(-2, 2.2, 1.3).value == 0


def test_A_int_matches_shifted():
    g = rng(5)
    pts = []
    while len(pts) < 5:
        t = complex(g.uniform(0.3, 3), g.uniform(-1, 1))
        u = complex(g.uniform(0.3, 3), g.uniform(-1, 1))
        if abs(t - round(t.real)) > 0.1 and (t + u).real > 1.2:
            pts.append((t, u))
    for a in range(4):
        for t, u in pts:
            ref = A_shifted(a, t, u).value
            assert abs(lemma41_A_int(a, t, u).value - ref) < 1e-8 * abs(ref)


def test_A_negb():
    s, u = 2.4, 3.7
    assert abs(lemma41_A_negb(s, 0, u).value - (math.cos(math.pi * s) + 1) * z(s) * z(u)) < 1e-14
    lim = richardson(lambda e: A_shifted(s, -1 + e, u))
    assert abs(lim.value - lemma41_A_negb(s, 1, u).value) < 1e-6


def test_A_negb_odd_terms_vanish_at_even_s():
    s, u = 2, 3.7
    exp = 2 * (z(2) * z(u - 2) + z(0) * z(u))
    assert abs(lemma41_A_negb(s, 2, u).value - exp) < 1e-13


def test_limit_u_examples():
    s = 3.3
    exp = (math.cos(math.pi * s) + 1) * z(s) * z(-1)
    assert abs(lemma41_limit_u(s, 0, 1).value - exp) < 1e-14
    s = 2.6
    exp = (math.cos(math.pi * s) - 1) * z(s) * z(0) - z(s)
    assert abs(lemma41_limit_u(s, 0, 0).value - exp) < 1e-14


@pytest.mark.parametrize("s, b, c", [(2.6, 0, 0), (3.3, 0, 1), (2.7, 1, 1), (3.4, 2, 1)])
def test_limit_u_numeric(s, b, c):
    lim = richardson(lambda e: lemma41_A_negb(s, b, -c + e))
    assert abs(lim.value - lemma41_limit_u(s, b, c).value) < 1e-6


def test_limit_t_examples():
    s = 3.4
    exp = (math.cos(math.pi * s) - 1) * (z(s) * z(0) - z(s - 1)) - z(s)
    assert abs(lemma41_limit_t(s, 0, 0).value - exp) < 1e-14
    assert abs(lemma41_limit_t(2, 0, 0).value + z(2)) < 1e-14


@pytest.mark.parametrize("s, b, c", [(3.4, 0, 0), (2.7, 1, 0), (3.3, 0, 1), (2.6, 1, 1)])
def test_limit_t_numeric(s, b, c):
    lim = richardson(lambda e: A_shifted(s, -b + e, -c))
    assert abs(lim.value - lemma41_limit_t(s, b, c).value) < 1e-6


# --- parity ---------------------------------------------------------------

def test_parity_111():
    assert str(parity_exact(1, 1, 1)) == "2*zeta(3)"
    assert abs(parity_eval(1, 1, 1).value - 2 * z(3)) < 1e-13


def test_parity_c0_factorises():
    assert abs(parity_eval(2, 3, 0).value - float(mp.zeta(2) * mp.zeta(3))) < 1e-13


def test_parity_all_odd_triples_match_direct():
    for a, b, c in itertools.product(range(1, 5), repeat=3):
        if (a + b + c) % 2:
            d = tornheim_direct(a, b, c)
            p = parity_eval(a, b, c)
            assert abs(p.value - d.value) <= 1e-8 * abs(d.value), (a, b, c)


def test_parity_guards():
    with pytest.raises(ParityViolation):
        parity_exact(1, 1, 2)
    with pytest.raises(DomainError):
        parity_exact(0, 1, 0)
    with pytest.raises(DomainError):
        parity_exact(1.0, 1, 1)


# --- non-positive integers ------------------------------------------------

def test_nonpositive_c():
    assert abs(nonpositive_c(2.5, 3.5, 0).value - z(2.5) * z(3.5)) < 1e-14
    lim = richardson(lambda e: tornheim_direct(3.2, 4.1, -1 + e))
    assert abs(lim.value - nonpositive_c(3.2, 4.1, 1).value) < 1e-6
    assert abs(nonpositive_c(4.5, 4.5, 2).value - F_eval(4.5, 4.5, 2).value) < 1e-15


def test_nonpositive_ab():
    u = 3.5
    v = nonpositive_ab(0, 0, u).value
    assert abs(v - (z(u - 1) - z(u))) < 1e-13
    assert abs(v - tornheim_direct(0, 0, u).value) < 1e-9
    assert abs(nonpositive_ab(1, 0, 4.2).value - tornheim_direct(-1, 0, 4.2).value) < 1e-9


def test_nonpositive_bc_limit():
    s = 3.6
    assert abs(nonpositive_bc_limit(s, 0, 0).value - (z(s) * z(0) - z(s - 1))) < 1e-14
    lim = richardson(lambda e: tornheim_continued(s, -1, -1 + e, margin=0.0))
    assert abs(lim.value - nonpositive_bc_limit(s, 1, 1).value) < 1e-6


# --- corollary values and convolution --------------------------------------

def test_limit_value_examples():
    assert corollary_values(0, 0, 0, LimitPath.JOINT_ST) == Fraction(1, 4)
    assert corollary_values(0, 0, 0, "u_then") == Fraction(5, 12)
    assert corollary_values(1, 0, 0, LimitPath.S_THEN_U) == Fraction(1, 24)


def test_limit_paths_agree_at_trivial_zero():
    # odd a+b+c makes zeta(-a-b-c-1) a trivial zero, so every path agrees
    for a, b, c in itertools.product(range(3), repeat=3):
        if (a + b + c) % 2:
            vals = {corollary_values(a, b, c, p) for p in LimitPath}
            assert len(vals) == 1


def test_convolution_examples():
    assert _convolution_lhs(0, 0, 0) == Fraction(3, 4)
    for abc in ((0, 0, 0), (1, 1, 1), (2, 0, 3)):
        assert convolution_check(*abc) == 0


def test_convolution_full_range():
    for a, b, c in itertools.product(range(7), repeat=3):
        assert convolution_check(a, b, c) == 0
        assert convolution_check_formal(a, b, c) == 0
        assert bridging_check(a, b, c) == 0


def test_formal_R():
    assert formal_R(0, 0, 0) == 1
    assert formal_R(1, 0, 0) == 0
    assert formal_R(1, 1, 1) == 0
    assert formal_R(2, 1, 1, order=12) == 0
    with pytest.raises(InsufficientOrder):
        formal_R(1, 1, 1, order=5)
