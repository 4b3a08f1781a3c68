"""Closed forms for the A-function and Tornheim's double zeta at integer arguments.

Where every zeta-argument is a non-positive integer the results are exact
rationals. Parity values are returned both as ``ExactValue`` (symbolic in pi
and odd zeta values) and numerically.
"""
from __future__ import annotations

import cmath
import math
from enum import Enum
from fractions import Fraction
from math import factorial

from .approx import DEFAULT_OPTIONS, Approx, EvalOptions, as_complex, exact
from .errors import (DomainError, InsufficientOrder, ParityViolation, PoleError,
                     SingularPoint)
from .laurent import ExactValue, RationalLaurent, zeta_exact
from .special import (binom_exact, binom_general, pochhammer_shift_deriv,
                      riemann_zeta, zeta_nonpos_exact)


def _zeta(s, opts: EvalOptions) -> Approx:
    s = as_complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at 1")
    return riemann_zeta(s, opts)


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _delta(i: int, j: int) -> int:
    return 1 if i == j else 0


def _require_nonneg(**kw):
    for name, v in kw.items():
        if not isinstance(v, int) or v < 0:
            raise DomainError(f"{name} must be a non-negative integer, got {v!r}")


def _near_lattice(w: complex, top: int, tol: float = 1e-10) -> bool:
    """True when w is within tol of some integer <= top."""
    k = min(top, round(w.real))
    return abs(w - k) < tol


# ---------------------------------------------------------------------------
# F(s,t;c) = sum_k binom(c,k) zeta(s-k) zeta(t-c+k)


def F_eval(s, t, c: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    _require_nonneg(c=c)
    s, t = as_complex(s), as_complex(t)
    total = exact(0)
    for k in range(c + 1):
        total = total + math.comb(c, k) * (_zeta(s - k, opts) * _zeta(t - c + k, opts))
    return total


def F_exact(s: int, t: int, c: int) -> Fraction:
    """F(s,t;c) for integers with every zeta-argument non-positive."""
    _require_nonneg(c=c)
    if s > 0 or t > 0:
        raise DomainError("F_exact needs s <= 0 and t - c + k <= 0 for all k, i.e. s, t <= 0")
    return sum((math.comb(c, k) * zeta_nonpos_exact(k - s) * zeta_nonpos_exact(c - k - t)
                for k in range(c + 1)), Fraction(0))


# ---------------------------------------------------------------------------
# A at integer points


def lemma41_A_int(a: int, t, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """A(a,t;u) for an integer a as a finite sum over even zeta values.

    For a < 0 the sum is empty and the value is 0.
    """
    if not isinstance(a, int):
        raise DomainError("a must be an integer")
    t, u = as_complex(t), as_complex(u)
    if _near_lattice(t + u, 1, 1e-12):
        raise SingularPoint(f"t+u = {t + u} lies on 1-l")
    total = exact(0)
    for k in range(a // 2 + 1) if a >= 0 else ():
        coef = binom_general(t + a - 2 * k - 1, a - 2 * k)
        z2k = zeta_exact(2 * k).numeric().real
        total = total + 2 * z2k * coef * _zeta(t + u + a - 2 * k, opts)
    return total


def lemma41_A_negb(s, b: int, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """A(s,-b;u) = sum_k binom(b,k)(cos pi s + (-1)^k) zeta(s-k) zeta(u-b+k)."""
    _require_nonneg(b=b)
    s, u = as_complex(s), as_complex(u)
    if _near_lattice(u, b + 1, 1e-12):
        raise SingularPoint(f"u = {u} lies on b+1-l")
    cs = cmath.cos(math.pi * s)
    total = exact(0)
    for k in range(b + 1):
        w = cs + (-1) ** k
        if w == 0:
            continue
        total = total + math.comb(b, k) * w * (_zeta(s - k, opts) * _zeta(u - b + k, opts))
    return total


def _weighted_F(weight: complex, s: complex, c: int, b: int, opts) -> Approx:
    # a vanishing weight also removes any pole inside F
    if weight == 0:
        return exact(0)
    return weight * F_eval(s, -c, b, opts)


def lemma41_limit_u(s, b: int, c: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """lim_{u -> -c} A(s,-b;u)."""
    _require_nonneg(b=b, c=c)
    s = as_complex(s)
    w = cmath.cos(math.pi * s) - (-1) ** (b + c)
    val = _weighted_F(w, s, c, b, opts)
    if c == 0:
        val = val + (-1) ** (b + 1) * _zeta(s - b, opts)
    return val


def lemma41_limit_t(s, b: int, c: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """lim_{t -> -b} A(s,t;-c)."""
    _require_nonneg(b=b, c=c)
    s = as_complex(s)
    w = cmath.cos(math.pi * s) - (-1) ** (b + c)
    if w == 0:
        val = exact(0)
    else:
        r = Fraction((-1) ** (c + 1) * factorial(b) * factorial(c), factorial(b + c + 1))
        val = w * (F_eval(s, -c, b, opts) + float(r) * _zeta(s - b - c - 1, opts))
    if c == 0:
        val = val + (-1) ** (b + 1) * _zeta(s - b, opts)
    return val


# ---------------------------------------------------------------------------
# Parity result


def _A_int_exact(a: int, t: int, u: int, skip: int | None = None) -> ExactValue:
    """A(a,t;u) at integers, optionally omitting the index k = ``skip``."""
    total = ExactValue()
    for k in range(a // 2 + 1) if a >= 0 else ():
        if k == skip:
            continue
        coef = binom_exact(t + a - 2 * k - 1, a - 2 * k)
        if coef == 0:
            continue
        total = total + 2 * coef * zeta_exact(2 * k) * zeta_exact(t + u + a - 2 * k)
    return total


def _check_parity(a, b, c):
    for name, v in (("a", a), ("b", b), ("c", c)):
        if not isinstance(v, int):
            raise DomainError(f"{name} must be an integer")
    if (a + b + c) % 2 == 0:
        raise ParityViolation(f"a+b+c = {a + b + c} is even")
    if a + c < 2 or b + c < 2 or a + b + c < 3:
        raise DomainError("need a+c >= 2, b+c >= 2 and a+b+c >= 3")


def parity_exact(a: int, b: int, c: int) -> ExactValue:
    """zeta(a,b;c) for odd a+b+c as a polynomial in pi and odd zeta values."""
    _check_parity(a, b, c)
    sa, sb = _sign(a), _sign(b)
    if a + b >= 2:
        two_z = (sa * (_A_int_exact(c, a, b) + _A_int_exact(a, c, b))
                 + sb * (_A_int_exact(c, b, a) + _A_int_exact(b, c, a)))
    else:
        skip = (a + b + c - 1) // 2
        two_z = (sa * (_A_int_exact(c, a, b, skip) + _A_int_exact(a, c, b))
                 + sb * (_A_int_exact(c, b, a, skip) + _A_int_exact(b, c, a)))
        n = 1 - a - b
        extra = Fraction(2 * sa, factorial(n)) * pochhammer_shift_deriv(a, n)
        two_z = two_z + extra * zeta_exact(a + b + c - 1)
    return two_z * Fraction(1, 2)


def parity_eval(a: int, b: int, c: int) -> Approx:
    """zeta(a,b;c) for odd a+b+c, numerically from the exact form."""
    v = parity_exact(a, b, c)
    val = v.numeric()
    scale = abs(complex(v.rational_part)) + sum(
        abs(float(q)) * abs(ExactValue(0, {m: 1}).numeric()) for m, q in v.zeta_coeffs.items())
    return Approx(val, 16 * 2.2e-16 * max(scale, abs(val)))


# ---------------------------------------------------------------------------
# Non-positive integer arguments


def nonpositive_c(s, t, c: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s,t;-c) = F(s,t;c)."""
    _require_nonneg(c=c)
    s, t = as_complex(s), as_complex(t)
    if _near_lattice(s, c + 1) or _near_lattice(t, c + 1) or abs(s + t - c - 2) < 1e-10:
        raise SingularPoint(f"zeta(s,t;{-c}) is singular at ({s}, {t})")
    return F_eval(s, t, c, opts)


def nonpositive_ab(a: int, b: int, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(-a,-b;u)."""
    _require_nonneg(a=a, b=b)
    u = as_complex(u)
    if _near_lattice(u, a + 1) or _near_lattice(u, b + 1) or abs(u - a - b - 2) < 1e-10:
        raise SingularPoint(f"zeta({-a},{-b};u) is singular at u = {u}")
    r = Fraction(factorial(a) * factorial(b), factorial(a + b + 1))
    val = ((-1) ** (a + 1) * F_eval(u, -a, b, opts) + (-1) ** (b + 1) * F_eval(u, -b, a, opts)
           + float(r) * _zeta(u - a - b - 1, opts))
    if a == 0:
        val = val - _zeta(u - b, opts)
    if b == 0:
        val = val - _zeta(u - a, opts)
    return val


def nonpositive_bc_limit(s, b: int, c: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """lim_{u -> -c} zeta(s,-b;u)."""
    _require_nonneg(b=b, c=c)
    s = as_complex(s)
    if _near_lattice(s, c + 1) or abs(s - b - c - 2) < 1e-10:
        raise SingularPoint(f"limit singular at s = {s}")
    r = Fraction((-1) ** (b + 1) * factorial(b) * factorial(c), factorial(b + c + 1))
    return F_eval(s, -b, c, opts) + float(r) * _zeta(s - b - c - 1, opts)


# ---------------------------------------------------------------------------
# Corollary values and the convolution identity


class LimitPath(Enum):
    JOINT_ST = "joint_st"
    U_THEN = "u_then"
    S_THEN_U = "s_then_u"
    T_THEN_U = "t_then_u"


def _ratio(x: int, c: int) -> Fraction:
    """(-1)^{x+1} x! c! / (x+c+1)!"""
    return Fraction((-1) ** (x + 1) * factorial(x) * factorial(c), factorial(x + c + 1))


def corollary_values(a: int, b: int, c: int, path: LimitPath | str) -> Fraction:
    """Limit of zeta(s,t;u) at (-a,-b,-c) along the given ordered path."""
    _require_nonneg(a=a, b=b, c=c)
    path = LimitPath(path)
    f = F_exact(-a, -b, c)
    z = zeta_nonpos_exact(a + b + c + 1)
    if path is LimitPath.JOINT_ST:
        return f
    if path is LimitPath.U_THEN:
        return f + (_ratio(a, c) + _ratio(b, c)) * z
    if path is LimitPath.S_THEN_U:
        return f + _ratio(b, c) * z
    return f + _ratio(a, c) * z


def _convolution_lhs(a: int, b: int, c: int) -> Fraction:
    return ((-1) ** (a + b) * F_exact(-a, -b, c) + (-1) ** (b + c) * F_exact(-b, -c, a)
            + (-1) ** (c + a) * F_exact(-c, -a, b))


def _convolution_bracket(a: int, b: int, c: int) -> Fraction:
    f = factorial
    return (Fraction((-1) ** c * f(a) * f(b), f(a + b + 1))
            + Fraction((-1) ** a * f(b) * f(c), f(b + c + 1))
            + Fraction((-1) ** b * f(c) * f(a), f(c + a + 1)))


def convolution_check(a: int, b: int, c: int) -> Fraction:
    """LHS - RHS of the convolution identity; exactly 0 when it holds."""
    _require_nonneg(a=a, b=b, c=c)
    rhs = (_convolution_bracket(a, b, c) * zeta_nonpos_exact(a + b + c + 1)
           + _delta(a, 0) * _delta(b, 0) * _delta(c, 0))
    return _convolution_lhs(a, b, c) - rhs


def p_tilde(m: int, order: int) -> RationalLaurent:
    """P~_m(x) - delta_{m0}, truncated below x^order."""
    terms = {-m - 1: Fraction((-1) ** m * factorial(m))}
    for k in range(max(0, order)):
        c = (Fraction(2) ** (m + 1 + k) * (-1) ** (m + k)
             * zeta_nonpos_exact(m + k) / factorial(k))
        terms[k] = terms.get(k, Fraction(0)) + c
    return RationalLaurent.from_dict(terms, order)


def formal_R(a: int, b: int, c: int, order: int | None = None) -> Fraction:
    """2^{-a-b-c-2} [x^-1] of the product of the three shifted series."""
    _require_nonneg(a=a, b=b, c=c)
    order = a + b + c + 3 if order is None else order
    if order < a + b + c + 3:
        raise InsufficientOrder(f"order {order} < a+b+c+3 = {a + b + c + 3}")
    prod = p_tilde(a, order) * p_tilde(b, order) * p_tilde(c, order)
    return prod.formal_residue() / Fraction(2) ** (a + b + c + 2)


def convolution_check_formal(a: int, b: int, c: int, order: int | None = None) -> Fraction:
    """Formal residue R minus the same quantity assembled from F-values.

    Returns 0 when both computations of R agree; raises ArithmeticError if R
    differs from delta_{a0} delta_{b0} delta_{c0}.
    """
    r = formal_R(a, b, c, order)
    direct = _convolution_lhs(a, b, c) - _convolution_bracket(a, b, c) * zeta_nonpos_exact(
        a + b + c + 1)
    if r != _delta(a, 0) * _delta(b, 0) * _delta(c, 0):
        raise ArithmeticError(f"R = {r} at ({a}, {b}, {c})")
    return r - direct


def bridging_check(a: int, b: int, c: int) -> Fraction:
    """Residual of the sign-flip relation between F(-a,-b;c) and its reflection."""
    _require_nonneg(a=a, b=b, c=c)
    f = F_exact(-a, -b, c)
    lhs = ((-1) ** (a + b + c) * f - _delta(a, 0) * zeta_nonpos_exact(b + c)
           - _delta(b, 0) * zeta_nonpos_exact(a + c) - _delta(a, 0) * _delta(b, 0) * _delta(c, 0))
    return lhs - f
