"""The SU(3) Witten zeta function zeta_SU3(s) = 2^s zeta(s,s;s).

Off the lines 1 + 2cos(pi s) = 0 it is evaluated through
``2^{-s-1} (1 + 2cos(pi s)) zeta_SU3(s) = A(s,s;s)``. The regularised
function A(s,s;s) is smooth across those lines, so finite-difference
derivatives are taken on it rather than on zeta_SU3 itself.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .approx import DEFAULT_OPTIONS, Approx, EvalOptions, as_complex, exact
from .core import A_shifted
from .errors import DomainError, NearSingularDenominator, ParityError
from .special import riemann_zeta, riemann_zeta_deriv, zeta_nonpos_exact


class WittenKind(Enum):
    POSITIVE_VALUE = "PositiveValue"
    ZERO_VALUE = "ZeroValue"
    SIMPLE_ZERO = "SimpleZero"
    DOUBLE_ZERO = "DoubleZero"


@dataclass(frozen=True)
class WittenReport:
    point: int
    kind: WittenKind
    value_or_deriv: Approx
    predicted_sign: int | None

    @property
    def sign_ok(self) -> bool:
        if self.predicted_sign is None:
            return True
        v = self.value_or_deriv.value.real
        return v != 0 and (v > 0) == (self.predicted_sign > 0)


def witten_regularized(s, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """A(s,s;s)."""
    s = as_complex(s)
    return A_shifted(s, s, s, opts=opts)


def _gain(s: complex) -> complex:
    """2^{s+1} / (1 + 2cos(pi s))."""
    d = 1 + 2 * cmath.cos(math.pi * s)
    if abs(d) < 1e-6:
        raise NearSingularDenominator(f"1 + 2cos(pi s) = {d:.1e}")
    return 2 ** (s + 1) / d


def witten_eval(s, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    s = as_complex(s)
    g = _gain(s)
    return g * witten_regularized(s, opts)


def witten_positive_int(a: int, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta_SU3(a) for a positive integer as a finite sum of zeta products."""
    if not isinstance(a, int) or a < 1:
        raise DomainError("a must be a positive integer")
    total = exact(0)
    for k in range(a // 2 + 1):
        z2k = riemann_zeta(2 * k, opts) if k else exact(-0.5)
        zz = z2k * riemann_zeta(3 * a - 2 * k, opts)
        total = total + math.comb(2 * a - 2 * k - 1, a - 1) * zz
    return total * (2 ** (a + 2) / (1 + (-1) ** a * 2))


def _richardson_diff(f, x: complex, h: float, order: int) -> Approx:
    """Central difference of the given order at x, with one Richardson step."""
    def cd(step):
        if order == 1:
            a, b = f(x + step), f(x - step)
            return (a - b) / (2 * step)
        a, m, b = f(x + step), f(x), f(x - step)
        return (a - 2 * m + b) / (step * step)

    d1, d2 = cd(h), cd(h / 2)
    est = (4 * d2 - d1) / 3
    return Approx(est.value, est.abs_err + abs(d2.value - d1.value) / 3)


def witten_at_zero(opts: EvalOptions = DEFAULT_OPTIONS, h: float = 1e-3) -> tuple[Fraction, Approx]:
    """zeta_SU3(0) exactly and zeta_SU3'(0) by central differences.

    At s = 0 only the k = 0 term 2 zeta(0)^2 of A(s,s;s) survives, and the
    gain 2^{s+1}/(1 + 2cos(pi s)) equals 2/3.
    """
    z0 = zeta_nonpos_exact(0)
    value = Fraction(2, 3) * 2 * z0 * z0
    deriv = _richardson_diff(lambda x: witten_eval(x, opts), 0j, h, 1)
    return value, deriv


def witten_limit(s0, opts: EvalOptions = DEFAULT_OPTIONS, eps: tuple[float, float] = (1e-2, 1e-3),
                 ) -> Approx:
    """Richardson limit of witten_eval at s0 from symmetric points s0 +- eps."""
    s0 = as_complex(s0)

    def sym(e):
        return (witten_eval(s0 + e, opts) + witten_eval(s0 - e, opts)) * 0.5

    e1, e2 = eps
    v1, v2 = sym(e1), sym(e2)
    # the symmetric mean has an O(eps^2) bias
    r = (e1 / e2) ** 2
    est = (r * v2 - v1) / (r - 1)
    return Approx(est.value, est.abs_err + abs(v2.value - v1.value) / (r - 1))


def witten_deriv_neg_odd(a: int, opts: EvalOptions = DEFAULT_OPTIONS) -> WittenReport:
    """zeta_SU3'(-a) for odd a >= 1 from exact zeta values and zeta'."""
    if not isinstance(a, int) or a < 1:
        raise DomainError("a must be a positive integer")
    if a % 2 == 0:
        raise ParityError(f"a = {a} is even")
    total = exact(0)
    for k in range((a - 1) // 2 + 1):
        c = math.comb(a, 2 * k) * float(zeta_nonpos_exact(a + 2 * k))
        if c:
            total = total + c * riemann_zeta_deriv(-2 * a + 2 * k, 1, opts)
    total = total * 2.0 ** (-a + 2)
    r = Fraction(math.factorial(a) ** 2, math.factorial(2 * a + 1))
    total = total + float(2 ** (-a + 1) * r) * riemann_zeta_deriv(-3 * a - 1, 1, opts)
    return WittenReport(-a, WittenKind.SIMPLE_ZERO, total, (-1) ** ((a - 1) // 2))


def witten_dderiv_neg_even(a: int, opts: EvalOptions = DEFAULT_OPTIONS) -> WittenReport:
    """zeta_SU3''(-a) for even a >= 2 as a sum of products of zeta'."""
    if not isinstance(a, int) or a < 2:
        raise DomainError("a must be an integer >= 2")
    if a % 2:
        raise ParityError(f"a = {a} is odd")
    total = exact(0)
    for k in range(a // 2 + 1):
        total = total + math.comb(a, 2 * k) * (riemann_zeta_deriv(-a - 2 * k, 1, opts)
                                               * riemann_zeta_deriv(-2 * a + 2 * k, 1, opts))
    total = total * 2.0 ** (-a + 2)
    return WittenReport(-a, WittenKind.DOUBLE_ZERO, total, (-1) ** (a // 2))


def witten_deriv_numeric(a: int, order: int, opts: EvalOptions = DEFAULT_OPTIONS,
                         h: float | None = None) -> Approx:
    """Finite-difference zeta_SU3^(order)(-a), differentiating A(s,s;s).

    Because A(s,s;s) vanishes to the same order as zeta_SU3 at -a, the
    derivative is the gain at -a times the matching derivative of A.
    """
    if order not in (1, 2):
        raise DomainError("order must be 1 or 2")
    h = (1e-3 if order == 1 else 5e-3) if h is None else h
    x = complex(-a)
    d = _richardson_diff(lambda z: witten_regularized(z, opts), x, h, order)
    return _gain(x) * d


def zero_order_ratio(a: int, eps: tuple[float, float] = (1e-2, 5e-3),
                     opts: EvalOptions = DEFAULT_OPTIONS) -> float:
    """|zeta_SU3(-a+eps1)| / |zeta_SU3(-a+eps2)|; about (eps1/eps2)^order."""
    v1 = witten_eval(-a + eps[0], opts).value
    v2 = witten_eval(-a + eps[1], opts).value
    return abs(v1) / abs(v2)
