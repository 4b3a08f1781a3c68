"""The end-to-end identity checks, runnable from tests and from the command line.

Each ``check_*`` function returns a ``CheckResult``; ``run_all`` evaluates
them in a fixed order.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import sampling
from .appendix import corollary_A_sides, fpm_self_residual, funeq_sides
from .closed_forms import (LimitPath, convolution_check, convolution_check_formal,
                           corollary_values, parity_eval)
from .contour import barnes_lemma_check, pfd1_residual, pfd2_residual
from .core import A_shifted, Z_def, tornheim_direct
from .errors import NearSingularDenominator
from .limits import corollary_numeric, corollary_via_closed_forms
from .special import (gamma, loggamma_vec, pochhammer_exact, riemann_zeta, zeta_nonpos_exact,
                      zeta_via_reflection)
from .witten import (witten_at_zero, witten_dderiv_neg_even, witten_deriv_neg_odd,
                     witten_limit, witten_positive_int, zero_order_ratio)


@dataclass(frozen=True)
class CheckResult:
    number: int
    title: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d} {self.title}: {self.detail}"


def _rel(a: complex, b: complex) -> float:
    return abs(a - b) / max(abs(b), 1e-300)


def check_three_term(seed: int = 7, points: int = 25) -> CheckResult:
    worst, ok = 0.0, 0
    pts = sampling.theorem_points(seed, points)
    for s, t, u in pts:
        z = Z_def(s, t, u)
        a1, a2 = A_shifted(s, t, u), A_shifted(t, s, u)
        res = abs(z.value - a1.value - a2.value)
        bound = 1e-7 * abs(z.value) + z.abs_err + a1.abs_err + a2.abs_err
        ok += res <= bound
        worst = max(worst, res / abs(z.value))
    return CheckResult(1, "Z = A(s,t;u) + A(t,s;u)", ok == len(pts),
                       f"{ok}/{len(pts)} points, worst relative residual {worst:.1e}")


def check_parity_111() -> CheckResult:
    v = parity_eval(1, 1, 1).value
    target = 2 * riemann_zeta(3).value
    d = tornheim_direct(1, 1, 1)
    direct_ok = abs(d.value - target) <= d.abs_err
    rel = _rel(v, target)
    return CheckResult(2, "zeta(1,1;1) = 2 zeta(3)", rel <= 1e-9 and direct_ok,
                       f"rel {rel:.1e}; direct sum off by {abs(d.value - target):.1e} "
                       f"within its bound {d.abs_err:.1e}: {direct_ok}")


def check_witten_zero_value() -> CheckResult:
    value, _ = witten_at_zero()
    lim = witten_limit(0)
    err = abs(lim.value - 1 / 3)
    return CheckResult(3, "zeta_SU3(0) = 1/3", value == Fraction(1, 3) and err <= 1e-6,
                       f"exact {value}; numeric limit off by {err:.1e}")


def check_witten_zero_deriv() -> CheckResult:
    _, d = witten_at_zero()
    target = 4 / 3 * math.log(2) + math.log(math.pi)
    err = abs(d.value - target)
    return CheckResult(4, "zeta_SU3'(0) = log(2^(4/3) pi)", err <= 1e-6,
                       f"{d.value.real:.12f} vs {target:.12f} (diff {err:.1e})")


def check_witten_positive() -> CheckResult:
    rels = []
    for a in (2, 3, 4):
        rels.append(_rel(witten_positive_int(a).value, 2 ** a * tornheim_direct(a, a, a).value))
    return CheckResult(5, "zeta_SU3(a) closed form vs 2^a zeta(a,a;a)", max(rels) <= 1e-8,
                       "rel " + ", ".join(f"{r:.1e}" for r in rels))


def check_convolution(top: int = 6) -> CheckResult:
    bad_direct = bad_formal = 0
    triples = list(itertools.product(range(top + 1), repeat=3))
    for a, b, c in triples:
        bad_direct += convolution_check(a, b, c) != 0
        try:
            bad_formal += convolution_check_formal(a, b, c) != 0
        except ArithmeticError:
            bad_formal += 1
    return CheckResult(6, "convolution identity (exact)", bad_direct == 0 and bad_formal == 0,
                       f"{len(triples)} triples; nonzero residuals {bad_direct} direct, "
                       f"{bad_formal} formal")


def check_limit_paths(tol: float = 1e-5) -> CheckResult:
    admissible = failed = skipped = closed_failed = 0
    worst = 0.0
    for a, b, c in itertools.product(range(3), repeat=3):
        for path in LimitPath:
            exact = float(corollary_values(a, b, c, path))
            cf = corollary_via_closed_forms(a, b, c, path)
            closed_failed += abs(cf.value - exact) > tol
            try:
                v = corollary_numeric(a, b, c, path)
            except NearSingularDenominator:
                skipped += 1
                continue
            admissible += 1
            diff = abs(v.value - exact)
            worst = max(worst, diff)
            failed += diff > tol
    return CheckResult(7, "limit paths at non-positive integers", failed == 0 and closed_failed == 0,
                       f"{admissible - failed}/{admissible} admissible path values within {tol:g} "
                       f"(worst {worst:.1e}); {skipped} inadmissible (even a+b+c); "
                       f"closed-form limits off in {closed_failed}/108")


def check_pfd(seed: int = 11, points: int = 10) -> CheckResult:
    worst1 = worst2 = 0.0
    for s, t, p, q in sampling.pfd_points(seed, points, ordered=False):
        scale = abs(np.exp(loggamma_vec(np.array([s, t])).sum() - s * math.log(p) - t * math.log(q)))
        worst1 = max(worst1, abs(pfd1_residual(s, t, p, q).value) / scale)
    for s, t, p, q in sampling.pfd_points(seed + 1, points, ordered=True):
        scale = abs(np.exp(loggamma_vec(np.array([s, t])).sum() - s * math.log(p) - t * math.log(q)))
        worst2 = max(worst2, abs(pfd2_residual(s, t, p, q).value) / scale)
    return CheckResult(8, "partial-fraction integral identities",
                       worst1 < 1e-8 and worst2 < 1e-8,
                       f"worst relative residuals {worst1:.1e} (I+I) and {worst2:.1e} (J+I)")


def check_barnes(seed: int = 13, points: int = 5) -> CheckResult:
    worst = max(abs(barnes_lemma_check(s, t).value) for s, t in sampling.barnes_points(seed, points))
    return CheckResult(9, "Barnes' first lemma", worst < 1e-9, f"worst |residual| {worst:.1e}")


def check_funeq(seed: int = 17, points: int = 10) -> CheckResult:
    ok = total = 0
    worst = 0.0

    def judge(lhs, rhs):
        nonlocal ok, total, worst
        res = abs(lhs.value - rhs.value)
        total += 1
        ok += res <= lhs.abs_err + rhs.abs_err + 1e-6 * max(abs(lhs.value), 1.0)
        worst = max(worst, res / max(abs(lhs.value), 1.0))

    for s, t in sampling.funeq_points(seed, points):
        judge(*funeq_sides(s, t))
    for k, tot in enumerate((3, 5)):
        for s, t in sampling.funeq_hyperplane_points(seed + 1 + k, 3, tot):
            judge(*funeq_sides(s, t, drop_sine=True))
    return CheckResult(10, "functional equation of h", ok == total,
                       f"{ok}/{total} (10 generic, 6 with the sine term dropped on s+t = 3, 5); "
                       f"worst scaled residual {worst:.1e}")


def check_fpm() -> CheckResult:
    rels = []
    for s, t in ((-0.5, 2.5), (-1.5, 3.0)):
        lhs, rhs = corollary_A_sides(s, t)
        rels.append(abs(lhs.value - rhs.value) / abs(lhs.value))
    s, t = -0.5, 2.5
    selfs = []
    for sign in (1, -1):
        r = fpm_self_residual(sign, s, t)
        w = s + t - 1
        scale = abs(cmath.exp(w * (math.log(2 * math.pi) + sign * 0.5j * math.pi)))
        selfs.append(abs(r.value) / max(scale, 1.0))
    return CheckResult(11, "A(s,t;0) through the F-series", max(rels) <= 1e-3 and max(selfs) <= 1e-3,
                       f"corollary rel {rels[0]:.1e}, {rels[1]:.1e}; "
                       f"self-relation {selfs[0]:.1e}, {selfs[1]:.1e}")


def check_witten_signs() -> CheckResult:
    bad = []
    for a in (1, 3, 5):
        r = witten_deriv_neg_odd(a)
        q = zero_order_ratio(a)
        if not r.sign_ok or not 1.6 <= q <= 2.4:
            bad.append(f"-{a}: ratio {q:.3f}")
    for a in (2, 4, 6):
        r = witten_dderiv_neg_even(a)
        q = zero_order_ratio(a)
        if not r.sign_ok or not 3.2 <= q <= 4.8:
            bad.append(f"-{a}: ratio {q:.3f}")
    return CheckResult(12, "zeta_SU3 zeros at negative integers", not bad,
                       "signs and zero orders confirmed" if not bad else "; ".join(bad))


def check_special(seed: int = 19) -> CheckResult:
    fails = []
    if _rel(riemann_zeta(2).value, math.pi ** 2 / 6) > 1e-12:
        fails.append("zeta(2)")
    if abs(riemann_zeta(0).value + 0.5) > 1e-13:
        fails.append("zeta(0)")
    if _rel(riemann_zeta(-9).value, -1 / 132) > 1e-12:
        fails.append("zeta(-9)")
    if _rel(gamma(5).value, 24) > 1e-13:
        fails.append("Gamma(5)")
    g = sampling.rng(seed)
    n_refl = n_rec = 0
    for _ in range(100):
        while True:
            z = complex(g.uniform(-5, 5), g.uniform(-20, 20))
            if abs(z - round(z.real)) >= 0.1:
                break
        ref = math.pi / cmath.sin(math.pi * z)
        n_refl += abs(gamma(z).value * gamma(1 - z).value - ref) > 1e-11 * abs(ref)
        n_rec += _rel(gamma(z + 1).value, z * gamma(z).value) > 1e-12
    if n_refl or n_rec:
        fails.append(f"reflection {n_refl}, recurrence {n_rec}")
    for n in range(26):
        ex = float(zeta_nonpos_exact(n))
        if abs(riemann_zeta(-n).value - ex) > 1e-13 * max(1.0, abs(ex)):
            fails.append(f"zeta(-{n})")
    for _ in range(20):
        s = complex(g.uniform(0.4, 0.6), g.uniform(-30, 30))
        if _rel(riemann_zeta(s).value, zeta_via_reflection(s).value) > 1e-10:
            fails.append(f"strip {s}")
    for t, k, m in ((3, 2, 4), (Fraction(-5, 2), 3, 2), (-4, 2, 3)):
        if pochhammer_exact(t, k) * pochhammer_exact(t + k, m) != pochhammer_exact(t, k + m):
            fails.append("pochhammer")
    return CheckResult(13, "special-function floor", not fails,
                       "all property suites pass" if not fails else ", ".join(fails))


CHECKS: tuple[Callable[[], CheckResult], ...] = (
    check_three_term, check_parity_111, check_witten_zero_value, check_witten_zero_deriv,
    check_witten_positive, check_convolution, check_limit_paths, check_pfd, check_barnes,
    check_funeq, check_fpm, check_witten_signs, check_special,
)


def run_all() -> list[CheckResult]:
    return [c() for c in CHECKS]
