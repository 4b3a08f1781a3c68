"""Numeric limits by two-point Richardson extrapolation.

A limit x -> x0 is sampled at x0 +- eps for two step sizes. The symmetric
mean removes the odd part of the error, leaving O(eps^2), which one
Richardson step then cancels.
"""
from __future__ import annotations

from typing import Callable

from .approx import DEFAULT_OPTIONS, Approx, EvalOptions
from .closed_forms import LimitPath, nonpositive_ab, nonpositive_bc_limit, nonpositive_c
from .core import tornheim_continued
from .errors import NearSingularDenominator

EPS_PAIR = (1e-2, 1e-3)


def richardson(f: Callable[[float], Approx], eps: tuple[float, float] = EPS_PAIR,
               symmetric: bool = True) -> Approx:
    """Limit of f(e) as e -> 0.

    ``symmetric`` averages f(e) and f(-e) and assumes an even error
    expansion; otherwise the error is taken to be O(e).
    """
    e1, e2 = eps

    def sample(e):
        return (f(e) + f(-e)) * 0.5 if symmetric else f(e)

    v1, v2 = sample(e1), sample(e2)
    r = (e1 / e2) ** (2 if symmetric else 1)
    est = (r * v2 - v1) / (r - 1)
    return Approx(est.value, est.abs_err + abs(v2.value - v1.value) / (r - 1))


def _nested(outer: Callable[[float, float], Approx], eps=EPS_PAIR) -> Approx:
    """Ordered limit: the inner step is kept two decades below the outer one."""
    return richardson(lambda eo: richardson(lambda ei: outer(eo, ei), (eo / 10, eo / 100)), eps)


def corollary_numeric(a: int, b: int, c: int, path: LimitPath | str,
                      opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """Limit of the continued zeta(s,t;u) at (-a,-b,-c) along ``path``.

    Only odd a+b+c is admissible: for even sums the cosine determinant
    vanishes at the limit point and NearSingularDenominator is raised.
    """
    path = LimitPath(path)
    if (a + b + c) % 2 == 0:
        raise NearSingularDenominator(f"a+b+c = {a + b + c} is even: the determinant vanishes")

    def z(s, t, u):
        return tornheim_continued(s, t, u, opts, margin=0.0)

    if path is LimitPath.JOINT_ST:
        return richardson(lambda e: z(-a + e, -b + e, -c))
    if path is LimitPath.U_THEN:
        return richardson(lambda e: z(-a, -b, -c + e))
    if path is LimitPath.S_THEN_U:
        return _nested(lambda es, eu: z(-a + es, -b, -c + eu))
    return _nested(lambda et, eu: z(-a, -b + et, -c + eu))


def corollary_via_closed_forms(a: int, b: int, c: int, path: LimitPath | str,
                               opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """The same limits taken on the closed forms for two non-positive arguments.

    Valid for every parity; it checks the last limit step of each path.
    """
    path = LimitPath(path)
    if path is LimitPath.JOINT_ST:
        return richardson(lambda e: nonpositive_c(-a + e, -b + e, c, opts))
    if path is LimitPath.U_THEN:
        return richardson(lambda e: nonpositive_ab(a, b, -c + e, opts))
    if path is LimitPath.S_THEN_U:
        return richardson(lambda e: nonpositive_bc_limit(-a + e, b, c, opts))
    # zeta(s,t;u) is symmetric in (s,t)
    return richardson(lambda e: nonpositive_bc_limit(-b + e, a, c, opts))
