"""Mellin-Barnes quadrature on vertical lines with pole indentations.

A contour is a vertical line ``Re eta = x0`` traversed upwards on
``[-T, T]`` plus small loops around the poles that the line leaves on the
wrong side. Deforming a line so that it passes around a pole is the same as
adding a loop around that pole, so the loops play the role of the
indentations. Each loop is integrated numerically by the periodic trapezoid
rule, never through a closed-form residue.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np

from .approx import DEFAULT_OPTIONS, EPS, Approx, EvalOptions, as_complex
from .errors import ContourPinch, DomainError, NonConvergence, TailDivergence
from .special import gamma_vec, loggamma_vec, rgamma

_GL_X, _GL_W = np.polynomial.legendre.leggauss(16)
MAX_HEIGHT = 160.0
PINCH_DIST = 1e-3


@dataclass(frozen=True)
class Indentation:
    """Loop around ``center``. ``side`` names where the pole must end up."""

    center: complex
    radius: float
    side: str  # "left" -> counter-clockwise loop, "right" -> clockwise

    def __post_init__(self):
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if not self.radius > 0:
            raise ValueError("radius must be positive")


@dataclass(frozen=True)
class ContourSpec:
    x0: float
    height: float = 40.0
    indentations: tuple[Indentation, ...] = ()
    panel_target_tol: float = 1e-12

    def __post_init__(self):
        if self.height < 10:
            raise ValueError("truncation height must be >= 10")
        ind = self.indentations
        for i in range(len(ind)):
            for j in range(i + 1, len(ind)):
                if abs(ind[i].center - ind[j].center) <= ind[i].radius + ind[j].radius:
                    raise ValueError("indentation disks overlap")


@dataclass(frozen=True)
class IntegrandHandle:
    """Vectorised integrand ``eta -> f(eta)`` with a decay tag."""

    func: Callable[[np.ndarray], np.ndarray]
    decay: str = "exponential"

    def __call__(self, eta):
        return self.func(eta)


def _as_handle(f) -> IntegrandHandle:
    return f if isinstance(f, IntegrandHandle) else IntegrandHandle(f)


def _eval(f, eta: np.ndarray) -> np.ndarray:
    with np.errstate(all="ignore"):
        v = np.asarray(f(eta), dtype=complex)
    if v.shape != eta.shape:
        v = np.broadcast_to(v, eta.shape).astype(complex)
    if not np.all(np.isfinite(v)):
        raise NonConvergence("integrand is not finite on the contour")
    return v


# ---------------------------------------------------------------------------
# Building blocks


def _gl_panels(f, x0: float, a: np.ndarray, b: np.ndarray):
    """16-point Gauss-Legendre on panels [a_i, b_i] of the line Re eta = x0.

    Returns integrals of f d(eta) (with d eta = i dy) and of |f| dy.
    """
    half = (b - a) / 2
    mid = (a + b) / 2
    y = mid[:, None] + half[:, None] * _GL_X[None, :]
    v = _eval(f, x0 + 1j * y)
    val = 1j * half * (v @ _GL_W)
    l1 = half * (np.abs(v) @ _GL_W)
    return val, l1


def integrate_line(f, x0: float, height: float, rel_tol: float = 1e-12,
                   max_depth: int = 40) -> tuple[complex, float, float]:
    """Adaptive panel-halving Gauss-Legendre on ``x0 + i[-height, height]``.

    Returns ``(value, abs_err, l1)`` where ``l1`` approximates the integral of |f|.
    Panels are refined in a fixed order, so the result is deterministic.
    """
    n0 = max(2, int(math.ceil(2 * height)))
    edges = np.linspace(-height, height, n0 + 1)
    a, b = edges[:-1], edges[1:]
    total = 0j
    err = 0.0
    abs_tol = None
    full = 2 * height
    for _ in range(max_depth):
        m = (a + b) / 2
        coarse, _ = _gl_panels(f, x0, a, b)
        left, l1l = _gl_panels(f, x0, a, m)
        right, l1r = _gl_panels(f, x0, m, b)
        fine = left + right
        diff = np.abs(fine - coarse)
        if abs_tol is None:
            l1 = float(np.sum(l1l + l1r))
            abs_tol = max(rel_tol * l1, 1e-300)
        ok = diff <= abs_tol * (b - a) / full
        total += fine[ok].sum()
        # the fine rule is far more accurate than the coarse/fine gap
        err += float(diff[ok].sum()) * 1e-2 + EPS * float(np.abs(fine[ok]).sum())
        if ok.all():
            return complex(total), err + EPS * l1 * 16, l1
        a = np.concatenate([a[~ok], m[~ok]])
        b = np.concatenate([m[~ok], b[~ok]])
        order = np.argsort(a, kind="stable")
        a, b = a[order], b[order]
    raise NonConvergence("panel subdivision exceeded depth limit")


def loop_integral(f, center: complex, radius: float, rel_tol: float = 1e-13,
                  n_start: int = 32, n_max: int = 4096) -> tuple[complex, float]:
    """Counter-clockwise integral of f around a circle (periodic trapezoid)."""
    n = n_start
    prev = None
    while n <= n_max:
        theta = 2 * np.pi * np.arange(n) / n
        w = radius * np.exp(1j * theta)
        v = _eval(f, center + w)
        val = complex(np.mean(v * 1j * w) * 2 * np.pi)
        scale = 2 * np.pi * radius * float(np.max(np.abs(v)))
        if prev is not None and abs(val - prev) <= rel_tol * scale + 1e-300:
            return val, abs(val - prev) + 4 * EPS * scale
        prev = val
        n *= 2
    raise NonConvergence("loop quadrature did not converge")


def _tail(f, x0: float, height: float) -> float:
    tail = 0.0
    for sgn in (1, -1):
        pts = x0 + 1j * sgn * np.array([height, 2 * height])
        with np.errstate(all="ignore"):
            va, vb = np.abs(np.asarray(f(pts), dtype=complex))
        if not (np.isfinite(va) and np.isfinite(vb)):
            raise TailDivergence("integrand not finite at truncation height")
        if va < 1e-300:
            continue
        if vb >= va:
            raise TailDivergence(f"no decay between heights {height} and {2 * height}")
        rate = math.log(va / max(vb, 1e-300)) / height
        tail += va / rate
    return tail


def integrate_contour(f, c: ContourSpec, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """Integral of f d(eta) along the contour described by ``c``.

    The truncation height doubles (up to 160) while the fitted exponential
    tail exceeds the quadrature tolerance.
    """
    f = _as_handle(f)
    height = c.height
    while True:
        val, err, l1 = integrate_line(f, c.x0, height, c.panel_target_tol)
        tail = _tail(f, c.x0, height)
        if tail <= max(c.panel_target_tol * l1, 1e-300) or height * 2 > MAX_HEIGHT:
            break
        height *= 2
    err += tail
    for ind in c.indentations:
        v, e = loop_integral(f, ind.center, ind.radius)
        val += v if ind.side == "left" else -v
        err += e
    return Approx(val, err)


def residue_numeric(f, eta0, order: int = 1, radius: float = 1e-2) -> Approx:
    """Residue of f at ``eta0`` from a circle of the given radius.

    ``order`` bounds the pole order; it only sets the starting node count.
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    v, e = loop_integral(_as_handle(f), as_complex(eta0), radius, n_start=max(32, 8 * order))
    return Approx(v / (2j * np.pi), e / (2 * np.pi))


# ---------------------------------------------------------------------------
# Choosing a separating contour


def separating_contour(left: Iterable[complex], right: Iterable[complex],
                       opts: EvalOptions = DEFAULT_OPTIONS,
                       x_range: tuple[float, float] = (-1.5, 1.5)) -> ContourSpec:
    """Contour with every ``left`` pole on its left and every ``right`` pole on its right.

    ``left`` and ``right`` must list every pole in the region the contour can
    reach. Poles of opposite families closer than 1e-3 raise ContourPinch.
    """
    left = np.array(list(left), dtype=complex)
    right = np.array(list(right), dtype=complex)
    if left.size and right.size:
        gap = np.abs(left[:, None] - right[None, :])
        if gap.min() < PINCH_DIST:
            i, j = np.unravel_index(np.argmin(gap), gap.shape)
            raise ContourPinch(f"poles {left[i]} and {right[j]} must be separated "
                               f"but are {gap.min():.1e} apart")
    allp = np.concatenate([left, right])
    near = allp[np.abs(allp.imag) <= opts.quad_height]
    best = None
    for x0 in np.arange(x_range[0], x_range[1] + 1e-9, 0.01):
        wrong = int(np.sum(left.real >= x0) + np.sum(right.real <= x0))
        dist = float(np.min(np.abs(near.real - x0))) if near.size else 1.0
        # prefer fewer loops, then distance up to 0.25, then staying near the middle
        key = (wrong, -min(dist, 0.25), abs(x0 - sum(x_range) / 2))
        if best is None or key < best[0]:
            best = (key, float(round(x0, 2)))
    x0 = best[1]
    loops = []
    wrong_left = _unique([p for p in left if p.real >= x0])
    wrong_right = _unique([p for p in right if p.real <= x0])
    for p, side in [(p, "left") for p in wrong_left] + [(p, "right") for p in wrong_right]:
        others = allp[np.abs(allp - p) > 1e-9]
        dmin = float(np.min(np.abs(others - p))) if others.size else 1.0
        loops.append(Indentation(complex(p), min(0.25, 0.45 * dmin), side))
    return ContourSpec(x0, opts.quad_height, tuple(loops), opts.quad_rel_tol)


def _unique(points: Sequence[complex]) -> list[complex]:
    out: list[complex] = []
    for p in points:
        if all(abs(p - q) > 1e-9 for q in out):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# Partial-fraction integrals and Barnes' lemma


def _check_pfd_args(s: complex, t: complex) -> None:
    if s.real <= 0 or t.real <= 0:
        raise DomainError("need Re s > 0 and Re t > 0")
    for z in (s, t):
        r = round(z.real)
        if r >= 1 and abs(z - r) < 1e-8:
            raise DomainError(f"{z} is a positive integer")


def _pfd_poles(s: complex, t: complex, n: int = 12):
    left = [s - 1 - m for m in range(n)] + [-t - m for m in range(n)]
    right = [complex(k) for k in range(n)] + [s + k for k in range(n)]
    return left, right


def pfd_integrand(s: complex, t: complex, p: complex, r: complex, cosine: bool = False):
    """Integrand of the generalised partial-fraction integrals, including 1/(2 pi i)."""
    norm = rgamma(1 - s) / (2j * np.pi)
    lp, lr = np.log(complex(p)), np.log(complex(r))

    def f(eta):
        lg = (loggamma_vec(1 - s + eta) + loggamma_vec(-eta) + loggamma_vec(s - eta)
              + loggamma_vec(t + eta) - (s - eta) * lp - (t + eta) * lr)
        v = norm * np.exp(lg)
        if cosine:
            v = v * np.cos(np.pi * (s - eta))
        return v

    return IntegrandHandle(f)


def pfd_I(s, t, p: float, r: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """I(s,t;p,r): the first generalised partial-fraction integral."""
    s, t = as_complex(s), as_complex(t)
    if not (p > 0 and r > 0):
        raise DomainError("p and r must be positive")
    _check_pfd_args(s, t)
    c = separating_contour(*_pfd_poles(s, t), opts)
    return integrate_contour(pfd_integrand(s, t, p, r), c, opts)


def pfd_J(s, t, p: float, q: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """J(s,t;p,q-p): the integral with the extra cos(pi(s - eta)) factor."""
    s, t = as_complex(s), as_complex(t)
    if not 0 < p < q:
        raise DomainError("need 0 < p < q")
    _check_pfd_args(s, t)
    c = separating_contour(*_pfd_poles(s, t), opts)
    return integrate_contour(pfd_integrand(s, t, p, q - p, cosine=True), c, opts)


def pfd1_residual(s, t, p: float, q: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """I(s,t;p,p+q) + I(t,s;q,p+q) - Gamma(s)Gamma(t)/(p^s q^t)."""
    s, t = as_complex(s), as_complex(t)
    lhs = complex(np.exp(loggamma_vec(np.array([s, t])).sum() - s * math.log(p) - t * math.log(q)))
    return pfd_I(s, t, p, p + q, opts) + pfd_I(t, s, q, p + q, opts) - lhs


def pfd2_residual(s, t, p: float, q: float, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """J(s,t;p,q-p) + I(t,s;q,q-p) - cos(pi s)Gamma(s)Gamma(t)/(p^s q^t)."""
    s, t = as_complex(s), as_complex(t)
    lhs = complex(np.cos(np.pi * s) * np.exp(loggamma_vec(np.array([s, t])).sum()
                                             - s * math.log(p) - t * math.log(q)))
    return pfd_J(s, t, p, q, opts) + pfd_I(t, s, q, q - p, opts) - lhs


def barnes_integrand(s: complex, t: complex) -> IntegrandHandle:
    norm = rgamma(1 - s) * rgamma(s) * rgamma(t) / (2j * np.pi)

    def f(eta):
        return norm * np.exp(loggamma_vec(1 - s + eta) + loggamma_vec(-eta)
                             + loggamma_vec(s - eta) + loggamma_vec(t + eta))

    return IntegrandHandle(f)


def barnes_lemma_check(s, t, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """Contour value of the normalised four-Gamma integral minus its closed form."""
    s, t = as_complex(s), as_complex(t)
    if s.real <= 0 or t.real <= 0:
        raise DomainError("need Re s > 0 and Re t > 0")
    for z in (s, t):
        if abs(z - round(z.real)) < 1e-8:
            raise DomainError(f"{z} is an integer")
    c = separating_contour(*_pfd_poles(s, t), opts)
    val = integrate_contour(barnes_integrand(s, t), c, opts)
    closed = complex(gamma_vec(s + t) * rgamma(s) * rgamma(t) / t)
    return val - closed
