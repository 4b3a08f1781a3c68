"""Tornheim's double zeta function and the A-function relation.

``zeta(s,t;u) = sum_{m,n>=1} m^-s n^-t (m+n)^-u``. The cosine-weighted sum of
its three cyclic permutations, ``Z(s,t;u)``, equals ``A(s,t;u) + A(t,s;u)``
where ``A`` is a Mellin-Barnes integral; inverting the 3x3 cosine matrix then
continues ``zeta(s,t;u)`` off the region of convergence.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.signal import fftconvolve

from .approx import DEFAULT_OPTIONS, EPS, Approx, EvalOptions, as_complex
from .contour import (ContourSpec, IntegrandHandle, integrate_contour,
                      separating_contour)
from .errors import (ContourPinch, NearSingularDenominator, NoAdmissibleK,
                     OutOfDomain, SingularPoint, SlowConvergence)
from .special import (gamma, is_nonpos_int, loggamma_vec, rgamma, riemann_zeta,
                      riemann_zeta_deriv, zeta_vec, zeta_vec_err)

SINGULAR_MARGIN = 0.02


# ---------------------------------------------------------------------------
# Point classification


class Region(Enum):
    CONVERGENT = "Convergent"
    CONTINUED = "Continued"


@dataclass(frozen=True)
class SingularFlag:
    kind: str  # "s+u=1-l", "t+u=1-l" or "s+t+u=2"
    l: int | None
    distance: float


@dataclass(frozen=True)
class TornheimPoint:
    s: complex
    t: complex
    u: complex
    region: Region
    singular_flags: tuple[SingularFlag, ...] = field(default=())


def _lattice_distance(w: complex) -> tuple[int, float]:
    """Nearest l >= 0 with w = 1 - l, and the distance to it."""
    l = max(0, round(1 - w.real))
    return l, abs(w - (1 - l))


def classify(s, t, u, radius: float = 1e-8) -> TornheimPoint:
    """Region of convergence and the singular hyperplanes within ``radius``."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    conv = (s + u).real > 1 and (t + u).real > 1 and (s + t + u).real > 2
    flags = []
    for kind, w in (("s+u=1-l", s + u), ("t+u=1-l", t + u)):
        l, d = _lattice_distance(w)
        if d <= radius:
            flags.append(SingularFlag(kind, l, d))
    d = abs(s + t + u - 2)
    if d <= radius:
        flags.append(SingularFlag("s+t+u=2", None, d))
    return TornheimPoint(s, t, u, Region.CONVERGENT if conv else Region.CONTINUED, tuple(flags))


# ---------------------------------------------------------------------------
# Direct double series


def _real_zeta(x: float) -> float:
    return float(zeta_vec(np.array([complex(x)]))[0].real)


def _power_tail(p: float, M: int) -> float:
    """Upper bound for sum_{m > M} m^-p (p > 1) by integral comparison."""
    return M ** (1 - p) / (p - 1)


def _half_tail(ss: float, st: float, su: float, M: int) -> float:
    """Bound on sum over m > M, n >= 1 of |m^-s n^-t (m+n)^-u|."""
    if su < 0:
        return 2 ** (-su) * (_power_tail(ss + su, M) * _real_zeta(st)
                             + _power_tail(ss, M) * _real_zeta(st + su))
    lo, hi = max(0.0, 1 - ss), min(su, st + su - 1)
    best = math.inf
    # (m+n)^-u <= m^-a n^-(u-a) for 0 <= a <= u
    for a in np.linspace(lo, hi, 41)[1:-1] if hi > lo else [lo]:
        if ss + a <= 1 or st + su - a <= 1:
            continue
        best = min(best, _power_tail(ss + a, M) * _real_zeta(st + su - a))
    return best


def tail_bound(s: complex, t: complex, u: complex, M: int) -> float:
    """Bound on the part of the double series outside the box m, n <= M."""
    ss, st, su = s.real, t.real, u.real
    return _half_tail(ss, st, su, M) + _half_tail(st, ss, su, M)


_EXACT_HEAD = 1024


def _box_sum(s: complex, t: complex, u: complex, M: int) -> tuple[complex, float]:
    """Sum over m, n <= M and an estimate of its rounding error.

    The convolution over m + n is done by FFT, whose absolute error is set by
    the largest entry; entries with m + n <= 1024, where (m+n)^-u is largest,
    are recomputed by direct convolution.
    """
    k = np.arange(1, M + 1, dtype=float)
    lk = np.log(k)
    a = np.exp(-s * lk)
    b = np.exp(-t * lk)
    N = np.arange(2, 2 * M + 1, dtype=float)
    c = np.exp(-u * np.log(N))
    conv = fftconvolve(a, b)  # conv[i] collects the pairs with m + n = i + 2
    H = min(_EXACT_HEAD, M)
    conv[:H] = np.convolve(a[:H], b[:H])[:H]
    val = complex(np.dot(conv, c))
    l1 = float(np.dot(np.convolve(np.abs(a[:H]), np.abs(b[:H]))[:H], np.abs(c[:H])))
    fft_err = 8 * math.log2(2 * M) * EPS * np.linalg.norm(a) * np.linalg.norm(b)
    # FFT rounding behaves like independent errors across entries
    err = 8 * EPS * l1 + 8 * fft_err * float(np.linalg.norm(c[H:])) + 4 * EPS * abs(val)
    return val, err


def _near_pos_int(x: complex) -> bool:
    return x.real > 0.5 and abs(x - round(x.real)) < 1e-9


def _tail_basis(s: complex, t: complex, u: complex, n: int) -> list[tuple[complex, int]]:
    """Leading terms M^p (log M)^l of the box-sum error, by decreasing Re p.

    The region m > M contributes M^(1-s-u-j) and M^(2-s-t-u-j); n > M the same
    with s and t swapped. When t (resp. s) is a positive integer the inner zeta
    coefficient has a pole that merges the two families into a log M term.
    """
    fams: list[tuple[complex, set]] = []
    for j in range(n):
        for p, tag in ((1 - s - u - j, "s"), (1 - t - u - j, "t"), (2 - s - t - u - j, "w")):
            for q, tags in fams:
                if abs(q - p) < 1e-9:
                    tags.add(tag)
                    break
            else:
                fams.append((p, {tag}))
    out = []
    for p, tags in fams:
        out.append((p, 0))
        if "w" in tags and (("s" in tags and _near_pos_int(t)) or ("t" in tags and _near_pos_int(s))):
            out.append((p, 1))
    out.sort(key=lambda f: (-f[0].real, -f[1]))
    return out


def _extrapolate(Ms: list[int], S: np.ndarray, rnd: np.ndarray, basis) -> tuple[complex, float]:
    """Limit of S(M) assuming S(M) - S = sum_i c_i M^p_i (log M)^l_i."""
    est = []
    for nb in (len(Ms) - 2, len(Ms) - 1):
        use = Ms[-(nb + 1):]
        A = np.array([[1] + [M ** p * math.log(M) ** l for p, l in basis[:nb]] for M in use],
                     dtype=complex)
        w = np.linalg.solve(A.T, np.eye(nb + 1)[0])  # weights of the S(M) in the limit
        est.append((complex(w @ S[-(nb + 1):]), float(np.abs(w) @ rnd[-(nb + 1):])))
    (v1, _), (v2, r2) = est
    return v2, 2 * abs(v2 - v1) + r2


def tornheim_direct(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS,
                    max_rel_tail: float = 1e-2) -> Approx:
    """The double series from partial sums over boxes m, n <= M.

    If the integral-comparison tail bound at M = ``oracle_sum_limit`` already
    meets ``target_rel_tol`` the box sum is returned with that bound. Otherwise
    box sums at M, M/2, M/4, ... are extrapolated in the known powers of M that
    make up the tail; the error estimate compares two extrapolation orders. An
    estimate above ``max_rel_tail`` relative raises SlowConvergence.
    """
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    m = 0.05
    if not ((s + u).real > 1 + m and (t + u).real > 1 + m and (s + t + u).real > 2 + m):
        raise OutOfDomain(f"({s}, {t}, {u}) is not inside the region of convergence")
    scale = abs(2 ** (-u))  # the m = n = 1 term
    M = 64
    while True:
        bound = tail_bound(s, t, u, M)
        if bound <= opts.target_rel_tol * scale or M >= opts.oracle_sum_limit:
            break
        M = min(2 * M, opts.oracle_sum_limit)
    val, rounding = _box_sum(s, t, u, M)
    if bound <= opts.target_rel_tol * scale:
        return Approx(val, bound + rounding)
    levels = max(3, min(8, int(math.log2(M)) - 5))
    Ms = [M >> k for k in range(levels)][::-1]
    sums = [_box_sum(s, t, u, Mk) for Mk in Ms[:-1]] + [(val, rounding)]
    S = np.array([v for v, _ in sums])
    rnd = np.array([e for _, e in sums])
    ext, err = _extrapolate(Ms, S, rnd, _tail_basis(s, t, u, levels))
    if not abs(ext - val) <= bound + err:
        # the extrapolation left the interval the tail bound allows
        ext, err = val, bound
    if err > max_rel_tail * abs(ext):
        raise SlowConvergence(f"error estimate {err:.2e} with M={M}")
    return Approx(ext, err)


def Z_def(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s,t;u) + cos(pi t) zeta(t,u;s) + cos(pi s) zeta(u,s;t) from direct sums."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    return (tornheim_direct(s, t, u, opts)
            + cmath.cos(math.pi * t) * tornheim_direct(t, u, s, opts)
            + cmath.cos(math.pi * s) * tornheim_direct(u, s, t, opts))


# ---------------------------------------------------------------------------
# The A-function


def a_integrand(s: complex, t: complex, u: complex, opts: EvalOptions = DEFAULT_OPTIONS,
                ) -> IntegrandHandle:
    """Integrand of A(s,t;u) including sin(pi s)/(2 pi i) and 1/Gamma(t)."""
    pref = cmath.sin(math.pi * s) * rgamma(t) / (2j * math.pi)

    def f(eta):
        eta = np.asarray(eta, dtype=complex)
        n = eta.size
        z = zeta_vec(np.concatenate([(s - eta).ravel(), (t + u + eta).ravel()]), opts)
        z1, z2 = z[:n].reshape(eta.shape), z[n:].reshape(eta.shape)
        g = np.exp(loggamma_vec(t + eta) + loggamma_vec(-eta))
        return pref / np.tan(math.pi * (s - eta) / 2) * g * z1 * z2

    return IntegrandHandle(f)


def auto_shift(s: complex, t: complex, u: complex, margin: float = 0.25) -> int:
    """Least K >= 0 with Re s < K + 1/2, -K - 1/2 < Re t, -K + 1/2 < Re(t+u), with margin."""
    need = max(s.real - 0.5 + margin, -t.real - 0.5 + margin, 0.5 - (t + u).real + margin)
    return max(0, math.floor(need) + 1)


def _check_shift(s, t, u, K):
    if not (s.real < K + 0.5 and -K - 0.5 < t.real and -K + 0.5 < (t + u).real):
        raise NoAdmissibleK(f"K={K} violates the strip inequalities at ({s}, {t}, {u})")


def _a_sum(s: complex, t: complex, u: complex, K: int, opts: EvalOptions) -> Approx:
    """2 sum_{k<=K} (t)_k/k! cos^2(pi(s-k)/2) zeta(s-k) zeta(t+u+k)."""
    k = np.arange(K + 1)
    coef = np.ones(K + 1, dtype=complex)
    for j in range(1, K + 1):
        coef[j] = coef[j - 1] * (t + j - 1) / j
    pole = np.abs(t + u + k - 1) < 1e-12
    if np.any(pole & (coef != 0)):
        raise SingularPoint(f"t+u = {t + u}: A(s,t;u) has a pole")
    c2 = np.cos(np.pi * (s - k) / 2) ** 2
    a1 = s - k
    hit = a1 == 1  # removable: cos^2 vanishes to second order against the pole
    a1 = np.where(hit, 2.0, a1)
    z1, e1 = zeta_vec_err(a1, opts)
    hit |= pole  # (t)_k = 0 there
    z2, e2 = zeta_vec_err(np.where(pole, 2.0, t + u + k), opts)
    terms = np.where(hit, 0, 2 * coef * c2 * z1 * z2)
    err = np.where(hit, 0, 2 * np.abs(coef * c2) * (np.abs(z1) * e2 + np.abs(z2) * e1))
    err = err + 8 * EPS * np.abs(terms)
    return Approx(complex(terms.sum()), float(err.sum()))


def A_shifted(s, t, u, K: int | str = "auto", opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """A(s,t;u) as a finite residue sum plus the integral on Re eta = K + 1/2."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    if K == "auto":
        K = auto_shift(s, t, u)
    else:
        _check_shift(s, t, u, int(K))
        K = int(K)
    total = _a_sum(s, t, u, K, opts)
    if cmath.sin(math.pi * s) == 0 or rgamma(t) == 0:
        return total
    if s == round(s.real):
        return total
    c = ContourSpec(K + 0.5, opts.quad_height, (), opts.quad_rel_tol)
    return total + integrate_contour(a_integrand(s, t, u, opts), c, opts)


def a_poles(s: complex, t: complex, u: complex, n: int = 14):
    """Pole families of the A-integrand: (left of the contour, right of it)."""
    left = [s - 2 * k for k in range(n)] + [-t - k for k in range(n)] + [1 - t - u]
    right = [complex(k) for k in range(n)]
    return left, right


def A_contour(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """A(s,t;u) straight from its defining integral on an indented line."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    for name, w in (("s", s), ("-t", -t), ("1-t-u", 1 - t - u)):
        k = max(0, round(w.real))
        if abs(w - k) < 0.05:
            raise ContourPinch(f"{name} = {w} is within 0.05 of the integer {k}")
    c = separating_contour(*a_poles(s, t, u), opts, x_range=(-1.5, 1.5))
    return integrate_contour(a_integrand(s, t, u, opts), c, opts)


# ---------------------------------------------------------------------------
# Z and the continuation


def Z_theorem(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """Z(s,t;u) computed as A(s,t;u) + A(t,s;u)."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    return A_shifted(s, t, u, opts=opts) + A_shifted(t, s, u, opts=opts)


@dataclass(frozen=True)
class ZDecomposition:
    z_value: Approx | None
    a_st: Approx
    a_ts: Approx
    residual: float | None  # None means "untested"

    @property
    def tested(self) -> bool:
        return self.residual is not None


def z_decompose(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS) -> ZDecomposition:
    """Both A-values and, where the direct sums converge, the residual against Z."""
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    a_st = A_shifted(s, t, u, opts=opts)
    a_ts = A_shifted(t, s, u, opts=opts)
    try:
        z = Z_def(s, t, u, opts)
    except (OutOfDomain, SlowConvergence):
        return ZDecomposition(None, a_st, a_ts, None)
    return ZDecomposition(z, a_st, a_ts, abs(z.value - a_st.value - a_ts.value))


def delta(s, t, u) -> complex:
    """Determinant of the cosine matrix linking the Z- and zeta-vectors."""
    cs, ct, cu = (cmath.cos(math.pi * complex(x)) for x in (s, t, u))
    return 1 - cs * cs - ct * ct - cu * cu + 2 * cs * ct * cu


def tornheim_continued(s, t, u, opts: EvalOptions = DEFAULT_OPTIONS,
                       margin: float = SINGULAR_MARGIN) -> Approx:
    """zeta(s,t;u) anywhere off the singular set, through three Z-values.

    ``margin`` is the refusal radius around singular hyperplanes; limit
    oracles pass a smaller value deliberately.
    """
    s, t, u = as_complex(s), as_complex(t), as_complex(u)
    pt = classify(s, t, u, radius=margin)
    if pt.singular_flags:
        f = pt.singular_flags[0]
        raise SingularPoint(f"within {margin} of {f.kind} (l={f.l})")
    d = delta(s, t, u)
    if abs(d) < 1e-6:
        raise NearSingularDenominator(f"|Delta| = {abs(d):.1e}")
    cs, ct, cu = (cmath.cos(math.pi * x) for x in (s, t, u))
    try:
        z1 = Z_theorem(s, t, u, opts)
        z2 = Z_theorem(t, u, s, opts)
        z3 = Z_theorem(u, s, t, opts)
    except SingularPoint as exc:
        raise SingularPoint(f"A-route singular at ({s}, {t}, {u}): {exc}") from None
    num = (1 - cu * cu) * z1 + (cs * cu - ct) * z2 + (ct * cu - cs) * z3
    return num / d


# ---------------------------------------------------------------------------
# Euler's double zeta zeta(s,t) = sum_{N > n >= 1} n^-t N^-s


def euler_integrand(s: complex, t: complex, opts: EvalOptions = DEFAULT_OPTIONS,
                    ) -> IntegrandHandle:
    """Gamma(s+eta)Gamma(-eta)/Gamma(s) zeta(t-eta) zeta(s+eta) / (2 pi i)."""
    pref = rgamma(s) / (2j * math.pi)

    def f(eta):
        eta = np.asarray(eta, dtype=complex)
        n = eta.size
        z = zeta_vec(np.concatenate([(t - eta).ravel(), (s + eta).ravel()]), opts)
        g = np.exp(loggamma_vec(s + eta) + loggamma_vec(-eta))
        return pref * g * z[:n].reshape(eta.shape) * z[n:].reshape(eta.shape)

    return IntegrandHandle(f)


def euler_poles(s: complex, t: complex, shifted: bool, n: int = 14):
    """Left/right pole families; ``shifted`` moves eta = t-1 to the left."""
    left = [1 - s - l for l in range(n)]
    right = [complex(k) for k in range(n)]
    (left if shifted else right).append(t - 1)
    return left, right


def euler_pole_term(s: complex, t: complex, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """Gamma(1-t) Gamma(s+t-1) zeta(s+t-1) / Gamma(s), the part of zeta(s,t) that h drops.

    Where Gamma(s+t-1) has a pole at a trivial zero of zeta the product is
    replaced by its limit zeta'(-2n)/(2n)!.
    """
    if is_nonpos_int(s):
        return Approx(0j, 0.0)
    w = s + t - 1
    if abs(w - 1) < 1e-12:
        raise SingularPoint("s + t = 2")
    n2 = round(w.real)
    if n2 <= 0 and abs(w - n2) < 1e-12:
        if n2 % 2:
            raise SingularPoint(f"s + t = {n2 + 1}")
        gz = riemann_zeta_deriv(n2, 1, opts) / math.factorial(-n2)
    else:
        gz = gamma(w) * riemann_zeta(w, opts)
    return gamma(1 - t) * gz * rgamma(s)


def _check_h(s: complex, t: complex):
    k = round(t.real)
    if k >= 1 and abs(t - k) < 1e-8:
        raise SingularPoint(f"t = {t} is a positive integer")
    if abs(s + t - 2) < 1e-8:
        raise SingularPoint("s + t = 2")


def h_contour(s, t, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """h(s,t) = zeta(s,t) - euler_pole_term(s,t), with eta = t - 1 left of the contour."""
    s, t = as_complex(s), as_complex(t)
    _check_h(s, t)
    try:
        c = separating_contour(*euler_poles(s, t, shifted=True), opts, x_range=(-2.5, 1.5))
    except ContourPinch as exc:
        raise SingularPoint(f"h({s}, {t}): {exc}") from None
    return integrate_contour(euler_integrand(s, t, opts), c, opts)


def euler_double_zeta(s, t, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s,t) from its Mellin-Barnes integral.

    The contour keeps eta = t - 1 on the right. Where that choice pinches the
    contour (s + t = 2 - l) the value is assembled as h(s,t) plus the pole term.
    """
    s, t = as_complex(s), as_complex(t)
    if abs(s - 1) < 1e-8:
        raise SingularPoint("s = 1")
    if is_nonpos_int(s, 1e-8):
        raise SingularPoint(f"s = {s}: both contours pinch")
    try:
        c = separating_contour(*euler_poles(s, t, shifted=False), opts, x_range=(-2.5, 1.5))
    except ContourPinch:
        return h_contour(s, t, opts) + euler_pole_term(s, t, opts)
    return integrate_contour(euler_integrand(s, t, opts), c, opts)
