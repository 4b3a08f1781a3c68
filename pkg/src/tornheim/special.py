"""Complex special functions in double precision.

Gamma and its logarithmic derivatives, the Riemann zeta function with its
first two derivatives, exact Bernoulli numbers, Pochhammer symbols, divisor
sums and the confluent hypergeometric function of the second kind.

The ``*_vec`` routines work on numpy arrays and are what the contour
integrands call; the scalar wrappers validate arguments and return
:class:`~tornheim.approx.Approx`.
"""
from __future__ import annotations

import cmath
import math
import threading
import warnings
from fractions import Fraction
from math import comb, factorial

import numpy as np
from scipy import integrate

from .approx import DEFAULT_OPTIONS, EPS, Approx, EvalOptions, as_complex
from .errors import DomainError, NonConvergence, PoleError, UnsupportedOrder

LOG_2PI = math.log(2 * math.pi)
LOG_PI = math.log(math.pi)
LOG_2 = math.log(2.0)

# ---------------------------------------------------------------------------
# Bernoulli numbers (B_1 = -1/2)

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n with the convention B_1 = -1/2.

    Uses sum_{k=0}^{n} C(n+1, k) B_k = 0. The memo table only ever grows, and
    growth happens under a lock, so concurrent readers see a consistent prefix.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n < len(_bern):
        return _bern[n]
    with _bern_lock:
        for m in range(len(_bern), n + 1):
            acc = sum(comb(m + 1, k) * _bern[k] for k in range(m))
            _bern.append(-acc / (m + 1))
    return _bern[n]


def zeta_nonpos_exact(n: int) -> Fraction:
    """Exact zeta(-n) = (-1)^n B_{n+1} / (n+1) for n >= 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return (-1) ** n * bernoulli(n + 1) / (n + 1)


def zeta_int_exact(m: int) -> Fraction:
    """zeta(m) for an integer m <= 0 as a rational; convenience alias."""
    if m > 0:
        raise ValueError("only non-positive integers have rational zeta values")
    return zeta_nonpos_exact(-m)


# Stirling coefficients B_{2k} / (2k (2k-1)), k = 1..12
_STIRLING = np.array([float(bernoulli(2 * k)) / (2 * k * (2 * k - 1)) for k in range(1, 13)])
# B_{2k} as floats, k = 1..12
_B2K = np.array([float(bernoulli(2 * k)) for k in range(1, 13)])


# ---------------------------------------------------------------------------
# Gamma family


def log_sin_pi(z):
    """A logarithm of sin(pi z) that does not overflow for large |Im z|.

    Not the principal branch; only ``exp`` of the result is meaningful.
    """
    z = np.asarray(z, dtype=complex)
    # sin(pi z) = (-1)^k sin(pi (z - k)); the reduction keeps integers exact
    k = np.round(z.real)
    x = np.pi * (z - k)
    out = np.empty_like(x)
    up = x.imag > 0
    with np.errstate(divide="ignore"):
        xu = x[up]
        out[up] = -1j * xu + np.log(np.expm1(2j * xu) / 2j)
        xd = x[~up]
        out[~up] = 1j * xd + np.log(-np.expm1(-2j * xd) / 2j)
    return out + 1j * np.pi * np.mod(k, 2)


def _loggamma_right(z):
    """log Gamma for Re z >= 1/2 (principal branch)."""
    m = np.where(np.abs(z) < 10, np.ceil(np.maximum(10 - z.real, 0)), 0).astype(int)
    w = z + m
    acc = np.zeros_like(z)
    for j in range(int(m.max(initial=0))):
        sel = j < m
        acc[sel] += np.log(z[sel] + j)
    r = 1 / w
    r2 = r * r
    series = np.zeros_like(z)
    for c in _STIRLING[::-1]:
        series = series * r2 + c
    series *= r
    return (w - 0.5) * np.log(w) - w + 0.5 * LOG_2PI + series - acc


def loggamma_vec(z):
    """Vectorised log Gamma. Branch chosen so that ``exp`` gives Gamma."""
    z = np.asarray(z, dtype=complex)
    shape = z.shape
    z = z.ravel()
    out = np.empty_like(z)
    left = z.real < 0.5
    out[~left] = _loggamma_right(z[~left])
    if left.any():
        zl = z[left]
        out[left] = LOG_PI - log_sin_pi(zl) - _loggamma_right(1 - zl)
    return out.reshape(shape)


def gamma_vec(z):
    with np.errstate(over="ignore", invalid="ignore"):
        return np.exp(loggamma_vec(z))


def rgamma_vec(z):
    """1/Gamma(z), exactly zero at the non-positive integers."""
    z = np.asarray(z, dtype=complex)
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(-loggamma_vec(z))
    pole = (z.imag == 0) & (z.real <= 0) & (z.real == np.round(z.real))
    return np.where(pole, 0.0, out)


def is_nonpos_int(z, tol: float = 0.0) -> bool:
    z = complex(z)
    r = round(z.real)
    return r <= 0 and abs(z - r) <= tol


def gamma(z) -> Approx:
    """Gamma(z) via Stirling's series, upward recurrence and reflection."""
    z = as_complex(z)
    if is_nonpos_int(z, 1e-13):
        raise PoleError(f"Gamma has a pole at {z}")
    lg = loggamma_vec(np.array([z]))[0]
    val = cmath.exp(lg)
    return Approx(val, 8 * EPS * abs(val) * (1 + abs(lg)))


def rgamma(z) -> complex:
    """1/Gamma(z); returns exactly 0 at the poles of Gamma."""
    return complex(rgamma_vec(np.array([complex(z)]))[0])


def digamma_vec(z):
    """psi(z) for arbitrary complex z off the poles."""
    z = np.asarray(z, dtype=complex)
    left = z.real < 0.5
    w0 = np.where(left, 1 - z, z)
    m = np.where(np.abs(w0) < 10, np.ceil(np.maximum(10 - w0.real, 0)), 0).astype(int)
    acc = np.zeros_like(w0)
    for j in range(int(m.max(initial=0))):
        sel = j < m
        acc[sel] += 1 / (w0[sel] + j)
    w = w0 + m
    r2 = 1 / (w * w)
    series = np.zeros_like(w)
    for k in range(len(_B2K), 0, -1):
        series = series * r2 + _B2K[k - 1] / (2 * k)
    series *= r2
    psi = np.log(w) - 0.5 / w - series - acc
    # psi(z) = psi(1-z) - pi cot(pi z)
    return np.where(left, psi - np.pi / np.tan(np.pi * z), psi)


def trigamma_vec(z):
    """psi'(z) for Re z >= 1/2."""
    z = np.asarray(z, dtype=complex)
    if np.any(z.real < 0.5):
        raise DomainError("trigamma_vec requires Re z >= 1/2")
    m = np.where(np.abs(z) < 10, np.ceil(np.maximum(10 - z.real, 0)), 0).astype(int)
    acc = np.zeros_like(z)
    for j in range(int(m.max(initial=0))):
        sel = j < m
        acc[sel] += 1 / (z[sel] + j) ** 2
    w = z + m
    r = 1 / w
    r2 = r * r
    series = np.zeros_like(w)
    for k in range(len(_B2K), 0, -1):
        series = series * r2 + _B2K[k - 1]
    series *= r2 * r
    return r + 0.5 * r2 + series + acc


# ---------------------------------------------------------------------------
# Riemann zeta


def _em_terms(s, opts: EvalOptions) -> int:
    p = opts.em_correction_order
    big = float(np.max(np.abs(s), initial=0.0))
    # keep |s + 2p| / (2 pi N) below 0.2 so the correction series converges fast
    need = math.ceil((big + 2 * p) / (2 * math.pi * 0.2))
    return max(opts.series_terms, need)


def _zeta_em(s, nder: int, opts: EvalOptions):
    """Euler-Maclaurin for zeta and its first ``nder`` derivatives.

    Returns ``(derivs, err)`` with ``derivs[d]`` the d-th derivative. Intended for
    Re s >= 1/2; valid (but cancellation-prone) further left.
    """
    s = np.asarray(s, dtype=complex)
    N = _em_terms(s, opts)
    p = opts.em_correction_order // 2
    n = np.arange(1, N, dtype=float)
    logn = np.log(n)
    L = math.log(N)
    pw = np.exp(-np.outer(s, logn))
    out = []
    for d in range(nder + 1):
        out.append((pw * (-logn) ** d).sum(axis=1) if d else pw.sum(axis=1))
    absmain = np.abs(pw).sum(axis=1)

    g = np.exp((1 - s) * L)
    h = 1 / (s - 1)
    tail = [g * h, -L * g * h - g * h * h, L * L * g * h + 2 * L * g * h * h + 2 * g * h ** 3]
    half = np.exp(-s * L) / 2
    for d in range(nder + 1):
        out[d] = out[d] + tail[d] + half * (-L) ** d

    P, P1, P2 = np.ones_like(s), np.zeros_like(s), np.zeros_like(s)
    last = np.zeros(s.shape)
    for j in range(1, p + 1):
        # P_j(s) = s (s+1) ... (s + 2j - 2)
        for i in ((0,) if j == 1 else (2 * j - 3, 2 * j - 2)):
            q = s + i
            P2 = P2 * q + 2 * P1
            P1 = P1 * q + P
            P = P * q
        c = float(bernoulli(2 * j)) / factorial(2 * j)
        E = np.exp(-(s + 2 * j - 1) * L)
        terms = [c * P * E, c * (P1 - L * P) * E, c * (P2 - 2 * L * P1 + L * L * P) * E]
        for d in range(nder + 1):
            out[d] = out[d] + terms[d]
        last = np.abs(terms[nder])
    err = 2 * last + 16 * EPS * (absmain * (1 + L) ** nder + np.abs(out[nder]))
    return out, err


def _zeta_all(s, nder: int, opts: EvalOptions, split: float = 0.0):
    s = np.asarray(s, dtype=complex)
    shape = s.shape
    s = s.ravel()
    vals = [np.empty_like(s) for _ in range(nder + 1)]
    err = np.empty(s.shape)
    # Euler-Maclaurin loses nothing on 0 <= Re s < 1/2, and the reflected
    # argument 1 - s would sit on the pole at s = 0.
    right = s.real >= split
    if right.any():
        v, e = _zeta_em(s[right], nder, opts)
        for d in range(nder + 1):
            vals[d][right] = v[d]
        err[right] = e
    if (~right).any():
        sl = s[~right]
        z, e = _zeta_em(1 - sl, nder, opts)
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            lg = sl * LOG_2 + (sl - 1) * LOG_PI + loggamma_vec(1 - sl)
            gS = np.exp(lg + log_sin_pi(sl / 2))
            gC = np.exp(lg + log_sin_pi((sl + 1) / 2))
        chi = [gS]
        if nder >= 1:
            lam = LOG_2PI - digamma_vec(1 - sl)
            chi.append(lam * gS + (np.pi / 2) * gC)
        if nder >= 2:
            chi.append((lam * lam + trigamma_vec(1 - sl) - (np.pi / 2) ** 2) * gS
                       + np.pi * lam * gC)
        # d/ds of zeta(1-s) flips the sign of odd derivatives
        zs = [z[0], -z[1] if nder >= 1 else None, z[2] if nder >= 2 else None]
        vals[0][~right] = chi[0] * zs[0]
        if nder >= 1:
            vals[1][~right] = chi[1] * zs[0] + chi[0] * zs[1]
        if nder >= 2:
            vals[2][~right] = chi[2] * zs[0] + 2 * chi[1] * zs[1] + chi[0] * zs[2]
        # the rounding of chi is relative to its two trigonometric pieces
        chi_mag = np.abs(gS) + 4 * EPS * np.abs(gC) * (1 + np.abs(sl))
        if nder >= 1:
            chi_mag = chi_mag * (1 + np.abs(lam)) ** nder + np.abs(chi[-1])
        zmag = sum(np.abs(zz) for zz in zs if zz is not None)
        err[~right] = (chi_mag * (e + 32 * EPS * zmag * (1 + np.abs(sl)))
                       + 32 * EPS * np.abs(vals[nder][~right]) * (1 + np.abs(sl)))
    return [v.reshape(shape) for v in vals], err.reshape(shape)


def zeta_vec(s, opts: EvalOptions = DEFAULT_OPTIONS):
    """Vectorised zeta(s); returns values only."""
    return _zeta_all(s, 0, opts)[0][0]


def zeta_vec_err(s, opts: EvalOptions = DEFAULT_OPTIONS):
    v, e = _zeta_all(s, 0, opts)
    return v[0], e


def zeta_via_reflection(s, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s) forced through the functional equation (consistency checks)."""
    s = as_complex(s)
    if abs(s) < 1e-13:
        raise PoleError("reflection route is singular at s = 0")
    v, e = _zeta_all(np.array([s]), 0, opts, split=math.inf)
    return Approx(v[0][0], float(e[0]))


def riemann_zeta(s, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s): Euler-Maclaurin on Re s >= 0, functional equation to the left."""
    s = as_complex(s)
    if abs(s - 1) < 1e-13:
        raise PoleError("zeta has a pole at s = 1")
    v, e = _zeta_all(np.array([s]), 0, opts)
    return Approx(v[0][0], float(e[0]))


def riemann_zeta_deriv(s, order: int = 1, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta'(s) or zeta''(s) by termwise differentiation."""
    if order not in (1, 2):
        raise UnsupportedOrder(f"derivative order {order} not supported")
    s = as_complex(s)
    if abs(s - 1) < 1e-13:
        raise PoleError("zeta has a pole at s = 1")
    v, e = _zeta_all(np.array([s]), order, opts)
    return Approx(v[order][0], float(e[0]))


# ---------------------------------------------------------------------------
# Pochhammer, binomials


def _is_exact(x) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def pochhammer(t, k: int) -> Approx:
    """Rising factorial (t)_k as a finite product."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if _is_exact(t):
        return Approx(complex(pochhammer_exact(t, k)), 0.0)
    t = as_complex(t)
    p = complex(1)
    for j in range(k):
        p *= t + j
    return Approx(p, 2 * k * EPS * abs(p))


def pochhammer_exact(t, k: int) -> Fraction:
    p = Fraction(1)
    for j in range(k):
        p *= t + j
    return p


def binom_exact(w, k: int) -> Fraction:
    """Generalised binomial coefficient for rational ``w``."""
    if k < 0:
        return Fraction(0)
    return pochhammer_exact(Fraction(w) - k + 1, k) / factorial(k)


def binom_general(w, k: int) -> Approx:
    """w (w-1) ... (w-k+1) / k! for complex w."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if _is_exact(w):
        return Approx(complex(binom_exact(w, k)), 0.0)
    w = as_complex(w)
    p = pochhammer(w - k + 1, k)
    return p / factorial(k)


def pochhammer_shift_deriv(a: int, n: int) -> Fraction:
    """d/ds of prod_{j<n} (s + a + j) at s = 0, exactly."""
    if n < 0:
        raise ValueError("n must be non-negative")
    # coefficients of the polynomial in s, lowest degree first
    poly = [Fraction(1)]
    for j in range(n):
        c = a + j
        new = [Fraction(0)] * (len(poly) + 1)
        for i, p in enumerate(poly):
            new[i] += c * p
            new[i + 1] += p
        poly = new
    return poly[1] if len(poly) > 1 else Fraction(0)


# ---------------------------------------------------------------------------
# Divisor sums


def sigma_complex(nu, k: int) -> complex:
    """sigma_nu(k) = sum of d**nu over the divisors d of k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    nu = as_complex(nu)
    total = 0j
    d = 1
    while d * d <= k:
        if k % d == 0:
            total += cmath.exp(nu * math.log(d))
            e = k // d
            if e != d:
                total += cmath.exp(nu * math.log(e))
        d += 1
    return total


def sigma_table(nu, n_max: int) -> np.ndarray:
    """sigma_nu(k) for k = 1..n_max by a divisor sieve."""
    nu = complex(nu)
    out = np.zeros(n_max, dtype=complex)
    for d in range(1, n_max + 1):
        out[d - 1::d] += cmath.exp(nu * math.log(d))
    return out


# ---------------------------------------------------------------------------
# Confluent hypergeometric function of the second kind


def psi_rotation(z: complex) -> float:
    """Ray angle for the Laplace integral of Psi(., .; z)."""
    a = cmath.phase(z)
    phi = -a + 0.2 * float(np.sign(a))
    lim = math.pi / 2 - 1e-6
    return max(-lim, min(lim, phi))


def confluent_psi(alpha, gamma_, z) -> Approx:
    """Psi(alpha, gamma; z) by its Laplace integral on a rotated ray.

    Psi = 1/Gamma(alpha) * int_0^inf exp(-z tau) tau^(alpha-1) (1+tau)^(gamma-alpha-1) dtau,
    with tau = r e^{i phi} chosen so that Re(z e^{i phi}) > 0.
    """
    alpha, gamma_, z = as_complex(alpha), as_complex(gamma_), as_complex(z)
    if alpha.real <= 0:
        raise DomainError("Laplace representation needs Re(alpha) > 0")
    if z == 0:
        raise DomainError("z must be non-zero")
    phi = psi_rotation(z)
    rot = cmath.exp(1j * phi)
    zr = z * rot
    if zr.real <= 0:
        raise DomainError(f"no admissible ray for arg z = {cmath.phase(z):.3f}")
    az = abs(z)
    e1 = zr / az
    c = gamma_ - alpha - 1

    # substitute x = |z| r
    def f(x):
        if x == 0.0:
            return 0j if alpha.real > 1 else complex("nan")
        return cmath.exp(-e1 * x + (alpha - 1) * math.log(x) + c * cmath.log(1 + x * rot / az))

    total = 0j
    err = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("error", integrate.IntegrationWarning)
        try:
            for lo, hi in ((0.0, 1.0), (1.0, 30.0), (30.0, np.inf)):
                v, e = integrate.quad(f, lo, hi, complex_func=True, epsabs=1e-15,
                                      epsrel=1e-12, limit=200)
                total += v
                err += abs(e)
        except integrate.IntegrationWarning as exc:
            raise NonConvergence(f"Psi quadrature failed: {exc}") from None
    pref = cmath.exp(1j * alpha * phi - alpha * math.log(az)) * rgamma(alpha)
    val = total * pref
    abs_err = (err + 1e-13 * abs(total)) * abs(pref) + 1e-13 * abs(val)
    if abs_err > 1e-8 * abs(val):
        raise NonConvergence(f"Psi error estimate {abs_err:.2e} above tolerance")
    return Approx(val, abs_err)
