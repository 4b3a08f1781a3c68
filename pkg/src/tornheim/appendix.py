"""Functional equation for Euler's double zeta and the F-plus/minus series.

``h(s,t)`` removes from ``zeta(s,t)`` the term that carries its poles on
s + t = 2 - l. ``F_pm`` sums divisor functions against Kummer's second
function and recombines into ``A(s,t;0)``.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .approx import DEFAULT_OPTIONS, EPS, Approx, EvalOptions, as_complex, exact
from .core import A_shifted, _check_h, euler_double_zeta, euler_pole_term, h_contour
from .errors import DomainError, SlowConvergence
from .special import confluent_psi, gamma, riemann_zeta, rgamma, sigma_table

LOG_2PI = math.log(2 * math.pi)


@dataclass(frozen=True)
class FpmOptions:
    max_terms: int = 2000
    tail_tol: float = 1e-4
    asymptotic_terms: int = 3

    def __post_init__(self):
        if self.max_terms < 10:
            raise ValueError("max_terms must be >= 10")
        if not self.tail_tol > 0:
            raise ValueError("tail_tol must be positive")
        if self.asymptotic_terms < 0:
            raise ValueError("asymptotic_terms must be >= 0")


# ---------------------------------------------------------------------------
# h(s,t)


def h_eval(s, t, opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """zeta(s,t) minus its extracted pole term."""
    s, t = as_complex(s), as_complex(t)
    _check_h(s, t)
    return euler_double_zeta(s, t, opts) - euler_pole_term(s, t, opts)


def funeq_sides(s, t, opts: EvalOptions = DEFAULT_OPTIONS, drop_sine: bool = False,
                ) -> tuple[Approx, Approx]:
    """Both sides of the functional equation relating h(s,t) and h(1-t,1-s)."""
    s, t = as_complex(s), as_complex(t)
    w = s + t - 1
    scale = cmath.exp(-w * LOG_2PI) * (1 / gamma(1 - t).value)
    lhs = h_eval(s, t, opts) * scale
    rhs = cmath.cos(math.pi * w / 2) * rgamma(s) * h_eval(1 - t, 1 - s, opts)
    if not drop_sine:
        a = A_shifted(1 - s, 1 - t, 0, opts=opts)
        rhs = rhs + cmath.sin(math.pi * w / 2) / math.pi * (gamma(1 - s) * a)
    return lhs, rhs


def funeq_residual(s, t, opts: EvalOptions = DEFAULT_OPTIONS, drop_sine: bool = False) -> Approx:
    lhs, rhs = funeq_sides(s, t, opts, drop_sine)
    return lhs - rhs


# ---------------------------------------------------------------------------
# F-plus/minus


def _check_fpm(sign: int, s: complex, t: complex):
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    if not (s.real < -0.1 and t.real > 1.1):
        raise DomainError("F_pm needs Re s < -0.1 and Re t > 1.1")


def _asymptotic_coeffs(s: complex, t: complex, J: int) -> list[complex]:
    """c_n with Psi(t, s+t; z) ~ sum_n c_n z^{-t-n}."""
    out, c = [], 1 + 0j
    for n in range(J):
        out.append(c)
        c *= -(t + n) * (1 - s + n) / (n + 1)
    return out


def F_pm(sign: int, s, t, fopts: FpmOptions = FpmOptions(),
         opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """sum_k sigma_{s+t-1}(k) Psi(t, s+t; sign * 2 pi i k).

    The first ``asymptotic_terms`` terms of the large-z expansion of Psi are
    summed in closed form as zeta(t+n) zeta(1-s+n); the remainder series
    decays like k^(Re s - 1 - J) and its tail is estimated from that rate.
    """
    s, t = as_complex(s), as_complex(t)
    _check_fpm(sign, s, t)
    J = fopts.asymptotic_terms
    coeffs = _asymptotic_coeffs(s, t, J)
    base = sign * 2j * math.pi
    log_base = LOG_2PI + sign * 0.5j * math.pi  # principal log of +-2 pi i

    closed = exact(0)
    for n, c in enumerate(coeffs):
        closed = closed + c * cmath.exp(-(t + n) * log_base) * (
            riemann_zeta(t + n, opts) * riemann_zeta(1 - s + n, opts))

    nu = s + t - 1
    # Psi minus its expansion is O(k^{-Re t - J}); sigma_nu(k) grows like k^max(Re nu, 0)
    rate = t.real + J - max(nu.real, 0.0)
    sig = sigma_table(nu, fopts.max_terms)
    total, err, k = 0j, 0.0, 0
    recent: list[float] = []
    tail = math.inf
    while k < fopts.max_terms:
        k += 1
        psi = confluent_psi(t, s + t, base * k)
        lz = log_base + math.log(k)
        asym = sum(c * cmath.exp(-(t + n) * lz) for n, c in enumerate(coeffs))
        r = sig[k - 1] * (psi.value - asym)
        total += r
        err += abs(sig[k - 1]) * psi.abs_err
        recent.append(abs(r) * k ** rate)
        if k >= 40 and k % 10 == 0:
            C = 2 * max(recent[k // 2:])
            tail = C * k ** (1 - rate) / (rate - 1)
            if tail <= fopts.tail_tol * 1e-2 * max(abs(total + closed.value), 1e-300):
                break
    scale = abs(total + closed.value)
    if tail > fopts.tail_tol * scale:
        raise SlowConvergence(f"F_pm tail {tail:.1e} after {k} terms")
    return closed + Approx(total, err + tail + 4 * k * EPS * scale)


def corollary_A_sides(s, t, fopts: FpmOptions = FpmOptions(),
                      opts: EvalOptions = DEFAULT_OPTIONS) -> tuple[Approx, Approx]:
    """2 Gamma(s) A(s,t;0) and its expression through F-plus/minus."""
    s, t = as_complex(s), as_complex(t)
    lhs = 2 * gamma(s) * A_shifted(s, t, 0, opts=opts)
    w = s + t
    rhs = (cmath.exp(w * (LOG_2PI + 0.5j * math.pi)) * F_pm(1, s, t, fopts, opts)
           + cmath.exp(w * (LOG_2PI - 0.5j * math.pi)) * F_pm(-1, s, t, fopts, opts))
    return lhs, rhs


def corollary_A_check(s, t, fopts: FpmOptions = FpmOptions(),
                      opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    lhs, rhs = corollary_A_sides(s, t, fopts, opts)
    return lhs - rhs


def fpm_self_residual(sign: int, s, t, fopts: FpmOptions = FpmOptions(),
                      opts: EvalOptions = DEFAULT_OPTIONS) -> Approx:
    """F(1-t,1-s) - (sign 2 pi i)^{s+t-1} F(s,t)."""
    s, t = as_complex(s), as_complex(t)
    w = s + t - 1
    factor = cmath.exp(w * (LOG_2PI + sign * 0.5j * math.pi))
    return F_pm(sign, 1 - t, 1 - s, fopts, opts) - factor * F_pm(sign, s, t, fopts, opts)
