"""Complex values with a tracked absolute-error estimate, and numeric policy."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

import numpy as np

EPS = np.finfo(float).eps


def as_complex(z) -> complex:
    """Coerce a number (or :class:`Approx`) to a finite Python complex."""
    if isinstance(z, Approx):
        z = z.value
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite complex value {z!r}")
    return z


@dataclass(frozen=True)
class Approx:
    """A complex number together with an absolute error estimate.

    ``abs_err`` is an estimate, not a rigorous enclosure. Arithmetic between
    ``Approx`` values adds errors to first order.
    """

    value: complex
    abs_err: float = 0.0

    def __post_init__(self):
        v = complex(self.value)
        if not (math.isfinite(v.real) and math.isfinite(v.imag)):
            raise ArithmeticError(f"non-finite result {v!r}")
        if not self.abs_err >= 0 or not math.isfinite(self.abs_err):
            raise ArithmeticError(f"invalid error estimate {self.abs_err!r}")
        object.__setattr__(self, "value", v)
        object.__setattr__(self, "abs_err", float(self.abs_err))

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag

    @property
    def rel_err(self) -> float:
        a = abs(self.value)
        return self.abs_err / a if a else math.inf

    def __complex__(self):
        return self.value

    def __abs__(self):
        return abs(self.value)

    def conjugate(self) -> Approx:
        return Approx(self.value.conjugate(), self.abs_err)

    def __neg__(self):
        return Approx(-self.value, self.abs_err)

    def __add__(self, other):
        if isinstance(other, Approx):
            return Approx(self.value + other.value, self.abs_err + other.abs_err)
        return Approx(self.value + complex(other), self.abs_err)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Approx):
            err = (abs(self.value) * other.abs_err + abs(other.value) * self.abs_err
                   + self.abs_err * other.abs_err)
            return Approx(self.value * other.value, err)
        c = complex(other)
        return Approx(self.value * c, self.abs_err * abs(c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Approx):
            q = self.value / other.value
            err = (self.abs_err + abs(q) * other.abs_err) / abs(other.value)
            return Approx(q, err)
        c = complex(other)
        return Approx(self.value / c, self.abs_err / abs(c))

    def agrees(self, other, rtol: float = 0.0, atol: float = 0.0) -> bool:
        """True when the two values overlap within their errors plus tolerances."""
        o = other if isinstance(other, Approx) else Approx(complex(other))
        diff = abs(self.value - o.value)
        scale = max(abs(self.value), abs(o.value))
        return diff <= self.abs_err + o.abs_err + rtol * scale + atol


def exact(z) -> Approx:
    """Wrap a value that carries only rounding error."""
    z = complex(z)
    return Approx(z, 4 * EPS * abs(z))


@dataclass(frozen=True)
class EvalOptions:
    """Global numeric policy shared by all evaluators."""

    target_rel_tol: float = 1e-10
    series_terms: int = 64
    em_correction_order: int = 12
    quad_height: float = 40.0
    quad_rel_tol: float = 1e-12
    oracle_sum_limit: int = 32768

    def __post_init__(self):
        for name in ("target_rel_tol", "series_terms", "em_correction_order",
                     "quad_height", "quad_rel_tol", "oracle_sum_limit"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.em_correction_order % 2:
            raise ValueError("em_correction_order must be even")

    def with_(self, **changes) -> EvalOptions:
        return replace(self, **changes)


DEFAULT_OPTIONS = EvalOptions()


def principal_power(base: complex, w: complex) -> complex:
    """``base**w`` on the principal branch of the logarithm."""
    return cmath.exp(w * cmath.log(base))
