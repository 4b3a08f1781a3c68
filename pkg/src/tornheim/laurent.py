"""Exact rational objects: truncated Laurent series and symbolic zeta combinations."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .errors import InsufficientOrder
from .special import bernoulli


@dataclass(frozen=True)
class RationalLaurent:
    """sum_{k >= lowest_exponent} c_k x^k, known exactly for exponents below ``order``."""

    lowest_exponent: int
    coefficients: tuple[Fraction, ...]
    order: int

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        keep = max(0, self.order - self.lowest_exponent)
        object.__setattr__(self, "coefficients", coeffs[:keep])

    @classmethod
    def from_dict(cls, terms: Mapping[int, Fraction], order: int) -> RationalLaurent:
        lo = min(terms, default=order)
        coeffs = [Fraction(0)] * max(0, order - lo)
        for k, c in terms.items():
            if k < order:
                coeffs[k - lo] += Fraction(c)
        return cls(lo, tuple(coeffs), order)

    def coefficient(self, k: int) -> Fraction:
        if k >= self.order:
            raise InsufficientOrder(f"x^{k} lies beyond the truncation order {self.order}")
        i = k - self.lowest_exponent
        return self.coefficients[i] if 0 <= i < len(self.coefficients) else Fraction(0)

    def formal_residue(self) -> Fraction:
        """Coefficient of x^-1."""
        return self.coefficient(-1)

    def __add__(self, other: RationalLaurent) -> RationalLaurent:
        order = min(self.order, other.order)
        lo = min(self.lowest_exponent, other.lowest_exponent)
        return RationalLaurent.from_dict(
            {k: self.coefficient(k) + other.coefficient(k) for k in range(lo, order)}, order)

    def __neg__(self) -> RationalLaurent:
        return RationalLaurent(self.lowest_exponent, tuple(-c for c in self.coefficients), self.order)

    def __sub__(self, other: RationalLaurent) -> RationalLaurent:
        return self + (-other)

    def __mul__(self, other: RationalLaurent | int | Fraction) -> RationalLaurent:
        if not isinstance(other, RationalLaurent):
            return RationalLaurent(self.lowest_exponent,
                                   tuple(c * other for c in self.coefficients), self.order)
        order = min(self.order + other.lowest_exponent, other.order + self.lowest_exponent)
        lo = self.lowest_exponent + other.lowest_exponent
        out = [Fraction(0)] * max(0, order - lo)
        for i, a in enumerate(self.coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other.coefficients):
                k = i + j
                if k >= len(out):
                    break
                out[k] += a * b
        return RationalLaurent(lo, tuple(out), order)

    __rmul__ = __mul__


# ---------------------------------------------------------------------------
# Q-linear combinations of monomials in pi and odd zeta values


Monomial = tuple[str, ...]  # sorted symbol names, repeated for powers


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


@dataclass(frozen=True)
class ExactValue:
    """rational_part + sum coeff * monomial, each monomial a product of symbols.

    Symbols are ``"pi"``, ``"zeta(n)"`` for odd n >= 3, and derivative markers
    such as ``"zeta'(-3)"``.
    """

    rational_part: Fraction = Fraction(0)
    zeta_coeffs: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "rational_part", Fraction(self.rational_part))
        clean = {tuple(sorted(k)): Fraction(v) for k, v in self.zeta_coeffs.items() if v != 0}
        object.__setattr__(self, "zeta_coeffs", clean)

    @property
    def is_rational(self) -> bool:
        return not self.zeta_coeffs

    @classmethod
    def symbol(cls, name: str, coeff=1) -> ExactValue:
        return cls(Fraction(0), {(name,): Fraction(coeff)})

    def _terms(self) -> dict[Monomial, Fraction]:
        d = dict(self.zeta_coeffs)
        if self.rational_part:
            d[()] = self.rational_part
        return d

    @staticmethod
    def _from_terms(d: dict[Monomial, Fraction]) -> ExactValue:
        rat = d.pop((), Fraction(0))
        return ExactValue(rat, d)

    def __add__(self, other) -> ExactValue:
        other = _lift(other)
        d = self._terms()
        for k, v in other._terms().items():
            d[k] = d.get(k, Fraction(0)) + v
        return self._from_terms(d)

    __radd__ = __add__

    def __neg__(self) -> ExactValue:
        return self * -1

    def __sub__(self, other) -> ExactValue:
        return self + (-_lift(other))

    def __mul__(self, other) -> ExactValue:
        other = _lift(other)
        d: dict[Monomial, Fraction] = {}
        for ka, va in self._terms().items():
            for kb, vb in other._terms().items():
                k = _mono_mul(ka, kb)
                d[k] = d.get(k, Fraction(0)) + va * vb
        return self._from_terms(d)

    __rmul__ = __mul__

    def numeric(self, values: Mapping[str, complex] | None = None) -> complex:
        """Evaluate with floating-point values for the symbols."""
        from .special import riemann_zeta, riemann_zeta_deriv

        def sym(name: str) -> complex:
            if values and name in values:
                return values[name]
            if name == "pi":
                return math.pi
            if name.startswith("zeta'("):
                return riemann_zeta_deriv(int(name[6:-1]), 1).value
            if name.startswith("zeta("):
                return riemann_zeta(int(name[5:-1])).value
            raise KeyError(name)

        total = complex(self.rational_part)
        for mono, c in self.zeta_coeffs.items():
            p = complex(c)
            for name in mono:
                p *= sym(name)
            total += p
        return total

    def __str__(self) -> str:
        parts = []
        for mono, c in sorted(self._terms().items(), key=lambda kv: (len(kv[0]), kv[0])):
            names: dict[str, int] = {}
            for n in mono:
                names[n] = names.get(n, 0) + 1
            body = "*".join(n if p == 1 else f"{n}^{p}" for n, p in names.items())
            parts.append(str(c) if not body else (body if c == 1 else "-" + body if c == -1 else f"{c}*{body}"))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
        return out


def _lift(x) -> ExactValue:
    if isinstance(x, ExactValue):
        return x
    return ExactValue(Fraction(x))


def zeta_exact(n: int) -> ExactValue:
    """zeta(n) at an integer n != 1, exactly where possible, symbolically otherwise."""
    if n == 1:
        from .errors import PoleError
        raise PoleError("zeta has a pole at 1")
    if n <= 0:
        return ExactValue((-1) ** (-n) * bernoulli(1 - n) / (1 - n))
    if n % 2 == 0:
        k = n // 2
        c = (-1) ** (k + 1) * bernoulli(n) * Fraction(2) ** n / (2 * math.factorial(n))
        return ExactValue(Fraction(0), {("pi",) * n: c})
    return ExactValue.symbol(f"zeta({n})")
