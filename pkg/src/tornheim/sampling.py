"""Seeded sample points for the identity suites.

All draws use NumPy's PCG64 generator (``numpy.random.default_rng(seed)``)
and consume it in a fixed order, so a seed names the same points on every
platform NumPy supports.
"""
from __future__ import annotations

import numpy as np


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _dist_to_int(z: complex) -> float:
    return abs(z - round(z.real))


def _draw(g: np.random.Generator, re: tuple[float, float], im: float) -> complex:
    x = g.uniform(*re)
    y = g.uniform(-im, im) if im > 0 else 0.0
    return complex(x, y)


def _draw_off_lattice(g, re, im, min_dist=0.1) -> complex:
    while True:
        z = _draw(g, re, im)
        if _dist_to_int(z) >= min_dist:
            return z


def theorem_points(seed: int, n: int) -> list[tuple[complex, complex, complex]]:
    """Points in the region of convergence with s and t kept off the integers."""
    g = rng(seed)
    out = []
    for _ in range(n):
        s = _draw_off_lattice(g, (2.2, 4.0), 2.0)
        t = _draw_off_lattice(g, (2.2, 4.0), 2.0)
        u = _draw(g, (2.2, 4.0), 2.0)
        out.append((s, t, u))
    return out


def pfd_points(seed: int, n: int, ordered: bool) -> list[tuple[complex, complex, float, float]]:
    """(s, t, p, q) with Re s, Re t in (0.2, 2.8); ``ordered`` forces p < q - 0.2."""
    g = rng(seed)
    out = []
    while len(out) < n:
        s = _draw_off_lattice(g, (0.2, 2.8), 1.0)
        t = _draw_off_lattice(g, (0.2, 2.8), 1.0)
        p, q = g.uniform(0.5, 3.0), g.uniform(0.5, 3.0)
        if ordered:
            p, q = min(p, q), max(p, q)
            if q - p < 0.2:
                continue
        out.append((s, t, float(p), float(q)))
    return out


def barnes_points(seed: int, n: int) -> list[tuple[complex, complex]]:
    g = rng(seed)
    return [(_draw_off_lattice(g, (0.2, 3.0), 1.0), _draw_off_lattice(g, (0.2, 3.0), 1.0))
            for _ in range(n)]


def funeq_points(seed: int, n: int) -> list[tuple[complex, complex]]:
    """(s, t) with s, t and s + t at least 0.1 from every integer, |Im| <= 1."""
    g = rng(seed)
    out = []
    while len(out) < n:
        s = _draw(g, (-1.5, 3.0), 1.0)
        t = _draw(g, (-1.5, 3.0), 1.0)
        if min(_dist_to_int(s), _dist_to_int(t), _dist_to_int(s + t)) >= 0.1:
            out.append((s, t))
    return out


def funeq_hyperplane_points(seed: int, n: int, total: int) -> list[tuple[complex, complex]]:
    """(s, total - s) with s off the integers."""
    g = rng(seed)
    out = []
    while len(out) < n:
        s = _draw(g, (-0.9, 1.9), 0.5)
        if _dist_to_int(s) >= 0.1:
            out.append((s, total - s))
    return out


def continuation_points(seed: int, n: int) -> list[tuple[complex, complex, complex]]:
    """Points where direct sums converge quickly and the cosine determinant is large."""
    from .core import delta
    g = rng(seed)
    out = []
    while len(out) < n:
        s, t, u = (_draw(g, (2.3, 3.5), 1.0) for _ in range(3))
        if abs(delta(s, t, u)) >= 0.1:
            out.append((s, t, u))
    return out
