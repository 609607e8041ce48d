"""Rank-two lattices over Z[i] in C^2 and brute-force minimality oracles.

A lattice is presented by a basis pair (u, v).  When ``index`` is 1 the
lattice is Z[i]u + Z[i]v; when ``index`` is 2 it is the half-integral
extension {gu + hv : (g, h) in Z[i]^2 or J^2}, which admits the free basis
(u, (u+v)/(1+i)).

The oracles here enumerate lattice points outright.  They are deliberately
independent of the fast reduction/continued-fraction paths and serve as
ground truth in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import GaussInt

#: Tolerance used when comparing coordinate moduli (preorder ties,
#: minimality checks).  Coarser than the membership tolerance because it
#: absorbs rounding accumulated along orbits.
MODULUS_TOL = 1e-9

Vec2 = tuple[complex, complex]


@dataclass(frozen=True)
class Basis2:
    """A lattice basis: columns u, v in C^2 plus the presentation index."""

    u: Vec2
    v: Vec2
    index: int = 1

    def __post_init__(self):
        if self.index not in (1, 2):
            raise ValueError("index must be 1 or 2")
        if abs(self.det()) < 1e-14:
            raise ValueError("basis columns are C-linearly dependent")

    def det(self) -> complex:
        return self.u[0] * self.v[1] - self.u[1] * self.v[0]

    def full_det(self) -> complex:
        """Determinant of a free basis of the full lattice."""
        d = self.det()
        return d / (1 + 1j) if self.index == 2 else d

    def free_basis(self) -> tuple[Vec2, Vec2]:
        """A free Z[i]-basis of the full lattice (index-2 presentations are
        completed through (u+v)/(1+i))."""
        if self.index == 1:
            return self.u, self.v
        mid = (
            (self.u[0] + self.v[0]) / (1 + 1j),
            (self.u[1] + self.v[1]) / (1 + 1j),
        )
        return self.u, mid


@dataclass(frozen=True)
class MinPair:
    """Two consecutive minimal vectors in normal form.

    The vectors are u = (u1, v2*w2) and v = (u1*w1, v2) with |w1|, |w2| < 1;
    ``index`` records whether Z[i]u + Z[i]v is the full lattice or sits in it
    with index 2.
    """

    u1: complex
    v2: complex
    w1: complex
    w2: complex
    index: int = 1

    def u(self) -> Vec2:
        return (self.u1, self.v2 * self.w2)

    def v(self) -> Vec2:
        return (self.u1 * self.w1, self.v2)

    def basis(self) -> Basis2:
        return Basis2(self.u(), self.v(), self.index)


def norm_uv(x: Vec2, pair: MinPair) -> float:
    """The norm whose unit ball is the coordinate cylinder C(u, v):
    max(|x1|/max(|u1|,|v1|), |x2|/max(|u2|,|v2|))."""
    u, v = pair.u(), pair.v()
    r1 = max(abs(u[0]), abs(v[0]))
    r2 = max(abs(u[1]), abs(v[1]))
    if r1 <= 0 or r2 <= 0:
        raise ValueError("degenerate pair: zero cylinder dimension")
    return max(abs(x[0]) / r1, abs(x[1]) / r2)


def lex_less(x: Vec2, y: Vec2, tol: float = MODULUS_TOL) -> bool:
    """Lexicographic preorder: |x2| < |y2|, or |x2| = |y2| and |x1| <= |y1|,
    with modulus equality decided under ``tol``."""
    x2, y2 = abs(x[1]), abs(y[1])
    if x2 < y2 - tol:
        return True
    if x2 > y2 + tol:
        return False
    return abs(x[0]) <= abs(y[0]) + tol


def gauss_ints_in_disk(radius: float) -> list[GaussInt]:
    """All Gaussian integers of modulus <= radius (including zero)."""
    n = math.floor(radius + 1e-12)
    r2 = radius * radius * (1 + 1e-12)
    out = []
    for a in range(-n, n + 1):
        for b in range(-n, n + 1):
            if a * a + b * b <= r2:
                out.append(GaussInt(a, b))
    return out


def j_numerators_in_disk(radius_times_sqrt2: float) -> list[GaussInt]:
    """Numerators x (odd, i.e. not in (1+i)Z[i]) with |x| <= radius*sqrt(2),
    so that x/(1+i) ranges over the J elements of modulus <= radius."""
    return [g for g in gauss_ints_in_disk(radius_times_sqrt2) if g and not g.in_I()]


def enumerate_points(basis: Basis2, coeff_bound: float) -> list[Vec2]:
    """All gu + hv with g, h in Z[i] of modulus <= coeff_bound, plus the J^2
    combinations under the same modulus bound when index = 2.  Includes 0."""
    if coeff_bound < 0:
        raise ValueError("coeff_bound must be >= 0")
    u, v = basis.u, basis.v
    pts = []
    ints = [complex(g) for g in gauss_ints_in_disk(coeff_bound)]
    for g in ints:
        for h in ints:
            pts.append((g * u[0] + h * v[0], g * u[1] + h * v[1]))
    if basis.index == 2:
        js = [complex(x) / (1 + 1j) for x in j_numerators_in_disk(coeff_bound * math.sqrt(2))]
        for g in js:
            for h in js:
                pts.append((g * u[0] + h * v[0], g * u[1] + h * v[1]))
    return pts


def _point_arrays(basis: Basis2, coeff_bound: float) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized coordinates (z1, z2) of all enumerated lattice points."""
    u, v = basis.u, basis.v
    ints = np.array([complex(g) for g in gauss_ints_in_disk(coeff_bound)])
    g = ints[:, None]
    h = ints[None, :]
    z1 = (g * u[0] + h * v[0]).ravel()
    z2 = (g * u[1] + h * v[1]).ravel()
    if basis.index == 2:
        js = np.array(
            [complex(x) / (1 + 1j) for x in j_numerators_in_disk(coeff_bound * math.sqrt(2))]
        )
        if js.size:
            gj = js[:, None]
            hj = js[None, :]
            z1 = np.concatenate([z1, (gj * u[0] + hj * v[0]).ravel()])
            z2 = np.concatenate([z2, (gj * u[1] + hj * v[1]).ravel()])
    return z1, z2


def coeff_bound_for_cylinder(basis: Basis2, r1: float, r2: float) -> int:
    """Coefficient modulus bound sufficient for the oracles: any lattice point
    gu + hv inside the cylinder |z1| <= r1, |z2| <= r2 has, by Cramer's rule,
    |g| <= (r1|v2| + r2|v1|)/|det| and |h| <= (r1|u2| + r2|u1|)/|det|."""
    d = abs(basis.det())
    bg = (r1 * abs(basis.v[1]) + r2 * abs(basis.v[0])) / d
    bh = (r1 * abs(basis.u[1]) + r2 * abs(basis.u[0])) / d
    # J coefficients obey the same Cramer bound on their value modulus.
    return math.ceil(max(bg, bh)) + 1


def solve_coefficients(basis: Basis2, x: Vec2) -> tuple[complex, complex]:
    """Coefficients (g, h) with x = gu + hv, solved over C."""
    d = basis.det()
    g = (x[0] * basis.v[1] - x[1] * basis.v[0]) / d
    h = (basis.u[0] * x[1] - basis.u[1] * x[0]) / d
    return g, h


def _on_coefficient_grid(basis: Basis2, x: Vec2, tol: float = 1e-7) -> bool:
    g, h = solve_coefficients(basis, x)
    gi = complex(round(g.real), round(g.imag))
    hi = complex(round(h.real), round(h.imag))
    if abs(g - gi) < tol and abs(h - hi) < tol:
        return True
    if basis.index == 2:
        g2, h2 = g * (1 + 1j), h * (1 + 1j)
        g2i = complex(round(g2.real), round(g2.imag))
        h2i = complex(round(h2.real), round(h2.imag))
        odd = (round(g2.real) + round(g2.imag)) % 2 == 1 and (
            round(h2.real) + round(h2.imag)
        ) % 2 == 1
        return odd and abs(g2 - g2i) < tol and abs(h2 - h2i) < tol
    return False


def oracle_is_minimal(
    basis: Basis2, x: Vec2, coeff_bound: float, tol: float = MODULUS_TOL
) -> bool:
    """Brute-force minimality check: no enumerated nonzero lattice point lies
    in the cylinder C(x) with a strictly smaller coordinate modulus.

    Sound only when ``coeff_bound`` reaches the enumeration radius reported by
    :func:`coeff_bound_for_cylinder` for C(x).
    """
    ax1, ax2 = abs(x[0]), abs(x[1])
    if ax1 < tol and ax2 < tol:
        raise ValueError("x must be nonzero")
    if not _on_coefficient_grid(basis, x):
        raise ValueError("x is not a lattice point of the given basis")
    z1, z2 = _point_arrays(basis, coeff_bound)
    a1 = np.abs(z1)
    a2 = np.abs(z2)
    nonzero = (a1 > tol) | (a2 > tol)
    inside = (a1 <= ax1 + tol) & (a2 <= ax2 + tol) & nonzero
    equal = (np.abs(a1 - ax1) <= tol) & (np.abs(a2 - ax2) <= tol)
    return bool(np.all(~inside | equal))


def oracle_consecutive(
    basis: Basis2, u: Vec2, v: Vec2, coeff_bound: float, tol: float = MODULUS_TOL
) -> bool:
    """Brute-force check that the open cylinder C(u, v) contains no nonzero
    lattice point (the defining property of consecutive minimal vectors)."""
    r1 = max(abs(u[0]), abs(v[0]))
    r2 = max(abs(u[1]), abs(v[1]))
    z1, z2 = _point_arrays(basis, coeff_bound)
    a1 = np.abs(z1)
    a2 = np.abs(z2)
    nonzero = (a1 > tol) | (a2 > tol)
    strictly_inside = (a1 < r1 - tol) & (a2 < r2 - tol) & nonzero
    return not bool(np.any(strictly_inside))


def pair_index(basis: Basis2, u: Vec2, v: Vec2, tol: float = 1e-6) -> int:
    """Index of Z[i]u + Z[i]v inside the full lattice, read off the
    determinant ratio: |det(u,v)/det(lattice)| is 1 or sqrt(2)."""
    ratio = abs((u[0] * v[1] - u[1] * v[0]) / basis.full_det())
    if abs(ratio - 1.0) < tol:
        return 1
    if abs(ratio - math.sqrt(2)) < tol:
        return 2
    raise ValueError(f"pair spans an unexpected sublattice (det ratio {ratio})")
