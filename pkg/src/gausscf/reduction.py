"""Gauss reduction of rank-two Z[i]-lattice bases and the successor search.

Reduction works for any weighted Hermitian norm |(z1,z2)|_t^2 =
|t*z1|^2 + |z2/t|^2 and yields a basis realizing both lattice minima.  The
successor search finds, for a minimal vector u with u1 != 0, the next minimal
vector: after reducing with the weight t = s/|u1| where
s = sqrt((4/pi)|det|), every successor is an integer combination
z*w + z'*w' with |z|^2 + |z'|^2 < 23, so a finite sweep of that ball
restricted to the open cylinder |x1| < |u1| suffices.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from .core import GaussInt, nearest_gauss, arg
from .lattice import Basis2, Vec2

logger = logging.getLogger(__name__)

#: Successor candidates live in |z|^2 + |z'|^2 < 23.
SEARCH_BALL = 23

MODULUS_TOL = 1e-9


@dataclass(frozen=True)
class WeightedNorm:
    """The Hermitian norm |(z1,z2)|_t^2 = |t*z1|^2 + |z2/t|^2, t > 0."""

    t: float = 1.0

    def __post_init__(self):
        if not self.t > 0:
            raise ValueError("weight t must be positive")

    def inner(self, x: Vec2, y: Vec2) -> complex:
        t2 = self.t * self.t
        return t2 * x[0] * y[0].conjugate() + (x[1] * y[1].conjugate()) / t2

    def norm_sq(self, x: Vec2) -> float:
        t2 = self.t * self.t
        return t2 * abs(x[0]) ** 2 + abs(x[1]) ** 2 / t2

    def __call__(self, x: Vec2) -> float:
        return math.sqrt(self.norm_sq(x))


@dataclass(frozen=True)
class ReducedBasis:
    """A reduced basis: ||w|| and ||wp|| realize the two lattice minima.

    ``transform`` is the unimodular change-of-basis matrix over Z[i] with
    (w, wp) = (original basis) * transform, witnessing module equality.
    """

    w: Vec2
    wp: Vec2
    transform: tuple[GaussInt, GaussInt, GaussInt, GaussInt]

    def transform_det(self) -> GaussInt:
        a, b, c, d = self.transform
        return a * d - b * c


def _comb(u: Vec2, v: Vec2, a: GaussInt, b: GaussInt) -> Vec2:
    ca, cb = complex(a), complex(b)
    return (ca * u[0] + cb * v[0], ca * u[1] + cb * v[1])


def gauss_reduce(
    u: Vec2, v: Vec2, norm: WeightedNorm = WeightedNorm(), max_iter: int = 10_000
) -> ReducedBasis:
    """Reduce the free basis (u, v) with respect to ``norm``.

    Alternates nearest-integer size reduction of the projection coefficient
    with swaps until ||w|| <= ||wp|| survives the reduction step.
    """
    if abs(u[0] * v[1] - u[1] * v[0]) < 1e-14:
        raise ValueError("basis columns are C-linearly dependent")
    # column representation of the accumulated unimodular transform
    cu = (GaussInt(1, 0), GaussInt(0, 0))
    cv = (GaussInt(0, 0), GaussInt(1, 0))
    if norm(v) < norm(u):
        u, v = v, u
        cu, cv = cv, cu
    for _ in range(max_iter):
        mu = norm.inner(v, u) / norm.norm_sq(u)
        p = nearest_gauss(mu)
        v = _comb(v, u, GaussInt(1, 0), -p)
        cv = (cv[0] - p * cu[0], cv[1] - p * cu[1])
        if norm(u) <= norm(v):
            return ReducedBasis(u, v, (cu[0], cv[0], cu[1], cv[1]))
        u, v = v, u
        cu, cv = cv, cu
    raise RuntimeError("gauss_reduce did not terminate")


def first_minimal(basis: Basis2) -> Vec2:
    """A minimal vector of the lattice: a shortest vector for the standard
    Hermitian norm is minimal, and Gauss reduction produces one."""
    fu, fv = basis.free_basis()
    return gauss_reduce(fu, fv).w


def _ball_coefficients(limit: int = SEARCH_BALL):
    coeffs = []
    reach = math.isqrt(limit)
    rng = range(-reach, reach + 1)
    for a in rng:
        for b in rng:
            n1 = a * a + b * b
            if n1 >= limit:
                continue
            for c in rng:
                for d in rng:
                    if n1 + c * c + d * d < limit:
                        coeffs.append((complex(a, b), complex(c, d)))
    arr = np.array(coeffs)
    return arr[:, 0], arr[:, 1]


_BALL_Z, _BALL_ZP = _ball_coefficients()


def successor_candidates(basis: Basis2, u: Vec2, tol: float = MODULUS_TOL) -> list[Vec2]:
    """Nonzero lattice points of the 23-ball sweep lying in the open infinite
    cylinder |x1| < |u1|, the pool from which the successor is selected."""
    u1 = abs(u[0])
    if u1 <= tol:
        return []
    s = math.sqrt(4.0 / math.pi * abs(basis.full_det()))
    t = s / u1
    fu, fv = basis.free_basis()
    red = gauss_reduce(fu, fv, WeightedNorm(t))
    w, wp = red.w, red.wp
    x1 = _BALL_Z * w[0] + _BALL_ZP * wp[0]
    cutoff = u1 - tol * max(1.0, u1)
    keep = np.abs(x1) < cutoff
    x1 = x1[keep]
    x2 = _BALL_Z[keep] * w[1] + _BALL_ZP[keep] * wp[1]
    nonzero = (np.abs(x1) > tol) | (np.abs(x2) > tol)
    return list(zip(x1[nonzero], x2[nonzero]))


def _lex_select(candidates: list[Vec2], tol: float) -> tuple[Vec2, bool]:
    """Minimum for the tolerance-aware total order (|x2|, |x1|, arg x2, arg x1).

    Returns the winner and a flag marking a genuine tie: another candidate
    matching on both moduli that is not a unit multiple of the winner.
    """
    m2 = min(abs(c[1]) for c in candidates)
    pool = [c for c in candidates if abs(c[1]) <= m2 + tol]
    m1 = min(abs(c[0]) for c in pool)
    pool = [c for c in pool if abs(c[0]) <= m1 + tol]
    winner = min(pool, key=lambda c: (arg(c[1]), arg(c[0])))
    tie = False
    for c in pool:
        ratio = None
        if abs(winner[1]) > tol:
            ratio = c[1] / winner[1]
        elif abs(winner[0]) > tol:
            ratio = c[0] / winner[0]
        if ratio is None:
            continue
        if min(abs(ratio - ik) for ik in (1, 1j, -1, -1j)) > 1e-6:
            tie = True
            break
    return winner, tie


def next_minimal(basis: Basis2, u: Vec2, tol: float = MODULUS_TOL) -> Vec2 | None:
    """The minimal vector following u (None when u1 = 0: the chain stops,
    which happens exactly for rational directions).

    Among all candidates in the open cylinder the lexicographic minimum is
    returned, made single-valued by the total tie order
    (|x2|, |x1|, arg x2, arg x1); genuine ties are logged.
    """
    cands = successor_candidates(basis, u, tol)
    if abs(u[0]) <= tol:
        return None
    if not cands:
        raise RuntimeError("successor search found no candidate; invalid input pair")
    winner, tie = _lex_select(cands, tol)
    if tie:
        logger.warning("ambiguous successor of %s: tie broken by total order", u)
    return winner


def minimal_chain(basis: Basis2, start: Vec2, max_steps: int):
    """Iterate ``next_minimal`` from ``start``; yields start first."""
    x = start
    yield x
    for _ in range(max_steps):
        nxt = next_minimal(basis, x)
        if nxt is None:
            return
        yield nxt
        x = nxt
