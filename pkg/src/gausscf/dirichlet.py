"""The complex Dirichlet constant sqrt(2)/(3 - sqrt(3)) and its witnesses.

For any theta the products |q_{n+1}| * |q_n theta - p_n| over consecutive
best approximations are bounded by C = sqrt(2)/(3 - sqrt(3)) = 1.115355...,
and the bound is sharp: it is the supremum of sqrt(k)/|1 - w1 w2| over the
admissible pairs of either index, attained at an explicit corner of the
constraint arcs.  The extremal lattice built from that corner has an empty
open sup-norm ball of squared radius exactly C.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cfrac import best_approximations
from .lattice import Basis2, coeff_bound_for_cylinder, oracle_consecutive
from .regions import (
    BLUE2,
    GREEN2,
    RED2,
    SQRT3,
    in_D,
    membership_masks,
)

SQRT2 = math.sqrt(2)


def theoretical_constant() -> float:
    """sqrt(2)/(3 - sqrt(3)), equal to 1/sqrt(6 - 3*sqrt(3))."""
    return SQRT2 / (3 - SQRT3)


@dataclass(frozen=True)
class DirichletReport:
    theta: complex
    c_theta: float
    c_prime_theta: float
    attaining_index: int
    n_terms: int
    terminated: bool


def approximation_products(theta: complex, q_max: float) -> tuple[list[float], bool]:
    """The products |q_{n+1}| * |q_n theta - p_n| over consecutive terms of
    the best-approximation sequence up to q_max."""
    seq, terminated = best_approximations(theta, q_max)
    prods = [seq[n + 1].qmod * seq[n].err for n in range(len(seq) - 1)]
    return prods, terminated


def dirichlet_constant(theta: complex, q_max: float) -> DirichletReport:
    """Windowed supremum of the approximation products, plus a tail estimate
    (the supremum over the last half of the window) standing in for the
    limsup."""
    if q_max < 2:
        raise ValueError("q_max must be >= 2")
    prods, terminated = approximation_products(theta, q_max)
    if not prods:
        raise ValueError("no consecutive approximation pairs below q_max")
    c_theta = max(prods)
    attaining = int(np.argmax(prods))
    tail = prods[len(prods) // 2 :]
    c_prime = max(tail) if tail else c_theta
    return DirichletReport(
        theta=theta,
        c_theta=c_theta,
        c_prime_theta=c_prime,
        attaining_index=attaining,
        n_terms=len(prods) + 1,
        terminated=terminated,
    )


def extremal_lattice() -> tuple[Basis2, float]:
    """The lattice attaining the Dirichlet constant.

    Built from w1 = 1 - sqrt(3)/2 + i/2 and w2 = -i*w1; then
    |1 - w1 w2|^2 = 6 - 3 sqrt(3) and the open sup-norm ball of radius r0
    with r0^2 = sqrt(2)/(3 - sqrt(3)) contains no nonzero lattice point.
    """
    w1 = complex(1 - SQRT3 / 2, 0.5)
    w2 = -1j * w1
    prod = 1 - w1 * w2
    r0 = 1 / math.sqrt(abs(prod))
    alpha = complex(prod.real, -prod.imag) / abs(prod)  # e^{-i arg(1 - w1 w2)}
    u = (r0 * (1 + 0j), r0 * alpha * w2)
    v = (r0 * w1, r0 * alpha)
    return Basis2(u, v, index=1), r0


def extremal_ball_is_empty(coeff_bound: int = 8) -> bool:
    """Oracle confirmation that the extremal lattice's open ball is empty."""
    basis, r0 = extremal_lattice()
    need = coeff_bound_for_cylinder(basis, r0, r0)
    return oracle_consecutive(basis, basis.u, basis.v, max(coeff_bound, need))


# ---------------------------------------------------------------------------
# suprema over the admissible regions

# Extremal boundary arcs (center, radius, arg range of z - center) on which
# the maximum of 1/|1 - w1 w2| is attained, per index.
_ARCS_W1_INDEX1 = (
    (1j, 1.0, 3 * math.pi / 2, 2 * math.pi - math.pi / 3),
    (1 + 1j, 1.0, 4 * math.pi / 3, 3 * math.pi / 2),
)
_ARCS_W2_INDEX1 = (
    (1 + 0j, 1.0, math.pi, 7 * math.pi / 6),
    (1 - 1j, 1.0, 5 * math.pi / 6, math.pi),
)
_ARCS_W1_INDEX2 = ((-1j, SQRT2, math.pi / 4, 5 * math.pi / 12),)
_ARCS_W2_INDEX2 = ((1 + 0j, SQRT2, 3 * math.pi / 4, 11 * math.pi / 12),)


def _arc_points(arcs, n: int) -> np.ndarray:
    pts = []
    for center, radius, a0, a1 in arcs:
        t = np.linspace(a0, a1, n)
        pts.append(center + radius * np.exp(1j * t))
    return np.concatenate(pts)


def _grid_max(w1s: np.ndarray, w2s: np.ndarray, scale: float) -> float:
    prod = np.abs(1 - w1s[:, None] * w2s[None, :])
    return float(scale / prod.min())


def _coarse_region_max(index: int, n: int, seed: int = 7) -> float:
    """Safety net: random sweep of the full admissible region."""
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1, 1, size=(4, n))
    w1 = pts[0] + 1j * pts[1]
    w2 = pts[2] + 1j * pts[3]
    keep = (np.abs(w1) < 1) & (np.abs(w2) < 1)
    w1, w2 = w1[keep], w2[keep]
    m1, m2 = membership_masks(w1, w2)
    mask = m1 if index == 1 else m2
    if not np.any(mask):
        raise RuntimeError("safety sweep found no admissible pair")
    scale = 1.0 if index == 1 else SQRT2
    return float(np.max(scale / np.abs(1 - w1[mask] * w2[mask])))


def region_supremum(index: int, grid_n: int) -> float:
    """Numerical supremum of sqrt(index)/|1 - w1 w2| over the admissible
    pairs, by a parametrized search of the extremal boundary arcs.

    A coarse random sweep of the full region cross-checks the arc reduction;
    a sweep value exceeding the arc value by more than 1e-4 raises.
    """
    if index not in (1, 2):
        raise ValueError("index must be 1 or 2")
    if grid_n < 100:
        raise ValueError("grid_n must be >= 100")
    n = max(100, int(math.isqrt(grid_n)))
    if index == 1:
        w1s = _arc_points(_ARCS_W1_INDEX1, n)
        w2s = _arc_points(_ARCS_W2_INDEX1, n)
        best = _grid_max(w1s, w2s, 1.0)
    else:
        w1s = _arc_points(_ARCS_W1_INDEX2, n)
        w2s = _arc_points(_ARCS_W2_INDEX2, n)
        best = _grid_max(w1s, w2s, SQRT2)
    coarse = _coarse_region_max(index, min(grid_n * 10, 2_000_000))
    if coarse > best + 1e-4:
        raise RuntimeError(
            f"arc search missed the maximum: coarse sweep {coarse} > arcs {best}"
        )
    return best


def case3_supremum(grid_n: int, seed: int = 11) -> float:
    """Supremum of 1/|1 - w1 w2| restricted to index-1 pairs whose w2 avoids
    both the red and blue disks (bounded by 1/cos(pi/12))."""
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-1, 1, size=(4, grid_n))
    w1 = pts[0] + 1j * pts[1]
    w2 = pts[2] + 1j * pts[3]
    keep = (np.abs(w1) < 1) & (np.abs(w2) < 1)
    w1, w2 = w1[keep], w2[keep]
    sector = (np.angle(w1) >= 0) & (np.angle(w1) <= math.pi / 4)
    in_dbar = (np.abs(w2 - 1) >= 1) & (np.abs(w2 - (1 - 1j)) >= 1)
    case3 = (np.abs(w2 - RED2.center) >= RED2.radius) & (
        np.abs(w2 - BLUE2.center) >= BLUE2.radius
    )
    mask = sector & in_dbar & case3
    return float(np.max(1.0 / np.abs(1 - w1[mask] * w2[mask])))
