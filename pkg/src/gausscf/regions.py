"""Planar constraint regions for consecutive minimal vectors.

Three regions drive everything:

* the sector  C = {|z| < 1, arg z in [0, pi/4]},
* the domain  D = {|z| < 1, d(z,1) > 1, d(z,1-i) > 1},
* the domain  T = {|z| < 1, d(z,1) > sqrt(2), d(z,-i) > sqrt(2)},

together with six open "constraint disks" that encode which coefficient pairs
can defeat a candidate pair (w1, w2).  Distances to the regions are exact
closed forms (a seven-case dispatch for D, boundary-piece minimization for C
and T).  The W1/W2 membership predicates decide whether a normalized pair of
cylinder ratios corresponds to a genuine pair of consecutive minimal vectors,
in a strict (open-transversal) and a lax (closed/boundary-tolerant) variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import D8Element, D8_ELEMENTS, IDENTITY

TWO_PI = 2 * math.pi
SQRT2 = math.sqrt(2)
SQRT3 = math.sqrt(3)

# Corner points of the region boundaries.
Z1_D = complex(1 - SQRT3 / 2, -0.5)          # C(1,1) meets C(1-i,1)
Z2_D = complex(0.5, SQRT3 / 2)               # unit circle meets C(1,1)
Z3_T = (SQRT3 - 1) / 2 * complex(-1, 1)      # C(1,sqrt2) meets C(-i,sqrt2)


@dataclass(frozen=True)
class Disk:
    center: complex
    radius: float

    def contains(self, z: complex, closed: bool = False) -> bool:
        d = abs(z - self.center)
        return d <= self.radius if closed else d < self.radius


RED1 = Disk(1j, 1.0)
RED2 = Disk(-1j, 1.0)
BLUE1 = Disk((1 - 1j) / 2, 1 / SQRT2)
BLUE2 = Disk(1 + 1j, 1.0)
GREEN1 = Disk(1 + 1j, 1.0)
GREEN2 = Disk((1 - 1j) / 2, 1 / SQRT2)

CONSTRAINT_DISKS = {
    "red1": RED1,
    "red2": RED2,
    "blue1": BLUE1,
    "blue2": BLUE2,
    "green1": GREEN1,
    "green2": GREEN2,
}


def _ang_in(z: complex, lo: float, hi: float) -> bool:
    """Is arg(z) inside the circular interval [lo, hi] (ccw from lo to hi)?"""
    a = math.atan2(z.imag, z.real)
    return (a - lo) % TWO_PI <= (hi - lo)


# ---------------------------------------------------------------------------
# region membership


def in_C(z: complex, closed: bool = False) -> bool:
    """The sector C (arg in [0, pi/4]; modulus strict unless ``closed``)."""
    if z.imag < 0 or z.imag > z.real:
        return False
    m = abs(z)
    return m <= 1 if closed else m < 1


def in_D(z: complex, closed: bool = False) -> bool:
    if closed:
        return abs(z) <= 1 and abs(z - 1) >= 1 and abs(z - (1 - 1j)) >= 1
    return abs(z) < 1 and abs(z - 1) > 1 and abs(z - (1 - 1j)) > 1


def in_T(z: complex, closed: bool = False) -> bool:
    if closed:
        return abs(z) <= 1 and abs(z - 1) >= SQRT2 and abs(z + 1j) >= SQRT2
    return abs(z) < 1 and abs(z - 1) > SQRT2 and abs(z + 1j) > SQRT2


# ---------------------------------------------------------------------------
# distances

#: Boundary of each region as arcs (center, radius, arg_start, arg_end, ccw)
#: plus straight segments; also consumed by the plotting exports and by the
#: independent boundary-minimization oracle in the tests.
BOUNDARY_ARCS = {
    "D": (
        (0j, 1.0, math.pi / 3, 3 * math.pi / 2),
        (1 + 0j, 1.0, 2 * math.pi / 3, 7 * math.pi / 6),
        (1 - 1j, 1.0, 5 * math.pi / 6, math.pi),
    ),
    "T": (
        (0j, 1.0, math.pi / 2, math.pi),
        (-1j, SQRT2, 7 * math.pi / 12, 3 * math.pi / 4),
        (1 + 0j, SQRT2, 3 * math.pi / 4, 11 * math.pi / 12),
    ),
    "C": ((0j, 1.0, 0.0, math.pi / 4),),
}

BOUNDARY_SEGMENTS = {
    "C": ((0j, 1 + 0j), (0j, complex(SQRT2 / 2, SQRT2 / 2))),
    "D": (),
    "T": (),
}


def _dist_arc(z: complex, center: complex, radius: float, a0: float, a1: float) -> float:
    w = z - center
    if _ang_in(w, a0, a1):
        return abs(abs(w) - radius)
    e0 = center + radius * complex(math.cos(a0), math.sin(a0))
    e1 = center + radius * complex(math.cos(a1), math.sin(a1))
    return min(abs(z - e0), abs(z - e1))


def _dist_segment(z: complex, p: complex, q: complex) -> float:
    d = q - p
    t = ((z - p) * d.conjugate()).real / abs(d) ** 2
    t = min(1.0, max(0.0, t))
    return abs(z - (p + t * d))


def _dist_boundary(z: complex, region: str) -> float:
    pieces = [
        _dist_arc(z, c, r, a0, a1) for (c, r, a0, a1) in BOUNDARY_ARCS[region]
    ]
    pieces += [_dist_segment(z, p, q) for (p, q) in BOUNDARY_SEGMENTS[region]]
    return min(pieces)


def dist_D_cases(z: complex) -> list[tuple[int, float]]:
    """All matching cases of the seven-case dispatch with their values.

    The cases cover the plane and overlap only on boundary sets where their
    formulas agree: the region itself, the two excluded-disk lenses, the
    outside of the unit arc, and the wedges of the three corners -i,
    z1 = 1-sqrt(3)/2-i/2 and z2 = 1/2+sqrt(3)/2 i.
    """
    zm1 = z - 1
    zmc = z - (1 - 1j)
    out = []
    if in_D(z, closed=True):
        out.append((0, 0.0))
    if abs(zm1) <= 1 and _ang_in(zm1, 2 * math.pi / 3, 7 * math.pi / 6):
        out.append((1, 1 - abs(zm1)))
    if math.atan2(z.imag, z.real) <= math.pi / 3 and _ang_in(
        zm1, -math.pi / 12, 2 * math.pi / 3
    ):
        out.append((2, abs(z - Z2_D)))
    if abs(z) >= 1 and _ang_in(z, math.pi / 3, 3 * math.pi / 2):
        out.append((3, abs(z) - 1))
    if z.real >= 0 and _ang_in(zmc, math.pi, 23 * math.pi / 12):
        out.append((4, abs(z + 1j)))
    if abs(zmc) <= 1 and _ang_in(zmc, 5 * math.pi / 6, math.pi):
        out.append((5, 1 - abs(zmc)))
    # The z1-wedge ends at the z1/z2 bisector through 1 (arg -pi/12), where
    # it hands over to the z2-wedge with equal values.
    if _ang_in(zm1, 7 * math.pi / 6, 23 * math.pi / 12) and _ang_in(
        zmc, -math.pi / 12, 5 * math.pi / 6
    ):
        out.append((6, abs(z - Z1_D)))
    return out


def dist_D(z: complex) -> float:
    """Euclidean distance from z to the region D, by the seven-case dispatch."""
    cases = dist_D_cases(z)
    if not cases:
        raise AssertionError(f"distance dispatch missed the point {z}")
    return cases[0][1]


def dist_C(z: complex) -> float:
    """Distance to the closed sector C (zero on the sector itself)."""
    if in_C(z, closed=True):
        return 0.0
    return _dist_boundary(z, "C")


def dist_T(z: complex) -> float:
    """Distance to the region T (zero on its closure)."""
    if in_T(z, closed=True):
        return 0.0
    return _dist_boundary(z, "T")


# ---------------------------------------------------------------------------
# D8 normalization of pairs


def _in_sector(w: complex) -> bool:
    return w == 0 or (w.imag >= 0 and w.imag <= w.real)


def pair_transform(phi: D8Element, w1: complex, w2: complex) -> tuple[complex, complex]:
    """The action of phi on a ratio pair: (phi(w1), phi(w2)/phi(1)^2), the
    transformation under which consecutive-minimal-vector geometry is
    invariant."""
    return phi(w1), phi(w2) / phi.of_one() ** 2


def d8_normalize_pair(w1: complex, w2: complex) -> tuple[D8Element, complex, complex]:
    """The first group element (in the fixed enumeration) whose action brings
    w1 into the closed sector, together with the transformed pair."""
    for phi in D8_ELEMENTS:
        if _in_sector(phi(w1)):
            a, b = pair_transform(phi, w1, w2)
            return phi, a, b
    raise AssertionError("some D8 image always lands in the sector")


def _normalizations(w1: complex, w2: complex):
    """All sector-normalizing transforms (one generically, two on sector
    edges, all eight at w1 = 0)."""
    for phi in D8_ELEMENTS:
        if _in_sector(phi(w1)):
            yield pair_transform(phi, w1, w2)


def _four_conditions(a: complex, b: complex, closed_disks: bool, need_nonzero: bool) -> bool:
    c = closed_disks
    if GREEN2.contains(b, c) and not (RED1.contains(a, c) or GREEN1.contains(a, c)):
        return True
    if RED2.contains(b, c) and not GREEN2.contains(b, c) and not RED1.contains(a, c):
        return True
    if not (RED2.contains(b, c) or BLUE2.contains(b, c)) and not (need_nonzero and a == 0):
        return True
    if BLUE2.contains(b, c) and not BLUE1.contains(a, c):
        return True
    return False


def _check_pair_preconditions(w1: complex, w2: complex):
    if not (abs(w1) < 1 and abs(w2) < 1):
        raise ValueError("membership is defined for |w1|, |w2| < 1")


def in_W1(w1: complex, w2: complex, strict: bool = False) -> bool:
    """Does (w1, w2) describe an index-1 pair of consecutive minimal vectors?

    ``strict`` demands the open-transversal version (open region for w2,
    closed excluded disks): the cylinder boundary carries no lattice vectors
    beyond the unit multiples of the pair.  The default lax variant only asks
    that the open cylinder be free of nonzero lattice points, which admits
    boundary configurations (and w1 = 0, where the index-1 condition holds for
    every w2).
    """
    _check_pair_preconditions(w1, w2)
    if w1 == 0:
        return not strict
    for a, b in _normalizations(w1, w2):
        if strict:
            if in_D(b) and _four_conditions(a, b, closed_disks=True, need_nonzero=True):
                return True
        else:
            if in_D(b, closed=True) and _four_conditions(
                a, b, closed_disks=False, need_nonzero=False
            ):
                return True
    return False


def in_W2(w1: complex, w2: complex, strict: bool = False) -> bool:
    """Index-2 analogue of :func:`in_W1`: after normalization w1 must avoid
    the disk around -i of radius sqrt(2) and w2 must lie in T."""
    _check_pair_preconditions(w1, w2)
    if w1 == 0:
        return False
    for a, b in _normalizations(w1, w2):
        if strict:
            if abs(a + 1j) > SQRT2 and in_T(b):
                return True
        else:
            if abs(a + 1j) >= SQRT2 and in_T(b, closed=True):
                return True
    return False


def constraint_case(w1: complex, w2: complex) -> int | None:
    """Which of the four disk conditions admits the (normalized) pair.

    Evaluated with open disks in the fixed order 1..4; the first condition
    that holds wins (they overlap on w2).  ``None`` when the pair fails all
    four.
    """
    _, a, b = d8_normalize_pair(w1, w2)
    if GREEN2.contains(b) and not (RED1.contains(a) or GREEN1.contains(a)):
        return 1
    if RED2.contains(b) and not GREEN2.contains(b) and not RED1.contains(a):
        return 2
    if not (RED2.contains(b) or BLUE2.contains(b)):
        return 3
    if BLUE2.contains(b) and not BLUE1.contains(a):
        return 4
    return None


# ---------------------------------------------------------------------------
# vectorized membership (for measure experiments)


def membership_masks(w1: np.ndarray, w2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized lax W1/W2 membership for arrays of pairs.

    Normalization folds arg(w1) into [0, pi/4] with a quarter-turn rotation
    followed, if needed, by the reflection across the pi/4 ray; boundary
    conventions differ from the scalar path only on measure-zero sets.
    """
    a = np.mod(np.angle(w1), TWO_PI)
    m = np.floor(a / (math.pi / 2))
    resid = a - m * (math.pi / 2)
    reflect = resid > math.pi / 4
    rot = np.exp(-1j * (math.pi / 2) * m)
    w1n = np.where(reflect, np.conj(w1 * rot) * 1j, w1 * rot)
    w2n = np.where(reflect, np.conj(w2) * rot * (-1j), w2 * np.conj(rot))

    def disk(zc, c, r):
        return np.abs(zc - c) < r

    in_dbar = (np.abs(w2n) <= 1) & (np.abs(w2n - 1) >= 1) & (np.abs(w2n - (1 - 1j)) >= 1)
    g2 = disk(w2n, GREEN2.center, GREEN2.radius)
    r2 = disk(w2n, RED2.center, RED2.radius)
    b2 = disk(w2n, BLUE2.center, BLUE2.radius)
    r1 = disk(w1n, RED1.center, RED1.radius)
    g1 = disk(w1n, GREEN1.center, GREEN1.radius)
    b1 = disk(w1n, BLUE1.center, BLUE1.radius)
    cond = (
        (g2 & ~(r1 | g1))
        | (r2 & ~g2 & ~r1)
        | ~(r2 | b2)
        | (b2 & ~b1)
    )
    mask1 = in_dbar & cond
    in_tbar = (
        (np.abs(w2n) <= 1)
        & (np.abs(w2n - 1) >= SQRT2)
        & (np.abs(w2n + 1j) >= SQRT2)
    )
    mask2 = (np.abs(w1n + 1j) >= SQRT2) & in_tbar
    return mask1, mask2


def region_geometry() -> dict:
    """JSON-ready description of the disks and region boundaries (consumed by
    the plotting component; plots draw these, they never re-derive them)."""

    def _c(z: complex) -> list[float]:
        return [z.real, z.imag]

    return {
        "disks": {
            name: {"center": _c(d.center), "radius": d.radius}
            for name, d in CONSTRAINT_DISKS.items()
        },
        "regions": {
            name: {
                "arcs": [
                    {
                        "center": _c(c),
                        "radius": r,
                        "arg_start": a0,
                        "arg_end": a1,
                    }
                    for (c, r, a0, a1) in BOUNDARY_ARCS[name]
                ],
                "segments": [
                    [_c(p), _c(q)] for (p, q) in BOUNDARY_SEGMENTS[name]
                ],
            }
            for name in ("C", "D", "T")
        },
        "corners": {"z1_D": _c(Z1_D), "z2_D": _c(Z2_D), "z3_T": _c(Z3_T)},
    }
