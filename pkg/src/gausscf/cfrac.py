"""Best Diophantine approximation of a complex number by Gaussian quotients.

The lattice of a target theta is spanned by (1,0) and (-theta,1); its minimal
vectors with nonzero second coordinate are exactly the images of the best
approximation vectors (p, q).  Iterating the successor search therefore
enumerates every best approximation in increasing |q|.

The same dynamics expressed purely in the cylinder ratios (w1, w2) is the
two-branch step map ``tg_step``: at each step a coefficient a in {1, 1+i}
(index-1 pairs) or the half-integral coefficient 1/(1+i) (index-2 pairs) and
a Gaussian integer g with |a/w1 - g| < 1 are selected by lexicographic
minimality, giving

    w1' = g - a/w1,        w2' = 1/(g - a*w2)          (index 1)
    w1' = g - (1+w1)/((1+i)w1),  w2' = 1/(g - (w2+1)/(1+i))   (index 2)

with at most eight (resp. four) candidates.  An index-2 step is always
followed by an index-1 step.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field

from .core import (
    GaussInt,
    JElem,
    ONE,
    ONE_PLUS_I,
    UNITS,
    arg,
    gauss_candidates_within_1,
    nearest_gauss,
)
from .lattice import Basis2, Vec2, pair_index
from .reduction import MODULUS_TOL, first_minimal, next_minimal

logger = logging.getLogger(__name__)

#: Vectors whose first coordinate falls below this are treated as exact
#: rational hits (orbit termination).
RATIONAL_TOL = 1e-12


@dataclass(frozen=True)
class BestApprox:
    """One term of the best-approximation sequence of theta."""

    p: GaussInt
    q: GaussInt
    qmod: float
    err: float


@dataclass(frozen=True)
class TGState:
    """State of the two-branch step map: cylinder ratios plus pair index."""

    w1: complex
    w2: complex
    k: int = 1
    coeffs: tuple = ()
    degenerate: bool = False


def lattice_of_theta(theta: complex) -> Basis2:
    """The unimodular lattice whose minimal vectors encode the best
    approximations of theta: columns (1, 0) and (-theta, 1)."""
    return Basis2((1 + 0j, 0j), (-theta, 1 + 0j), index=1)


def _to_pq(theta: complex, x: Vec2) -> tuple[GaussInt, GaussInt]:
    """Invert (p - q*theta, q) -> (p, q), rounding to the integer grid."""
    q = nearest_gauss(x[1])
    p = nearest_gauss(x[0] + theta * x[1])
    return p, q


def _canonical_rep(p: GaussInt, q: GaussInt) -> tuple[GaussInt, GaussInt]:
    """Rotate by the unit putting q in the quadrant re > 0, im >= 0, i.e.
    arg q in [0, pi/2); one representative per equivalence class."""
    for u in UNITS:
        qq = u * q
        if qq.re > 0 and qq.im >= 0:
            return u * p, qq
    raise ValueError("q must be nonzero")


def minimal_vector_chain(theta: complex, max_steps: int = 10_000):
    """Yield the minimal vectors of the theta lattice with |q| >= 1 in order
    of increasing |q|, starting from the axis vector (1, 0)."""
    basis = lattice_of_theta(theta)
    x: Vec2 = (1 + 0j, 0j)
    for _ in range(max_steps):
        nxt = next_minimal(basis, x)
        if nxt is None:
            return
        yield nxt
        x = nxt


def best_approximations(
    theta: complex, q_max: float, max_steps: int = 10_000
) -> tuple[list[BestApprox], bool]:
    """The complete best-approximation sequence with |q| <= q_max, one
    canonical representative per denominator class.

    Returns (sequence, terminated): ``terminated`` is True when theta is a
    Gaussian rational and the sequence ends on an exact hit.
    """
    if q_max < 1:
        raise ValueError("q_max must be >= 1")
    out: list[BestApprox] = []
    terminated = False
    for x in minimal_vector_chain(theta, max_steps):
        p, q = _to_pq(theta, x)
        p, q = _canonical_rep(p, q)
        qmod = math.sqrt(q.norm())
        if qmod > q_max:
            break
        err = abs(complex(p) - complex(q) * theta)
        out.append(BestApprox(p, q, qmod, err))
        if abs(x[0]) < RATIONAL_TOL:
            terminated = True
            break
    return out, terminated


# ---------------------------------------------------------------------------
# the step map in (w1, w2) coordinates


def _e1_candidates(w1: complex, w2: complex):
    """E1: z = -a*u + g*v for a in {1, 1+i}, |a/w1 - g| < 1; at most eight."""
    for a in (ONE, ONE_PLUS_I):
        ac = complex(a)
        for g in gauss_candidates_within_1(ac / w1):
            gc = complex(g)
            yield (a, g, gc * w1 - ac, gc - ac * w2)


def _e2_candidates(w1: complex, w2: complex):
    """E2: z = -(u+v)/(1+i) + g*v with |1/((1+i)w1) + 1/(1+i) - g| < 1; at
    most four."""
    base = 1 / ((1 + 1j) * w1) + 1 / (1 + 1j)
    for g in gauss_candidates_within_1(base):
        gc = complex(g)
        x1 = gc * w1 - (1 + w1) / (1 + 1j)
        x2 = gc - (w2 + 1) / (1 + 1j)
        yield (None, g, x1, x2)


def _select(cands: list, tol: float = MODULUS_TOL):
    """Lexicographic minimum under (|x2|, |x1|, arg x2, arg x1); flags ties
    between candidates that are not unit multiples of each other."""
    m2 = min(abs(c[3]) for c in cands)
    pool = [c for c in cands if abs(c[3]) <= m2 + tol]
    m1 = min(abs(c[2]) for c in pool)
    pool = [c for c in pool if abs(c[2]) <= m1 + tol]
    winner = min(pool, key=lambda c: (arg(c[3]), arg(c[2])))
    tie = False
    for c in pool:
        ratio = c[3] / winner[3] if abs(winner[3]) > tol else c[2] / winner[2]
        if min(abs(ratio - u) for u in (1, 1j, -1, -1j)) > 1e-6:
            tie = True
            break
    return winner, tie


def tg_step(state: TGState) -> TGState | None:
    """One step of the two-branch map; None when w1 vanishes (rational
    direction, the orbit leaves the transversal forever)."""
    if abs(state.w1) < RATIONAL_TOL:
        return None
    if state.k == 1:
        cands = list(_e1_candidates(state.w1, state.w2))
        if not cands:
            raise RuntimeError(f"empty candidate set E1 at {state!r}")
        (a, g, _, _), tie = _select(cands)
        ac, gc = complex(a), complex(g)
        w1p = gc - ac / state.w1
        w2p = 1 / (gc - ac * state.w2)
        kp = 2 if a == ONE_PLUS_I else 1
        coeffs = (a, g)
    else:
        cands = list(_e2_candidates(state.w1, state.w2))
        if not cands:
            raise RuntimeError(f"empty candidate set E2 at {state!r}")
        (_, g, _, _), tie = _select(cands)
        gc = complex(g)
        w1p = gc - 1 / ((1 + 1j) * state.w1) - 1 / (1 + 1j)
        w2p = 1 / (gc - state.w2 / (1 + 1j) - 1 / (1 + 1j))
        kp = 1
        coeffs = (JElem(ONE), g)
    if tie:
        logger.warning("lexicographic tie in tg_step at %s", state)
    return TGState(w1p, w2p, kp, coeffs, degenerate=tie)


def candidate_count(state: TGState) -> int:
    """Size of the candidate set the step map selects from."""
    if state.k == 1:
        return sum(1 for _ in _e1_candidates(state.w1, state.w2))
    return sum(1 for _ in _e2_candidates(state.w1, state.w2))


def initial_state(theta: complex) -> TGState | None:
    """The (w1, w2, k) state of the pair ((1,0), first successor) of the
    theta lattice; None if theta is a Gaussian integer direction with an
    immediate rational hit."""
    basis = lattice_of_theta(theta)
    u: Vec2 = (1 + 0j, 0j)
    v = next_minimal(basis, u)
    if v is None or abs(v[0]) < RATIONAL_TOL:
        return None
    k = pair_index(basis, u, v)
    return TGState(w1=v[0] / u[0], w2=u[1] / v[1], k=k, coeffs=())


def hurwitz_step(w: complex) -> tuple[complex, GaussInt]:
    """Nearest-integer step: g closest to 1/w, remainder 1/w - g in the
    fundamental square."""
    if w == 0:
        raise ZeroDivisionError("hurwitz_step needs w != 0")
    inv = 1 / w
    g = nearest_gauss(inv)
    return inv - complex(g), g


@dataclass
class OrbitStatistics:
    """Empirical growth/products along a single orbit (no limit asserted)."""

    mean_log_q_growth: float
    product_samples: list[complex] = field(default_factory=list)
    truncated: bool = False
    steps: int = 0


def orbit_statistics(theta: complex, n: int) -> OrbitStatistics:
    """Run n steps of the step map seeded from the theta lattice and report
    (1/n) log |q_n| together with the coordinate products x_k * y_k.

    Runs in (w1, w2) coordinates so long orbits do not overflow doubles:
    log |q| grows by log(1/|w2'|) per step, and the product for the leading
    vector of the pair with index k is w2 * det_k / (1 - w1*w2) with
    det_k = 1 or 1+i.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    state = initial_state(theta)
    if state is None:
        return OrbitStatistics(0.0, [], truncated=True, steps=0)
    log_q = 0.0  # |q_1| = 1 for every theta
    products = []
    steps = 1
    truncated = False
    for _ in range(n - 1):
        det_k = 1 + 0j if state.k == 1 else 1 + 1j
        products.append(state.w2 * det_k / (1 - state.w1 * state.w2))
        nxt = tg_step(state)
        if nxt is None:
            truncated = True
            break
        log_q += math.log(1 / abs(nxt.w2))
        state = nxt
        steps += 1
    return OrbitStatistics(
        mean_log_q_growth=log_q / steps,
        product_samples=products,
        truncated=truncated,
        steps=steps,
    )
