"""Coordinates on the diagonal-flow cross-section and its first-return map.

A unimodular lattice whose two sup-norm minima coincide is determined, up to
the choice of representatives, by a triple (theta, w1, w2) with
theta in [0, pi/2) and |w1|, |w2| < 1, plus the index k of the pair:

    u = r (e^{i theta}, e^{i theta'} w2),   v = r (e^{i theta} w1, e^{i theta'})
    r = k^{1/4} / sqrt(|1 - w1 w2|),
    theta' = (k-1) pi/4 - theta - arg(1 - w1 w2),

which pins det(u, v) to exactly 1 (k = 1) or 1+i (k = 2).  The first return
of the diagonal flow to the section acts as the step map on (w1, w2), a
rotation bookkeeping alpha in {1, i, -1, -i} on theta, and the twist
(w1, w2) -> alpha^2 (w1, w2); the return time is log(1/(|w1| |w2'|))/2.

The invariant density of the return map in these coordinates is
32 / |1 - w1 w2|^4 with respect to Lebesgue measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cfrac import RATIONAL_TOL, TGState, tg_step
from .core import arg
from .lattice import Basis2, Vec2, pair_index
from .regions import constraint_case, in_W1, in_W2, membership_masks
from .reduction import next_minimal

HALF_PI = math.pi / 2


@dataclass(frozen=True)
class TransversalPoint:
    theta: float
    w1: complex
    w2: complex
    k: int = 1

    def scale(self) -> float:
        """The common sup-norm r of the two associated minimal vectors."""
        return self.k ** 0.25 / math.sqrt(abs(1 - self.w1 * self.w2))

    def in_section(self, strict: bool = False) -> bool:
        member = in_W1 if self.k == 1 else in_W2
        return 0 <= self.theta < HALF_PI and member(self.w1, self.w2, strict)


def psi(pt: TransversalPoint) -> Basis2:
    """Reconstruct the lattice basis from section coordinates."""
    if not (abs(pt.w1) < 1 and abs(pt.w2) < 1):
        raise ValueError("section coordinates need |w1|, |w2| < 1")
    r = pt.scale()
    u1 = complex(math.cos(pt.theta), math.sin(pt.theta))
    tp = (pt.k - 1) * math.pi / 4 - pt.theta - math.atan2(
        (1 - pt.w1 * pt.w2).imag, (1 - pt.w1 * pt.w2).real
    )
    v2 = complex(math.cos(tp), math.sin(tp))
    u = (r * u1, r * v2 * pt.w2)
    v = (r * u1 * pt.w1, r * v2)
    return Basis2(u, v, index=pt.k)


_UNITS = (1 + 0j, 1j, -1 + 0j, -1j)


def extract_point(u: Vec2, v: Vec2, index: int, tol: float = 1e-9) -> TransversalPoint:
    """Invert :func:`psi` on a pair in section normal form (|u1| = |v2|).

    Representatives are fixed by rotating u so that arg(u1) lands in
    [0, pi/2) and rotating v so the pair determinant is exactly 1 or 1+i.
    """
    r1, r2 = abs(u[0]), abs(v[1])
    if abs(r1 - r2) > tol * max(r1, r2):
        raise ValueError("pair is not on the section: |u1| != |v2|")
    m = math.floor(arg(u[0]) / HALF_PI)
    omega = _UNITS[(-m) % 4]
    un = (omega * u[0], omega * u[1])
    d = un[0] * v[1] - un[1] * v[0]
    target = abs(d) * (1 if index == 1 else complex(math.cos(math.pi / 4), math.sin(math.pi / 4)))
    ratio = target / d
    omega2 = min(_UNITS, key=lambda z: abs(ratio - z))
    if abs(ratio - omega2) > 1e-6:
        raise ValueError("pair determinant is not a unit multiple of the target")
    vn = (omega2 * v[0], omega2 * v[1])
    return TransversalPoint(
        theta=arg(un[0]),
        w1=vn[0] / un[0],
        w2=un[1] / vn[1],
        k=index,
    )


def entry_from_theta(theta: complex) -> tuple[TransversalPoint, float] | None:
    """First section hit of the lattice of theta.

    The pair ((1,0), successor) flows onto the section after time
    t = log(|v2| / |u1|) / 2; returns None when theta is Gaussian-rational
    with an immediate axis hit (the orbit never reaches the section).
    """
    basis = Basis2((1 + 0j, 0j), (-theta, 1 + 0j), index=1)
    u: Vec2 = (1 + 0j, 0j)
    v = next_minimal(basis, u)
    if v is None or abs(v[0]) < RATIONAL_TOL:
        return None
    k = pair_index(basis, u, v)
    t0 = 0.5 * math.log(abs(v[1]) / abs(u[0]))
    s = math.exp(t0)
    uf = (s * u[0], u[1] / s)
    vf = (s * v[0], v[1] / s)
    return extract_point(uf, vf, k), t0


@dataclass(frozen=True)
class ReturnStep:
    point: TransversalPoint
    time: float
    degenerate: bool = False


def first_return(pt: TransversalPoint) -> ReturnStep | None:
    """One application of the first-return map in section coordinates.

    None when w1 = 0 (rational direction: the orbit leaves the section for
    good).  The returned time is positive.
    """
    state = tg_step(TGState(pt.w1, pt.w2, pt.k))
    if state is None:
        return None
    theta_raw = pt.theta + arg(pt.w1)
    m = math.floor(theta_raw / HALF_PI)
    theta_new = theta_raw - m * HALF_PI
    alpha_sq = 1.0 if m % 2 == 0 else -1.0
    t = 0.5 * math.log(1.0 / (abs(pt.w1) * abs(state.w2)))
    nxt = TransversalPoint(theta_new, alpha_sq * state.w1, alpha_sq * state.w2, state.k)
    return ReturnStep(nxt, t, state.degenerate)


def density(pt: TransversalPoint | None = None, w1w2: complex | None = None) -> float:
    """Invariant density 32/|1 - w1*w2|^4 of the return map (always > 2)."""
    if pt is not None:
        w1w2 = pt.w1 * pt.w2
    if w1w2 is None:
        raise ValueError("pass a point or the product w1*w2")
    if abs(w1w2) >= 1:
        raise ValueError("|w1*w2| must be < 1")
    return 32.0 / abs(1 - w1w2) ** 4


@dataclass(frozen=True)
class OrbitRecord:
    point: TransversalPoint
    t_return: float
    case: int | None


@dataclass
class OrbitSample:
    records: list
    terminated: bool = False


def orbit_sample(seed_theta: complex, n_steps: int, burn_in: int = 20) -> OrbitSample:
    """Iterate the first-return map from the first section hit of the seed
    lattice, discard ``burn_in`` points, and tag each kept point with its
    constraint-disk case.

    A Gaussian-rational seed terminates the orbit early: the partial sample
    is returned with ``terminated`` set.
    """
    if n_steps < 0:
        raise ValueError("n_steps must be >= 0")
    entry = entry_from_theta(seed_theta)
    records: list[OrbitRecord] = []
    if entry is None:
        return OrbitSample(records, terminated=True)
    pt, _ = entry
    for i in range(n_steps + burn_in):
        step = first_return(pt)
        if step is None:
            return OrbitSample(records, terminated=True)
        pt = step.point
        if i >= burn_in:
            records.append(
                OrbitRecord(pt, step.time, constraint_case(pt.w1, pt.w2))
            )
    return OrbitSample(records, terminated=False)


# ---------------------------------------------------------------------------
# empirical check of the invariant density


def expected_bin_masses(
    bins: int = 4, mc_samples: int = 4_000_000, seed: int = 12345
) -> np.ndarray:
    """Monte-Carlo integrals of the invariant density over a bins^3 grid in
    (arg w1, |w1|, |w2|), normalized to probabilities.

    Both section components contribute wherever their membership holds; the
    theta marginal is uniform and drops out.
    """
    rng = np.random.default_rng(seed)
    out = np.zeros((bins, bins, bins))
    chunk = 500_000
    remaining = mc_samples
    while remaining > 0:
        n = min(chunk, remaining)
        remaining -= n
        pts = rng.uniform(-1, 1, size=(4, n))
        w1 = pts[0] + 1j * pts[1]
        w2 = pts[2] + 1j * pts[3]
        keep = (np.abs(w1) < 1) & (np.abs(w2) < 1)
        w1, w2 = w1[keep], w2[keep]
        m1, m2 = membership_masks(w1, w2)
        weight = (m1.astype(float) + m2.astype(float)) * (
            32.0 / np.abs(1 - w1 * w2) ** 4
        )
        live = weight > 0
        if not np.any(live):
            continue
        coords = np.stack(
            [
                np.mod(np.angle(w1[live]), 2 * math.pi) / (2 * math.pi),
                np.abs(w1[live]),
                np.abs(w2[live]),
            ],
            axis=1,
        )
        hist, _ = np.histogramdd(
            coords, bins=bins, range=[(0, 1), (0, 1), (0, 1)], weights=weight[live]
        )
        out += hist
    total = out.sum()
    if total <= 0:
        raise RuntimeError("no admissible mass found; sampler misconfigured")
    return out / total


def orbit_bin_counts(sample: OrbitSample, bins: int = 4) -> np.ndarray:
    coords = np.array(
        [
            [
                arg(rec.point.w1) / (2 * math.pi),
                abs(rec.point.w1),
                abs(rec.point.w2),
            ]
            for rec in sample.records
        ]
    )
    hist, _ = np.histogramdd(coords, bins=bins, range=[(0, 1), (0, 1), (0, 1)])
    return hist


def measure_check(
    seed_theta: complex,
    n_steps: int,
    bins: int = 4,
    mc_samples: int = 4_000_000,
    seed: int = 12345,
    min_expected: float = 5.0,
) -> dict:
    """Pearson chi-squared comparison of a long orbit's coarse bin counts
    against the invariant density (bins with tiny expectation are pooled).

    Statistical, not exact: equidistribution of individual orbits is an
    assumption here, and consecutive returns are correlated.
    """
    from scipy.stats import chi2

    sample = orbit_sample(seed_theta, n_steps)
    n = len(sample.records)
    if n == 0:
        raise RuntimeError("orbit produced no section points")
    observed = orbit_bin_counts(sample, bins).ravel()
    expected = expected_bin_masses(bins, mc_samples, seed).ravel() * n
    big = expected >= min_expected
    obs = np.concatenate([observed[big], [observed[~big].sum()]])
    exp = np.concatenate([expected[big], [expected[~big].sum()]])
    if exp[-1] <= 0:
        obs, exp = obs[:-1], exp[:-1]
    stat = float(np.sum((obs - exp) ** 2 / exp))
    dof = len(exp) - 1
    pvalue = float(chi2.sf(stat, dof))
    return {
        "n_points": n,
        "bins": bins,
        "dof": dof,
        "chi2": stat,
        "pvalue": pvalue,
        "terminated": sample.terminated,
    }
