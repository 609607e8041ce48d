"""Shared brute-force oracles for the test suite.

These deliberately re-derive everything from definitions (exhaustive scans,
refined boundary minimization) and never call the fast library paths they
are used to check.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy.optimize import minimize_scalar

from gausscf import regions


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


# ---------------------------------------------------------------------------
# best-approximation oracle: scan every (p, q) with |q| <= q_max


def brute_best_classes(theta: complex, q_max: float) -> list[tuple[int, float]]:
    """All best denominator classes as (norm(q), err), by exhaustive scan."""
    n = int(q_max)
    a = np.arange(-n, n + 1)
    A, B = np.meshgrid(a, a, indexing="ij")
    norm = A * A + B * B
    keep = (norm > 0) & (norm <= q_max * q_max)
    q = (A + 1j * B)[keep]
    norm = norm[keep]
    w = q * theta
    err = np.abs(w - (np.floor(w.real + 0.5) + 1j * np.floor(w.imag + 0.5)))
    classes = []
    best = np.inf
    for nv in np.unique(norm):
        e = err[norm == nv].min()
        if e < best - 1e-12:
            classes.append((int(nv), float(e)))
            best = e
    return classes


def is_best_approximation(theta: complex, p: complex, q: complex, tol=1e-9) -> bool:
    """Definition check: |q| > 0 and |p - q theta| beats every denominator of
    strictly smaller modulus (and ties no larger one)."""
    if abs(q) == 0:
        return False
    err = abs(p - q * theta)
    n = int(abs(q)) + 1
    a = np.arange(-n, n + 1)
    A, B = np.meshgrid(a, a, indexing="ij")
    norm = A * A + B * B
    qn = round(abs(q) ** 2)
    keep = (norm > 0) & (norm <= qn)
    b = (A + 1j * B)[keep]
    norm = norm[keep]
    w = b * theta
    errs = np.abs(w - (np.floor(w.real + 0.5) + 1j * np.floor(w.imag + 0.5)))
    smaller = norm < qn
    if np.any(errs[smaller] <= err - tol):
        return False
    equal = norm == qn
    return not np.any(errs[equal] < err - tol)


# ---------------------------------------------------------------------------
# open-cylinder emptiness for normalized pairs u = (1, w2), v = (w1, 1)


def cylinder_empty(w1: complex, w2: complex, index: int = 1, tol: float = 1e-12) -> bool:
    """No nonzero lattice point with |z1| < 1 and |z2| < 1, by enumeration.

    Coefficients are swept over the Cramer bound; for each g only the few h
    with |g w2 + h| < 1 can matter.
    """
    det = abs(1 - w1 * w2)
    bound = int(2 / det) + 2
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            if a * a + b * b > bound * bound:
                continue
            g = complex(a, b)
            c0 = -g * w2
            for dr in (-1, 0, 1):
                for di in (-1, 0, 1):
                    h = complex(round(c0.real) + dr, round(c0.imag) + di)
                    if g == 0 and h == 0:
                        continue
                    z1 = g + h * w1
                    z2 = g * w2 + h
                    if abs(z1) < 1 - tol and abs(z2) < 1 - tol:
                        return False
    if index == 2:
        # half-integral part: z = (x + y*w1, x*w2 + y)/(1+i), x and y odd
        nb = int(2 * math.sqrt(2) / det) + 3
        for a in range(-nb, nb + 1):
            for b in range(-nb, nb + 1):
                if (a + b) % 2 == 0:
                    continue
                x = complex(a, b)
                c0 = -x * w2
                for dr in (-2, -1, 0, 1, 2):
                    for di in (-2, -1, 0, 1, 2):
                        yr, yi = round(c0.real) + dr, round(c0.imag) + di
                        if (yr + yi) % 2 == 0:
                            continue
                        y = complex(yr, yi)
                        z1 = (x + y * w1) / (1 + 1j)
                        z2 = (x * w2 + y) / (1 + 1j)
                        if abs(z1) < 1 - tol and abs(z2) < 1 - tol:
                            return False
    return True


# ---------------------------------------------------------------------------
# refined discretized-boundary distance oracle


def _inside(region: str, z: complex) -> bool:
    if region == "C":
        return regions.in_C(z, closed=True)
    if region == "D":
        return regions.in_D(z, closed=True)
    return regions.in_T(z, closed=True)


def boundary_distance_oracle(z: complex, region: str, grid: int = 10_000) -> float:
    """Distance to the region by scanning ``grid`` boundary samples and
    refining the best parameter interval with bounded 1-d minimization."""
    if _inside(region, z):
        return 0.0
    arcs = regions.BOUNDARY_ARCS[region]
    segs = regions.BOUNDARY_SEGMENTS[region]
    pieces = []
    for c, r, a0, a1 in arcs:
        pieces.append(lambda t, c=c, r=r, a0=a0, a1=a1: c + r * np.exp(1j * (a0 + t * (a1 - a0))))
    for p, q in segs:
        pieces.append(lambda t, p=p, q=q: p + t * (q - p))
    n = max(64, grid // len(pieces))
    best = math.inf
    for gamma in pieces:
        ts = np.linspace(0.0, 1.0, n)
        ds = np.abs(gamma(ts) - z)
        i = int(np.argmin(ds))
        lo = ts[max(0, i - 1)]
        hi = ts[min(n - 1, i + 1)]
        res = minimize_scalar(
            lambda t: abs(gamma(t) - z), bounds=(lo, hi), method="bounded",
            options={"xatol": 1e-14},
        )
        best = min(best, float(res.fun), float(ds[i]))
    return best
