"""Exhaustive search for the critical coefficient pairs.

A coefficient pair (g, h) can defeat some admissible (w1, w2) only if both
|h| * d(g/h, C) <= 1 and |g| * d(h/g, D) <= 1 (integer pairs), or the
analogous bounds through the region T for half-integral pairs.  Scanning all
pairs of modulus at most 6 with a small numerical safety margin epsilon
reproduces the two finite critical sets: 18 unit classes of primitive integer
pairs, and the 16 half-integral pairs (a/(1+i), b/(1+i)) with unit a, b.

The floating-point-plus-margin methodology is kept deliberately: margin
survivors are validated separately rather than trusted to exact arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import GaussInt, canonical_unit_factor, gauss_gcd
from .lattice import gauss_ints_in_disk, j_numerators_in_disk
from .regions import dist_C, dist_D, dist_T


@dataclass(frozen=True)
class CoeffPair:
    """A pair of nonzero coefficients, both Gaussian integers (ring "zi") or
    both half-integral (ring "j", stored by numerators: value = num/(1+i))."""

    g: GaussInt
    h: GaussInt
    ring: str = "zi"

    def __post_init__(self):
        if self.ring not in ("zi", "j"):
            raise ValueError("ring must be 'zi' or 'j'")
        if not (self.g and self.h):
            raise ValueError("coefficients must be nonzero")
        if self.ring == "j" and (self.g.in_I() or self.h.in_I()):
            raise ValueError("J numerators must lie outside (1+i)Z[i]")

    def values(self) -> tuple[complex, complex]:
        if self.ring == "zi":
            return complex(self.g), complex(self.h)
        return complex(self.g) / (1 + 1j), complex(self.h) / (1 + 1j)


def enumerate_pairs(ring: str, max_modulus: float) -> list[CoeffPair]:
    """All nonzero coefficient pairs of the ring with both moduli bounded."""
    if max_modulus < 1:
        raise ValueError("max_modulus must be >= 1")
    if ring == "zi":
        elems = [g for g in gauss_ints_in_disk(max_modulus) if g]
    elif ring == "j":
        elems = j_numerators_in_disk(max_modulus * math.sqrt(2))
    else:
        raise ValueError("ring must be 'zi' or 'j'")
    return [CoeffPair(g, h, ring) for g in elems for h in elems]


def primitive_reduce(pair: CoeffPair) -> CoeffPair:
    """Divide out a gcd and rotate so g sits in the quadrant re > 0, im >= 0;
    idempotent, one representative per unit class."""
    if pair.ring != "zi":
        raise ValueError("primitive reduction applies to integer pairs")
    d = gauss_gcd(pair.g, pair.h)
    g = _exact_div(pair.g, d)
    h = _exact_div(pair.h, d)
    u = canonical_unit_factor(g)
    return CoeffPair(u * g, u * h, "zi")


def _exact_div(a: GaussInt, b: GaussInt) -> GaussInt:
    num = a * b.conjugate()
    n = b.norm()
    if num.re % n or num.im % n:
        raise ValueError(f"{b} does not divide {a}")
    return GaussInt(num.re // n, num.im // n)


def filter_G1(epsilon: float = 0.001, max_modulus: float = 6.0) -> set[CoeffPair]:
    """Integer pairs surviving both distance filters, reduced to primitive
    unit-class representatives.  With the standard margin this is the
    18-class critical set."""
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    bound = 1.0 + epsilon
    out: set[CoeffPair] = set()
    for pair in enumerate_pairs("zi", max_modulus):
        gv, hv = pair.values()
        if abs(hv) * dist_C(gv / hv) <= bound and abs(gv) * dist_D(hv / gv) <= bound:
            out.add(primitive_reduce(pair))
    return out


def filter_G2(epsilon: float = 0.001, max_modulus: float = 6.0) -> set[CoeffPair]:
    """Half-integral pairs surviving the T-region filters (the quotient
    g/h is tested after a quarter turn, using that the admissible w1 range
    is contained in -i times the closure of T).  With the standard margin
    this is the 16-element set of unit pairs over 1+i."""
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    bound = 1.0 + epsilon
    out: set[CoeffPair] = set()
    for pair in enumerate_pairs("j", max_modulus):
        gv, hv = pair.values()
        if (
            abs(hv) * dist_T(1j * gv / hv) <= bound
            and abs(gv) * dist_T(hv / gv) <= bound
        ):
            out.add(pair)
    return out


def unit_class_key(pair: CoeffPair) -> tuple:
    """Canonical key identifying the unit class z*(g, h), z a unit."""
    if pair.ring == "zi":
        red = primitive_reduce(CoeffPair(pair.g, pair.h, "zi"))
        return ("zi", red.g.re, red.g.im, red.h.re, red.h.im)
    u = canonical_unit_factor(pair.g)
    g, h = u * pair.g, u * pair.h
    return ("j", g.re, g.im, h.re, h.im)
