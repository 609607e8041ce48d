"""Exact Gaussian-integer arithmetic and shared complex-plane helpers.

Provides the ring Z[i] with exact integer components, its unit group
{1, i, -1, -i}, the index-two ideal (1+i)Z[i], the half-integral coset set
J = (Z[i] \\ (1+i)Z[i]) / (1+i), the dihedral group D8 of isometries of the
square (rotations by units combined with conjugation), and the rounding /
candidate-search primitives used throughout the lattice algorithms.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

#: Tolerance for strict-inequality membership tests on floating point data.
MEMBERSHIP_TOL = 1e-12


@dataclass(frozen=True)
class GaussInt:
    """A Gaussian integer re + im*i with exact integer components."""

    re: int
    im: int

    def __add__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussInt":
        return GaussInt(-self.re, -self.im)

    def __mul__(self, other: "GaussInt") -> "GaussInt":
        return GaussInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self) -> "GaussInt":
        return GaussInt(self.re, -self.im)

    def norm(self) -> int:
        """Field norm re^2 + im^2; zero iff the element is zero."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(self.re, self.im)

    def __bool__(self) -> bool:
        return self.re != 0 or self.im != 0

    def __str__(self) -> str:
        return f"{self.re}{self.im:+d}i"

    def is_unit(self) -> bool:
        return self.norm() == 1

    def in_I(self) -> bool:
        """Membership in the ideal (1+i)Z[i]: re + im even."""
        return (self.re + self.im) % 2 == 0

    def div_one_plus_i(self) -> "GaussInt":
        """Exact quotient by 1+i; valid only for elements of (1+i)Z[i]."""
        if not self.in_I():
            raise ValueError(f"{self} is not divisible by 1+i")
        return GaussInt((self.re + self.im) // 2, (self.im - self.re) // 2)


ZERO = GaussInt(0, 0)
ONE = GaussInt(1, 0)
I_UNIT = GaussInt(0, 1)
ONE_PLUS_I = GaussInt(1, 1)
#: The unit group of Z[i], in rotation order.
UNITS = (ONE, I_UNIT, GaussInt(-1, 0), GaussInt(0, -1))


def divmod_nearest(a: GaussInt, b: GaussInt) -> tuple[GaussInt, GaussInt]:
    """Quotient/remainder with the quotient rounded to the nearest Gaussian
    integer componentwise; the remainder then satisfies norm(r) <= norm(b)/2."""
    if not b:
        raise ZeroDivisionError("division by zero Gaussian integer")
    num = a * b.conjugate()
    n = b.norm()

    def _round_half_up(x: int) -> int:
        # floor(x/n + 1/2) in exact integer arithmetic
        return (2 * x + n) // (2 * n)

    q = GaussInt(_round_half_up(num.re), _round_half_up(num.im))
    return q, a - q * b


def gauss_gcd(a: GaussInt, b: GaussInt) -> GaussInt:
    """A greatest common divisor in Z[i] (determined up to a unit)."""
    while b:
        _, r = divmod_nearest(a, b)
        a, b = b, r
    return a


def canonical_unit_factor(g: GaussInt) -> GaussInt:
    """The unit u such that u*g lies in the quadrant re > 0, im >= 0."""
    if not g:
        raise ValueError("zero has no canonical unit factor")
    for u in UNITS:
        r = u * g
        if r.re > 0 and r.im >= 0:
            return u
    raise AssertionError("unreachable: some unit rotation lands in the quadrant")


@dataclass(frozen=True)
class JElem:
    """An element of J = (Z[i] \\ (1+i)Z[i]) / (1+i), stored by its numerator.

    The represented value is numerator/(1+i); its squared modulus is
    norm(numerator)/2, always a half-odd integer.
    """

    numerator: GaussInt

    def __post_init__(self):
        if self.numerator.in_I():
            raise ValueError(f"{self.numerator} lies in (1+i)Z[i]; not a J numerator")

    def __complex__(self) -> complex:
        # numerator/(1+i) = numerator*(1-i)/2, exact in binary floating point
        n = self.numerator
        return complex((n.re + n.im) / 2.0, (n.im - n.re) / 2.0)

    def __abs__(self) -> float:
        return math.sqrt(self.numerator.norm() / 2.0)


def arg(z: complex) -> float:
    """Argument of z normalized to [0, 2*pi); zero for z = 0."""
    if z == 0:
        return 0.0
    a = cmath.phase(z)
    if a < 0:
        a += 2 * math.pi
    if a >= 2 * math.pi:
        a = 0.0
    return a


def nearest_gauss(z: complex) -> GaussInt:
    """The unique Gaussian integer p with z - p in the half-open unit square
    [-1/2, 1/2) + [-1/2, 1/2)i (coordinates exactly at 1/2 round upward)."""
    return GaussInt(math.floor(z.real + 0.5), math.floor(z.imag + 0.5))


def gauss_candidates_within_1(
    w: complex, tol: float = MEMBERSHIP_TOL
) -> list[GaussInt]:
    """All Gaussian integers g with |g - w| < 1 (there are one to four).

    Sorted by (|g - w|, arg(g - w)) so downstream minimum selection is
    deterministic.  A diagnostic warning is emitted when an included candidate
    sits within ``tol`` of the unit-distance boundary.
    """
    p0 = nearest_gauss(w)
    out = []
    for dre in (-1, 0, 1):
        for dim in (-1, 0, 1):
            g = GaussInt(p0.re + dre, p0.im + dim)
            d = abs(complex(g) - w)
            if d < 1.0:
                if 1.0 - d < tol:
                    warnings.warn(
                        f"candidate {g} at near-unit distance from {w}",
                        RuntimeWarning,
                        stacklevel=2,
                    )
                out.append((d, arg(complex(g) - w), g))
    out.sort(key=lambda t: (t[0], t[1]))
    return [g for _, _, g in out]


@dataclass(frozen=True)
class D8Element:
    """An isometry z -> i^rot * z or z -> i^rot * conj(z)."""

    rot: int
    conj: bool

    def __post_init__(self):
        object.__setattr__(self, "rot", self.rot % 4)

    def __call__(self, z: complex) -> complex:
        w = z.conjugate() if self.conj else z
        return _I_POWERS[self.rot] * w

    def of_one(self) -> complex:
        """The image of 1, i.e. the unit i^rot."""
        return _I_POWERS[self.rot]

    def compose(self, other: "D8Element") -> "D8Element":
        """self after other."""
        rot = self.rot + (-other.rot if self.conj else other.rot)
        return D8Element(rot, self.conj ^ other.conj)

    def inverse(self) -> "D8Element":
        if self.conj:
            return self
        return D8Element(-self.rot, False)


_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)

#: Fixed enumeration of the eight isometries; ties in normalization searches
#: are broken by taking the earliest element of this tuple.
D8_ELEMENTS = tuple(
    D8Element(rot, conj) for conj in (False, True) for rot in range(4)
)

IDENTITY = D8_ELEMENTS[0]


def d8_apply(phi: D8Element, z: complex) -> complex:
    return phi(z)
