import cmath
import math

import numpy as np
import pytest

from gausscf.core import (
    D8_ELEMENTS,
    GaussInt,
    JElem,
    UNITS,
    arg,
    canonical_unit_factor,
    d8_apply,
    divmod_nearest,
    gauss_candidates_within_1,
    gauss_gcd,
    nearest_gauss,
)


def test_nearest_gauss_examples():
    assert nearest_gauss(0j) == GaussInt(0, 0)
    # 0.5 rounds up on each half-open coordinate
    assert nearest_gauss(0.5 + 0.5j) == GaussInt(1, 1)
    # exhaustive check over the 9 neighbors
    z = 2.3 - 1.8j
    best = min(
        (GaussInt(a, b) for a in (1, 2, 3) for b in (-3, -2, -1)),
        key=lambda g: abs(complex(g) - z),
    )
    assert nearest_gauss(z) == best == GaussInt(2, -2)


def test_nearest_gauss_fundamental_square(rng):
    for _ in range(500):
        z = complex(rng.uniform(-20, 20), rng.uniform(-20, 20))
        p = nearest_gauss(z)
        d = z - complex(p)
        assert -0.5 <= d.real < 0.5 and -0.5 <= d.imag < 0.5
        assert abs(d) <= math.sqrt(2) / 2 + 1e-15


def test_candidates_within_1_examples():
    assert gauss_candidates_within_1(0j) == [GaussInt(0, 0)]
    assert gauss_candidates_within_1(2 + 0j) == [GaussInt(2, 0)]
    got = gauss_candidates_within_1(0.5 + 0.5j)
    assert set(got) == {GaussInt(0, 0), GaussInt(1, 0), GaussInt(0, 1), GaussInt(1, 1)}
    # equal distances, so the order is fixed by arg(g - w)
    assert got == [GaussInt(1, 1), GaussInt(0, 1), GaussInt(0, 0), GaussInt(1, 0)]


def test_candidates_within_1_complete(rng):
    for _ in range(300):
        w = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        got = set(gauss_candidates_within_1(w))
        assert 1 <= len(got) <= 4
        bound = int(abs(w)) + 2
        ref = {
            GaussInt(a, b)
            for a in range(-bound, bound + 1)
            for b in range(-bound, bound + 1)
            if abs(complex(a, b) - w) < 1
        }
        assert got == ref


def test_candidates_near_boundary_warns():
    with pytest.warns(RuntimeWarning):
        gauss_candidates_within_1(1e-14 + 0j, tol=1e-12)


def test_gauss_int_basics():
    g = GaussInt(3, -4)
    assert g.norm() == 25 and abs(g) == 5.0
    assert (g * g.conjugate()).re == 25
    assert [u for u in UNITS if u.is_unit()] == list(UNITS)
    assert GaussInt(1, 1).in_I() and not GaussInt(1, 0).in_I()
    assert GaussInt(2, 0).in_I()  # 2 = -i (1+i)^2


def test_I_and_J_partition():
    for a in range(-4, 5):
        for b in range(-4, 5):
            g = GaussInt(a, b)
            if not g:
                continue
            if g.in_I():
                g.div_one_plus_i()
                with pytest.raises(ValueError):
                    JElem(g)
            else:
                j = JElem(g)
                assert abs(abs(j) ** 2 - g.norm() / 2) < 1e-12
                with pytest.raises(ValueError):
                    g.div_one_plus_i()


def test_divmod_and_gcd():
    a, b = GaussInt(7, 3), GaussInt(2, -1)
    q, r = divmod_nearest(a, b)
    assert q * b + r == a
    assert r.norm() <= b.norm() / 2 + 1e-9
    d = gauss_gcd(GaussInt(1, 1), GaussInt(2, 0))
    assert d.norm() == 2  # gcd(1+i, 2) is 1+i up to a unit
    assert canonical_unit_factor(GaussInt(0, -3)) * GaussInt(0, -3) == GaussInt(3, 0)


def test_d8_examples():
    rot_i = D8_ELEMENTS[1]
    assert rot_i(1 + 2j) == -2 + 1j
    conj = D8_ELEMENTS[4]
    assert conj(1 + 2j) == 1 - 2j


def test_d8_group_structure():
    elems = list(D8_ELEMENTS)
    assert len(set(elems)) == 8
    for a in elems:
        assert a.compose(a.inverse()) == D8_ELEMENTS[0]
        for b in elems:
            assert a.compose(b) in elems
    # composition really is function composition
    z = 0.3 - 1.7j
    for a in elems:
        for b in elems:
            assert a.compose(b)(z) == pytest.approx(a(b(z)))


def test_d8_product_rule(rng):
    # phi(xy) * phi(1) = phi(x) * phi(y) for every element
    for phi in D8_ELEMENTS:
        for _ in range(100):
            x = complex(rng.standard_normal(), rng.standard_normal())
            y = complex(rng.standard_normal(), rng.standard_normal())
            lhs = d8_apply(phi, x * y) * phi.of_one()
            rhs = d8_apply(phi, x) * d8_apply(phi, y)
            assert lhs == pytest.approx(rhs, abs=1e-12)


def test_arg_normalization():
    assert arg(1 + 0j) == 0.0
    assert arg(-1 + 0j) == pytest.approx(math.pi)
    assert arg(-1j) == pytest.approx(3 * math.pi / 2)
    assert 0 <= arg(cmath.exp(1j * 6.2)) < 2 * math.pi
    assert arg(0j) == 0.0
