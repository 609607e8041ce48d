import cmath
import math

import numpy as np
import pytest

from conftest import boundary_distance_oracle, cylinder_empty
from gausscf.core import D8_ELEMENTS
from gausscf import regions
from gausscf.regions import (
    BLUE1,
    BLUE2,
    GREEN1,
    GREEN2,
    RED1,
    RED2,
    constraint_case,
    d8_normalize_pair,
    dist_C,
    dist_D,
    dist_D_cases,
    dist_T,
    in_C,
    in_D,
    in_T,
    in_W1,
    in_W2,
    membership_masks,
    pair_transform,
    region_geometry,
)

SQRT3 = math.sqrt(3)


def test_disk_data_is_the_published_table():
    assert RED1.center == 1j and RED1.radius == 1
    assert RED2.center == -1j and RED2.radius == 1
    assert BLUE2.center == 1 + 1j and BLUE2.radius == 1
    assert GREEN1.center == 1 + 1j
    assert BLUE1.center == (1 - 1j) / 2 and BLUE1.radius == pytest.approx(1 / math.sqrt(2))
    assert GREEN2 == BLUE1 and GREEN1 == BLUE2


def test_dist_D_reference_values():
    assert dist_D(-0.5 + 0j) == 0.0
    assert dist_D(-1.5 + 0j) == pytest.approx(0.5)
    assert dist_D(2 + 0j) == pytest.approx(SQRT3)


def test_dist_C_reference_values():
    assert dist_C(0.5 * cmath.exp(1j * math.pi / 8)) == 0.0
    # the nearest sector point to i is the edge foot (1+i)/2, not the corner
    assert dist_C(1j) == pytest.approx(math.sqrt(2) / 2)
    assert dist_C(1j) == pytest.approx(boundary_distance_oracle(1j, "C"), abs=1e-9)


def test_dist_T_at_origin():
    # 0 is outside the closure; the nearest point is the arc corner
    val = dist_T(0j)
    assert val > 0
    assert val == pytest.approx((SQRT3 - 1) / math.sqrt(2))
    assert val == pytest.approx(abs(regions.Z3_T), abs=1e-12)


@pytest.mark.parametrize("region,dist", [("C", dist_C), ("D", dist_D), ("T", dist_T)])
def test_distances_match_boundary_oracle(region, dist, rng):
    for _ in range(600):
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        assert dist(z) == pytest.approx(
            boundary_distance_oracle(z, region, grid=2000), abs=1e-6
        )


def test_seven_cases_cover_and_agree(rng):
    for _ in range(4000):
        z = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        cases = dist_D_cases(z)
        assert cases, f"no case matched {z}"
        vals = [v for _, v in cases]
        assert max(vals) - min(vals) < 1e-9


def test_d8_normalize_pair_examples(rng):
    phi, a, b = d8_normalize_pair(0.5 + 0.2j, 0.3 - 0.4j)
    assert phi == D8_ELEMENTS[0] and a == 0.5 + 0.2j and b == 0.3 - 0.4j

    w2 = 0.3 - 0.4j
    phi, a, b = d8_normalize_pair(-0.3 + 0j, w2)
    assert a == pytest.approx(0.3)
    assert b == pytest.approx(-w2)

    w1 = 0.3 * cmath.exp(-1j * math.pi / 8)
    phi, a, b = d8_normalize_pair(w1, w2)
    assert a == pytest.approx(0.3 * cmath.exp(1j * math.pi / 8))
    assert b == pytest.approx(w2.conjugate())


def test_d8_normalize_roundtrip(rng):
    trials = 0
    while trials < 200:
        w1 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        w2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(w1) >= 1 or abs(w2) >= 1:
            continue
        trials += 1
        phi, a, b = d8_normalize_pair(w1, w2)
        assert in_C(a, closed=True) or a == 0
        inv = phi.inverse()
        w1_back, w2_back = pair_transform(inv, a, b)
        assert w1_back == pytest.approx(w1, abs=1e-12)
        assert w2_back == pytest.approx(w2, abs=1e-12)


def test_pair_transform_preserves_cylinder_norm(rng):
    # |a u - b v|_{u,v} is invariant when (w1, w2) -> (phi w1, phi w2/phi(1)^2)
    from gausscf.lattice import MinPair, norm_uv

    for _ in range(100):
        w1 = 0.9 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        w2 = 0.9 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        pair = MinPair(1 + 0j, 1 + 0j, w1, w2)
        phi = D8_ELEMENTS[rng.integers(0, 8)]
        w1n, w2n = pair_transform(phi, w1, w2)
        pair_n = MinPair(1 + 0j, 1 + 0j, w1n, w2n)
        a = complex(rng.standard_normal(), rng.standard_normal())
        b = complex(rng.standard_normal(), rng.standard_normal())
        u, v = pair.u(), pair.v()
        x = (a * u[0] - b * v[0], a * u[1] - b * v[1])
        an = phi.of_one() * phi(a)
        bn = phi(b)
        un, vn = pair_n.u(), pair_n.v()
        xn = (an * un[0] - bn * vn[0], an * un[1] - bn * vn[1])
        assert norm_uv(x, pair) == pytest.approx(norm_uv(xn, pair_n), abs=1e-10)


def test_in_W1_examples():
    assert in_W1(0.5 + 0j, 0j)
    assert not in_W1(0.5 + 0j, 0j, strict=True)  # w2 on the boundary of D
    assert in_W1(0j, 0.5j)  # w1 = 0 admits every w2 at index 1
    assert not in_W1(0j, 0.5j, strict=True)
    with pytest.raises(ValueError):
        in_W1(1.2 + 0j, 0j)


def test_in_W2_examples():
    assert not in_W2(0.5 + 0j, 0j)
    assert not in_W2(0j, -0.5 + 0.5j)  # index 2 never admits w1 = 0
    # an admissible index-2 pair: w1 clear of D(-i, sqrt2), w2 deep in T
    assert in_W2(0.95 + 0.1j, -0.45 + 0.45j)


def test_membership_matches_cylinder_oracle_index2(rng):
    hits = 0
    for _ in range(150):
        r = math.sqrt(rng.uniform(0, 1))
        w1 = r * cmath.exp(1j * rng.uniform(0, math.pi / 4))
        w2 = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(w2) >= 1 or abs(w1) < 1e-3:
            continue
        member = in_W2(w1, w2)
        oracle = cylinder_empty(w1, w2, index=2)
        assert member == oracle, (w1, w2)
        hits += member
    assert hits > 0


def test_membership_d8_invariance(rng):
    for _ in range(100):
        w1 = 0.95 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        w2 = 0.95 * complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(w1) >= 1 or abs(w2) >= 1:
            continue
        ref1, ref2 = in_W1(w1, w2), in_W2(w1, w2)
        for phi in D8_ELEMENTS:
            w1n, w2n = pair_transform(phi, w1, w2)
            assert in_W1(w1n, w2n) == ref1
            assert in_W2(w1n, w2n) == ref2


def test_constraint_case_examples():
    assert constraint_case(0.5 + 0j, 0j) == 3
    # w2 deep inside the green disk, w1 clear of the red/green disks
    assert constraint_case(0.5 + 0j, 0.5 - 0.5j) == 1
    # w2 in the red disk but outside the green one
    assert constraint_case(0.5 + 0j, -0.3 - 0.8j) == 2
    # a green-disk w2 with a blocked w1 fails all four conditions
    assert constraint_case(0.3 + 0.28j, -0.8j) is None


def test_membership_masks_match_scalar(rng):
    w1 = []
    w2 = []
    for _ in range(400):
        a = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        b = complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
        if abs(a) < 1 and abs(b) < 1:
            w1.append(a)
            w2.append(b)
    w1 = np.array(w1)
    w2 = np.array(w2)
    m1, m2 = membership_masks(w1, w2)
    for i in range(len(w1)):
        assert m1[i] == in_W1(complex(w1[i]), complex(w2[i]))
        assert m2[i] == in_W2(complex(w1[i]), complex(w2[i]))


def test_region_geometry_export_is_jsonable():
    import json

    doc = region_geometry()
    text = json.dumps(doc, sort_keys=True)
    assert "disks" in doc and "regions" in doc
    assert json.loads(text)["disks"]["red1"]["radius"] == 1
