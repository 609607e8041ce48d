"""The sharp complex Dirichlet constant and its witnesses.

For every theta and Q >= 1 there are Gaussian integers p, q with 0 < |q| < Q
and |q theta - p| <= C/Q, where C = sqrt(2)/(3 - sqrt(3)) = 1.115355... is
optimal.  The supremum of sqrt(k)/|1 - w1 w2| over the admissible pairs of
either index equals C, attained at an explicit corner of the constraint
arcs, and the lattice built from that corner has an empty open ball of
squared radius C.
"""

import math

import numpy as np

from gausscf.dirichlet import (
    dirichlet_constant,
    extremal_ball_is_empty,
    extremal_lattice,
    region_supremum,
    theoretical_constant,
)

C = theoretical_constant()
print(f"C = sqrt(2)/(3-sqrt(3)) = {C:.10f}")
print(f"identity check: 1/sqrt(6-3 sqrt3) = {1/math.sqrt(6-3*math.sqrt(3)):.10f}")

print(f"\nsupremum over index-1 pairs: {region_supremum(1, 100_000):.10f}")
print(f"supremum over index-2 pairs: {region_supremum(2, 100_000):.10f}")

basis, r0 = extremal_lattice()
print(f"\nextremal lattice: r0^2 = {r0**2:.10f}, "
      f"open ball empty = {extremal_ball_is_empty()}")

rng = np.random.default_rng(0)
print("\nper-target constants at q_max = 1000 (all below C):")
for _ in range(8):
    theta = complex(rng.uniform(0, 1), rng.uniform(0, 1))
    rep = dirichlet_constant(theta, 1000)
    print(f"  theta = {theta:.6f}: c = {rep.c_theta:.6f} "
          f"({rep.n_terms} terms, tail {rep.c_prime_theta:.6f})")
