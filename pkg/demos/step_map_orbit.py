"""The two-branch step map on cylinder ratios and its bookkeeping.

Each step picks a coefficient a in {1, 1+i} (or the half-integral 1/(1+i)
after an index-2 pair) and a Gaussian integer g with |a/w1 - g| < 1; an
index-2 step is always followed by an index-1 step, and the candidate pool
never exceeds eight (index 1) or four (index 2) elements.
"""

import math
from collections import Counter

from gausscf.cfrac import candidate_count, initial_state, tg_step
from gausscf.transversal import density, entry_from_theta, first_return

theta = complex(math.sqrt(2) - 0.3, math.sqrt(3) - 1.5)
state = initial_state(theta)
print("first ten steps of the coordinate dynamics:")
print(f"{'k':>2} {'|w1|':>8} {'|w2|':>8} {'candidates':>10}  coefficient a")
for _ in range(10):
    n = candidate_count(state)
    nxt = tg_step(state)
    a = nxt.coeffs[0]
    print(f"{state.k:>2} {abs(state.w1):8.4f} {abs(state.w2):8.4f} {n:>10}  {a!s}")
    state = nxt

counts = Counter()
state = initial_state(theta)
prev_k = state.k
double_index2 = 0
for _ in range(20000):
    nxt = tg_step(state)
    counts[nxt.k] += 1
    if prev_k == 2 and nxt.k == 2:
        double_index2 += 1
    prev_k = nxt.k
    state = nxt
print(f"\n20000 steps: index frequencies {dict(counts)}, "
      f"consecutive index-2 pairs: {double_index2}")

pt, _ = entry_from_theta(theta)
total_time = 0.0
for _ in range(1000):
    step = first_return(pt)
    total_time += step.time
    pt = step.point
print(f"\n1000 returns of the diagonal flow: total flow time {total_time:.2f}, "
      f"density at the final point {density(pt):.2f}")
