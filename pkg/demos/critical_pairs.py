"""Reproduce the two exhaustive critical-pair searches.

A coefficient pair (g, h) can spoil a candidate pair of consecutive minimal
vectors only if |h| d(g/h, C) <= 1 and |g| d(h/g, D) <= 1 (or the T-region
analogue for half-integral pairs).  Sweeping all pairs of modulus <= 6 with
a 0.001 safety margin leaves 18 integer unit classes and 16 half-integral
pairs.
"""

from gausscf.critical import enumerate_pairs, filter_G1, filter_G2

n_zi = len(enumerate_pairs("zi", 6))
n_j = len(enumerate_pairs("j", 6))
print(f"swept {n_zi} integer pairs (< 28501) and {n_j} half-integral pairs (< 83521)")

g1 = filter_G1(0.001)
print(f"\nfirst critical set: {len(g1)} primitive unit classes")
for p in sorted(g1, key=lambda p: (p.g.norm(), p.h.norm(), p.g.re, p.h.re, p.h.im)):
    print(f"  ({p.g.re}{p.g.im:+d}i, {p.h.re}{p.h.im:+d}i)")

g2 = filter_G2(0.001)
print(f"\nsecond critical set: {len(g2)} half-integral pairs (numerators over 1+i)")
nums = sorted((p.g.re, p.g.im, p.h.re, p.h.im) for p in g2)
print("  numerators:", nums)

tight = filter_G1(0.0)
print(f"\nwithout the margin the integer sweep keeps {len(tight)} classes "
      "(the margin guards against coefficients sitting exactly on the filter boundary)")
