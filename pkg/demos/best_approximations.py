"""Walk the best-approximation sequence of a complex target.

Every term (p, q) beats all approximations with a smaller denominator
modulus, the denominators grow geometrically, and the products
|q_{n+1}| * |q_n theta - p_n| stay below the Dirichlet constant.
"""

import math

from gausscf import best_approximations, theoretical_constant

theta = complex(math.sqrt(2) - 0.3, math.sqrt(3) - 1.5)
print(f"target theta = {theta:.12f}")

seq, terminated = best_approximations(theta, 2000)
print(f"{len(seq)} denominator classes with |q| <= 2000 (terminated={terminated})\n")

print(f"{'p':>12} {'q':>12} {'|q|':>12} {'|q theta - p|':>16} {'product':>10}")
for n, term in enumerate(seq):
    prod = f"{seq[n + 1].qmod * term.err:10.6f}" if n + 1 < len(seq) else ""
    p = f"{term.p.re}{term.p.im:+d}i"
    q = f"{term.q.re}{term.q.im:+d}i"
    print(f"{p:>12} {q:>12} {term.qmod:12.4f} {term.err:16.3e} {prod}")

print(f"\nDirichlet bound on every product: {theoretical_constant():.7f}")

# a Gaussian rational terminates on an exact hit
seq, terminated = best_approximations(0.7 + 0.3j, 1000)
last = seq[-1]
print(
    f"\ntheta = 0.7+0.3i is (7+3i)/10: sequence terminates={terminated} "
    f"at q = {last.q.re}{last.q.im:+d}i with error {last.err:.1e}"
)
