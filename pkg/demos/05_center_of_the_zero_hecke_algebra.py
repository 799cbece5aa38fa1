#!/usr/bin/env python3
"""
A basis of the center of the 0-Hecke algebra.

The algebra deforms the group algebra of S_n: generators satisfy
T_i^2 = -T_i plus the braid relations, and T_i T_w either climbs to
T_{s_i w} or flips sign.  Summing T_x over the Bruhat order ideal
generated by one maximal cyclic-shift class yields a central element, and
these sums, one per maximal composition, form a basis of the center.
"""

from heckezero import (
    cycle_string, dim_center, enumerate_maximal, is_central, mul,
    order_ideal, sigma_class, t_basis, t_leq_sigma, verify_center_basis,
)
from heckezero.permutations import all_perms

n = 3
print(f"center of the degree-{n} algebra: dimension {dim_center(n)}")
for alpha in enumerate_maximal(n):
    cls = sigma_class(alpha)
    ideal = order_ideal(cls)
    element = t_leq_sigma(alpha, n)
    members = " + ".join(
        f"T[{cycle_string(w, include_trivial=False) or 'id'}]"
        for w in sorted(ideal))
    print(f"  {alpha!s:10} ideal size {len(ideal)}:  {members}")
    assert is_central(element)

# Centrality fails for a bare generator: T_1 T_2 != T_2 T_1.
t1 = t_basis(3, (2, 1, 3))
print(f"\nbare generator central? {is_central(t1)}")

# A central element commutes with every basis vector, not just generators.
z = t_leq_sigma((3,), 3)
assert all(mul(z, t_basis(3, w)) == mul(t_basis(3, w), z)
           for w in all_perms(3))
print("ideal sum commutes with all 6 basis vectors of degree 3")

# Full verification (centrality, independence, dimension) at degree 5:
report = verify_center_basis(5)
print(f"\ndegree 5: {len(report.alphas)} candidate elements, "
      f"rank {report.rank}, dimension {report.dim}, ok={report.ok}")
