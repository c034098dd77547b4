"""
An unbounded-width poset and Young complementation
==================================================

The poset X of pairs (i,j), i < j, carries an infinite antichain of
dual order ideals; finite order ideals in N^n mirror artinian ideals.
"""

from staircase import (
    FiniteOrderIdeal,
    descending_chain_max,
    minimalize,
    s_family,
    verify_s_antichain,
    x_doi_contains,
    x_less,
    young_cocomplement,
    young_complement,
)

# the covering-style order: (i,j) < (i',j') iff j<j' and (i=i' or j<i')
print("(1,2) < (1,5):", x_less((1, 2), (1, 5)))
print("(1,2) < (3,4):", x_less((1, 2), (3, 4)))
print("(1,2) < (2,3):", x_less((1, 2), (2, 3)))

# chains below (i,j) stay short even though the poset is wide
for p in [(0, 1), (0, 4), (2, 6)]:
    print(f"longest chain strictly below {p}: {descending_chain_max(p)}")

# the dual order ideals generated by S_l = {(k,l) : k < l} never nest
S2, S3 = s_family(2), s_family(3)
print("D(S3) contains D(S2):", x_doi_contains(S3, S2))
print("D(S2) contains D(S3):", x_doi_contains(S2, S3))
print("first 20 levels pairwise incomparable:", verify_s_antichain(20))

# complementation swaps order ideals with artinian monomial ideals
O = FiniteOrderIdeal(2, ((0, 0), (1, 0), (0, 1), (1, 1), (2, 0)))
I = young_complement(O)
print("order ideal:", O.points)
print("complement ideal:", I.gens)
print("round trip:", young_cocomplement(I) == O)

# inclusion reverses across the bijection
smaller = FiniteOrderIdeal(2, ((0, 0), (1, 0)))
print("O' subset of O:", smaller.issubset(O))
print(
    "complement(O') contains complement(O):",
    young_complement(smaller).contains(young_complement(O)),
)
