"""
Minimal generators and ideal algebra
====================================

Build monomial ideals from redundant generating sets and combine them.
"""

from staircase import MonomialIdeal, minimalize

# a deliberately redundant generating set in three variables
raw = [(2, 0, 0), (2, 1, 0), (0, 3, 0), (4, 0, 2), (0, 3, 1), (1, 1, 1)]
I = minimalize(3, raw)
print("input vectors: ", raw)
print("minimal gens:  ", I.gens)

# divisibility membership does not depend on the presentation
for m in [(2, 1, 0), (0, 3, 5), (1, 1, 0)]:
    print(f"x^{m} in I:", I.member(m))

# sum, intersection, and colon quotient stay in minimal form
J = minimalize(3, [(0, 0, 2), (1, 2, 0)])
print("I + J: ", I.sum(J).gens)
print("I ∩ J: ", I.intersect(J).gens)
print("I : x^(1,1,0):", I.quotient((1, 1, 0)).gens)

# an artinian ideal has finitely many standard monomials
A = minimalize(2, [(3, 0), (1, 1), (0, 2)])
print("artinian:", A.is_artinian())
print("standard monomials:", A.standard_monomials())
