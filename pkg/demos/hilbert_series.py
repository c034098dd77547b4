"""
Hilbert functions under a matrix grading
========================================

Count standard monomials degree by degree and compare against the
generator-fold numerator.
"""

from staircase import (
    FiberMatrix,
    hilbert_function,
    hilbert_numerator,
    minimalize,
    numerator_fine_count,
    reachable_degrees,
    same_hilbert_up_to,
)

I = minimalize(2, [(3, 0), (1, 2)])

# coarse grading by total degree: deg(x) = deg(y) = 1
total = FiberMatrix(((1, 1),))
print("H_I(d) for d = 0..7 under the total-degree grading:")
print("  ", [hilbert_function(I, total, (d,)) for d in range(8)])

# the numerator records signed lcm corrections, one per generator subset
terms = hilbert_numerator(I)
print("numerator terms:", sorted(terms.items()))

# under the fine (identity) grading the series just flags standard monomials
for b in [(0, 0), (2, 1), (1, 2), (4, 0)]:
    print(f"  fine count at {b}: {numerator_fine_count(terms, b)}"
          f"   (member: {I.member(b)})")

# two different ideals can agree in low degrees and split later
J = minimalize(2, [(3, 0), (2, 2)])
grading = FiberMatrix(((1, 1),))
print("degrees reachable up to bound 4:", sorted(reachable_degrees(grading, 4)))
print("agree through bound 2:", same_hilbert_up_to(I, J, grading, 2))
print("agree through bound 4:", same_hilbert_up_to(I, J, grading, 4))
