"""
Atomic degrees, vertex ideals, and monoid lifting
=================================================

Scan small matrices for indecomposable fibers and relate hull vertices
to standard monomials of the vertex ideal.
"""

from staircase import (
    FiberMatrix,
    atomic_scan,
    atomicity_ideal,
    minimalize,
    monoid_lift,
    sagbi_generators,
    vertex_ideal_gens_truncated,
    vertex_ideal_standard,
)

# one row (1 1): every degree d splits as 1 + (d-1), so only 1 is atomic
segment = FiberMatrix(((1, 1),))
print("atomic degrees of [1 1] up to 6:", atomic_scan(segment, 6))

# the identity matrix: the unit vectors and nothing else
ident = FiberMatrix(((1, 0), (0, 1)))
print("atomic degrees of I_2 up to 4:", atomic_scan(ident, 4))

# lattice-sense scan with the points of <x1> removed from every fiber
M = minimalize(2, [(1, 0)])
print("lattice-atomic, x1 removed:  ", atomic_scan(segment, 6, mode="lattice", M=M))

# degrees whose split produces a fixed monomial obstruction
print("atomicity ideal of [1 1] at 4:", atomicity_ideal(segment, (4,)).gens)

# hull vertices across all degrees = standard monomials of one ideal;
# (2,2,1) sits between (0,4,0) and (4,0,2) in its fiber, so it is the
# first monomial to land inside the vertex ideal
two_rows = FiberMatrix(((1, 1, 0), (0, 1, 2)))
std = vertex_ideal_standard(two_rows, 5)
print("vertex standard monomials up to degree 5:", len(std))
print("vertex ideal (truncated at 5):", vertex_ideal_gens_truncated(two_rows, 5).gens)

# coefficients (2,3) on the segment: content gcd is 1 in every degree
print("subalgebra basis:", sagbi_generators(segment, (2, 3), 5))

# membership in a shifted monoid ideal, reported as a monomial ideal
G = FiberMatrix(((2, 3),))
print("lift of degrees {2}: ", monoid_lift(G, [(2,)], 3).gens)
