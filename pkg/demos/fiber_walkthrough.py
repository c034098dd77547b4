"""
Fibers, hulls, and two notions of splitting
===========================================

Walk the bundled 4x6 worked example: a degree whose fiber polytope
decomposes as a Minkowski sum even though the lattice points refuse to
split additively.
"""

from staircase import (
    FiberMatrix,
    MonomialIdeal,
    fiber,
    is_atomic,
    is_ma_atomic,
    ma_decomposes,
    minkowski_decomposes,
)

A = FiberMatrix(
    (
        (1, 1, 1, 0, 0, 0),
        (0, 3, 2, 1, 0, 0),
        (5, 0, 2, 0, 1, 0),
        (0, 2, 1, 0, 0, 1),
    )
)
b1 = (1, 3, 5, 2)
b2 = (5, 10, 10, 6)
b = tuple(x + y for x, y in zip(b1, b2))

for name, deg in [("b1", b1), ("b2", b2), ("b1+b2", b)]:
    F = fiber(A, deg)
    print(f"fiber over {name} = {deg}:")
    print(f"   {len(F.points)} points, vertices {list(F.vertices)}")

# the hulls obey P_{b1+b2} = P_{b1} + P_{b2} ...
print("minkowski_decomposes:", minkowski_decomposes(A, b, b1, b2))

# ... but the lattice points do not all split as u1 + u2
zero = MonomialIdeal.zero(6)
split, witness = ma_decomposes(zero, A, b, b1, b2)
print("lattice split:", split, " witness:", witness)

# so b1+b2 is not atomic in the polytope sense, yet no lattice
# decomposition works either: checked over every valid degree pair
print("is_atomic(b1+b2):   ", is_atomic(A, b))
print("is_ma_atomic(b1+b2):", is_ma_atomic(zero, A, b))
