"""
Families of ideals: antichains, chains, refinement
==================================================

Order-theoretic bookkeeping for finite collections of monomial ideals.
"""

from staircase import (
    IdealFamily,
    extract_descending_chain,
    find_comparable_pair,
    group_by_associated_primes,
    is_antichain,
    minimalize,
    refine_by_standard_trace,
)

# binomial-style family <x^a, y^b> with a+b fixed: pairwise incomparable
fam = IdealFamily.of([minimalize(2, [(a, 0), (0, 7 - a)]) for a in range(1, 7)])
print("antichain:", is_antichain(fam))
print("comparable pair:", find_comparable_pair(fam))

# a mixed family with a long descending chain hidden inside
mixed = IdealFamily.of(
    [
        minimalize(2, [(1, 0), (0, 1)]),
        minimalize(2, [(2, 0), (0, 3)]),
        minimalize(2, [(1, 0), (0, 2)]),
        minimalize(2, [(2, 0), (1, 1), (0, 2)]),
        minimalize(2, [(3, 0), (0, 3)]),
    ]
)
chain = extract_descending_chain(mixed)
print("longest descending chain (indices):", chain)
for i in chain:
    print("   ", mixed[i].gens)

# group members by how they meet the standard monomials of a pivot
pivot = minimalize(2, [(2, 0), (0, 2)])
blocks = refine_by_standard_trace(mixed, pivot)
print("blocks by standard trace:", blocks)

# or by their associated primes
print("blocks by primes:", group_by_associated_primes(mixed))
