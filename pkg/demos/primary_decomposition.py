"""
Primary decomposition of a monomial ideal
=========================================

Split an ideal into irreducible parts, group them by associated prime,
and confirm the pieces intersect back to the input.
"""

from staircase import (
    associated_primes,
    irreducible_decomposition,
    minimalize,
    primary_decomposition,
)

I = minimalize(3, [(2, 1, 0), (1, 0, 2), (0, 2, 2)])
print("ideal:", I.gens)

print("\nirreducible components:")
for C in irreducible_decomposition(I):
    print("  ", C.gens)

print("\nassociated primes (tau = variables NOT generating):")
for P in associated_primes(I):
    print(f"   gens {P.generators}  tau {sorted(P.tau)}")

print("\nprimary components:")
components = primary_decomposition(I)
for Q in components:
    print(f"   prime {Q.prime.generators}  component {Q.component.gens}")

# intersecting the components recovers the ideal exactly
back = components[0].component
for Q in components[1:]:
    back = back.intersect(Q.component)
print("\nintersection of components == I:", back == I)
