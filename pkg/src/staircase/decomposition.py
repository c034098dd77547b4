"""Irreducible and irredundant primary decomposition of monomial ideals.

Every proper nonzero monomial ideal is a finite intersection of ideals
generated by pure variable powers.  Splitting any mixed generator
x^g = x_i^{g_i} * (x^g / x_i^{g_i}) gives I = (I + first factor) cap
(I + second factor); iterating terminates and the resulting components,
pruned of redundancy, are unique.  Grouping them by radical support and
intersecting groupwise yields one primary component per associated
prime.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, reduce

from .monomial import Exponent, MonomialIdeal, minimalize


@dataclass(frozen=True)
class MonomialPrime:
    """Prime monomial ideal determined by its generating variables.

    tau holds the 0-based indices that do NOT generate; the prime is
    generated by {x_i : i not in tau}.  tau = all indices encodes the
    zero ideal's prime and never appears among associated primes of a
    nonzero ideal.
    """

    nvars: int
    tau: frozenset[int]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        if not isinstance(self.tau, frozenset):
            object.__setattr__(self, "tau", frozenset(self.tau))
        if not all(isinstance(i, int) and 0 <= i < self.nvars for i in self.tau):
            raise ValueError(f"tau {sorted(self.tau)} out of range for {self.nvars} variables")

    @property
    def generators(self) -> tuple[int, ...]:
        """Indices of the generating variables, ascending."""
        return tuple(i for i in range(self.nvars) if i not in self.tau)

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i in self.generators:
            e = [0] * self.nvars
            e[i] = 1
            gens.append(tuple(e))
        return minimalize(self.nvars, gens)

    def to_json(self) -> dict:
        return {"tau": sorted(self.tau)}


@dataclass(frozen=True)
class PrimaryComponent:
    """A primary monomial ideal together with its radical prime."""

    prime: MonomialPrime
    component: MonomialIdeal

    def __post_init__(self):
        if self.prime.nvars != self.component.nvars:
            raise ValueError("prime and component live in different rings")
        support = set()
        for g in self.component.gens:
            support.update(i for i, e in enumerate(g) if e > 0)
        outside = set(self.prime.generators)
        if support != outside:
            raise ValueError(
                f"generator support {sorted(support)} does not match prime variables {sorted(outside)}"
            )
        for i in outside:
            if not any(
                g[i] > 0 and all(e == 0 for k, e in enumerate(g) if k != i)
                for g in self.component.gens
            ):
                raise ValueError(f"no pure power of variable {i}: component not primary")

    def to_json(self) -> dict:
        return {"tau": sorted(self.prime.tau), "gens": [list(g) for g in self.component.gens]}


def _support(g: Exponent) -> tuple[int, ...]:
    return tuple(i for i, e in enumerate(g) if e > 0)


@cache
def _irreducible_parts(I: MonomialIdeal) -> frozenset[MonomialIdeal]:
    """Split mixed generators until every part is generated by pure powers."""
    mixed = next((g for g in I.gens if len(_support(g)) >= 2), None)
    if mixed is None:
        return frozenset({I})
    i = _support(mixed)[0]
    power = tuple(mixed[i] if k == i else 0 for k in range(I.nvars))
    rest = tuple(0 if k == i else e for k, e in enumerate(mixed))
    left = minimalize(I.nvars, I.gens + (power,))
    right = minimalize(I.nvars, I.gens + (rest,))
    return _irreducible_parts(left) | _irreducible_parts(right)


def _check_proper_nonzero(I: MonomialIdeal):
    if I.is_zero():
        raise ValueError("zero ideal does not decompose")
    if I.is_unit():
        raise ValueError("unit ideal does not decompose")


def irreducible_decomposition(I: MonomialIdeal) -> list[MonomialIdeal]:
    """Irredundant irreducible components, sorted by generator tuples.

    Each component is generated by pure powers of distinct variables and
    none contains another; a component containing any other would be
    redundant in the intersection, and for irreducible components that
    is the only way redundancy can arise.
    """
    _check_proper_nonzero(I)
    parts = sorted(_irreducible_parts(I), key=lambda C: C.gens)
    return [
        C
        for C in parts
        if not any(D is not C and C.contains(D) for D in parts)
    ]


def associated_primes(I: MonomialIdeal) -> list[MonomialPrime]:
    """Radicals of the irreducible components, each listed once."""
    _check_proper_nonzero(I)
    taus = set()
    for C in irreducible_decomposition(I):
        sup = set()
        for g in C.gens:
            sup.update(_support(g))
        taus.add(frozenset(range(I.nvars)) - sup)
    return [
        MonomialPrime(I.nvars, t)
        for t in sorted(taus, key=lambda t: tuple(i for i in range(I.nvars) if i not in t))
    ]


def primary_decomposition(I: MonomialIdeal) -> list[PrimaryComponent]:
    """One primary component per associated prime.

    Groups the irreducible components sharing a radical and intersects
    each group.  The result is irredundant because the irreducible
    decomposition is.
    """
    _check_proper_nonzero(I)
    groups: dict[frozenset[int], list[MonomialIdeal]] = {}
    for C in irreducible_decomposition(I):
        sup = set()
        for g in C.gens:
            sup.update(_support(g))
        groups.setdefault(frozenset(sup), []).append(C)
    out = []
    for sup, comps in groups.items():
        prime = MonomialPrime(I.nvars, frozenset(range(I.nvars)) - sup)
        out.append(PrimaryComponent(prime, reduce(lambda a, b: a.intersect(b), comps)))
    out.sort(key=lambda pc: pc.prime.generators)
    return out
