"""A poset on pairs with finite chains but unbounded antichains, plus
the complementation bijection between finite order ideals in N^n and
artinian monomial ideals.

Ground set: pairs (i, j) of nonnegative integers with i < j, ordered by
(i, j) < (i', j') iff j < j' and (i = i' or j < i').  Every element has
only finitely many elements below it, yet the slices {(k, l) : k < l}
form arbitrarily large antichains of dual order ideals.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache

from .monomial import Exponent, MonomialIdeal, check_exponent, minimalize

XElem = tuple[int, int]


def check_xelem(p) -> XElem:
    i, j = p
    if not (isinstance(i, int) and isinstance(j, int)):
        raise ValueError(f"element {p!r} must be a pair of integers")
    if not (0 <= i < j):
        raise ValueError(f"element {p!r} violates 0 <= i < j")
    return (i, j)


def x_less(p, q) -> bool:
    """Strictly below: j < j' and (same i, or j < i')."""
    i, j = check_xelem(p)
    i2, j2 = check_xelem(q)
    return j < j2 and (i == i2 or j < i2)


@dataclass(frozen=True)
class XDualOrderIdeal:
    """Upward-closed subset, stored as its antichain of minimal elements."""

    mins: tuple[XElem, ...]

    def __post_init__(self):
        mins = tuple(sorted({check_xelem(p) for p in self.mins}))
        object.__setattr__(self, "mins", mins)
        for p in mins:
            for q in mins:
                if p != q and x_less(p, q):
                    raise ValueError(f"{p} < {q}: minimal elements must be an antichain")

    @classmethod
    def generated_by(cls, elems) -> XDualOrderIdeal:
        """Upward closure of arbitrary elements; keeps the minimal ones."""
        pts = sorted({check_xelem(p) for p in elems})
        return cls(tuple(
            p for p in pts if not any(q != p and x_less(q, p) for q in pts)
        ))

    def member(self, p) -> bool:
        p = check_xelem(p)
        return any(q == p or x_less(q, p) for q in self.mins)


def x_doi_contains(D1: XDualOrderIdeal, D2: XDualOrderIdeal) -> bool:
    """Is D1 a subset of D2 (as upward-closed sets)?

    Holds iff every minimal element of D1 lies above (or equals) some
    minimal element of D2.
    """
    return all(D2.member(p) for p in D1.mins)


def s_family(l: int) -> XDualOrderIdeal:
    """The dual order ideal generated by the slice {(k, l) : k < l}."""
    if l < 1:
        raise ValueError("slice index must be at least 1")
    return XDualOrderIdeal(tuple((k, l) for k in range(l)))


def verify_s_antichain(L: int) -> bool:
    """Are the slice ideals pairwise incomparable through index L?"""
    if L < 2:
        raise ValueError("need at least two slices to compare")
    ideals = [s_family(l) for l in range(1, L + 1)]
    for a in range(len(ideals)):
        for b in range(a + 1, len(ideals)):
            if x_doi_contains(ideals[a], ideals[b]) or x_doi_contains(ideals[b], ideals[a]):
                return False
    return True


def elements_with_j_below(j_max: int) -> list[XElem]:
    """All ground-set elements (i, j) with j <= j_max, sorted."""
    return [(i, j) for j in range(1, j_max + 1) for i in range(j)]


@cache
def descending_chain_max(p) -> int:
    """Largest k admitting a chain q_1 < ... < q_k < p.

    Elements below (i, j) all have second coordinate < j, so the search
    is finite and the value is at most j - 1.
    """
    p = check_xelem(p)
    below = [q for q in elements_with_j_below(p[1] - 1) if x_less(q, p)]
    if not below:
        return 0
    return 1 + max(descending_chain_max(q) for q in below)


@dataclass(frozen=True)
class FiniteOrderIdeal:
    """Finite subset of N^n closed downward under componentwise <=."""

    nvars: int
    points: tuple[Exponent, ...]

    def __post_init__(self):
        if self.nvars < 1:
            raise ValueError("need at least one variable")
        pts = tuple(sorted({check_exponent(p, self.nvars) for p in self.points}))
        object.__setattr__(self, "points", pts)
        have = set(pts)
        for p in pts:
            for i in range(self.nvars):
                if p[i] > 0:
                    q = tuple(e - 1 if k == i else e for k, e in enumerate(p))
                    if q not in have:
                        raise ValueError(f"not downward closed: {p} present, {q} missing")

    def member(self, p) -> bool:
        return check_exponent(p, self.nvars) in set(self.points)

    def issubset(self, other: FiniteOrderIdeal) -> bool:
        if self.nvars != other.nvars:
            raise ValueError("order ideals live in different rings")
        return set(self.points) <= set(other.points)

    def to_json(self) -> dict:
        return {"vars": self.nvars, "points": [list(p) for p in self.points]}

    @classmethod
    def from_json(cls, data) -> FiniteOrderIdeal:
        if not isinstance(data, dict) or "points" not in data or "vars" not in data:
            raise ValueError('order-ideal JSON must be {"vars": n, "points": [...]}')
        return cls(data["vars"], tuple(tuple(p) for p in data["points"]))


def young_complement(O: FiniteOrderIdeal) -> MonomialIdeal:
    """Monomial ideal whose monomials are exactly the points outside O.

    The generators are the minimal points of the complement: those not
    in O all of whose immediate predecessors are.  Such points have
    every coordinate at most one past O's bounding box.
    """
    n = O.nvars
    have = set(O.points)
    hi = [max((p[i] for p in O.points), default=-1) + 1 for i in range(n)]

    def candidates(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(hi[len(prefix)] + 1):
            yield from candidates(prefix + [v])

    gens = []
    for u in candidates([]):
        if u in have:
            continue
        if all(
            u[i] == 0 or tuple(e - 1 if k == i else e for k, e in enumerate(u)) in have
            for i in range(n)
        ):
            gens.append(u)
    return minimalize(n, gens)


def young_cocomplement(I: MonomialIdeal) -> FiniteOrderIdeal:
    """The standard monomials of an artinian ideal, as a finite order ideal."""
    if not I.is_artinian():
        raise ValueError("ideal must be artinian (else the complement is infinite)")
    return FiniteOrderIdeal(I.nvars, tuple(I.standard_monomials()))
