"""Multigraded Hilbert functions of monomial quotients.

A grading assigns each variable a column of a nonnegative matrix with
no zero column, so every degree holds finitely many monomials.  The
Hilbert function counts standard monomials per degree; under the fine
grading (one degree coordinate per variable) the generating function is
a signed sum of 2^r lcm terms over generator subsets, divided by
prod(1 - t_i).
"""

from __future__ import annotations

from functools import cache

from .fibers import FiberMatrix, ma_fiber
from .monomial import Exponent, MonomialIdeal, lcm_exponent

Grading = FiberMatrix

NUMERATOR_GEN_LIMIT = 20


def hilbert_function(I: MonomialIdeal, D: Grading, b) -> int:
    """Number of monomials of degree b (under D) not in I."""
    return len(ma_fiber(I, D, b))


def hilbert_numerator(I: MonomialIdeal) -> dict[Exponent, int]:
    """Signed lcm terms whose series over prod(1-t_i) counts standard monomials.

    Folds generators one at a time: adjoining g subtracts a copy of the
    accumulated terms shifted to their lcm with g, which realizes the
    alternating sum over generator subsets without materializing 2^r
    subsets explicitly (like terms collect as they appear).
    """
    if I.is_unit():
        raise ValueError("unit ideal: quotient is zero, numerator undefined")
    if len(I.gens) > NUMERATOR_GEN_LIMIT:
        raise ValueError(
            f"{len(I.gens)} generators exceed the {NUMERATOR_GEN_LIMIT}-generator expansion limit"
        )
    terms: dict[Exponent, int] = {(0,) * I.nvars: 1}
    for g in I.gens:
        folded = dict(terms)
        for e, c in terms.items():
            k = lcm_exponent(e, g)
            folded[k] = folded.get(k, 0) - c
        terms = {e: c for e, c in folded.items() if c}
    return terms


def numerator_fine_count(terms: dict[Exponent, int], b) -> int:
    """Coefficient of t^b in terms / prod(1-t_i): sum of coefficients below b."""
    b = tuple(b)
    return sum(c for e, c in terms.items() if all(x <= y for x, y in zip(e, b)))


@cache
def _reachable_degrees(D: Grading, bound: int) -> tuple[tuple[int, ...], ...]:
    """Degrees of monomials, restricted to total coordinate sum <= bound."""
    cols = [D.column(i) for i in range(D.ncols)]
    zero = (0,) * D.nrows
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for g in frontier:
            for c in cols:
                h = tuple(x + y for x, y in zip(g, c))
                if h not in seen and sum(h) <= bound:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return tuple(sorted(seen))


def reachable_degrees(D: Grading, bound: int) -> list[tuple[int, ...]]:
    """All degrees D.u with total coordinate sum <= bound, sorted lex."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return list(_reachable_degrees(D, bound))


def same_hilbert_up_to(I: MonomialIdeal, J: MonomialIdeal, D: Grading, bound: int) -> bool:
    """Do I and J have equal Hilbert functions on all degrees with |b| <= bound?"""
    if I.nvars != J.nvars:
        raise ValueError(f"ideals live in {I.nvars} and {J.nvars} variables")
    if I.nvars != D.ncols:
        raise ValueError(f"ideals have {I.nvars} variables, grading has {D.ncols} columns")
    return all(
        hilbert_function(I, D, b) == hilbert_function(J, D, b)
        for b in reachable_degrees(D, bound)
    )
