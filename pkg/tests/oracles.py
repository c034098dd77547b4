"""Independent reference implementations used only to check the library.

Each oracle takes a different route from the code under test: membership
by raw divisor scan, fibers by full box enumeration, hull membership by
affinely-independent-subset search instead of a feasibility tableau,
chains by subset enumeration.
"""

from __future__ import annotations

import itertools
from fractions import Fraction


def divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def member(gens, m) -> bool:
    """Raw membership: some generator divides m."""
    return any(divides(g, m) for g in gens)


def monomials_up_to(nvars: int, bound: int):
    """All exponent vectors with total degree <= bound."""
    for combo in itertools.product(range(bound + 1), repeat=nvars):
        if sum(combo) <= bound:
            yield combo


def ideals_equal_up_to(gens1, gens2, nvars: int, bound: int) -> bool:
    """Same membership on all monomials of total degree <= bound."""
    return all(
        member(gens1, m) == member(gens2, m) for m in monomials_up_to(nvars, bound)
    )


def intersection_members(components, m) -> bool:
    return all(member(gens, m) for gens in components)


def box_fiber_points(rows, b) -> list[tuple[int, ...]]:
    """Fiber by brute force over the full coordinate box forced by b."""
    d, n = len(rows), len(rows[0])
    caps = []
    for i in range(n):
        ub = min(b[r] // rows[r][i] for r in range(d) if rows[r][i] > 0)
        caps.append(ub)
    out = []
    for u in itertools.product(*(range(c + 1) for c in caps)):
        if all(sum(rows[r][i] * u[i] for i in range(n)) == b[r] for r in range(d)):
            out.append(u)
    return out


def _solve_exact(matrix, rhs):
    """Gaussian elimination over Fractions.

    Returns ("unique", x), ("none", None) for inconsistent systems, or
    ("dependent", None) when the solution is not unique.
    """
    rows = [[Fraction(v) for v in row] + [Fraction(c)] for row, c in zip(matrix, rhs)]
    ncols = len(matrix[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((k for k in range(r, len(rows)) if rows[k][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        rows[r] = [v / rows[r][c] for v in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][c] != 0:
                f = rows[k][c]
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    for k in range(r, len(rows)):
        if rows[k][-1] != 0:
            return "none", None
    if len(pivots) < ncols:
        return "dependent", None
    x = [Fraction(0)] * ncols
    for idx, c in enumerate(pivots):
        x[c] = rows[idx][-1]
    return "unique", x


def hull_member(q, points) -> bool:
    """Convex-hull membership via affinely independent subsets.

    If q is in the hull it is in the hull of some affinely independent
    subset of at most dim+1 points; dependent subsets are skipped, which
    is safe because an independent sub-subset always suffices.
    """
    pts = [tuple(p) for p in points]
    if not pts:
        return False
    dim = len(q)
    for size in range(1, min(len(pts), dim + 1) + 1):
        for subset in itertools.combinations(pts, size):
            matrix = [[p[c] for p in subset] for c in range(dim)]
            matrix.append([1] * size)
            status, lam = _solve_exact(matrix, list(q) + [1])
            if status == "unique" and all(v >= 0 for v in lam):
                return True
    return False


def hull_vertices_by_definition(points) -> list[tuple[int, ...]]:
    pts = sorted({tuple(p) for p in points})
    return [p for p in pts if not hull_member(p, [q for q in pts if q != p])]


def longest_chain_by_subsets(family) -> int:
    """Max size of a totally ordered subset; family is a list of ideals
    with a .contains method."""
    n = len(family)
    best = 0
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        ok = all(
            family[i].contains(family[j]) or family[j].contains(family[i])
            for i, j in itertools.combinations(idx, 2)
        )
        if ok:
            best = max(best, len(idx))
    return best
