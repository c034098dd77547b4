"""Exact rational feasibility of convex-combination systems.

Decides whether a target point is a convex combination of a finite point
set, entirely in fractions.Fraction arithmetic.  Phase-1 simplex with
Bland's rule: no floats, no cycling, guaranteed termination.
"""

from __future__ import annotations

from fractions import Fraction


def in_convex_hull(target, points) -> bool:
    """True iff target = sum(l_i * p_i) for some l_i >= 0 with sum l_i = 1.

    target: sequence of ints/Fractions; points: sequence of same-length
    sequences.  Empty point set never contains anything.
    """
    points = [tuple(p) for p in points]
    target = tuple(Fraction(t) for t in target)
    if not points:
        return False
    dim = len(target)
    if any(len(p) != dim for p in points):
        raise ValueError("dimension mismatch between target and points")

    # Equality system M l = d: one row per coordinate plus the sum-to-1 row.
    m = len(points)
    rows = [[Fraction(p[k]) for p in points] for k in range(dim)]
    rows.append([Fraction(1)] * m)
    rhs = list(target) + [Fraction(1)]
    return _phase_one_feasible(rows, rhs)


def _phase_one_feasible(rows, rhs) -> bool:
    """Feasibility of {A x = b, x >= 0} by minimizing artificial variables."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0

    # Make b >= 0, then append an identity block of artificials.
    tab = []
    for r in range(nrows):
        row = list(rows[r])
        b = rhs[r]
        if b < 0:
            row = [-x for x in row]
            b = -b
        art = [Fraction(0)] * nrows
        art[r] = Fraction(1)
        tab.append(row + art + [b])
    total = ncols + nrows
    basis = list(range(ncols, total))

    # Objective: minimize the artificial sum.  Reduced-cost row starts as
    # -(sum of constraint rows) on structural columns, 0 on artificials.
    obj = [Fraction(0)] * (total + 1)
    for r in range(nrows):
        for j in range(ncols):
            obj[j] -= tab[r][j]
        obj[total] -= tab[r][total]

    while True:
        # Bland: entering column = lowest index with negative reduced cost.
        enter = next((j for j in range(total) if obj[j] < 0), None)
        if enter is None:
            break
        # Leaving row: minimum ratio, ties by lowest basis index.
        leave = None
        best = None
        for r in range(nrows):
            coef = tab[r][enter]
            if coef > 0:
                ratio = tab[r][total] / coef
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best = ratio
                    leave = r
        if leave is None:
            # Unbounded below cannot happen for a phase-1 objective.
            raise ArithmeticError("phase-1 simplex became unbounded")
        _pivot(tab, obj, leave, enter, total)
        basis[leave] = enter

    return obj[total] == 0


def _pivot(tab, obj, leave, enter, total):
    piv = tab[leave][enter]
    row = tab[leave] = [x / piv for x in tab[leave]]
    for r, other in enumerate(tab):
        if r != leave and other[enter] != 0:
            f = other[enter]
            tab[r] = [x - f * y for x, y in zip(other, row)]
    if obj[enter] != 0:
        f = obj[enter]
        for j in range(total + 1):
            obj[j] -= f * row[j]
