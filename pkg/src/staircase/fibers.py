"""Fibers of nonnegative integer matrices and their atomicity.

A d x n matrix A with no zero column maps u |-> Au; the fiber over a
degree b is the finite set {u in N^n : Au = b}, whose convex hull is a
lattice polytope.  This module enumerates fibers exactly, finds hull
vertices in rational arithmetic, decides Minkowski decomposability and
both flavours of atomicity, scans for atomic degrees, builds vertex
ideals and subalgebra generators from them, and lifts monomial ideals
through a monoid parameterization.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import cache

from .exactlp import in_convex_hull
from .monomial import (
    Exponent,
    MonomialIdeal,
    check_exponent,
    exponents_up_to_degree,
    minimalize,
)

Degree = tuple[int, ...]


@dataclass(frozen=True)
class FiberMatrix:
    """Nonnegative integer matrix with no zero column (all fibers finite)."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("matrix needs at least one row")
        n = len(self.rows[0])
        for r in self.rows:
            if len(r) != n:
                raise ValueError("ragged matrix")
            check_exponent(r)
        if n == 0:
            raise ValueError("matrix needs at least one column")
        for i in range(n):
            if all(r[i] == 0 for r in self.rows):
                raise ValueError(f"column {i} is zero; fibers would be infinite")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def column(self, i: int) -> tuple[int, ...]:
        return tuple(r[i] for r in self.rows)

    def apply(self, u) -> Degree:
        u = check_exponent(u, self.ncols)
        return tuple(sum(r[i] * u[i] for i in range(self.ncols)) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, data) -> FiberMatrix:
        if not isinstance(data, dict) or "entries" not in data:
            raise ValueError('matrix JSON must be {"rows": d, "cols": n, "entries": [...]}')
        entries = tuple(tuple(r) for r in data["entries"])
        mat = cls(entries)
        if "rows" in data and data["rows"] != mat.nrows:
            raise ValueError(f'"rows" is {data["rows"]}, entries have {mat.nrows}')
        if "cols" in data and data["cols"] != mat.ncols:
            raise ValueError(f'"cols" is {data["cols"]}, entries have {mat.ncols}')
        return mat


@dataclass(frozen=True)
class Fiber:
    """One fiber: its degree, all lattice points, and the hull vertices."""

    degree: Degree
    points: tuple[Exponent, ...]
    vertices: tuple[Exponent, ...]


def _check_degree(A: FiberMatrix, b) -> Degree:
    b = tuple(b)
    if len(b) != A.nrows:
        raise ValueError(f"degree {b} has length {len(b)}, matrix has {A.nrows} rows")
    return check_exponent(b)


def _enumerate_fiber(A: FiberMatrix, b: Degree, first_only: bool) -> list[Exponent]:
    """Depth-first assignment of exponents with residual-feasibility pruning."""
    d, n = A.nrows, A.ncols
    cols = [A.column(i) for i in range(n)]
    pos_rows = [[r for r in range(d) if cols[i][r] > 0] for i in range(n)]
    # rows that no column beyond i can still serve; their residual must be 0
    dead_after = [
        [r for r in range(d) if all(A.rows[r][j] == 0 for j in range(i + 1, n))]
        for i in range(n)
    ]
    residual = list(b)
    u = [0] * n
    out: list[Exponent] = []

    def rec(i: int) -> bool:
        if i == n:
            if not any(residual):
                out.append(tuple(u))
                return first_only
            return False
        coli = cols[i]
        ub = min(residual[r] // coli[r] for r in pos_rows[i])
        stop = False
        for v in range(ub + 1):
            u[i] = v
            if all(residual[r] == 0 for r in dead_after[i]):
                if rec(i + 1):
                    stop = True
                    break
            if v < ub:
                for r in pos_rows[i]:
                    residual[r] -= coli[r]
        for r in pos_rows[i]:
            residual[r] += v * coli[r]
        return stop

    rec(0)
    return out


@cache
def _fiber_points(A: FiberMatrix, b: Degree) -> tuple[Exponent, ...]:
    return tuple(_enumerate_fiber(A, b, first_only=False))


@cache
def _fiber_nonempty(A: FiberMatrix, b: Degree) -> bool:
    return bool(_enumerate_fiber(A, b, first_only=True))


@cache
def _fiber_vertices(A: FiberMatrix, b: Degree) -> tuple[Exponent, ...]:
    return tuple(hull_vertices(_fiber_points(A, b)))


def fiber_points(A: FiberMatrix, b) -> list[Exponent]:
    """All u with Au = b, in lex order.  Empty means b is outside the monoid NA."""
    return list(_fiber_points(A, _check_degree(A, b)))


def fiber(A: FiberMatrix, b) -> Fiber:
    """The fiber over b together with its hull vertices."""
    b = _check_degree(A, b)
    return Fiber(b, _fiber_points(A, b), _fiber_vertices(A, b))


def in_hull(q, points) -> bool:
    """Exact test: is q a convex combination of the given points?"""
    return in_convex_hull(q, points)


def hull_vertices(points) -> list[Exponent]:
    """Points that are not convex combinations of the others, in lex order."""
    pts = sorted({tuple(p) for p in points})
    if not pts:
        raise ValueError("empty point set has no hull")
    return [p for p in pts if not in_convex_hull(p, [q for q in pts if q != p])]


@cache
def _degrees_within(A: FiberMatrix, b: Degree) -> frozenset[Degree]:
    """NA intersected with the box [0, b], by breadth-first column additions."""
    cols = [A.column(i) for i in range(A.ncols)]
    zero = (0,) * A.nrows
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for g in frontier:
            for c in cols:
                h = tuple(gi + ci for gi, ci in zip(g, c))
                if h not in seen and all(hi <= bi for hi, bi in zip(h, b)):
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return frozenset(seen)


def _split_pairs(A: FiberMatrix, b: Degree):
    """Nontrivial unordered pairs (b1, b2) in NA with b1 + b2 = b, b1 <= b2 lex."""
    zero = (0,) * A.nrows
    reachable = _degrees_within(A, b)
    for b1 in sorted(reachable):
        if b1 == zero or b1 == b:
            continue
        b2 = tuple(bi - ci for bi, ci in zip(b, b1))
        if b2 in reachable and b1 <= b2:
            yield b1, b2


def minkowski_decomposes(A: FiberMatrix, b, b1, b2) -> bool:
    """Does the hull over b equal the Minkowski sum of the hulls over b1, b2?

    Decided on vertex sets: the sum polytope is the hull of pairwise sums
    of the summands' vertices, so equality is mutual hull membership.
    """
    b, b1, b2 = _check_degree(A, b), _check_degree(A, b1), _check_degree(A, b2)
    if tuple(x + y for x, y in zip(b1, b2)) != b:
        raise ValueError(f"degree mismatch: {b1} + {b2} != {b}")
    for part in (b1, b2):
        if not _fiber_points(A, part):
            raise ValueError(f"empty fiber over {part}")
    v = _fiber_vertices(A, b)
    sums = sorted(
        {
            tuple(x + y for x, y in zip(p, q))
            for p in _fiber_vertices(A, b1)
            for q in _fiber_vertices(A, b2)
        }
    )
    return all(in_convex_hull(p, sums) for p in v) and all(
        in_convex_hull(s, v) for s in sums
    )


def _vertices_split_over(A: FiberMatrix, b: Degree, b1: Degree, b2: Degree) -> bool:
    # necessary for Minkowski equality: every hull vertex over b must be a
    # sum of lattice points of the two sub-fibers
    f1 = _fiber_points(A, b1)
    f2 = set(_fiber_points(A, b2))
    for v in _fiber_vertices(A, b):
        if not any(
            all(x <= y for x, y in zip(u1, v))
            and tuple(y - x for x, y in zip(u1, v)) in f2
            for u1 in f1
        ):
            return False
    return True


def is_atomic(A: FiberMatrix, b) -> bool:
    """No nontrivial pair b1 + b2 = b Minkowski-decomposes the hull over b.

    The zero degree is never atomic: its hull is the single point 0 and
    0 + 0 = 0 decomposes it.  Nontrivial means b1, b2 outside {0, b}.
    """
    b = _check_degree(A, b)
    if not _fiber_points(A, b):
        raise ValueError(f"empty fiber over {b}")
    if not any(b):
        return False
    for b1, b2 in _split_pairs(A, b):
        if _vertices_split_over(A, b, b1, b2) and minkowski_decomposes(A, b, b1, b2):
            return False
    return True


@cache
def _ma_fiber(M: MonomialIdeal, A: FiberMatrix, b: Degree) -> tuple[Exponent, ...]:
    return tuple(u for u in _fiber_points(A, b) if not M.member(u))


def ma_fiber(M: MonomialIdeal, A: FiberMatrix, b) -> list[Exponent]:
    """Fiber points whose monomials avoid M, in lex order."""
    if M.nvars != A.ncols:
        raise ValueError(f"ideal has {M.nvars} variables, matrix has {A.ncols} columns")
    return list(_ma_fiber(M, A, _check_degree(A, b)))


def _ma_splits(M, A, fiber_b, b1, b2):
    """First point of fiber_b with no additive split, or None if all split."""
    f1 = _ma_fiber(M, A, b1)
    f2 = set(_ma_fiber(M, A, b2))
    for point in fiber_b:
        if not any(
            all(x <= y for x, y in zip(u1, point))
            and tuple(y - x for x, y in zip(u1, point)) in f2
            for u1 in f1
        ):
            return point
    return None


def ma_decomposes(M: MonomialIdeal, A: FiberMatrix, b, b1, b2):
    """Does every M-avoiding point over b split additively over b1 and b2?

    Returns (True, None), or (False, witness) with the lex-first point
    admitting no split.
    """
    if M.nvars != A.ncols:
        raise ValueError(f"ideal has {M.nvars} variables, matrix has {A.ncols} columns")
    b, b1, b2 = _check_degree(A, b), _check_degree(A, b1), _check_degree(A, b2)
    if tuple(x + y for x, y in zip(b1, b2)) != b:
        raise ValueError(f"degree mismatch: {b1} + {b2} != {b}")
    for part in (b1, b2):
        if not _fiber_points(A, part):
            raise ValueError(f"{part} is outside the monoid NA")
    witness = _ma_splits(M, A, _ma_fiber(M, A, b), b1, b2)
    return (witness is None), witness


def is_ma_atomic(M: MonomialIdeal, A: FiberMatrix, b) -> bool:
    """No nontrivial pair in NA splits every M-avoiding point over b."""
    if M.nvars != A.ncols:
        raise ValueError(f"ideal has {M.nvars} variables, matrix has {A.ncols} columns")
    b = _check_degree(A, b)
    fiber_b = _ma_fiber(M, A, b)
    if not fiber_b:
        raise ValueError(f"empty (M,A) fiber over {b}")
    if not any(b):
        return False
    for b1, b2 in _split_pairs(A, b):
        if _ma_splits(M, A, fiber_b, b1, b2) is None:
            return False
    return True


def _scan_universe(A: FiberMatrix, bound: int) -> list[Degree]:
    zero = (0,) * A.nrows
    degs = {A.apply(u) for u in exponents_up_to_degree(A.ncols, bound)}
    degs.discard(zero)
    return sorted(degs)


def _atomic_at(args) -> bool:
    mode, M, A, b = args
    if mode == "vertex":
        return is_atomic(A, b)
    return is_ma_atomic(M, A, b)


def atomic_scan(
    A: FiberMatrix,
    bound: int,
    mode: str = "vertex",
    M: MonomialIdeal | None = None,
    workers: int = 1,
) -> list[Degree]:
    """All atomic degrees Au with |u| <= bound, sorted lex.

    mode "vertex" uses Minkowski decomposability of hulls; mode "lattice"
    uses additive splitting of the (M,A) fiber points, with M defaulting
    to the zero ideal.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    if mode not in ("vertex", "lattice"):
        raise ValueError(f"unknown mode {mode!r}")
    if mode == "vertex":
        if M is not None:
            raise ValueError("vertex mode takes no ideal")
    elif M is None:
        M = MonomialIdeal.zero(A.ncols)
    universe = _scan_universe(A, bound)
    jobs = [(mode, M, A, b) for b in universe]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(_atomic_at, jobs, chunksize=8))
    else:
        flags = [_atomic_at(j) for j in jobs]
    return [b for b, ok in zip(universe, flags) if ok]


def atomicity_ideal(A: FiberMatrix, b) -> MonomialIdeal:
    """Monomial ideal generated by the hull vertices of the fiber over b."""
    b = _check_degree(A, b)
    if not _fiber_points(A, b):
        raise ValueError(f"empty fiber over {b}")
    return minimalize(A.ncols, _fiber_vertices(A, b))


def vertex_ideal_standard(A: FiberMatrix, bound: int) -> list[Exponent]:
    """All u with |u| <= bound that are hull vertices of their own fiber."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    return [
        u
        for u in exponents_up_to_degree(A.ncols, bound)
        if u in _fiber_vertices(A, A.apply(u))
    ]


def vertex_ideal_gens_truncated(A: FiberMatrix, bound: int) -> MonomialIdeal:
    """Minimal generators, within |u| <= bound, of the non-vertex monomials."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    non_vertices = [
        u
        for u in exponents_up_to_degree(A.ncols, bound)
        if u not in _fiber_vertices(A, A.apply(u))
    ]
    return minimalize(A.ncols, non_vertices)


def sagbi_generators(A: FiberMatrix, coeffs, bound: int) -> list[tuple[int, Degree]]:
    """(k_b, b) pairs over the vertex-atomic degrees within the bound.

    k_b is the gcd of prod(c_i^{u_i}) over the fiber points u; with the
    atomic degrees these generate every c^u x^{Au} up to an integer factor.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != A.ncols:
        raise ValueError(f"need {A.ncols} coefficients, got {len(coeffs)}")
    if any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    out = []
    for b in atomic_scan(A, bound, mode="vertex"):
        k = 0
        for u in _fiber_points(A, b):
            k = math.gcd(k, abs(math.prod(c**e for c, e in zip(coeffs, u))))
        out.append((k, b))
    return out


def monoid_lift(G: FiberMatrix, ideal_degrees, bound: int) -> MonomialIdeal:
    """Pull a monomial ideal of the monoid algebra back along x_i -> t^(column i).

    G's columns generate a submonoid of N^(nrows); the ideal is generated
    by the monoid elements ideal_degrees.  Returns the minimal a with
    |a| <= bound whose value G.a lands in the ideal, i.e. in some
    ideal_degree plus the monoid.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    degrees = [_check_degree(G, b) for b in ideal_degrees]
    members = []
    for a in exponents_up_to_degree(G.ncols, bound):
        value = G.apply(a)
        for bj in degrees:
            gap = tuple(v - w for v, w in zip(value, bj))
            if all(g >= 0 for g in gap) and _fiber_nonempty(G, gap):
                members.append(a)
                break
    return minimalize(G.ncols, members)
