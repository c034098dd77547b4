"""Seeded random instance generators shared across test modules."""

from __future__ import annotations

import random

from staircase import FiberMatrix, MonomialIdeal, minimalize


def make_rng(salt: str) -> random.Random:
    return random.Random(f"staircase:{salt}")


def random_exponent(rng: random.Random, nvars: int, maxdeg: int) -> tuple[int, ...]:
    return tuple(rng.randint(0, maxdeg) for _ in range(nvars))


def random_ideal(
    rng: random.Random, nvars: int, maxdeg: int, max_gens: int, proper: bool = True
) -> MonomialIdeal:
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        g = random_exponent(rng, nvars, maxdeg)
        if proper and not any(g):
            g = (1,) + g[1:]
        gens.append(g)
    return minimalize(nvars, gens)


def random_artinian_ideal(
    rng: random.Random, nvars: int, maxdeg: int, extra_gens: int
) -> MonomialIdeal:
    gens = []
    for i in range(nvars):
        e = [0] * nvars
        e[i] = rng.randint(1, maxdeg)
        gens.append(tuple(e))
    for _ in range(extra_gens):
        gens.append(random_exponent(rng, nvars, maxdeg))
    I = minimalize(nvars, gens)
    if I.is_unit():
        return random_artinian_ideal(rng, nvars, maxdeg, extra_gens)
    return I


def random_matrix(rng: random.Random, d: int, n: int, maxentry: int) -> FiberMatrix:
    rows = [[rng.randint(0, maxentry) for _ in range(n)] for _ in range(d)]
    for i in range(n):
        if all(row[i] == 0 for row in rows):
            rows[rng.randrange(d)][i] = rng.randint(1, maxentry)
    return FiberMatrix(tuple(tuple(row) for row in rows))
