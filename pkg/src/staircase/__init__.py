"""Exact combinatorics of monomial ideals and integer-matrix fibers.

Everything is integer or rational arithmetic on immutable values: ideal
lattice operations, irreducible and primary decomposition, multigraded
Hilbert functions, chain and antichain analysis of ideal families,
fiber polytopes with both flavours of atomicity, subalgebra generators,
and the complementation between finite order ideals and artinian
monomial ideals.
"""

from .chains import (
    IdealFamily,
    extract_descending_chain,
    find_comparable_pair,
    group_by_associated_primes,
    is_antichain,
    refine_by_standard_trace,
)
from .decomposition import (
    MonomialPrime,
    PrimaryComponent,
    associated_primes,
    irreducible_decomposition,
    primary_decomposition,
)
from .fibers import (
    Fiber,
    FiberMatrix,
    atomic_scan,
    atomicity_ideal,
    fiber,
    fiber_points,
    hull_vertices,
    in_hull,
    is_atomic,
    is_ma_atomic,
    ma_decomposes,
    ma_fiber,
    minkowski_decomposes,
    monoid_lift,
    sagbi_generators,
    vertex_ideal_gens_truncated,
    vertex_ideal_standard,
)
from .hilbert import (
    Grading,
    hilbert_function,
    hilbert_numerator,
    numerator_fine_count,
    reachable_degrees,
    same_hilbert_up_to,
)
from .monomial import (
    Exponent,
    MonomialIdeal,
    divides,
    exponents_up_to_degree,
    lcm_exponent,
    minimalize,
)
from .poset import (
    FiniteOrderIdeal,
    XDualOrderIdeal,
    descending_chain_max,
    elements_with_j_below,
    s_family,
    verify_s_antichain,
    x_doi_contains,
    x_less,
    young_cocomplement,
    young_complement,
)

__version__ = "0.1.0"

__all__ = [
    "Exponent",
    "Fiber",
    "FiberMatrix",
    "FiniteOrderIdeal",
    "Grading",
    "IdealFamily",
    "MonomialIdeal",
    "MonomialPrime",
    "PrimaryComponent",
    "XDualOrderIdeal",
    "associated_primes",
    "atomic_scan",
    "atomicity_ideal",
    "descending_chain_max",
    "divides",
    "elements_with_j_below",
    "exponents_up_to_degree",
    "extract_descending_chain",
    "fiber",
    "fiber_points",
    "find_comparable_pair",
    "group_by_associated_primes",
    "hilbert_function",
    "hilbert_numerator",
    "hull_vertices",
    "in_hull",
    "irreducible_decomposition",
    "is_antichain",
    "is_atomic",
    "is_ma_atomic",
    "lcm_exponent",
    "ma_decomposes",
    "ma_fiber",
    "minimalize",
    "minkowski_decomposes",
    "monoid_lift",
    "numerator_fine_count",
    "primary_decomposition",
    "reachable_degrees",
    "refine_by_standard_trace",
    "s_family",
    "sagbi_generators",
    "same_hilbert_up_to",
    "verify_s_antichain",
    "vertex_ideal_gens_truncated",
    "vertex_ideal_standard",
    "x_doi_contains",
    "x_less",
    "young_cocomplement",
    "young_complement",
]
