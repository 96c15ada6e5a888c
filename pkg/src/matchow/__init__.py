"""Exact matroid characteristic polynomial coefficients, four independent ways.

The reduced characteristic polynomial of a loopless matroid is
mu^0 q^r - mu^1 q^(r-1) + ... + (-1)^r mu^r.  Each unsigned coefficient
can be read off as an intersection number on the braid fan, and this
package computes it by four separate routes that share no geometry code:

  deg_lex       lexicographic expansion of flag monomials in the Chow ring
  deg_pp        chamber sums of piecewise polynomials over exact points
  deg_stable    stable intersection with displaced skeleton fans
  deg_tropical  iterated tropical divisors of piecewise-linear functions

plus two combinatorial oracles on the matroid itself: the signed subset
sum / Moebius polynomial (``Matroid.mu``) and counting maximal chains of
flats by descent set (``Matroid.chains_with_descent_set``).
"""

from .chowlex import deg_lex, lex_expand_alpha, lex_expand_beta, surviving_flags
from .errors import (
    DegeneratePoint,
    DegenerateSystem,
    EmptyBases,
    ExchangeViolation,
    KOutOfRange,
    LoopContract,
    LoopPresent,
    MatchowError,
    NotFullRank,
    RangeError,
    Unbalanced,
)
from .exact import (
    MultiPoly,
    integer_kernel,
    lattice_index,
    poly_eval,
    smith_invariant_factors,
)
from .fan import (
    FlagCone,
    SkeletonCone,
    WeightedFan,
    alpha_fan,
    balancing_certificate,
    beta_fan,
    braid_cone_of,
    cone_contains,
    e_image,
    flag_key,
    full_coordinates,
    is_balanced,
    matroid_fan,
    require_balanced,
)
from .matroid import (
    BUILTIN_MATROIDS,
    FlatLattice,
    Matroid,
    builtin,
    complete_graph_k4,
    descent_set,
    jordan_holder_word,
    poly_q_str,
    triangle_with_pendant,
)
from .piecewise import (
    FacetPolynomial,
    brion_degree,
    chamber_denominator,
    chambers,
    deg_pp,
    generic_point,
    greedy_basis,
    pp_constant,
    pp_power,
    pp_product,
    rep_alpha,
    rep_beta,
    rep_bergman,
)
from .stable import (
    IntersectionPoint,
    deg_stable,
    displacement_vectors,
    intersect_triple,
    stable_intersection_points,
)
from .tropical import (
    PLFunction,
    deg_tropical,
    divisor,
    pl_alpha,
    pl_beta,
    pl_linear,
    truncation_weight,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_MATROIDS",
    "DegeneratePoint",
    "DegenerateSystem",
    "EmptyBases",
    "ExchangeViolation",
    "FacetPolynomial",
    "FlagCone",
    "FlatLattice",
    "IntersectionPoint",
    "KOutOfRange",
    "LoopContract",
    "LoopPresent",
    "MatchowError",
    "Matroid",
    "MultiPoly",
    "NotFullRank",
    "PLFunction",
    "RangeError",
    "SkeletonCone",
    "Unbalanced",
    "WeightedFan",
    "alpha_fan",
    "balancing_certificate",
    "beta_fan",
    "braid_cone_of",
    "brion_degree",
    "builtin",
    "chamber_denominator",
    "chambers",
    "complete_graph_k4",
    "cone_contains",
    "deg_lex",
    "deg_pp",
    "deg_stable",
    "deg_tropical",
    "descent_set",
    "displacement_vectors",
    "divisor",
    "e_image",
    "flag_key",
    "full_coordinates",
    "generic_point",
    "greedy_basis",
    "integer_kernel",
    "intersect_triple",
    "is_balanced",
    "jordan_holder_word",
    "lattice_index",
    "lex_expand_alpha",
    "lex_expand_beta",
    "matroid_fan",
    "pl_alpha",
    "pl_beta",
    "pl_linear",
    "poly_eval",
    "poly_q_str",
    "pp_constant",
    "pp_power",
    "pp_product",
    "rep_alpha",
    "rep_beta",
    "rep_bergman",
    "require_balanced",
    "smith_invariant_factors",
    "stable_intersection_points",
    "surviving_flags",
    "triangle_with_pendant",
    "truncation_weight",
]
