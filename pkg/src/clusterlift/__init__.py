"""Exact computations with cluster algebras of geometric type and their minimal monomial liftings."""

from clusterlift.algebra import (
    LaurentPolynomial,
    RationalFunction,
    lp_arith,
    lp_min_exponent,
    parse_expression,
    poly_gcd,
    rf_substitute,
)
from clusterlift.cases.diagonal import chart_pullback, diagonal_compactification_lift
from clusterlift.cases.fixtures import load_fixture
from clusterlift.cases.toric import FanInput, toric_lift
from clusterlift.dot import export_dot
from clusterlift.grading import (
    DegreeConfiguration,
    DegreeVector,
    NonHomogeneous,
    degree_of,
    is_degree_configuration,
    mutate_degree_configuration,
)
from clusterlift.lifting import (
    INFINITY,
    LiftedSeed,
    LiftingData,
    check_equality_conditions,
    cluster_valuation,
    homogenize,
    lift_seed,
    restrict_iota,
    verify_lifting_consistency,
)
from clusterlift.matrix import ExchangeMatrix, IntMatrix, is_maximal_rank, mutate_matrix
from clusterlift.membership import (
    explore_exchange_graph,
    laurent_membership,
    seed_key,
    upper_bound_membership,
)
from clusterlift.seed import (
    Seed,
    VertexKind,
    apply_sequence,
    exchange_monomials,
    express_in_seed,
    make_seed,
    mutate_seed,
    validate_seed,
)

__all__ = [
    "INFINITY",
    "DegreeConfiguration",
    "DegreeVector",
    "ExchangeMatrix",
    "FanInput",
    "IntMatrix",
    "LaurentPolynomial",
    "LiftedSeed",
    "LiftingData",
    "NonHomogeneous",
    "RationalFunction",
    "Seed",
    "VertexKind",
    "apply_sequence",
    "chart_pullback",
    "check_equality_conditions",
    "cluster_valuation",
    "degree_of",
    "diagonal_compactification_lift",
    "exchange_monomials",
    "explore_exchange_graph",
    "export_dot",
    "express_in_seed",
    "homogenize",
    "is_degree_configuration",
    "is_maximal_rank",
    "laurent_membership",
    "lift_seed",
    "load_fixture",
    "lp_arith",
    "lp_min_exponent",
    "make_seed",
    "mutate_degree_configuration",
    "mutate_matrix",
    "mutate_seed",
    "parse_expression",
    "poly_gcd",
    "restrict_iota",
    "rf_substitute",
    "seed_key",
    "toric_lift",
    "upper_bound_membership",
    "validate_seed",
    "verify_lifting_consistency",
]
