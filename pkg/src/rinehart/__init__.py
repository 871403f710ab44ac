"""Lie-Rinehart cohomology of quasi-homogeneous surface singularities and
monomial curves, with the full connection calculus on graded rank-one
modules, in exact rational arithmetic."""

from .curves import (LambdaModule, Semigroup, analyze_semigroup,
                     brute_force_connection_search, classify_connections,
                     curve_cohomology)
from .derlie import (Derivation, DerivationAlgebra, FactorizationPair,
                     OneCochain, TwoCochain, bracket, build_factorization,
                     build_generators, derivation_algebra)
from .exactmath import ExactMatrix
from .milnor import (NotIsolatedError, milnor_number, tjurina_number,
                     verify_mu_tau_cohomology)
from .modconn import (Connection, PresentedModule, ScalarExtractionError,
                      check_connection, curvature, equivalent,
                      find_connection, integrability_class,
                      truncate_degree_zero)
from .parser import PolynomialSyntaxError, UnknownVariableError, parse_polynomial
from .polyring import Polynomial, QuotientElement, WeightedRing, apply_derivation
from .rincomplex import (CohomologyTable, cohomology_table, d0, d1,
                         default_window, verify_degree_zero_concentration)

__all__ = [
    "CohomologyTable",
    "Connection",
    "Derivation",
    "DerivationAlgebra",
    "ExactMatrix",
    "FactorizationPair",
    "LambdaModule",
    "NotIsolatedError",
    "OneCochain",
    "Polynomial",
    "PolynomialSyntaxError",
    "PresentedModule",
    "QuotientElement",
    "ScalarExtractionError",
    "Semigroup",
    "TwoCochain",
    "UnknownVariableError",
    "WeightedRing",
    "analyze_semigroup",
    "apply_derivation",
    "bracket",
    "brute_force_connection_search",
    "build_factorization",
    "build_generators",
    "check_connection",
    "classify_connections",
    "cohomology_table",
    "curvature",
    "curve_cohomology",
    "d0",
    "d1",
    "default_window",
    "derivation_algebra",
    "equivalent",
    "find_connection",
    "integrability_class",
    "milnor_number",
    "parse_polynomial",
    "tjurina_number",
    "truncate_degree_zero",
    "verify_mu_tau_cohomology",
    "verify_degree_zero_concentration",
]

__version__ = "0.1.0"
