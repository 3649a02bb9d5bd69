"""Exact arithmetic of dynatomic polynomials for the maps z -> z^d + c.

Builds dynatomic polynomials over Q (and with symbolic parameter), factors
them into irreducibles, extracts periodic cycles as elements of quotient
algebras, and decides the cycle-field vs orbit-field degree criterion per
periodic point, with a height-ordered parameter scanner on top.
"""

from .rationals import (
    Rational,
    divisors,
    enumerate_rationals_by_height,
    format_rational,
    is_mersenne_prime_exponent,
    mobius,
    naive_height,
    parse_rational,
)
from .polynomials import BiPoly, Poly, compose, format_bipoly, format_poly, parse_poly
from .factorq import Factorization, factor_over_q, is_irreducible, rational_roots
from .numberfield import (
    AlgElement,
    QuadraticElement,
    QuotientAlgebra,
    alg_mul,
    apply_phi,
    as_quadratic,
    minimal_polynomial,
    subfield_degree,
)
from .maps import (
    MapSpec,
    dynatomic_degree,
    dynatomic_poly,
    dynatomic_poly_generic,
    iterate,
    verify_product_identity,
)
from .cycles import (
    CycleRecord,
    cycles_from_dynatomic,
    orbit_in_algebra,
    quadratic_cycles,
    rational_cycles,
)
from .property_a import (
    PointVerdict,
    PropertyAReport,
    check_aggregate,
    check_point,
    check_quadratic_cycle,
    irreducibility_sufficient,
    trace_test,
)

__version__ = "0.1.0"

__all__ = [
    "AlgElement",
    "BiPoly",
    "CycleRecord",
    "Factorization",
    "MapSpec",
    "PointVerdict",
    "Poly",
    "PropertyAReport",
    "QuadraticElement",
    "QuotientAlgebra",
    "Rational",
    "alg_mul",
    "apply_phi",
    "as_quadratic",
    "check_aggregate",
    "check_point",
    "check_quadratic_cycle",
    "compose",
    "cycles_from_dynatomic",
    "divisors",
    "dynatomic_degree",
    "dynatomic_poly",
    "dynatomic_poly_generic",
    "enumerate_rationals_by_height",
    "factor_over_q",
    "format_bipoly",
    "format_poly",
    "format_rational",
    "irreducibility_sufficient",
    "is_irreducible",
    "is_mersenne_prime_exponent",
    "iterate",
    "minimal_polynomial",
    "mobius",
    "naive_height",
    "orbit_in_algebra",
    "parse_poly",
    "parse_rational",
    "quadratic_cycles",
    "rational_cycles",
    "rational_roots",
    "subfield_degree",
    "trace_test",
    "verify_product_identity",
]
