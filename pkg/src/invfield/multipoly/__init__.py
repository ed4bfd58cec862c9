"""Sparse multivariate polynomials, rational functions and Groebner bases."""
from .gcd import poly_gcd, poly_gcd_many
from .groebner import (
    INFINITE,
    GroebnerBasis,
    buchberger,
    divide,
    ideal_contains,
    is_groebner,
    normal_form,
    spoly,
    standard_monomials,
)
from .literal import PolynomialParseError, format_polynomial, parse_polynomial, parse_rational_function
from .orders import GREVLEX, GRLEX, LEX, TermOrder, as_order
from .poly import NEG_INF, CyclotomicField, NotDivisibleError, PolyRing, Polynomial, RingMismatchError
from .ratfunc import RationalFunction, RationalFunctionField
from .xpoly import as_ratfunc, lift_to_X, xi, xpoly_ring

__all__ = [
    "CyclotomicField",
    "GREVLEX",
    "GRLEX",
    "GroebnerBasis",
    "INFINITE",
    "LEX",
    "NEG_INF",
    "NotDivisibleError",
    "PolyRing",
    "Polynomial",
    "PolynomialParseError",
    "RationalFunction",
    "RationalFunctionField",
    "RingMismatchError",
    "TermOrder",
    "as_order",
    "buchberger",
    "divide",
    "is_groebner",
    "spoly",
    "format_polynomial",
    "ideal_contains",
    "normal_form",
    "parse_polynomial",
    "parse_rational_function",
    "poly_gcd",
    "poly_gcd_many",
    "standard_monomials",
    "as_ratfunc",
    "lift_to_X",
    "xi",
    "xpoly_ring",
]
