from .groebner import (GroebnerBasis, HilbertFunction, IdealBasis, colon_ideal, exact_divide,
                       groebner_basis, hilbert_function, ideal_equal, minimalize, normal_form,
                       standard_monomial_count)
from .io import IdealFile, format_ideal_file, parse_ideal_text, read_ideal_file
from .linalg import QuotientOracle, ideal_part_dims, monomials_of_degree
from .parser import ParseError, parse_polynomial, parse_ring_header
from .ring import ORDERS, BinaryPoly, GradedRing, format_monomial, order_key

__all__ = [
    "BinaryPoly", "GradedRing", "GroebnerBasis", "HilbertFunction", "IdealBasis", "IdealFile",
    "ORDERS", "ParseError", "QuotientOracle", "colon_ideal", "exact_divide", "format_ideal_file",
    "format_monomial", "groebner_basis", "hilbert_function", "ideal_equal", "ideal_part_dims",
    "minimalize", "monomials_of_degree", "normal_form", "order_key", "parse_ideal_text",
    "parse_polynomial", "parse_ring_header", "read_ideal_file", "standard_monomial_count",
]
