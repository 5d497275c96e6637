"""Exact computations in the Ringel-Hall algebra of a cyclic quiver."""

__version__ = "0.1.0"

from .coeff import LaurentPoly, QPoly, bar, gauss_q, gauss_sq, gauss_sym, pi_decompose, q, v
from .core import CyclicMatrix, dim_vector, parse_matrix, semisimple
from .hallmult import HallVector, mult_semisimple_q, mult_semisimple_twisted
from .words import Word, distinguished_word, parse_word, wp
from .hallpoly import hall_polynomial
from .canonical import CanonicalElement, canonical_element, canonical_element_ic, monomial_expand

__all__ = [
    "CanonicalElement", "CyclicMatrix", "HallVector", "LaurentPoly", "QPoly", "Word",
    "bar", "canonical_element", "canonical_element_ic", "dim_vector", "distinguished_word",
    "gauss_q", "gauss_sq", "gauss_sym", "hall_polynomial", "monomial_expand",
    "mult_semisimple_q", "mult_semisimple_twisted", "parse_matrix", "parse_word",
    "pi_decompose", "q", "semisimple", "v", "wp",
]
