"""Exact arithmetic facade: rationals and univariate polynomials.

Rat is the stdlib Fraction (arbitrary-precision, always normalized);
the polynomial algebra lives in the polynomials module and is
re-exported here.
"""

from fractions import Fraction as Rat

from .polynomials import Poly, SqfProfile, poly_gcd, squarefree_decompose

__all__ = ["Rat", "Poly", "SqfProfile", "poly_gcd", "squarefree_decompose"]
