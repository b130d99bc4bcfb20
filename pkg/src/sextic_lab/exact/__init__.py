"""Exact scalars, sparse polynomials, resultants, Sturm isolation, Smith form."""

from fractions import Fraction as Rational

from .eisenstein import OMEGA, Eisenstein
from .poly import (QQ, QQW, DomainError, MultiPoly, NotDivisibleError, normalized,
                   poly_arith, proportional, substitute)
from .resultant import DegenerateInputError, bareiss_det, resultant
from .snf import SmithForm, invariant_factors, smith_normal_form
from .sturm import IsolatingInterval, rational_roots, sturm_isolate
from .textfmt import format_poly, parse_poly, parse_rational

__all__ = [
    "Rational", "Eisenstein", "OMEGA", "QQ", "QQW", "DomainError", "MultiPoly",
    "NotDivisibleError", "normalized", "poly_arith", "proportional", "substitute",
    "DegenerateInputError", "bareiss_det", "resultant", "SmithForm",
    "invariant_factors", "smith_normal_form", "IsolatingInterval", "rational_roots",
    "sturm_isolate", "format_poly", "parse_poly", "parse_rational",
]
