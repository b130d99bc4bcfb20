"""Discriminant of the horizontal pencil y = const and its singular fibers."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import upoly
from .exact.poly import QQ, DomainError, MultiPoly
from .exact.resultant import DegenerateInputError, resultant
from .exact.sturm import IsolatingInterval, rational_roots, sturm_isolate
from .exact.textfmt import format_poly, format_scalar

Y = ("y",)

# the degree-9 factor of the pencil discriminant of the epi model, low -> high
NONIC_FACTOR = (
    -6298560000, -7789219200, 512733413664, -176669916264, -8143800845364,
    8841431367018, 38781803208839, -52338630572904, -60741238168704, 90617210907008,
)
NONIC_LEADING = 90617210907008
DEFAULT_WIDTH = Fraction(1, 128)


def nonic_factor() -> MultiPoly:
    return MultiPoly.from_coeff_list(list(NONIC_FACTOR), "y", Y)


def claimed_factorization() -> list[tuple[MultiPoly, int]]:
    """(degree-9 factor) * y^14 * (2y - 1)^7."""
    y = MultiPoly.var("y", Y)
    return [(nonic_factor(), 1), (y, 14), (y * 2 - 1, 7)]


def _univariate(p: MultiPoly, var: str = "y") -> MultiPoly:
    used = p.used_variables()
    if any(v != var for v in used):
        raise DomainError(f"expected a polynomial in {var} only")
    return p.with_variables((var,))


def pencil_discriminant(f: MultiPoly) -> MultiPoly:
    """Primitive integer form of Res_x(f, df/dx), as a polynomial in y."""
    if f.domain != QQ:
        raise DomainError("the pencil discriminant is computed over Q")
    if f.degree("x") <= 0:
        raise DegenerateInputError("f must involve x")
    res = resultant(f, f.derivative("x"), "x")
    if not res:
        raise DegenerateInputError("f has a repeated factor depending on x")
    return _univariate(res.primitive()[1])


def _content_free(p: MultiPoly) -> MultiPoly:
    return p.primitive()[1] if p else p


def verify_factorization(d: MultiPoly, claimed: Sequence[tuple[MultiPoly, int]],
                         leading: int | None = None) -> bool:
    """True when prod(claimed) equals ``d`` up to a nonzero rational scalar.

    Comparison cross-multiplies leading coefficients. With ``leading`` the
    first claimed factor must also have exactly that leading coefficient.
    """
    if not d:
        return False
    d = _univariate(d)
    prod = MultiPoly.const(1, Y)
    for poly, e in claimed:
        if e < 0:
            return False
        prod = prod * _univariate(poly) ** e
    if prod.total_degree() != d.total_degree():
        return False
    lp, ld = prod.leading_coefficient(), d.leading_coefficient()
    if prod.scale(ld) != d.scale(lp):
        return False
    if leading is not None:
        first = _univariate(claimed[0][0]).to_coeff_list("y")
        if not first or first[-1] != leading:
            return False
    return True


@dataclass(frozen=True)
class PencilCensus:
    discriminant: MultiPoly
    factors: tuple[tuple[MultiPoly, int], ...]
    real_values: tuple[IsolatingInterval, ...]
    complex_pair_count: int

    @property
    def exact_values(self) -> list[Fraction]:
        return [iv.lo for iv in self.real_values if iv.is_exact]

    def to_json(self) -> dict:
        return {
            "discriminant_degree": self.discriminant.total_degree(),
            "factors": [{"poly": format_poly(p), "exponent": e} for p, e in self.factors],
            "real_values": [
                {"interval": iv.to_json(), "exact": iv.is_exact, "approx": round(iv.approx(), 6)}
                for iv in self.real_values
            ],
            "complex_pair_count": self.complex_pair_count,
        }


def squarefree_factorization(p: MultiPoly) -> list[tuple[MultiPoly, int]]:
    """Yun's algorithm; factors are primitive integer polynomials."""
    a = [Fraction(c) for c in _univariate(p).to_coeff_list("y")]
    out = []
    b = upoly.gcd_monic(a, upoly.deriv(a))
    c = upoly.divmod_(a, b)[0]
    d = upoly.sub(upoly.divmod_(upoly.deriv(a), b)[0], upoly.deriv(c))
    i = 1
    while upoly.deg(c) > 0:
        w = upoly.gcd_monic(c, d)
        if upoly.deg(w) > 0:
            out.append((MultiPoly.from_coeff_list(upoly.primitive_int(w), "y", Y), i))
        c = upoly.divmod_(c, w)[0]
        d = upoly.sub(upoly.divmod_(d, w)[0], upoly.deriv(c))
        i += 1
    return out


def _split_linear(factors):
    """Pull rational linear factors out of each squarefree factor."""
    out = []
    for poly, e in factors:
        coeffs = [Fraction(c) for c in poly.to_coeff_list("y")]
        for r in rational_roots(coeffs):
            lin = [-r.numerator, r.denominator]
            out.append((MultiPoly.from_coeff_list(lin, "y", Y), e))
            coeffs = upoly.divmod_(coeffs, [-r, 1])[0]
        if upoly.deg(coeffs) > 0:
            out.append((MultiPoly.from_coeff_list(upoly.primitive_int(coeffs), "y", Y), e))
    return sorted(out, key=lambda fe: (fe[0].total_degree(), fe[1]))


def singular_fiber_census(f: MultiPoly, width=DEFAULT_WIDTH) -> PencilCensus:
    d = pencil_discriminant(f)
    factors = _split_linear(squarefree_factorization(d))
    coeffs = d.to_coeff_list("y")
    exact = set(rational_roots(coeffs))
    values = []
    for iv in sturm_isolate(coeffs):
        if not iv.is_exact:
            hit = next((r for r in exact if iv.contains(r)), None)
            iv = IsolatingInterval(hit, hit, iv.poly) if hit is not None else iv.refine(width)
        values.append(iv)
    sq_degree = upoly.deg(upoly.squarefree_part([Fraction(c) for c in coeffs]))
    pairs, odd = divmod(sq_degree - len(values), 2)
    if odd:
        raise AssertionError("non-real roots of a real polynomial come in pairs")
    return PencilCensus(d, tuple(factors), tuple(values), pairs)


def complex_pairs(p: MultiPoly) -> int:
    coeffs = _univariate(p).to_coeff_list("y")
    sq = upoly.deg(upoly.squarefree_part([Fraction(c) for c in coeffs]))
    return (sq - len(sturm_isolate(coeffs))) // 2


def has_singular_fiber(f: MultiPoly, eta) -> bool:
    """Direct test: f(., eta) has a repeated root or drops degree in x."""
    fx = f.derivative("x")
    a = _fiber(f, eta)
    if upoly.deg(a) < f.degree("x"):
        return True
    return upoly.deg(upoly.gcd_monic(a, _fiber(fx, eta))) > 0


def _fiber(f: MultiPoly, eta) -> list:
    i, j = f.index("x"), f.index("y")
    out = [Fraction(0)] * (f.degree("x") + 1)
    for e, c in f.terms.items():
        out[e[i]] += c * Fraction(eta) ** e[j]
    return upoly.trim(out)


def census_summary(c: PencilCensus) -> str:
    vals = ", ".join(format_scalar(iv.lo) if iv.is_exact else f"~{iv.approx():.3f}" for iv in c.real_values)
    return f"{len(c.real_values)} real singular fibers ({vals}); {c.complex_pair_count} complex pairs"
