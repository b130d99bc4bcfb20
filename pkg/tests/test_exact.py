from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sextic_lab.exact import (OMEGA, QQ, QQW, DomainError, Eisenstein, MultiPoly, format_poly,
                              parse_poly, parse_rational, poly_arith, proportional, substitute)
from sextic_lab.exact.textfmt import format_scalar, parse_scalar

from strategies import eisenstein, polys, rationals

x, y = MultiPoly.gens(("x", "y"))


# scalars

def test_omega_is_a_primitive_cube_root():
    assert OMEGA ** 3 == 1
    assert 1 + OMEGA + OMEGA ** 2 == 0
    assert OMEGA != 1


def test_eisenstein_matches_fraction_when_rational():
    assert Eisenstein(Fraction(3, 4)) == Fraction(3, 4)
    assert hash(Eisenstein(5)) == hash(Fraction(5))
    assert Eisenstein(2, 1).conjugate() == Eisenstein(1, -1)
    assert Eisenstein(2, 1).norm() == 3


@given(eisenstein, eisenstein, eisenstein)
def test_eisenstein_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if a != 0:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@given(eisenstein)
def test_norm_is_product_with_conjugate(a):
    assert a * a.conjugate() == a.norm()


@given(eisenstein)
def test_scalar_text_round_trip(a):
    assert parse_scalar(format_scalar(a)) == a


def test_parse_rational_is_strict():
    assert parse_rational("-7/3") == Fraction(-7, 3)
    assert parse_rational("12") == 12
    for bad in ("1.5", "1/0", "x", "1/-2", ""):
        with pytest.raises(ValueError):
            parse_rational(bad)


# polynomials

def test_difference_of_squares():
    assert poly_arith(x + y, x - y, "mul") == x ** 2 - y ** 2


def test_multiplying_by_zero_gives_zero():
    p = x ** 3 + 2 * y
    assert poly_arith(p, MultiPoly.zero(("x", "y")), "mul").is_zero()


def test_cube_of_conic_has_ten_terms():
    z0, z1, z2 = MultiPoly.gens(("z0", "z1", "z2"))
    p = (z0 * z1 + z1 * z2 + z2 * z0) ** 3 * 4
    assert len(p) == 10
    assert p.coefficient((2, 2, 2)) == 24
    assert p.coefficient((3, 3, 0)) == 4


def test_mismatched_variables_or_domains_are_rejected():
    z = MultiPoly.var("z", ("z",))
    with pytest.raises(DomainError):
        poly_arith(x, z, "add")
    with pytest.raises(DomainError):
        poly_arith(x, x.to_domain(QQW), "add")
    with pytest.raises(ValueError):
        poly_arith(x, x, "div")


def test_no_zero_coefficients_are_stored():
    p = MultiPoly(("x", "y"), {(1, 0): 0, (0, 1): Fraction(1, 2)})
    assert list(p.terms) == [(0, 1)]
    assert (x - x).terms == {}


def test_substitute_translation():
    p = x ** 2 + y ** 2
    assert substitute(p, {"x": x + 1, "y": MultiPoly.zero(("x", "y"))}) == x ** 2 + 2 * x + 1


@given(polys())
def test_substitute_identity(p):
    assert substitute(p, {"x": x, "y": y}) == p


@given(polys(), polys(), polys())
def test_substitute_is_functorial(p, a, b):
    m1 = {"x": a, "y": b}
    m2 = {"x": x + y, "y": x * y - 1}
    composed = {k: substitute(v, m2) for k, v in m1.items()}
    assert substitute(substitute(p, m1), m2) == substitute(p, composed)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
    assert p - p == 0


@given(polys(coeffs=eisenstein, domain=QQW), polys(coeffs=eisenstein, domain=QQW))
def test_ring_axioms_over_eisenstein(p, q):
    assert (p + q) * (p - q) == p * p - q * q


def test_promotion_is_explicit():
    p = x + 1
    with pytest.raises(DomainError):
        p * MultiPoly.const(OMEGA, ("x", "y"), QQW)
    q = p.to_domain(QQW) * MultiPoly.const(OMEGA, ("x", "y"), QQW)
    assert q.domain == QQW
    assert (q * MultiPoly.const(OMEGA ** 2, ("x", "y"), QQW)).to_domain(QQ) == p


@given(polys())
def test_text_round_trip(p):
    assert parse_poly(format_poly(p), ("x", "y")) == p


@given(polys(coeffs=eisenstein, domain=QQW))
def test_text_round_trip_over_eisenstein(p):
    assert parse_poly(format_poly(p), ("x", "y"), QQW) == p


def test_parser_accepts_products_powers_and_division():
    p = parse_poly("(x + 1)^2 / 2 - 3*y**2", ("x", "y"))
    assert p == (x + 1) ** 2 * Fraction(1, 2) - 3 * y ** 2
    assert format_poly(parse_poly("-3/4*x^2*y + 1/2", ("x", "y"))) == "-3/4*x^2*y + 1/2"


def test_proportional_over_symbolic_parameter():
    t, u = MultiPoly.gens(("t", "u"))
    assert proportional(u * (t + 1) * 3, u * 2, over=("t",))
    assert not proportional(u * (t + 1), u * u, over=("t",))
    assert proportional(x * 3 + 6, x + 2)
    assert not proportional(x + 3, x + 2)


def test_derivative_and_evaluate():
    p = x ** 3 * y - 2 * y ** 2
    assert p.derivative("x") == 3 * x ** 2 * y
    assert p.evaluate({"x": 2, "y": Fraction(1, 2)}) == Fraction(7, 2)


@given(st.lists(rationals, min_size=1, max_size=6))
def test_coeff_list_round_trip(coeffs):
    p = MultiPoly.from_coeff_list(coeffs, "x", ("x",))
    trimmed = list(coeffs)
    while trimmed and trimmed[-1] == 0:
        trimmed.pop()
    assert p.to_coeff_list("x") == trimmed
