from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sextic_lab import curves, pencil
from sextic_lab.exact import DegenerateInputError, MultiPoly, format_poly

x, y = MultiPoly.gens(("x", "y"))
Y = MultiPoly.var("y", ("y",))


@pytest.fixture(scope="module")
def census():
    return pencil.singular_fiber_census(curves.printed_epi_model())


def test_discriminant_matches_claimed_factorization(census):
    d = census.discriminant
    assert d.total_degree() == 30
    assert pencil.verify_factorization(d, pencil.claimed_factorization(), pencil.NONIC_LEADING)


def test_discriminant_of_computed_model_agrees():
    d = pencil.pencil_discriminant(curves.epi_model())
    assert pencil.verify_factorization(d, pencil.claimed_factorization())


def test_factorization_against_sympy(census):
    sx, sy = sympy.symbols("x y")
    g = sympy.sympify(format_poly(curves.printed_epi_model()).replace("^", "**"))
    _, factors = sympy.factor_list(sympy.resultant(g, sympy.diff(g, sx), sx))
    expected = sorted((sympy.Poly(f, sy).degree(), e) for f, e in factors)
    assert expected == [(1, 7), (1, 14), (9, 1)]
    nonic = next(f for f, e in factors if e == 1)
    assert sympy.Poly(nonic, sy).all_coeffs()[::-1] == list(pencil.NONIC_FACTOR)
    got = sorted((p.total_degree(), e) for p, e in census.factors)
    assert got == expected


def test_wrong_exponent_is_rejected(census):
    claimed = pencil.claimed_factorization()
    claimed[1] = (Y, 13)
    assert not pencil.verify_factorization(census.discriminant, claimed)


def test_wrong_leading_coefficient_is_rejected(census):
    assert not pencil.verify_factorization(census.discriminant, pencil.claimed_factorization(),
                                           pencil.NONIC_LEADING + 1)


def test_real_and_complex_singular_fibers(census):
    assert len(census.real_values) == 5
    assert census.complex_pair_count == 3
    assert census.exact_values == [0, Fraction(1, 2)]
    approx = sorted(iv.approx() for iv in census.real_values)
    for want, got in zip([-0.263, -0.115, 0.0, 0.144, 0.5], approx):
        assert abs(want - got) < 5e-3
    for iv in census.real_values:
        assert iv.is_exact or iv.width <= pencil.DEFAULT_WIDTH


def test_every_real_value_gives_a_singular_fiber(census):
    g = curves.printed_epi_model()
    for v in census.exact_values:
        assert pencil.has_singular_fiber(g, v)
    assert not pencil.has_singular_fiber(g, Fraction(1, 3))


def test_simple_pencils():
    assert pencil.verify_factorization(pencil.pencil_discriminant(x ** 2 - y), [(Y, 1)])
    assert pencil.verify_factorization(pencil.pencil_discriminant((x - y) * (x + y)), [(Y, 2)])


def test_pencil_needs_x():
    with pytest.raises(DegenerateInputError):
        pencil.pencil_discriminant(y ** 2 + 1)


def test_empty_discriminant_fails_verification():
    assert not pencil.verify_factorization(MultiPoly.zero(("y",)), [(Y, 1)])


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=4), st.integers(1, 3))
def test_squarefree_factorization_recombines(roots, e):
    p = MultiPoly.const(1, ("y",))
    for r in roots:
        p = p * (Y - r)
    p = p ** e
    factors = pencil.squarefree_factorization(p)
    assert pencil.verify_factorization(p, factors)
    assert all(k % e == 0 for _, k in factors)


@given(st.lists(st.integers(-5, 5), min_size=1, max_size=4), st.integers(0, 3))
def test_complex_pair_count(roots, pairs):
    p = MultiPoly.const(1, ("y",))
    for r in set(roots):
        p = p * (Y - r)
    for k in range(pairs):
        p = p * (Y * Y + k + 1)
    assert pencil.complex_pairs(p) == pairs


def test_summary_text(census):
    s = pencil.census_summary(census)
    assert s.startswith("5 real singular fibers") and "3 complex pairs" in s
