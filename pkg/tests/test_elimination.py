"""Resultants, Sturm isolation and Smith normal form."""

import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from sextic_lab.exact import (DegenerateInputError, DomainError, MultiPoly, bareiss_det,
                              invariant_factors, rational_roots, resultant, smith_normal_form,
                              sturm_isolate)
from sextic_lab.exact import upoly
from sextic_lab.exact.snf import inverse_unimodular, matmul
from sextic_lab.exact.sturm import count_real_roots
from sextic_lab.verify import _grid_sign_changes

from strategies import polys

x, y = MultiPoly.gens(("x", "y"))
small = st.integers(min_value=-6, max_value=6)


def _sympy(p: MultiPoly):
    sx, sy = sympy.symbols("x y")
    return sum(sympy.Rational(c.numerator, c.denominator) * sx ** e[0] * sy ** e[1]
               for e, c in ((e, Fraction(c)) for e, c in p.terms.items()))


# resultants

def test_resultant_evaluation_property():
    assert resultant(x ** 2 - y, x - 1, "x") == 1 - y


def test_resultant_of_common_factor_vanishes():
    p = x ** 2 - 2
    assert resultant(p, p, "x").is_zero()


def test_resultant_of_two_constants_is_degenerate():
    with pytest.raises(DegenerateInputError):
        resultant(y + 1, y ** 2, "x")


def test_bareiss_on_small_matrix():
    assert bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 2]]) == 6
    assert bareiss_det([[2, 0, 1], [1, 3, 2], [1, 1, 1]]) == 0
    assert bareiss_det([[0, 1], [1, 0]]) == -1


@given(polys(), polys(), polys())
def test_resultant_is_multiplicative(p, q, r):
    if min(p.degree("x"), q.degree("x"), r.degree("x")) < 1:
        return
    assert resultant(p * r, q, "x") == resultant(p, q, "x") * resultant(r, q, "x")


@given(polys(), polys())
def test_resultant_swap_sign(p, q):
    m, n = p.degree("x"), q.degree("x")
    if m < 1 or n < 1:
        return
    assert resultant(q, p, "x") == resultant(p, q, "x") * (-1) ** (m * n)


@given(polys(), st.integers(min_value=-5, max_value=5))
def test_resultant_with_linear_factor_evaluates(p, c):
    m = p.degree("x")
    if m < 1:
        return
    # Res(p, x - c) = (-1)^m p(c, y)
    value = sum(coef * c ** e[0] * y ** e[1] for e, coef in p.terms.items())
    assert resultant(p, x - c, "x") == value * (-1) ** m


@pytest.mark.parametrize("seed", range(6))
def test_resultant_agrees_with_sympy(seed):
    rng = random.Random(seed)

    def rand():
        return MultiPoly(("x", "y"), {(rng.randint(0, 4), rng.randint(0, 3)):
                                      Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                                      for _ in range(5)})
    p, q = rand(), rand()
    if p.degree("x") < 1 or q.degree("x") < 1:
        return
    sx, _ = sympy.symbols("x y")
    expected = sympy.expand(sympy.resultant(_sympy(p), _sympy(q), sx))
    assert sympy.expand(_sympy(resultant(p, q, "x")) - expected) == 0


# Sturm isolation

def test_sqrt_two():
    ivs = sturm_isolate(x.with_variables(("x",)) ** 2 - 2)
    assert len(ivs) == 2
    lo, hi = (iv.refine(Fraction(1, 10 ** 6)) for iv in ivs)
    assert lo.lo < Fraction(-1414213, 10 ** 6) and lo.hi > Fraction(-1414214, 10 ** 6)
    assert hi.lo < Fraction(1414214, 10 ** 6) and hi.hi > Fraction(1414213, 10 ** 6)


def test_no_real_roots():
    assert sturm_isolate([1, 0, 1]) == []


def test_zero_polynomial_is_rejected():
    with pytest.raises(DomainError):
        sturm_isolate([])


def test_multiroot_input_is_made_squarefree():
    # (x-1)^3 (x+2)^2 has two distinct real roots
    p = upoly.mul(upoly.power([-1, 1], 3), upoly.power([2, 1], 2))
    ivs = sturm_isolate(p)
    assert len(ivs) == 2
    assert ivs[0].contains(-2) and ivs[1].contains(1)
    assert rational_roots(p) == [-2, 1]


def test_rational_roots():
    assert rational_roots([0, -1, 2]) == [0, Fraction(1, 2)]
    assert rational_roots([-2, 0, 1]) == []
    assert rational_roots([6, -5, 1]) == [2, 3]


@given(st.lists(small, min_size=2, max_size=7))
def test_intervals_are_disjoint_sorted_and_refinable(coeffs):
    coeffs = upoly.trim(coeffs)
    if upoly.deg(coeffs) < 1:
        return
    ivs = sturm_isolate(coeffs)
    for a, b in zip(ivs, ivs[1:]):
        assert a.hi < b.lo
    for iv in ivs:
        narrow = iv.refine(Fraction(1, 1000))
        assert narrow.width < Fraction(1, 1000)
        assert iv.lo <= narrow.lo <= narrow.hi <= iv.hi


@given(st.lists(small, min_size=2, max_size=7))
def test_sturm_count_matches_grid_oracle(coeffs):
    coeffs = upoly.trim(coeffs)
    if upoly.deg(coeffs) < 1:
        return
    assert count_real_roots(coeffs) == _grid_sign_changes(coeffs)


@given(st.lists(small, min_size=2, max_size=7))
def test_sturm_count_matches_sympy(coeffs):
    coeffs = upoly.trim(coeffs)
    if upoly.deg(coeffs) < 1:
        return
    s = sympy.Symbol("s")
    poly = sympy.Poly(list(reversed(coeffs)), s)
    assert count_real_roots(coeffs) == len(set(sympy.real_roots(poly)))


# Smith normal form

def test_snf_of_group_relation_matrix():
    assert invariant_factors([[0, 2], [3, 2]]) == (1, 6)


def test_snf_small_cases():
    assert invariant_factors([[1, 0], [0, 1]]) == (1, 1)
    assert invariant_factors([[2, 0], [0, 2]]) == (2, 2)
    assert invariant_factors([[0, 0], [0, 0]]) == (0, 0)
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == (2, 6, 12)


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_snf_transforms_and_divisibility(rows, cols, data):
    m = [[data.draw(small) for _ in range(cols)] for _ in range(rows)]
    s = smith_normal_form(m)
    assert matmul(matmul(s.left, m), s.right) == s.diag
    inverse_unimodular(s.left)
    inverse_unimodular(s.right)
    f = s.factors
    for i in range(len(f)):
        for j in range(len(s.diag[0])):
            if i != j:
                assert s.diag[i][j] == 0
    for a, b in zip(f, f[1:]):
        assert (b == 0) if a == 0 else b % a == 0
    if rows == cols:
        det = abs(bareiss_det(m))
        prod = 1
        for d in f:
            prod *= d
        assert prod == det


@given(st.integers(1, 3), st.data())
def test_snf_matches_sympy(n, data):
    from sympy.matrices.normalforms import smith_normal_form as sym_snf
    m = [[data.draw(small) for _ in range(n)] for _ in range(n)]
    d = sym_snf(sympy.Matrix(m), domain=sympy.ZZ)
    assert [abs(int(d[i, i])) for i in range(n)] == list(invariant_factors(m))
