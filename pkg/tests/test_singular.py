from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sextic_lab import curves
from sextic_lab.exact import OMEGA, QQW, Eisenstein, MultiPoly, parse_poly
from sextic_lab.singular import (InfiniteMultiplicityError, MultipleComponentError,
                                 NonIsolatedSingularityError, NotOnCurveError,
                                 PartialResultError, ProjPoint,
                                 SingularityReport, Unresolved, classify_Ak, field_roots,
                                 find_singular_points, local_intersection_multiplicity,
                                 milnor_sum, singularity_census)

Z = curves.Z_VARS
z0, z1, z2 = MultiPoly.gens(Z)
x, y = MultiPoly.gens(("x", "y"))
VERTICES = [ProjPoint(v) for v in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]]


def _kinds(census):
    return {str(r.point): r.kind for r in census}


@pytest.mark.parametrize("t", [0, Fraction(5, 6), 2, -1])
def test_three_a6_points(t):
    census = singularity_census(curves.build_family_equation(t))
    assert _kinds(census) == {"(0:0:1)": "A6", "(0:1:0)": "A6", "(1:0:0)": "A6"}
    assert sum(r.milnor for r in census) == 18


def test_extra_node_at_minus_three():
    census = singularity_census(curves.build_family_equation(-3))
    kinds = _kinds(census)
    assert kinds.pop("(1:1:1)") == "A1"
    assert set(kinds.values()) == {"A6"} and len(kinds) == 3
    assert milnor_sum(curves.build_family_equation(-3)) == 19


def test_extra_node_over_eisenstein_field():
    t = Eisenstein(3, 3)
    census = singularity_census(curves.build_family_equation(t, domain=QQW))
    nodes = [r for r in census if r.kind == "A1"]
    assert len(nodes) == 1
    assert nodes[0].point == ProjPoint((OMEGA, OMEGA ** 2, 1))
    assert not any(isinstance(r, Unresolved) for r in census)


def test_printed_model_has_three_a6_points():
    g = curves.printed_epi_model()
    f = curves.homogenize(g, "z")
    census = singularity_census(f)
    assert {str(r.point) for r in census} == {"(-1:0:1)", "(-1/2:1/2:1)", "(2:0:1)"}
    assert {r.kind for r in census} == {"A6"}


def test_second_ray_has_a4():
    F = curves.build_ansatz(curves.ray(curves.CURVE_RAY, 2))
    F = F.rename(dict(zip(curves.U_VARS, Z))).with_variables(Z)
    assert classify_Ak(F, (1, 0, 0)).kind == "A4"


def test_square_on_the_reducible_ray_is_not_isolated():
    F = curves.build_ansatz(curves.ray(curves.REDUCIBLE_RAY, 2))
    F = F.rename(dict(zip(curves.U_VARS, Z))).with_variables(Z)
    with pytest.raises(NonIsolatedSingularityError):
        classify_Ak(F, (1, 0, 0))


@pytest.mark.parametrize("k", range(1, 9))
def test_ak_normal_forms(k):
    f = z1 ** 2 * z2 ** (k - 1) - z0 ** (k + 1)
    rep = classify_Ak(f, (0, 0, 1))
    assert rep.kind == f"A{k}" and rep.milnor == k
    assert rep.hessian_corank == (0 if k == 1 else 1)


def test_ordinary_triple_point_is_not_ak():
    g = (z0 ** 3 - z1 ** 3) * z2 + z0 ** 4
    rep = classify_Ak(g, (0, 0, 1))
    assert rep.kind == "NonA" and rep.milnor == 4 and rep.hessian_corank == 2


def test_smooth_point():
    rep = classify_Ak(z0 * z2 - z1 ** 2, (0, 0, 1))
    assert rep.kind == "Smooth" and rep.milnor == 0


def test_smooth_curves_have_no_singular_points():
    assert find_singular_points(z0 * z2 - z1 ** 2) == []
    assert milnor_sum(z0 ** 3 + z1 ** 3 + z2 ** 3) == 0


@given(st.integers(-4, 4), st.integers(1, 6))
@settings(max_examples=15)
def test_classification_is_shear_invariant(c, k):
    # y^2 = x^(k+1) after the change y -> y + c*x still has an A_k at the origin
    yy = z1 + z0 * c
    f = yy ** 2 * z2 ** (k - 1) - z0 ** (k + 1)
    assert classify_Ak(f, (0, 0, 1)).kind == f"A{k}"


def test_report_invariant_is_enforced():
    pt = ProjPoint((0, 0, 1))
    with pytest.raises(ValueError):
        SingularityReport(pt, "A3", 2, 1, k=3)
    with pytest.raises(ValueError):
        SingularityReport(pt, "A1", 1, 1, k=1)


# errors

def test_repeated_component_is_rejected():
    with pytest.raises(MultipleComponentError):
        find_singular_points((z0 * z2 - z1 ** 2) ** 2)
    with pytest.raises(MultipleComponentError):
        find_singular_points(z0 ** 2 * z1)


def test_point_not_on_curve():
    with pytest.raises(NotOnCurveError):
        classify_Ak(z0 * z2 - z1 ** 2, (1, 1, 2))


def test_common_component_has_infinite_multiplicity():
    with pytest.raises(InfiniteMultiplicityError):
        local_intersection_multiplicity(x * y, x * (x + 1), (0, 0))


def test_irrational_nodes_give_partial_result():
    # two conics meeting at (+-sqrt 2 : 0 : 1)
    f = z1 ** 2 * z2 ** 2 - (z0 ** 2 - 2 * z2 ** 2) ** 2
    census = singularity_census(f)
    assert any(isinstance(r, Unresolved) for r in census)
    with pytest.raises(PartialResultError) as info:
        milnor_sum(f)
    assert info.value.lower_bound >= 0


# intersection multiplicities

def test_tangent_line_and_cusp():
    assert local_intersection_multiplicity(y, y - x ** 2, (0, 0)) == 2
    assert local_intersection_multiplicity(y ** 2 - x ** 3, y, (0, 0)) == 3
    assert local_intersection_multiplicity(y, x - 1, (0, 0)) == 0


@pytest.mark.parametrize("chart, expected", [(0, (4, 2)), (1, (2, 4)), (2, (4, 2))])
def test_family_meets_coordinate_lines(chart, expected):
    from sextic_lab.singular import dehomogenize_chart
    g = dehomogenize_chart(curves.build_family_equation(0), chart)
    assert local_intersection_multiplicity(g, x, (0, 0)) == expected[0]
    assert local_intersection_multiplicity(g, y, (0, 0)) == expected[1]


def test_multiplicity_at_eisenstein_point():
    f = parse_poly("x^2 + x + 1 - y", ("x", "y"))
    p = (OMEGA, Eisenstein(0))
    assert local_intersection_multiplicity(f, y, p) == 1


small_curves = st.sampled_from([y - x ** 2, y ** 2 - x ** 3, x * y - x ** 3, y - x ** 3 + x * y,
                                x ** 2 + y ** 2 + y ** 3, y ** 2 - x ** 4 - x ** 5])


@given(small_curves, small_curves)
def test_intersection_is_symmetric(f, h):
    try:
        a = local_intersection_multiplicity(f, h, (0, 0))
    except InfiniteMultiplicityError:
        return
    assert a == local_intersection_multiplicity(h, f, (0, 0))


def _mult(p):
    return min(sum(e) for e in p.terms)


@given(small_curves, small_curves)
def test_intersection_bounded_below_by_multiplicities(f, h):
    try:
        i = local_intersection_multiplicity(f, h, (0, 0))
    except InfiniteMultiplicityError:
        return
    assert i >= _mult(f) * _mult(h)


def test_field_roots():
    roots, left = field_roots([-1, 0, 0, 1])  # x^3 - 1
    assert set(roots) == {1, OMEGA, OMEGA ** 2} and left == 0
    roots, left = field_roots([-2, 0, 1])
    assert roots == [] and left == 2
