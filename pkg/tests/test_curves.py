from fractions import Fraction

import pytest
from hypothesis import given

from sextic_lab import curves
from sextic_lab.exact import OMEGA, QQW, DomainError, Eisenstein, MultiPoly, parse_poly, proportional
from sextic_lab.singular import ProjPoint

from strategies import rationals

Z = curves.Z_VARS
z0, z1, z2 = MultiPoly.gens(Z)


def test_degeneration_at_t_equal_one():
    assert curves.build_family_equation(1) == (z0 * z1 + z1 * z2 + z2 * z0) ** 3 * 4


def test_coefficients_at_five_sixths():
    C = curves.build_family_equation(Fraction(5, 6))
    assert C.coefficient((4, 1, 1)) == Fraction(-455, 648)
    assert C.coefficient((1, 4, 1)) == Fraction(-455, 648)


def test_coefficients_at_zero():
    C = curves.build_family_equation(0)
    assert C.coefficient((4, 1, 1)) == 0
    assert C.coefficient((4, 2, 0)) == -1


@given(rationals)
def test_family_is_cyclically_invariant_sextic(t):
    C = curves.build_family_equation(t)
    assert curves.cyclic_shift(C) == C
    assert C.is_homogeneous() and C.total_degree() == 6
    assert len(C) <= 22


def test_symbolic_family_degree_in_t():
    C = curves.family_symbolic()
    assert C.degree("t") <= 7
    specialized = MultiPoly(Z, {}, "QQ")
    for e, c in C.terms.items():
        specialized = specialized + MultiPoly.monomial(e[1:], Z, c * Fraction(2, 7) ** e[0])
    assert specialized == curves.build_family_equation(Fraction(2, 7))


# the ansatz

def test_ansatz_orbits():
    u0, u1, u2 = MultiPoly.gens(curves.U_VARS)
    assert curves.build_ansatz((1, 0, 0, 0)) == u0 ** 4 * u2 ** 2 + u1 ** 4 * u0 ** 2 + u2 ** 4 * u1 ** 2
    assert curves.build_ansatz((0, 0, 0, 1)) == u0 ** 2 * u1 ** 2 * u2 ** 2


@given(rationals, rationals, rationals, rationals)
def test_ansatz_is_cyclically_invariant(a, b, c, d):
    F = curves.build_ansatz((a, b, c, d))
    assert curves.cyclic_shift(F, curves.U_VARS) == F


def test_condition_system_matches_printed_equations():
    computed = curves.singular_condition_system()
    printed = curves.printed_condition_system()
    assert computed == printed
    t = MultiPoly.var("t", ("t",))
    assert computed[0][0] == t ** 4 * 6


@pytest.mark.parametrize("sign, ray", [(1, curves.REDUCIBLE_RAY), (-1, curves.CURVE_RAY)])
def test_rays_span_solution_space(sign, ray):
    res = curves.solve_condition_system(sign)
    assert res["ray"] == ray
    assert res["residuals_vanish"] and res["rank"] == 3 and res["spans"]


def test_square_factorization():
    assert curves.verify_square_factorization()
    assert curves.verify_square_factorization(2)


def test_perturbed_ray_is_not_a_square():
    coeffs = list(curves.ray(curves.REDUCIBLE_RAY))
    coeffs[3] = coeffs[3] + 1
    assert not curves.verify_square_factorization(coeffs=coeffs)


def test_ansatz_route_reproduces_family():
    res = curves.ansatz_matches_family()
    assert res["proportional"]
    t = MultiPoly.var("t", ("t",) + Z)
    assert res["scalar"] == (t ** 3 - 1) ** 3


def test_ansatz_route_at_a_number():
    G = curves.ansatz_route(symbolic=False, t=Fraction(5, 6))
    assert proportional(G, curves.build_family_equation(Fraction(5, 6)))


def test_reducible_branch_is_family_at_zero():
    assert proportional(curves.reducible_branch(), curves.build_family_equation(0))


def test_principal_part_on_second_ray():
    t = MultiPoly.var("t", ("t", "x", "y"))
    x, y = MultiPoly.var("x", ("t", "x", "y")), MultiPoly.var("y", ("t", "x", "y"))
    assert proportional(curves.principal_part_curve_ray(), y * y - t * t * x ** 5 * 4)


# coordinate changes

def test_printed_model_is_the_family_at_five_sixths():
    model = curves.epi_model()
    printed = curves.printed_epi_model()
    assert len(printed) == 28
    assert proportional(model, printed)
    scaled = model.scale(Fraction(printed.constant_term()) / model.constant_term())
    assert scaled.coefficient((1, 0)) == Fraction(716, 19683)
    assert scaled.coefficient((0, 1)) == Fraction(17872, 177147)
    assert scaled.coefficient((0, 6)) == Fraction(-255219619, 22674816)
    assert scaled == printed


def test_printed_model_points_map_to_coordinate_vertices():
    ch = curves.epi_change()
    images = []
    for a, b in curves.EPI_MODEL_POINTS:
        pt = {"X": a, "Y": b, "Z": 1}
        images.append(ProjPoint([img.evaluate(pt) for img in ch.images]))
    assert sorted(p.coords for p in images) == sorted(
        ProjPoint(v).coords for v in [(1, 0, 0), (0, 1, 0), (0, 0, 1)])


def test_identity_change():
    C = curves.build_family_equation(3)
    assert curves.apply_change(C, curves.identity_change(Z)) == C


def test_inverse_change_round_trip():
    ch = curves.epi_change()
    C = curves.build_family_equation(Fraction(-2, 5))
    back = curves.apply_change(curves.apply_change(C, ch), ch.inverse())
    assert back == C


def test_singular_matrix_is_rejected():
    with pytest.raises(ValueError):
        curves.linear_change("bad", Z, Z, [[1, 0, 0], [0, 1, 0], [1, 1, 0]])


def test_change_needs_matching_variables():
    u = MultiPoly.var("u0", curves.U_VARS)
    with pytest.raises(DomainError):
        curves.apply_change(u, curves.epi_change())


def test_triangular_map_is_quadratic_monomial():
    ch = curves.triangular_change()
    assert ch.kind == "monomial"
    assert [img.total_degree() for img in ch.images] == [2, 2, 2]


# the epsilon twist and the extra node

@pytest.mark.parametrize("t", [0, Fraction(5, 6), -3, Fraction(-7, 2)])
def test_epsilon_twist(t):
    assert curves.check_epsilon_twist(t)


def test_twist_direction_matters():
    # pulling C(t) itself back along the twist does not give C(wt)
    t = Eisenstein(Fraction(5, 6))
    base = curves.build_family_equation(t, domain=QQW)
    pulled = curves.apply_change(base, curves.twist_change())
    assert not proportional(pulled, curves.build_family_equation(OMEGA * t, domain=QQW))


def test_extra_node_parameters():
    res = curves.extra_node_parameters()
    assert set(res) == {"1", "w", "-1-w"}
    assert res["1"]["t"] == "-3"
    for entry in res.values():
        assert entry["passes"] and entry["singular"] and entry["other_roots_have_t_cubed_one"]


def test_family_json_round_trip():
    data = curves.family_to_json(Fraction(5, 6))
    assert data["t"] == "5/6"
    assert curves.family_from_json(data) == curves.build_family_equation(Fraction(5, 6))
    exps = [m["exps"] for m in data["monomials"]]
    assert exps == sorted(exps, key=lambda e: (sum(e), e), reverse=True)


def test_parse_family_text():
    p = parse_poly("z0^2*z1 - z2^3", Z)
    assert curves.cyclic_shift(p) == parse_poly("z1^2*z2 - z0^3", Z)
