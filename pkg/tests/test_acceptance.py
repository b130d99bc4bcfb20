"""End-to-end acceptance criteria, one test each.

Every criterion prints a ``PASS``/``FAIL`` line; the lines are also collected
into the pytest terminal summary (see conftest.py). Run this file directly
with ``python3 tests/test_acceptance.py`` for the bare report.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction

import pytest

from sextic_lab import curves, pencil, qforms, verify
from sextic_lab.exact import MultiPoly, proportional, resultant, smith_normal_form, upoly
from sextic_lab.exact.snf import matmul
from sextic_lab.exact.sturm import count_real_roots
from sextic_lab.fpgrp import library
from sextic_lab.fpgrp.cosets import coset_enumerate
from sextic_lab.fpgrp.multable import (EPIMORPHISM, identify_small_group, isomorphism_check,
                                       table_from_cosets, verify_homomorphism)
from sextic_lab.fpgrp.presentation import abelianization
from sextic_lab.singular import classify_Ak, milnor_sum, singularity_census

RESULTS: list[str] = []
Z = curves.Z_VARS


def _table(pres):
    ct = coset_enumerate(pres)
    assert ct.is_complete, f"enumeration overflowed after {ct.defined} cosets"
    return ct, table_from_cosets(ct)


def c01_family_from_ansatz():
    res = curves.ansatz_matches_family()
    assert res["proportional"], "ansatz route is not a multiple of C(t)"
    assert not res["scalar"].is_zero()


def c02_degeneration():
    z0, z1, z2 = MultiPoly.gens(Z)
    assert curves.build_family_equation(1) == (z0 * z1 + z1 * z2 + z2 * z0) ** 3 * 4


def c03_printed_affine_model():
    model, printed = curves.epi_model(), curves.printed_epi_model()
    assert len(printed) == 28
    assert proportional(model, printed)
    scaled = model.scale(Fraction(printed.constant_term()) / model.constant_term())
    for exps, coef in printed.terms.items():
        assert scaled.coefficient(exps) == coef, f"coefficient of x^{exps[0]} y^{exps[1]}"
    assert scaled.coefficient((1, 0)) == Fraction(716, 19683)
    assert scaled.coefficient((0, 1)) == Fraction(17872, 177147)
    assert scaled.coefficient((0, 6)) == Fraction(-255219619, 22674816)


def c04_singularity_census():
    g = curves.printed_epi_model()
    G = curves.homogenize(g, "z")
    for a, b in curves.EPI_MODEL_POINTS:
        assert classify_Ak(G, (a, b, 1)).kind == "A6"
    assert len(singularity_census(G)) == 3
    for t in (0, Fraction(5, 6), 2, -1):
        assert milnor_sum(curves.build_family_equation(t)) == 18, f"t = {t}"
    C = curves.build_family_equation(-3)
    assert milnor_sum(C) == 19
    assert classify_Ak(C, (1, 1, 1)).kind == "A1"


def c05_square_factorization():
    assert curves.verify_square_factorization()


def c06_pencil_discriminant():
    d = pencil.pencil_discriminant(curves.printed_epi_model())
    assert d.total_degree() == 30
    assert pencil.NONIC_FACTOR[-1] == 90617210907008
    assert pencil.verify_factorization(d, pencil.claimed_factorization(), pencil.NONIC_LEADING)


def c07_singular_fibers():
    census = pencil.singular_fiber_census(curves.printed_epi_model())
    assert len(census.real_values) == 5
    assert census.exact_values == [0, Fraction(1, 2)]
    inexact = [iv for iv in census.real_values if not iv.is_exact]
    for want, iv in zip((Fraction(-26, 100), Fraction(-11, 100), Fraction(14, 100)), inexact):
        assert want - Fraction(1, 100) <= iv.lo and iv.hi <= want + Fraction(1, 100), iv
    assert pencil.complex_pairs(pencil.nonic_factor()) == 3
    assert census.complex_pair_count == 3


def c08_group_order():
    ct1, t1 = _table(library.presentation_G())
    ct2, t2 = _table(library.presentation_G2())
    assert ct1.index == 42 and ct2.index == 42
    assert isomorphism_check(t1, t2)


def c09_dihedral_times_cyclic():
    tgt, images = library.d14_x_c3_images()
    assert verify_homomorphism(library.presentation_G(), images, tgt) == EPIMORPHISM
    _, t = _table(library.presentation_G())
    assert t.order == tgt.order
    inv = identify_small_group(t)
    assert inv["center_order"] == 3 and inv["derived_order"] == 7
    assert abelianization(library.presentation_G()) == (6,)


def c10_vankampen():
    vk = library.build_vankampen_presentation()
    ct = coset_enumerate(vk)
    assert ct.is_complete and ct.index == 42, f"van Kampen presentation has order {ct.index}"
    _, tg = _table(library.presentation_G())
    assert isomorphism_check(table_from_cosets(ct), tg)
    assert abelianization(vk) == (6,)


def c11_discriminant_forms():
    S = qforms.sigma_prime()
    assert S.order == 343 and S.polarization_holds()
    g0 = qforms.gamma(0)
    assert S.qv(g0) == 0
    K = qforms.span(S, [g0])
    assert K.order == 7 and qforms.is_isotropic(K, S)
    assert qforms.orthogonal_complement_quotient(K, S).order == 7
    m = qforms.cyclic_shift_matrix()
    spaces = qforms.eigenspace_decomposition(m, S)
    assert sorted(spaces) == [1, 2, 4] and all(V.order == 7 for V in spaces.values())
    assert spaces[2].elements == K.elements
    assert qforms.apply_matrix(m, g0, 7) == S.mul(2, g0)


def c12_epsilon_twist():
    for t in (0, Fraction(5, 6), -3):
        assert curves.check_epsilon_twist(t), f"t = {t}"


def c13_property_suites():
    rng = random.Random(20240607)
    x, y = MultiPoly.gens(("x", "y"))

    def poly():
        return MultiPoly(("x", "y"), {(rng.randint(0, 3), rng.randint(0, 3)):
                                      Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                                      for _ in range(4)})

    for _ in range(15):
        p, q, r = poly(), poly(), poly()
        assert (p * q) * r == p * (q * r) and p * (q + r) == p * q + p * r
        if min(p.degree("x"), q.degree("x"), r.degree("x")) > 0:
            assert resultant(p * r, q, "x") == resultant(p, q, "x") * resultant(r, q, "x")
        coeffs = upoly.trim([rng.randint(-5, 5) for _ in range(rng.randint(2, 7))])
        if upoly.deg(coeffs) > 0:
            assert count_real_roots(coeffs) == verify._grid_sign_changes(coeffs)
        m = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)]
        s = smith_normal_form(m)
        assert matmul(matmul(s.left, m), s.right) == s.diag
    # hand-computed Smith forms
    assert smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]).factors[:3] == (2, 6, 12)
    assert smith_normal_form([[0, 2], [3, 2]]).factors[:2] == (1, 6)
    for pres in (library.presentation_G(), library.presentation_G2(),
                 library.build_vankampen_presentation()):
        ct = coset_enumerate(pres)
        assert ct.is_permutation_table() and ct.relators_hold()
    for form in (qforms.sigma_prime(), qforms.discr_An(1), qforms.discr_An(6),
                 qforms.hyperbolic_form_2(),
                 qforms.orthogonal_complement_quotient([qforms.gamma(0)], qforms.sigma_prime())):
        assert form.polarization_holds()


CRITERIA = [
    (1, "family equation from the ansatz route", c01_family_from_ansatz),
    (2, "degeneration at t = 1", c02_degeneration),
    (3, "printed affine model g", c03_printed_affine_model),
    (4, "singularity census and Milnor sums", c04_singularity_census),
    (5, "square factorization on the reducible ray", c05_square_factorization),
    (6, "pencil discriminant factorization", c06_pencil_discriminant),
    (7, "singular-fiber census", c07_singular_fibers),
    (8, "group order 42 for both presentations", c08_group_order),
    (9, "G is D14 x C3", c09_dihedral_times_cyclic),
    (10, "van Kampen presentation", c10_vankampen),
    (11, "discriminant-form suite", c11_discriminant_forms),
    (12, "epsilon-twist equivalence", c12_epsilon_twist),
    (13, "property suites", c13_property_suites),
]


def _run(number, title, fn) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        fn()
        ok, why = True, ""
    except AssertionError as exc:
        ok, why = False, f" ({exc})" if str(exc) else ""
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title}{why} [{time.perf_counter() - start:.2f}s]"
    RESULTS.append(line)
    print(line)
    return ok, line


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion-{n:02d}" for n, *_ in CRITERIA])
def test_acceptance(number, title, fn):
    ok, line = _run(number, title, fn)
    assert ok, line


if __name__ == "__main__":
    failed = sum(not _run(*c)[0] for c in CRITERIA)
    print(f"{len(CRITERIA) - failed} passed, {failed} failed")
    sys.exit(1 if failed else 0)
