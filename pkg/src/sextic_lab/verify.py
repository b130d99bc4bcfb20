"""Named end-to-end checks shared by the test suite and the command line.

Each check returns a :class:`VerificationReport`; ``run_checks`` runs them
in declaration order.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import curves, pencil, qforms, singular
from .exact import upoly
from .exact.poly import MultiPoly, proportional
from .exact.resultant import resultant
from .exact.snf import matmul, smith_normal_form
from .exact.sturm import sturm_isolate
from .exact.textfmt import format_scalar
from .fpgrp import library
from .fpgrp.cosets import coset_enumerate
from .fpgrp.multable import (EPIMORPHISM, d14_x_c3, identify_small_group, isomorphism_check,
                             table_from_cosets, verify_homomorphism)
from .fpgrp.presentation import abelianization

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"

MILNOR_18 = (0, Fraction(5, 6), 2, -1)
TWIST_PARAMETERS = (0, Fraction(5, 6), -3)
APPROX_VALUES = (Fraction(-26, 100), Fraction(-11, 100), Fraction(14, 100))
TOLERANCE = Fraction(1, 100)


@dataclass
class VerificationReport:
    name: str
    group: str
    status: str
    expected: object
    actual: object
    comparison: str = "exact"
    seconds: float = 0.0
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        return {"name": self.name, "group": self.group, "status": self.status,
                "expected": self.expected, "actual": self.actual,
                "comparison": self.comparison, "seconds": round(self.seconds, 3),
                "detail": self.detail}


@dataclass
class Check:
    name: str
    group: str
    comparison: str
    fn: Callable[..., tuple[object, object]]
    options: dict = field(default_factory=dict)

    def run(self, **overrides) -> VerificationReport:
        opts = {**self.options, **{k: v for k, v in overrides.items() if k in self.options}}
        start = time.perf_counter()
        try:
            expected, actual = self.fn(**opts)
            status = PASS if expected == actual else FAIL
            detail = ""
        except Exception as exc:  # reported, not raised: the suite keeps going
            expected, actual, status = None, None, FAIL
            detail = f"{type(exc).__name__}: {exc}"
        return VerificationReport(self.name, self.group, status, expected, actual,
                                  self.comparison, time.perf_counter() - start, detail)


# family and coordinate models

def check_ansatz_route(orbits=curves.FAMILY_ORBITS):
    res = curves.ansatz_matches_family(orbits)
    return {"proportional": True}, {"proportional": res["proportional"]}


def check_degeneration(orbits=curves.FAMILY_ORBITS):
    z0, z1, z2 = MultiPoly.gens(curves.Z_VARS)
    expected = (z0 * z1 + z1 * z2 + z2 * z0) ** 3 * 4
    return True, curves.build_family_equation(1, orbits) == expected


def match_printed_model(model: MultiPoly) -> dict:
    """Scale ``model`` so its constant term agrees with the printed affine
    model, then compare every coefficient."""
    printed = curves.printed_epi_model()
    model = model.with_variables(printed.variables)
    c0 = model.constant_term()
    if not c0:
        return {"matched": 0, "total": len(printed.terms), "mismatches": ["constant term vanishes"]}
    scaled = model.scale(Fraction(printed.constant_term()) / c0)
    keys = set(printed.terms) | set(scaled.terms)
    bad = sorted(k for k in keys if printed.coefficient(k) != scaled.coefficient(k))
    return {"matched": len(keys) - len(bad), "total": len(keys),
            "mismatches": [list(k) for k in bad]}


def check_g_model(orbits=curves.FAMILY_ORBITS):
    C = curves.build_family_equation(curves.EPI_PARAMETER, orbits)
    model = curves.epi_model(family=C)
    res = match_printed_model(model)
    total = len(curves.printed_epi_model().terms)
    expected = {"proportional": True, "matched": total, "mismatches": []}
    actual = {"proportional": proportional(model, curves.printed_epi_model()),
              "matched": res["matched"], "mismatches": res["mismatches"]}
    return expected, actual


def check_square_factorization():
    return {"symbolic": True, "t=2": True}, {
        "symbolic": curves.verify_square_factorization(),
        "t=2": curves.verify_square_factorization(2),
    }


def check_epsilon_twist():
    return ({format_scalar(t): True for t in TWIST_PARAMETERS},
            {format_scalar(t): curves.check_epsilon_twist(t) for t in TWIST_PARAMETERS})


# singularities

def check_g_singularities():
    g = curves.printed_epi_model()
    G = curves.homogenize(g.rename({"x": "z0", "y": "z1"}), "z2")
    expected = {f"({format_scalar(a)},{format_scalar(b)})": "A6" for a, b in curves.EPI_MODEL_POINTS}
    actual = {}
    for a, b in curves.EPI_MODEL_POINTS:
        rep = singular.classify_Ak(G, singular.ProjPoint((a, b, 1)))
        actual[f"({format_scalar(a)},{format_scalar(b)})"] = rep.kind
    found = sorted(str(p) for p in singular.find_singular_points(G))
    expected["singular_points"] = sorted(str(singular.ProjPoint((a, b, 1))) for a, b in curves.EPI_MODEL_POINTS)
    actual["singular_points"] = found
    return expected, actual


def check_milnor_sums():
    expected = {format_scalar(t): 18 for t in MILNOR_18}
    expected["-3"] = 19
    expected["-3 at (1:1:1)"] = "A1"
    actual = {format_scalar(t): singular.milnor_sum(curves.build_family_equation(t)) for t in MILNOR_18}
    C = curves.build_family_equation(-3)
    actual["-3"] = singular.milnor_sum(C)
    actual["-3 at (1:1:1)"] = singular.classify_Ak(C, singular.ProjPoint((1, 1, 1))).kind
    return expected, actual


# pencil

def check_pencil_discriminant():
    d = pencil.pencil_discriminant(curves.printed_epi_model())
    ok = pencil.verify_factorization(d, pencil.claimed_factorization(), pencil.NONIC_LEADING)
    return {"degree": 30, "factorization": True}, {"degree": d.total_degree(), "factorization": ok}


def check_fiber_census():
    c = pencil.singular_fiber_census(curves.printed_epi_model())
    exact = [format_scalar(v) for v in c.exact_values]
    approx = [iv for iv in c.real_values if not iv.is_exact]
    near = []
    for target in APPROX_VALUES:
        near.append(any(iv.lo >= target - TOLERANCE and iv.hi <= target + TOLERANCE for iv in approx))
    nonic_pairs = pencil.complex_pairs(pencil.nonic_factor())
    expected = {"real": 5, "exact": ["0", "1/2"], "approx_within_0.01": [True] * 3,
                "complex_pairs": 3, "nonic_complex_pairs": 3}
    actual = {"real": len(c.real_values), "exact": exact, "approx_within_0.01": near,
              "complex_pairs": c.complex_pair_count, "nonic_complex_pairs": nonic_pairs}
    return expected, actual


# groups

def _table(pres):
    ct = coset_enumerate(pres)
    if not ct.is_complete:
        raise RuntimeError(f"coset enumeration overflowed after {ct.defined} cosets")
    return ct, table_from_cosets(ct)


def check_group_orders():
    ct1, t1 = _table(library.presentation_G())
    ct2, t2 = _table(library.presentation_G2())
    return ({"G": 42, "G2": 42, "isomorphic": True},
            {"G": ct1.index, "G2": ct2.index, "isomorphic": isomorphism_check(t1, t2)})


def check_dihedral_product():
    _, tg = _table(library.presentation_G())
    target, images = library.d14_x_c3_images()
    inv = identify_small_group(tg)
    expected = {"map": EPIMORPHISM, "orders_equal": True, "center_order": 3,
                "derived_order": 7, "abelianization": [6], "isomorphic": True}
    actual = {"map": verify_homomorphism(library.presentation_G(), images, target),
              "orders_equal": tg.order == target.order,
              "center_order": inv["center_order"], "derived_order": inv["derived_order"],
              "abelianization": list(abelianization(library.presentation_G())),
              "isomorphic": isomorphism_check(tg, d14_x_c3())}
    return expected, actual


def check_vankampen():
    pres = library.build_vankampen_presentation()
    ct, tv = _table(pres)
    _, tg = _table(library.presentation_G())
    return ({"relators": 7, "order": 42, "isomorphic_to_G": True, "abelianization": [6]},
            {"relators": len(pres.relators), "order": ct.index,
             "isomorphic_to_G": isomorphism_check(tv, tg),
             "abelianization": list(abelianization(pres))})


# discriminant forms

def check_discriminant_forms():
    S = qforms.sigma_prime()
    g0 = qforms.gamma(0)
    K = qforms.span(S, [g0])
    quotient = qforms.orthogonal_complement_quotient(K, S)
    shift = qforms.cyclic_shift_matrix()
    eig = qforms.eigenspace_decomposition(shift, S)
    expected = {"q(gamma0)": "0", "|K|": 7, "isotropic": True, "|Kperp/K|": 7,
                "eigenvalues": [1, 2, 4], "eigenspace_orders": [7, 7, 7], "K=V2": True,
                "shift(gamma0)=2gamma0": True, "gamma1=2gamma0": True, "gamma2=4gamma0": True}
    actual = {
        "q(gamma0)": str(S.qv(g0)), "|K|": K.order, "isotropic": qforms.is_isotropic(K, S),
        "|Kperp/K|": quotient.order, "eigenvalues": sorted(eig),
        "eigenspace_orders": [eig[k].order for k in sorted(eig)],
        "K=V2": 2 in eig and eig[2].elements == K.elements,
        "shift(gamma0)=2gamma0": qforms.apply_matrix(shift, g0, 7) == S.mul(2, g0),
        "gamma1=2gamma0": qforms.gamma(1) == S.mul(2, g0),
        "gamma2=4gamma0": qforms.gamma(2) == S.mul(4, g0),
    }
    return expected, actual


# sampled properties

def _random_poly(rng: random.Random, variables=("x", "y"), terms=4, deg=3) -> MultiPoly:
    out = {}
    for _ in range(terms):
        e = tuple(rng.randint(0, deg) for _ in variables)
        out[e] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return MultiPoly(variables, out)


def check_properties(seed: int = 20240607, samples: int = 12):
    rng = random.Random(seed)
    ring = resmul = sturm = snf = True
    for _ in range(samples):
        p, q, r = (_random_poly(rng) for _ in range(3))
        ring &= (p * q) * r == p * (q * r) and p * (q + r) == p * q + p * r
        if p.degree("x") > 0 and q.degree("x") > 0 and r.degree("x") > 0:
            resmul &= resultant(p * r, q, "x") == resultant(p, q, "x") * resultant(r, q, "x")
        coeffs = upoly.trim([rng.randint(-5, 5) for _ in range(rng.randint(2, 6))])
        if upoly.deg(coeffs) > 0:
            sturm &= len(sturm_isolate(coeffs)) == _grid_sign_changes(coeffs)
        m = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(3)]
        s = smith_normal_form(m)
        snf &= _matmul3(s.left, m, s.right) == s.diag
    for pres in (library.presentation_G(), library.presentation_G2()):
        ct = coset_enumerate(pres)
        snf &= ct.is_permutation_table() and ct.relators_hold()
    forms_ok = all(f.polarization_holds() for f in (qforms.sigma_prime(), qforms.discr_An(1),
                                                    qforms.hyperbolic_form_2()))
    names = ["ring_axioms", "resultant_multiplicative", "sturm_vs_grid",
             "snf_and_coset_tables", "polarization"]
    return dict.fromkeys(names, True), dict(zip(names, [ring, resmul, sturm, snf, forms_ok]))


def _matmul3(a, m, b):
    return matmul(matmul(a, m), b)


def _grid_sign_changes(coeffs) -> int:
    """Distinct real roots counted as sign changes on a rational grid,
    refined until the count is stable. Roots of the squarefree part are
    simple, so one landing on a grid point still flips the sign."""
    sq = upoly.squarefree_part([Fraction(c) for c in coeffs])
    bound = 1 + max(abs(Fraction(c) / sq[-1]) for c in sq[:-1])
    prev = None
    steps = 64
    while True:
        xs = [-bound + 2 * bound * Fraction(i, steps) for i in range(steps + 1)]
        vals = [upoly.evaluate(sq, x) for x in xs]
        signs = [(v > 0) - (v < 0) for v in vals if v != 0]
        count = sum(1 for a, b in zip(signs, signs[1:]) if a != b)
        if count == prev:
            return count
        prev, steps = count, steps * 4
        if steps > 1 << 16:
            return count


CHECKS: tuple[Check, ...] = (
    Check("ansatz-route", "family", "up-to-scalar", check_ansatz_route,
          {"orbits": curves.FAMILY_ORBITS}),
    Check("degeneration-t1", "family", "exact", check_degeneration, {"orbits": curves.FAMILY_ORBITS}),
    Check("g-model", "family", "up-to-scalar", check_g_model, {"orbits": curves.FAMILY_ORBITS}),
    Check("singularity-census", "singular", "exact", check_g_singularities),
    Check("milnor-sums", "singular", "exact", check_milnor_sums),
    Check("square-factorization", "family", "exact", check_square_factorization),
    Check("pencil-discriminant", "pencil", "up-to-scalar", check_pencil_discriminant),
    Check("fiber-census", "pencil", "interval-containment", check_fiber_census),
    Check("group-order", "group", "exact", check_group_orders),
    Check("dihedral-product", "group", "exact", check_dihedral_product),
    Check("vankampen", "group", "exact", check_vankampen),
    Check("discriminant-forms", "qforms", "exact", check_discriminant_forms),
    Check("epsilon-twist", "family", "up-to-scalar", check_epsilon_twist),
    Check("properties", "properties", "exact", check_properties),
)

GROUPS = tuple(sorted({c.group for c in CHECKS}))


def run_checks(only: str | None = None, **overrides) -> list[VerificationReport]:
    """Run every check (or those whose group or name equals ``only``).
    ``overrides`` replace declared options, e.g. ``orbits`` for fixtures."""
    selected = [c for c in CHECKS if only is None or only in (c.group, c.name)]
    if only is not None and not selected:
        raise KeyError(f"no check or group named {only!r}")
    return [c.run(**overrides) for c in selected]


def summary(reports: list[VerificationReport]) -> str:
    passed = sum(r.passed for r in reports)
    return f"{passed} passed, {len(reports) - passed} failed"
