"""Singular points of plane curves over Q and Q(w), A_k classification,
and local intersection multiplicities."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import upoly
from .exact.eisenstein import OMEGA, Eisenstein
from .exact.poly import QQ, QQW, DomainError, MultiPoly, substitute
from .exact.resultant import resultant
from .exact.sturm import rational_roots
from .exact.textfmt import format_scalar

Z_VARS = ("z0", "z1", "z2")
XY = ("x", "y")


class MultipleComponentError(ValueError):
    """The curve has a repeated component."""


class NotOnCurveError(ValueError):
    pass


class NonIsolatedSingularityError(ValueError):
    pass


class InfiniteMultiplicityError(ValueError):
    """The two curves share a component through the point."""


class PartialResultError(RuntimeError):
    def __init__(self, message: str, lower_bound: int):
        super().__init__(message)
        self.lower_bound = lower_bound


def _is_rational(c) -> bool:
    return not isinstance(c, Eisenstein) or c.is_rational()


def _scalar(c):
    """Collapse rational Eisenstein values to Fraction."""
    if isinstance(c, Eisenstein) and c.is_rational():
        return c.re
    return Fraction(c) if not isinstance(c, Eisenstein) else c


@dataclass(frozen=True)
class ProjPoint:
    """Homogeneous coordinates scaled so the last nonzero one equals 1."""

    coords: tuple

    def __init__(self, coords: Sequence):
        coords = tuple(coords)
        if len(coords) != 3 or not any(coords):
            raise ValueError("a projective point needs three coordinates, not all zero")
        last = next(c for c in reversed(coords) if c)
        if not isinstance(last, Eisenstein):
            last = Fraction(last)
        object.__setattr__(self, "coords", tuple(_scalar(c / last) for c in coords))

    @property
    def chart(self) -> int:
        """Index of the coordinate normalized to 1."""
        return max(i for i, c in enumerate(self.coords) if c)

    @property
    def domain(self) -> str:
        return QQ if all(_is_rational(c) for c in self.coords) else QQW

    def affine(self) -> tuple:
        k = self.chart
        return tuple(c for i, c in enumerate(self.coords) if i != k)

    def to_json(self) -> list[str]:
        return [format_scalar(c) for c in self.coords]

    def __str__(self):
        return "(" + ":".join(format_scalar(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Unresolved:
    """Singular solutions whose coordinates were not found in Q or Q(w)."""

    chart: int
    budget: int
    note: str = ""


@dataclass(frozen=True)
class SingularityReport:
    point: ProjPoint
    kind: str
    milnor: int
    hessian_corank: int
    k: int | None = None

    def __post_init__(self):
        if self.k is not None:
            if self.milnor != self.k or self.hessian_corank > 1:
                raise ValueError("inconsistent A_k report")
            if (self.k == 1) != (self.hessian_corank == 0):
                raise ValueError("A1 exactly when the Hessian is nondegenerate")

    def to_json(self) -> dict:
        return {"point": self.point.to_json(), "kind": self.kind,
                "milnor": self.milnor, "hessian_corank": self.hessian_corank}


# univariate root finding in Q and the w-multiples of Q

def _coeff_domain(coeffs) -> str:
    return QQ if all(_is_rational(c) for c in coeffs) else QQW


def _rational_list(coeffs) -> list[Fraction]:
    return [_scalar(c) for c in coeffs]


def _norm(coeffs) -> list[Fraction]:
    """``h * conj(h)``, a rational polynomial with every root of ``h``."""
    if _coeff_domain(coeffs) == QQ:
        return _rational_list(coeffs)
    conj = [c.conjugate() if isinstance(c, Eisenstein) else c for c in coeffs]
    return _rational_list(upoly.mul(coeffs, conj))


def _omega_multiples(rat: list[Fraction]) -> list[Eisenstein]:
    """Roots ``r*w`` and ``r*w^2`` (r rational, nonzero) of a rational polynomial."""
    # p(r*w) = A(r) + B(r)*w using w^2 = -1 - w
    a = [Fraction(0)] * len(rat)
    b = [Fraction(0)] * len(rat)
    for k, c in enumerate(rat):
        m = k % 3
        if m == 0:
            a[k] += c
        elif m == 1:
            b[k] += c
        else:
            a[k] -= c
            b[k] -= c
    a, b = upoly.trim(a), upoly.trim(b)
    common = upoly.gcd_monic(a, b) if (a or b) else []
    if len(common) <= 1:
        return []
    out = []
    for r in rational_roots(common):
        if r:
            out.append(OMEGA * r)
            out.append(OMEGA * OMEGA * r)
    return out


def field_roots(coeffs) -> tuple[list, int]:
    """Distinct roots in Q or in ``Q*w`` / ``Q*w^2``, plus the degree of the
    squarefree part left unexplained."""
    coeffs = upoly.trim(coeffs)
    if not coeffs:
        raise ValueError("the zero polynomial")
    if len(coeffs) == 1:
        return [], 0
    sq = upoly.squarefree_part(coeffs)
    norm = _norm(sq)
    cands = list(rational_roots(norm)) + _omega_multiples(norm)
    roots = []
    for c in cands:
        if not upoly.evaluate(sq, c) and c not in roots:
            roots.append(_scalar(c))
    return roots, upoly.deg(sq) - len(roots)


# affine machinery

def _shear(p: MultiPoly, k) -> MultiPoly:
    """p(x, y + k*x) on variables (x, y)."""
    x = MultiPoly.var("x", XY, p.domain)
    y = MultiPoly.var("y", XY, p.domain)
    return substitute(p, {"x": x, "y": y + x * k})


def _translate(p: MultiPoly, a, b) -> MultiPoly:
    x = MultiPoly.var("x", XY, p.domain)
    y = MultiPoly.var("y", XY, p.domain)
    return substitute(p, {"x": x + a, "y": y + b})


def _top_form_at(p: MultiPoly, k):
    """Top homogeneous part evaluated at (1, k): the x^d coefficient after
    the shear y -> y + k x."""
    d = p.total_degree()
    return sum(c * k ** e[1] for e, c in p.terms.items() if sum(e) == d)


def _specialize_y(p: MultiPoly, y0) -> list:
    """Coefficients in x of p(x, y0)."""
    deg = p.degree("x")
    out = [0] * (deg + 1)
    for e, c in p.terms.items():
        out[e[0]] = out[e[0]] + c * (y0 ** e[1])
    return upoly.trim(out)


def _as_xy(p: MultiPoly) -> MultiPoly:
    if len(p.variables) != 2:
        raise DomainError("expected a polynomial in two variables")
    return p.rename(dict(zip(p.variables, XY)))


def _promote(p: MultiPoly, *values) -> MultiPoly:
    if p.domain == QQ and any(not _is_rational(v) for v in values):
        return p.to_domain(QQW)
    return p


def _good_shears(p: MultiPoly, *others: MultiPoly):
    k = 0
    while True:
        if all(_top_form_at(q, k) for q in (p,) + others):
            yield k
        k += 1


def is_squarefree_affine(p: MultiPoly) -> bool:
    p = _as_xy(p)
    if p.total_degree() <= 0:
        return True
    k = next(_good_shears(p))
    g = _shear(p, k)
    if g.degree("x") == 0:
        return True
    return bool(resultant(g, g.derivative("x"), "x"))


def dehomogenize_chart(f: MultiPoly, chart: int) -> MultiPoly:
    """Set coordinate ``chart`` to 1; the remaining two become (x, y) in order."""
    rest = [i for i in range(3) if i != chart]
    terms: dict = {}
    for e, c in f.terms.items():
        key = (e[rest[0]], e[rest[1]])
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(XY, terms, f.domain)


def check_squarefree(f: MultiPoly) -> None:
    if not f or f.is_constant():
        raise ValueError("need a nonconstant curve equation")
    if not f.is_homogeneous():
        raise ValueError("projective curve equations are homogeneous")
    content = f.monomial_content()
    if max(content) >= 2:
        raise MultipleComponentError("a coordinate line is a repeated component")
    affine = dehomogenize_chart(f, 2)
    if not is_squarefree_affine(affine):
        raise MultipleComponentError("the curve has a repeated component")


def _eliminant(g: MultiPoly) -> list:
    """Polynomial in y vanishing at the y-coordinate of every singular point
    of g; ``[]`` when the resultants vanish identically."""
    gx, gy = g.derivative("x"), g.derivative("y")
    if gx.degree("x") <= 0:
        return []
    r1 = resultant(g, gx, "x").to_coeff_list("y")
    r2 = resultant(gx, gy, "x").to_coeff_list("y")
    if r1 and r2:
        return upoly.gcd_monic(r1, r2)
    return r1


def _solve_projection(g: MultiPoly, elim: list) -> tuple[list[tuple], int]:
    ys, budget = field_roots(elim)
    points = []
    for y0 in ys:
        gg = _promote(g, y0)
        h = upoly.gcd_monic(_specialize_y(gg, y0), _specialize_y(gg.derivative("x"), y0))
        h = upoly.gcd_monic(h, _specialize_y(gg.derivative("y"), y0))
        if len(h) <= 1:
            continue
        xs, left = field_roots(h)
        budget += left
        points.extend((_scalar(x0), _scalar(y0)) for x0 in xs)
    return points, budget


def affine_singular_points(p: MultiPoly) -> tuple[list[tuple], int]:
    """Singular points of an affine curve with coordinates in Q or Q(w),
    plus the residual degree budget of unresolved candidates.

    Several projections are tried (onto y, onto x, then along a shear that
    makes the leading x-coefficient constant); any projection whose
    eliminant roots are all accounted for certifies completeness. Shearing
    comes last because it destroys the ``r*w^j`` shape of coordinates.
    """
    p = _as_xy(p)
    if p.total_degree() <= 0:
        return [], 0
    swap = p.rename({"x": "y", "y": "x"}).with_variables(XY)
    k = next(_good_shears(p))
    attempts = [(p, lambda a, b: (a, b)), (swap, lambda a, b: (b, a)),
                (_shear(p, k), lambda a, b: (a, _scalar(b + k * a)))]
    found: list[tuple] = []
    best = None
    for g, back in attempts:
        elim = _eliminant(g)
        if not elim:
            continue
        pts, budget = _solve_projection(g, elim)
        for a, b in pts:
            pt = back(a, b)
            if pt not in found:
                found.append(pt)
        best = budget if best is None else min(best, budget)
        if budget == 0:
            break
    if best is None:
        raise NonIsolatedSingularityError("singular locus is not finite")
    return found, best


def _sort_key(pt: ProjPoint):
    return [(c.re, c.om) if isinstance(c, Eisenstein) else (c, 0) for c in pt.coords]


def find_singular_points(f: MultiPoly) -> list:
    """All singular points of the projective curve f = 0 with coordinates in
    Q or Q(w); anything else is reported as :class:`Unresolved`."""
    check_squarefree(f)
    found: list[ProjPoint] = []
    unresolved: list[Unresolved] = []
    for chart in (2, 1, 0):
        pts, budget = affine_singular_points(dehomogenize_chart(f, chart))
        for a, b in pts:
            coords = [None, None, None]
            rest = [i for i in range(3) if i != chart]
            coords[chart] = Fraction(1)
            coords[rest[0]], coords[rest[1]] = a, b
            pt = ProjPoint(coords)
            if pt not in found:
                found.append(pt)
        if budget:
            unresolved.append(Unresolved(chart, budget, "roots outside Q and Q*w"))
    found.sort(key=_sort_key)
    return found + unresolved


# local invariants

def _ord_at_zero(coeffs) -> int:
    for i, c in enumerate(coeffs):
        if c:
            return i
    raise InfiniteMultiplicityError("resultant vanishes identically")


def local_intersection_multiplicity(f: MultiPoly, h: MultiPoly, p: Sequence) -> int:
    """Intersection number of the affine curves f = 0 and h = 0 at ``p``.

    After translating ``p`` to the origin, shears y -> y + k x (k = 0, 1, ...)
    are tried until both leading x-coefficients are constants and the origin
    is the only common zero on the line y = 0; the answer is then the order
    of vanishing of Res_x(f, h) at y = 0.
    """
    f, h = _as_xy(f), _as_xy(h)
    if f.variables != h.variables:
        raise DomainError("curves must share their variables")
    a, b = p
    f, h = _promote(f, a, b), _promote(h, a, b)
    if f.domain != h.domain:
        f, h = f.to_domain(QQW), h.to_domain(QQW)
    F, H = _translate(f, a, b), _translate(h, a, b)
    if F.constant_term() or H.constant_term():
        return 0
    for k in _good_shears(F, H):
        Fk, Hk = _shear(F, k), _shear(H, k)
        res = resultant(Fk, Hk, "x")
        if not res:
            raise InfiniteMultiplicityError("the curves share a component")
        line = upoly.gcd_monic(_specialize_y(Fk, 0), _specialize_y(Hk, 0))
        if not line or any(line[:-1]):
            continue  # another common zero on the line y = 0
        return _ord_at_zero(res.to_coeff_list("y"))
    raise AssertionError("unreachable")  # pragma: no cover


def local_equation(f: MultiPoly, pt: ProjPoint) -> MultiPoly:
    """Affine equation of f in the chart of ``pt``, with ``pt`` moved to (0, 0)."""
    g = _promote(dehomogenize_chart(f, pt.chart), *pt.coords)
    a, b = pt.affine()
    return _translate(g, a, b)


def hessian_corank(h: MultiPoly) -> int:
    c20 = h.coefficient((2, 0))
    c11 = h.coefficient((1, 1))
    c02 = h.coefficient((0, 2))
    if 4 * c20 * c02 - c11 * c11:
        return 0
    if c20 or c11 or c02:
        return 1
    return 2


def classify_Ak(f: MultiPoly, pt: ProjPoint) -> SingularityReport:
    """Smooth, A_k (k = Milnor number) for Hessian corank <= 1, else NonA."""
    if not isinstance(pt, ProjPoint):
        pt = ProjPoint(pt)
    h = local_equation(f, pt)
    if h.constant_term():
        raise NotOnCurveError(f"{pt} is not on the curve")
    if h.coefficient((1, 0)) or h.coefficient((0, 1)):
        return SingularityReport(pt, "Smooth", 0, 0)
    corank = hessian_corank(h)
    try:
        mu = local_intersection_multiplicity(h.derivative("x"), h.derivative("y"), (0, 0))
    except InfiniteMultiplicityError as exc:
        raise NonIsolatedSingularityError(f"non-isolated singularity at {pt}") from exc
    if corank <= 1:
        return SingularityReport(pt, f"A{mu}", mu, corank, k=mu)
    return SingularityReport(pt, "NonA", mu, corank)


def singularity_census(f: MultiPoly) -> list:
    out = []
    for item in find_singular_points(f):
        out.append(item if isinstance(item, Unresolved) else classify_Ak(f, item))
    return out


def milnor_sum(f: MultiPoly) -> int:
    census = singularity_census(f)
    total = sum(r.milnor for r in census if isinstance(r, SingularityReport))
    if any(isinstance(r, Unresolved) for r in census):
        raise PartialResultError("unresolved singular candidates remain", total)
    return total


def census_to_json(census: list) -> list[dict]:
    out = []
    for r in census:
        if isinstance(r, Unresolved):
            out.append({"kind": "Unresolved", "chart": r.chart, "budget": r.budget, "note": r.note})
        else:
            out.append(r.to_json())
    return out
