"""The sextic family C(t), the Z/3-symmetric ansatz, and the coordinate
changes relating them.

Symbolic computations carry ``t`` as an ordinary polynomial variable, so a
single polynomial engine serves numeric and symbolic work.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exact import upoly
from .exact.eisenstein import OMEGA, Eisenstein
from .exact.poly import QQ, QQW, DomainError, MultiPoly, proportional, substitute
from .exact.resultant import bareiss_det
from .exact.textfmt import format_scalar, parse_poly

Z_VARS = ("z0", "z1", "z2")
U_VARS = ("u0", "u1", "u2")
V_VARS = ("v0", "v1", "v2")

# Coefficient of each cyclic monomial orbit in the family equation, as a
# polynomial in t, keyed by one representative exponent vector.
FAMILY_ORBITS: tuple[tuple[str, tuple[int, int, int]], ...] = (
    ("2*t*(t^3-1)", (4, 1, 1)),
    ("t^3-1", (4, 2, 0)),
    ("t^2*(t^3-1)", (4, 0, 2)),
    ("2*t*(t^3+1)", (3, 3, 0)),
    ("4*t^2*(t^3+2)", (3, 2, 1)),
    ("2*(t^6+4*t^3+1)", (3, 1, 2)),
    ("t*(t^6+13*t^3+10)", (2, 2, 2)),
)

# orbit representatives for the coefficients a, b, c, d of the ansatz
ANSATZ_ORBITS = ((4, 0, 2), (3, 2, 1), (3, 1, 2), (2, 2, 2))

# the singularity conditions at (1:t:t^2), as printed (columns a, b, c, d)
PRINTED_CONDITIONS = (
    ("6*t^4", "3*t^4+3*t^7", "5*t^5+t^8", "2*t^6"),
    ("4*t^3+2*t^9", "2*t^3+4*t^6", "4*t^4+2*t^7", "2*t^5"),
    ("4*t^8+2*t^2", "t^2+5*t^5", "3*t^3+3*t^6", "2*t^4"),
)

REDUCIBLE_RAY = ("t^2", "2*t^2", "-2*t*(t^3+2)", "(t^3+2)^2")
CURVE_RAY = ("1", "-2", "-2*t^2", "t*(t^3+8)")
SQUARE_ROOT_CUBIC = "t*u1^2*u0 - 2*u1*u2*u0 - u1*u2*u0*t^3 + t*u0^2*u2 + t*u1*u2^2"

# the affine model of C(5/6) in the chart Z = 1 of the (X, Y, Z) coordinates
EPI_PARAMETER = Fraction(5, 6)
EPI_MODEL_TEXT = (
    "716/19683*x + 17872/177147*y - 11503/708588*x*y - 356093/354294*x*y^2"
    " + 322559/5668704*x^3*y + 3568/177147 - 722513/2834352*x^2*y"
    " - 8137/472392*x^2 - 28582655/2834352*x*y^5 + 56261293/22674816*y^4"
    " - 449027/1417176*y^2 - 4427549/2834352*y^3 + 81485377/11337408*y^5"
    " - 255219619/22674816*y^6 - 57539/1417176*x^3 + 2243/209952*x^4"
    " - 26011/5668704*x^6 + 2726579/7558272*x^2*y^2 + 1092623/1259712*x*y^3"
    " + 9868757/11337408*x^3*y^2 + 11718893/3779136*x^2*y^3"
    " + 77768419/11337408*x*y^4 - 309307/5668704*y*x^5"
    " - 9030539/22674816*x^4*y^2 - 9923629/5668704*x^3*y^3"
    " - 61362175/11337408*x^2*y^4 + 12505/944784*x^5 + 397175/2834352*x^4*y"
)
EPI_MODEL_POINTS = ((-1, 0), (2, 0), (Fraction(-1, 2), Fraction(1, 2)))


def cyclic_orbit(exps: Sequence[int]) -> list[tuple[int, int, int]]:
    """Orbit of an exponent vector under z0 -> z1 -> z2 -> z0."""
    out = []
    e = tuple(exps)
    for _ in range(3):
        if e not in out:
            out.append(e)
        e = (e[2], e[0], e[1])
    return out


def cyclic_shift(p: MultiPoly, names: Sequence[str] = Z_VARS) -> MultiPoly:
    """Apply the substitution names[0] -> names[1] -> names[2] -> names[0]."""
    a, b, c = names
    gens = {v: MultiPoly.var(v, p.variables, p.domain) for v in p.variables}
    mapping = dict(gens)
    mapping.update({a: gens[b], b: gens[c], c: gens[a]})
    return substitute(p, mapping)


def _domain_of(*values) -> str:
    return QQW if any(isinstance(v, Eisenstein) and not v.is_rational() for v in values) else QQ


def _orbit_sum(coef: MultiPoly, rep, variables, names) -> MultiPoly:
    idx = [variables.index(v) for v in names]
    out = MultiPoly.zero(variables, coef.domain)
    for e in cyclic_orbit(rep):
        exps = [0] * len(variables)
        for i, k in zip(idx, e):
            exps[i] = k
        out = out + coef * MultiPoly.monomial(exps, variables, 1, coef.domain)
    return out


def family_symbolic(orbits=FAMILY_ORBITS, domain: str = QQ) -> MultiPoly:
    """C(t) as a polynomial in (t, z0, z1, z2)."""
    variables = ("t",) + Z_VARS
    total = MultiPoly.zero(variables, domain)
    for text, rep in orbits:
        coef = parse_poly(text, variables, domain)
        total = total + _orbit_sum(coef, rep, variables, Z_VARS)
    return total


def build_family_equation(t, orbits=FAMILY_ORBITS, domain: str | None = None) -> MultiPoly:
    """C(t) in z0, z1, z2 for a scalar ``t`` (rational or in Q(w))."""
    domain = domain or _domain_of(t)
    out = MultiPoly.zero(Z_VARS, domain)
    for text, rep in orbits:
        c = parse_poly(text, ("t",), domain).evaluate({"t": t})
        out = out + _orbit_sum(MultiPoly.const(c, Z_VARS, domain), rep, Z_VARS, Z_VARS)
    return out


@dataclass(frozen=True)
class AnsatzCoefficients:
    a: object
    b: object
    c: object
    d: object

    def as_tuple(self):
        return (self.a, self.b, self.c, self.d)


def build_ansatz(coeffs: AnsatzCoefficients | Sequence, variables=U_VARS,
                 domain: str | None = None) -> MultiPoly:
    """The Z/3-symmetric sextic with orbit coefficients a, b, c, d.

    Coefficients are scalars or polynomials on ``variables`` (use
    ``("t",) + U_VARS`` for symbolic t).
    """
    values = coeffs.as_tuple() if isinstance(coeffs, AnsatzCoefficients) else tuple(coeffs)
    if len(values) != 4:
        raise ValueError("the ansatz has four coefficients")
    variables = tuple(variables)
    if domain is None:
        domain = next((v.domain for v in values if isinstance(v, MultiPoly)), None) or _domain_of(*values)
    total = MultiPoly.zero(variables, domain)
    for value, rep in zip(values, ANSATZ_ORBITS):
        coef = value if isinstance(value, MultiPoly) else MultiPoly.const(value, variables, domain)
        total = total + _orbit_sum(coef, rep, variables, U_VARS)
    return total


def ray(texts: Sequence[str], t=None, variables=("t",) + U_VARS) -> tuple:
    """Evaluate a printed solution ray at ``t`` (``None`` keeps t symbolic)."""
    if t is None:
        return tuple(parse_poly(s, variables) for s in texts)
    return tuple(parse_poly(s, ("t",), _domain_of(t)).evaluate({"t": t}) for s in texts)


# singularity conditions at (1:t:t^2)

def singular_condition_system() -> list[list[MultiPoly]]:
    """3x4 matrix over Q[t]: row i holds the coefficients of a, b, c, d in
    dF/du_i evaluated at (1:t:t^2)."""
    tv = ("t",)
    t = MultiPoly.var("t", tv)
    point = {"u0": MultiPoly.const(1, tv), "u1": t, "u2": t * t}
    rows = [[None] * 4 for _ in range(3)]
    for j in range(4):
        unit = [0, 0, 0, 0]
        unit[j] = 1
        F = build_ansatz(unit)
        for i, u in enumerate(U_VARS):
            rows[i][j] = substitute(F.derivative(u), point)
    return rows


def printed_condition_system() -> list[list[MultiPoly]]:
    return [[parse_poly(s, ("t",)) for s in row] for row in PRINTED_CONDITIONS]


def _apply_rows(rows, vec):
    out = []
    for row in rows:
        acc = MultiPoly.zero(("t",))
        for entry, v in zip(row, vec):
            acc = acc + entry * v
        out.append(acc)
    return out


def _minors(matrix, size):
    from itertools import combinations
    n, m = len(matrix), len(matrix[0])
    for rs in combinations(range(n), size):
        for cs in combinations(range(m), size):
            yield [[matrix[r][c] for c in cs] for r in rs]


def generic_rank(matrix: list[list[MultiPoly]]) -> int:
    """Rank over Q(t) of a matrix of polynomials in t."""
    for size in range(min(len(matrix), len(matrix[0])), 0, -1):
        for minor in _minors(matrix, size):
            if bareiss_det(minor):
                return size
    return 0


def solve_condition_system(sign: int) -> dict:
    """Check a printed ray against the system with b = sign*2*a.

    Returns the residuals and the rank of the augmented system; the ray spans
    the solution space iff the residuals vanish and the rank is 3.
    """
    texts = REDUCIBLE_RAY if sign > 0 else CURVE_RAY
    vec = tuple(parse_poly(s, ("t",)) for s in texts)
    rows = singular_condition_system()
    one = MultiPoly.const(1, ("t",))
    zero = MultiPoly.zero(("t",))
    constraint = [one * (-2 * sign), one, zero, zero]
    augmented = rows + [constraint]
    residuals = _apply_rows(augmented, vec)
    rank = generic_rank(augmented)
    return {
        "ray": texts,
        "residuals_vanish": all(not r for r in residuals),
        "rank": rank,
        "spans": all(not r for r in residuals) and rank == 3,
    }


def verify_square_factorization(t=None, coeffs=None) -> bool:
    """Ansatz on the b = 2a ray equals the square of the printed cubic."""
    if t is None:
        variables = ("t",) + U_VARS
        values = coeffs if coeffs is not None else ray(REDUCIBLE_RAY)
        F = build_ansatz(values, variables)
        cubic = parse_poly(SQUARE_ROOT_CUBIC, variables)
    else:
        domain = _domain_of(t)
        values = coeffs if coeffs is not None else ray(REDUCIBLE_RAY, t)
        F = build_ansatz(values, U_VARS, domain)
        cubic = substitute(parse_poly(SQUARE_ROOT_CUBIC, ("t",) + U_VARS, domain),
                           {"t": MultiPoly.const(t, U_VARS, domain),
                            **{u: MultiPoly.var(u, U_VARS, domain) for u in U_VARS}})
    return F == cubic * cubic


# coordinate changes

@dataclass(frozen=True)
class CoordinateChange:
    """Substitution ``source[i] -> images[i]``; images live on ``target``.

    ``kind`` is ``"linear"`` (with ``matrix`` holding the coefficients, row i
    giving source[i] in terms of the target coordinates) or ``"monomial"``.
    Variables shared by source and target polynomials that the change does
    not mention (such as a symbolic ``t``) pass through unchanged.
    """

    name: str
    source: tuple[str, ...]
    target: tuple[str, ...]
    images: tuple[MultiPoly, ...]
    kind: str = "linear"
    matrix: tuple[tuple, ...] | None = None

    def __post_init__(self):
        if len(self.images) != len(self.source):
            raise ValueError("one image per source variable")
        if self.kind == "linear":
            if self.matrix is None:
                raise ValueError("linear changes carry their matrix")
            if not bareiss_det([list(r) for r in self.matrix]):
                raise ValueError(f"change {self.name!r} is not invertible")

    def inverse(self) -> CoordinateChange:
        if self.kind != "linear" or any(isinstance(x, MultiPoly) for r in self.matrix for x in r):
            raise ValueError("only linear changes with scalar entries are inverted here")
        inv = _invert(self.matrix)
        return linear_change(f"{self.name}^-1", self.target, self.source, inv)


def _invert(matrix):
    n = len(matrix)
    aug = [[Fraction(x) if not isinstance(x, Eisenstein) else x for x in row]
           + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for c in range(n):
        p = next(r for r in range(c, n) if aug[r][c])
        aug[c], aug[p] = aug[p], aug[c]
        piv = aug[c][c]
        aug[c] = [x / piv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def linear_change(name, source, target, matrix, extra=(), domain=None) -> CoordinateChange:
    """``source[i] = sum_j matrix[i][j] * target[j]``. ``extra`` lists
    pass-through variables appended to the target ring."""
    source, target = tuple(source), tuple(target)
    flat = [x for row in matrix for x in row]
    if domain is None:
        domain = next((x.domain for x in flat if isinstance(x, MultiPoly)), None) or _domain_of(*flat)
    ring = tuple(extra) + target
    gens = [MultiPoly.var(v, ring, domain) for v in target]
    images = []
    for row in matrix:
        acc = MultiPoly.zero(ring, domain)
        for coef, g in zip(row, gens):
            acc = acc + g * coef
        images.append(acc)
    return CoordinateChange(name, source, ring, tuple(images), "linear",
                            tuple(tuple(r) for r in matrix))


def apply_change(p: MultiPoly, ch: CoordinateChange) -> MultiPoly:
    """Pull ``p`` back along the change (substitute the images)."""
    missing = [v for v in ch.source if v not in p.variables]
    if missing:
        raise DomainError(f"polynomial lacks variables {missing} required by {ch.name!r}")
    mapping: dict[str, MultiPoly] = dict(zip(ch.source, ch.images))
    domain = ch.images[0].domain
    if p.domain != domain:
        raise DomainError(f"change {ch.name!r} is over {domain}, polynomial over {p.domain}")
    for v in p.variables:
        if v not in mapping:
            if v not in ch.target:
                raise DomainError(f"variable {v!r} is neither mapped nor passed through")
            mapping[v] = MultiPoly.var(v, ch.target, domain)
    return substitute(p, mapping)


def identity_change(variables, domain=QQ) -> CoordinateChange:
    n = len(variables)
    return linear_change("identity", variables, variables,
                         [[int(i == j) for j in range(n)] for i in range(n)], domain=domain)


def vandermonde_change(t=None) -> CoordinateChange:
    """u -> v with u0 = v0 + t^2 v1 + t v2 (and cyclically)."""
    if t is None:
        ring = ("t",) + V_VARS
        tt = MultiPoly.var("t", ring)
        one = MultiPoly.const(1, ring)
        rows = [[one, tt * tt, tt], [tt, one, tt * tt], [tt * tt, tt, one]]
        return linear_change("uv-vandermonde", U_VARS, V_VARS, rows, extra=("t",))
    rows = [[1, t * t, t], [t, 1, t * t], [t * t, t, 1]]
    return linear_change("uv-vandermonde", U_VARS, V_VARS, rows)


def triangular_change(symbolic: bool = False, domain=QQ) -> CoordinateChange:
    """The quadratic map v0 = z1 z2, v1 = z2 z0, v2 = z0 z1."""
    ring = (("t",) if symbolic else ()) + Z_VARS
    z0, z1, z2 = (MultiPoly.var(v, ring, domain) for v in Z_VARS)
    return CoordinateChange("triangular", V_VARS, ring, (z1 * z2, z2 * z0, z0 * z1), "monomial")


def epi_change() -> CoordinateChange:
    """z0 = (X - Y + Z)/3, z1 = (-X - 5Y + 2Z)/3, z2 = Y."""
    f = Fraction
    rows = [[f(1, 3), f(-1, 3), f(1, 3)], [f(-1, 3), f(-5, 3), f(2, 3)], [0, 1, 0]]
    return linear_change("paper-epi", Z_VARS, ("X", "Y", "Z"), rows)


def reducible_swap_change(domain=QQ) -> CoordinateChange:
    """(u0:u1:u2) -> (z0:z2:z1)."""
    return linear_change("reducible-swap", U_VARS, Z_VARS,
                         [[1, 0, 0], [0, 0, 1], [0, 1, 0]], domain=domain)


def twist_change() -> CoordinateChange:
    """(z0:z1:z2) -> (z0 : w^2 z1 : w z2) over Q(w)."""
    w = OMEGA
    return linear_change("epsilon-twist", Z_VARS, Z_VARS,
                         [[1, 0, 0], [0, w * w, 0], [0, 0, w]], domain=QQW)


NAMED_CHANGES = {
    "paper-epi": epi_change,
    "uv-vandermonde": vandermonde_change,
    "triangular": triangular_change,
    "reducible-swap": reducible_swap_change,
    "epsilon-twist": twist_change,
}


def dehomogenize(p: MultiPoly, var: str, rename: Mapping[str, str] | None = None) -> MultiPoly:
    """Set ``var = 1`` and drop it; optionally rename the remaining variables."""
    rest = tuple(v for v in p.variables if v != var)
    i = p.index(var)
    terms: dict = {}
    for e, c in p.terms.items():
        ne = e[:i] + e[i + 1:]
        terms[ne] = terms.get(ne, 0) + c
    out = MultiPoly(rest, terms, p.domain)
    return out.rename(rename) if rename else out


def homogenize(p: MultiPoly, var: str, degree: int | None = None) -> MultiPoly:
    d = p.total_degree() if degree is None else degree
    variables = p.variables + (var,)
    return MultiPoly(variables, {e + (d - sum(e),): c for e, c in p.terms.items()}, p.domain)


def strip_monomial(p: MultiPoly, names: Sequence[str]) -> tuple[tuple[int, ...], MultiPoly]:
    """Divide out the largest monomial in ``names`` dividing ``p``."""
    content = p.monomial_content()
    exps = tuple(k if v in names else 0 for v, k in zip(p.variables, content))
    return exps, p.divide_monomial(exps)


def weighted_initial_form(p: MultiPoly, weights: Mapping[str, int]) -> MultiPoly:
    """Terms of lowest weighted degree (unlisted variables weigh 0)."""
    w = [weights.get(v, 0) for v in p.variables]

    def wdeg(e):
        return sum(a * b for a, b in zip(w, e))

    low = min(wdeg(e) for e in p.terms)
    return MultiPoly(p.variables, {e: c for e, c in p.terms.items() if wdeg(e) == low}, p.domain)


# verification routes

def ansatz_route(symbolic: bool = True, t=None) -> MultiPoly:
    """Second ray -> u->v change -> inverse triangular map -> strip z0^2 z1^2 z2^2."""
    if symbolic:
        F = build_ansatz(ray(CURVE_RAY), ("t",) + U_VARS)
        Fv = apply_change(F, vandermonde_change())
        Fz = apply_change(Fv, triangular_change(symbolic=True))
    else:
        domain = _domain_of(t)
        F = build_ansatz(ray(CURVE_RAY, t), U_VARS, domain)
        Fv = apply_change(F, vandermonde_change(t))
        Fz = apply_change(Fv, triangular_change(domain=domain))
    return strip_monomial(Fz, Z_VARS)[1]


def ansatz_matches_family(orbits=FAMILY_ORBITS) -> dict:
    """Symbolic comparison of the ansatz route with C(t).

    ``scalar`` is the factor in Q[t] with ``route == scalar * C(t)`` when the
    two are proportional and the factor is polynomial.
    """
    G = ansatz_route(symbolic=True)
    E = family_symbolic(orbits)
    ok = proportional(G, E, over=("t",))
    scalar = None
    if ok:
        key = max((e[1:] for e in E.terms), key=lambda e: (sum(e), e))
        ce = MultiPoly(E.variables, {e: c for e, c in E.terms.items() if e[1:] == key})
        cg = MultiPoly(G.variables, {e: c for e, c in G.terms.items() if e[1:] == key})
        ce = ce.divide_monomial((0,) + key)
        cg = cg.divide_monomial((0,) + key)
        q, r = cg.divmod_lex(ce)
        if not r and G == E * q:
            scalar = q
    return {"proportional": ok, "scalar": scalar}


def reducible_branch() -> MultiPoly:
    """The t = 0 curve built from a=1, b=-2, c=d=0 and (u0:u1:u2) -> (z0:z2:z1)."""
    F = build_ansatz((1, -2, 0, 0))
    return apply_change(F, reducible_swap_change())


def principal_part_curve_ray(t=None) -> MultiPoly:
    """Weighted initial form (weights x:2, y:5) of the second-ray ansatz
    after u0 = 1, u1 = x, u2 = y + x^2."""
    ring = ("t", "x", "y") if t is None else ("x", "y")
    domain = QQ if t is None else _domain_of(t)
    if t is None:
        F = build_ansatz(ray(CURVE_RAY), ("t",) + U_VARS)
    else:
        F = build_ansatz(ray(CURVE_RAY, t), U_VARS, domain)
    x = MultiPoly.var("x", ring, domain)
    y = MultiPoly.var("y", ring, domain)
    mapping = {"u0": MultiPoly.const(1, ring, domain), "u1": x, "u2": y + x * x}
    if t is None:
        mapping["t"] = MultiPoly.var("t", ring)
    return weighted_initial_form(substitute(F, mapping), {"x": 2, "y": 5})


def check_epsilon_twist(t) -> bool:
    """C(w t), pulled back along (z0:z1:z2) -> (z0 : w^2 z1 : w z2), is
    proportional to C(t); computed over Q(w)."""
    w = OMEGA
    t = Eisenstein(t) if not isinstance(t, Eisenstein) else t
    twisted = build_family_equation(w * t, domain=QQW)
    pulled = apply_change(twisted, twist_change())
    base = build_family_equation(t, domain=QQW)
    return proportional(pulled, base)


def fixed_point_condition(eps: Eisenstein) -> list:
    """C(t) evaluated at the fixed point (1 : eps : eps^2), as a dense
    polynomial in t over Q(w) (lowest degree first)."""
    C = family_symbolic(domain=QQW)
    ring = ("t",)
    pt = {"t": MultiPoly.var("t", ring, QQW),
          "z0": MultiPoly.const(1, ring, QQW),
          "z1": MultiPoly.const(eps, ring, QQW),
          "z2": MultiPoly.const(eps * eps, ring, QQW)}
    return substitute(C, pt).to_coeff_list("t")


def extra_node_parameters() -> dict:
    """For each cube root of unity eps: the curve passes through
    (1:eps:eps^2) exactly when t = -3/eps or t^3 = 1, and it is singular
    there at t = -3/eps."""
    out = {}
    for k in range(3):
        eps = OMEGA ** k
        cond = fixed_point_condition(eps)
        root = Eisenstein(-3) / eps
        q, r = upoly.divmod_(cond, [-root, Eisenstein(1)])
        # every remaining root satisfies t^3 = 1 iff q | (t^3 - 1)^deg q
        cube = [Eisenstein(-1), 0, 0, Eisenstein(1)]
        rest_ok = not upoly.divmod_(upoly.power(cube, max(upoly.deg(q), 0)), q)[1]
        C = build_family_equation(root, domain=QQW)
        point = {"z0": Eisenstein(1), "z1": eps, "z2": eps * eps}
        grad = [C.derivative(v).evaluate(point) for v in Z_VARS]
        out[format_scalar(eps)] = {
            "t": format_scalar(root),
            "passes": not r,
            "other_roots_have_t_cubed_one": rest_ok,
            "singular": all(not g for g in grad),
        }
    return out


def printed_epi_model() -> MultiPoly:
    return parse_poly(EPI_MODEL_TEXT, ("x", "y"))


def epi_model(t=EPI_PARAMETER, family: MultiPoly | None = None) -> MultiPoly:
    """C(t) in the (X, Y, Z) coordinates, restricted to Z = 1, as a polynomial in x, y."""
    C = build_family_equation(t) if family is None else family
    return dehomogenize(apply_change(C, epi_change()), "Z", {"X": "x", "Y": "y"})


def family_to_json(t, p: MultiPoly | None = None) -> dict:
    """Canonical export: graded-lex descending monomials, exact coefficients."""
    p = build_family_equation(t) if p is None else p
    return {
        "t": format_scalar(t),
        "monomials": [{"exps": list(e), "coef": format_scalar(c)} for e, c in p.sorted_terms()],
    }


def family_from_json(data: dict) -> MultiPoly:
    from .exact.textfmt import parse_scalar
    terms = {tuple(m["exps"]): parse_scalar(m["coef"]) for m in data["monomials"]}
    domain = QQW if any(isinstance(c, Eisenstein) and not c.is_rational() for c in terms.values()) else QQ
    return MultiPoly(Z_VARS, terms, domain)
