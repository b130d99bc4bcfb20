"""Finite quadratic forms on discriminant groups, by exhaustive enumeration.

Elements are integer vectors reduced modulo the cyclic orders. Bilinear
values live in Q/Z (stored in [0, 1)) and quadratic values in Q/2Z (stored
in [0, 2)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .exact.snf import determinant, inverse_unimodular, smith_normal_form

Element = tuple[int, ...]
MAX_ORDER = 5000


class PreconditionError(ValueError):
    pass


def mod1(x) -> Fraction:
    x = Fraction(x)
    return x - (x.numerator // x.denominator)


def mod2(x) -> Fraction:
    return 2 * mod1(Fraction(x) / 2)


@dataclass(frozen=True)
class FiniteQuadraticForm:
    """Quadratic form on Z/n1 + ... + Z/nk given on generators.

    ``gram[i][j]`` is b(g_i, g_j) mod 1 and ``q[i]`` is q(g_i) mod 2.
    """

    orders: tuple[int, ...]
    gram: tuple[tuple[Fraction, ...], ...]
    q: tuple[Fraction, ...]

    def __post_init__(self):
        k = len(self.orders)
        object.__setattr__(self, "orders", tuple(int(n) for n in self.orders))
        object.__setattr__(self, "gram", tuple(tuple(mod1(x) for x in row) for row in self.gram))
        object.__setattr__(self, "q", tuple(mod2(x) for x in self.q))
        if any(n < 1 for n in self.orders):
            raise ValueError("cyclic orders are positive")
        if len(self.gram) != k or any(len(r) != k for r in self.gram) or len(self.q) != k:
            raise ValueError("gram and q must match the number of generators")
        for i in range(k):
            if mod1(self.q[i]) != self.gram[i][i]:
                raise ValueError("q(g) must reduce to b(g, g) mod 1")
            for j in range(k):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError("bilinear form must be symmetric")
                if mod1(self.orders[i] * self.gram[i][j]):
                    raise ValueError("b(g_i, g_j) must be killed by the order of g_i")
            if mod2(self.orders[i] ** 2 * self.q[i]):
                raise ValueError("q is not well defined on a cyclic factor")
        # integer arithmetic over a common denominator N: b in Z/N, q in Z/2N
        den = 1
        for x in [*self.q, *(y for row in self.gram for y in row)]:
            den = lcm(den, x.denominator)
        object.__setattr__(self, "_den", den)
        object.__setattr__(self, "_gram_int", tuple(tuple(int(y * den) for y in row) for row in self.gram))
        object.__setattr__(self, "_q_int", tuple(int(y * den) for y in self.q))

    # group structure

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def order(self) -> int:
        out = 1
        for n in self.orders:
            out *= n
        return out

    def reduce(self, v: Sequence[int]) -> Element:
        if len(v) != self.rank:
            raise ValueError("wrong vector length")
        return tuple(int(a) % n for a, n in zip(v, self.orders))

    def zero(self) -> Element:
        return (0,) * self.rank

    def add(self, u, v) -> Element:
        return self.reduce([a + b for a, b in zip(u, v)])

    def neg(self, u) -> Element:
        return self.reduce([-a for a in u])

    def mul(self, k: int, u) -> Element:
        return self.reduce([k * a for a in u])

    def elements(self) -> Iterable[Element]:
        if self.order > MAX_ORDER:
            raise ValueError("group too large for exhaustive enumeration")
        return itertools.product(*(range(n) for n in self.orders))

    def element_order(self, u) -> int:
        k, cur = 1, self.reduce(u)
        while any(cur):
            cur = self.add(cur, u)
            k += 1
        return k

    # values

    @property
    def denominator(self) -> int:
        """Common denominator N of all values: b lands in (1/N)Z, q in (1/N)Z."""
        return self._den

    def b_scaled(self, u, v) -> int:
        """N * b(u, v), reduced mod N."""
        g = self._gram_int
        return sum(a * c * g[i][j] for i, a in enumerate(u) if a
                   for j, c in enumerate(v) if c) % self._den

    def q_scaled(self, u) -> int:
        """N * q(u), reduced mod 2N."""
        g, q = self._gram_int, self._q_int
        total = sum(a * a * q[i] for i, a in enumerate(u) if a)
        total += sum(2 * u[i] * u[j] * g[i][j]
                     for i in range(self.rank) for j in range(i + 1, self.rank) if u[i] and u[j])
        return total % (2 * self._den)

    def b(self, u, v) -> Fraction:
        return Fraction(self.b_scaled(u, v), self._den)

    def qv(self, u) -> Fraction:
        return Fraction(self.q_scaled(u), self._den)

    def polarization_holds(self) -> bool:
        """q(u+v) - q(u) - q(v) = 2 b(u, v) mod 2 for every pair of elements."""
        els = list(self.elements())
        qs = {u: self.q_scaled(u) for u in els}
        two_n = 2 * self._den
        return all((qs[self.add(u, v)] - qs[u] - qs[v] - 2 * self.b_scaled(u, v)) % two_n == 0
                   for u in els for v in els)

    def basis(self) -> list[Element]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    def radical(self) -> list[Element]:
        return orthogonal_complement(self, self.basis())

    def is_nondegenerate(self) -> bool:
        return len(self.radical()) == 1

    def to_json(self) -> dict:
        return {"orders": list(self.orders),
                "gram": [[str(x) for x in row] for row in self.gram],
                "q": [str(x) for x in self.q]}


def discr_An(n: int) -> FiniteQuadraticForm:
    """Discriminant form of the negative definite root lattice A_n:
    Z/(n+1) with q(generator) = -n/(n+1)."""
    if n < 1:
        raise ValueError("n >= 1")
    v = Fraction(-n, n + 1)
    return FiniteQuadraticForm((n + 1,), ((v,),), (v,))


def direct_sum(forms: Sequence[FiniteQuadraticForm]) -> FiniteQuadraticForm:
    orders, qs = [], []
    blocks = []
    for f in forms:
        orders.extend(f.orders)
        qs.extend(f.q)
        blocks.append(f)
    k = len(orders)
    gram = [[Fraction(0)] * k for _ in range(k)]
    at = 0
    for f in blocks:
        for i in range(f.rank):
            for j in range(f.rank):
                gram[at + i][at + j] = f.gram[i][j]
        at += f.rank
    return FiniteQuadraticForm(tuple(orders), tuple(map(tuple, gram)), tuple(qs))


# subgroups

@dataclass(frozen=True)
class Subgroup:
    form: FiniteQuadraticForm
    generators: tuple[Element, ...]
    elements: frozenset

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, u) -> bool:
        return self.form.reduce(u) in self.elements


def span(form: FiniteQuadraticForm, gens: Iterable[Sequence[int]]) -> Subgroup:
    gens = tuple(form.reduce(g) for g in gens)
    seen = {form.zero()}
    frontier = [form.zero()]
    while frontier:
        nxt = []
        for u in frontier:
            for g in gens:
                w = form.add(u, g)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return Subgroup(form, gens, frozenset(seen))


def is_isotropic(sub: Subgroup | Iterable, form: FiniteQuadraticForm) -> bool:
    if not isinstance(sub, Subgroup):
        sub = span(form, sub)
    els = list(sub.elements)
    if any(form.qv(u) for u in els):
        return False
    return all(not form.b(u, v) for u in els for v in els)


def orthogonal_complement(form: FiniteQuadraticForm, sub) -> list[Element]:
    if not isinstance(sub, Subgroup):
        sub = span(form, sub)
    gens = sub.generators or ()
    return [u for u in form.elements() if all(not form.b_scaled(u, g) for g in gens)]


def _cyclic_decomposition(form: FiniteQuadraticForm, elements: list[Element],
                          sub: Subgroup) -> list[tuple[Element, int]]:
    """Write the quotient of the subgroup ``elements`` by ``sub`` as a sum of
    cyclic groups; returns (representative, order) pairs, orders dividing
    each other."""
    ref = sorted(sub.elements)

    def coset(u):
        return min(form.add(u, r) for r in ref)

    # greedy generating set of the quotient
    gens: list[Element] = []
    reached = {coset(form.zero())}
    for u in elements:
        if coset(u) in reached:
            continue
        gens.append(u)
        reached = {coset(v) for v in span(form, gens + list(sub.generators)).elements}
    m = len(gens)
    if not m:
        return []
    # relation lattice from the non-tree edges of the Cayley graph
    seen = {coset(form.zero()): (0,) * m}
    frontier = [(form.zero(), (0,) * m)]
    rows = []
    while frontier:
        nxt = []
        for u, c in frontier:
            for i in range(m):
                w = form.add(u, gens[i])
                cw = tuple(c[j] + (j == i) for j in range(m))
                k = coset(w)
                if k in seen:
                    diff = [x - y for x, y in zip(cw, seen[k])]
                    if any(diff):
                        rows.append(diff)
                else:
                    seen[k] = cw
                    nxt.append((w, cw))
        frontier = nxt
    snf = smith_normal_form(rows)
    rinv = inverse_unimodular(snf.right)
    out = []
    for i, d in enumerate(snf.factors):
        if d == 1:
            continue
        g = form.zero()
        for c, h in zip(rinv[i], gens):
            g = form.add(g, form.mul(c, h))
        out.append((g, d))
    return out


def orthogonal_complement_quotient(sub, form: FiniteQuadraticForm) -> FiniteQuadraticForm:
    """The induced form on K-perp / K for an isotropic subgroup K."""
    if not isinstance(sub, Subgroup):
        sub = span(form, sub)
    if not is_isotropic(sub, form):
        raise PreconditionError("the subgroup is not isotropic")
    perp = orthogonal_complement(form, sub)
    cyc = _cyclic_decomposition(form, perp, sub)
    gens = [g for g, _ in cyc]
    orders = tuple(d for _, d in cyc)
    gram = tuple(tuple(form.b(u, v) for v in gens) for u in gens)
    q = tuple(form.qv(u) for u in gens)
    out = FiniteQuadraticForm(orders, gram, q)
    # well defined: q and b are constant on cosets of K inside K-perp
    for u in gens:
        for k in sub.elements:
            if form.qv(form.add(u, k)) != form.qv(u):
                raise AssertionError("quotient form is not well defined")
    return out


# endomorphisms of (Z/p)^n

def apply_matrix(mat: Sequence[Sequence[int]], u: Sequence[int], p: int) -> Element:
    """Column convention: image = mat @ u mod p."""
    return tuple(sum(mat[i][j] * u[j] for j in range(len(u))) % p for i in range(len(mat)))


def _det_mod(mat, p) -> int:
    return determinant([list(r) for r in mat]) % p


def eigenspace_decomposition(mat: Sequence[Sequence[int]], form: FiniteQuadraticForm,
                             ) -> dict[int, Subgroup]:
    """Nonzero eigenspaces of ``mat`` acting on (Z/p)^n, by enumeration."""
    ps = set(form.orders)
    if len(ps) != 1:
        raise ValueError("expected an elementary abelian group (Z/p)^n")
    p = ps.pop()
    if any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError("p must be prime")
    if not _det_mod(mat, p):
        raise PreconditionError("matrix is not invertible mod p")
    out = {}
    for lam in range(1, p):
        vecs = [u for u in form.elements()
                if apply_matrix(mat, u, p) == tuple((lam * a) % p for a in u)]
        if len(vecs) > 1:
            nonzero = [u for u in vecs if any(u)]
            out[lam] = Subgroup(form, tuple(nonzero), frozenset(vecs))
    return out


def preserves(mat, sub: Subgroup, p: int) -> bool:
    return all(apply_matrix(mat, u, p) in sub.elements for u in sub.elements)


def matrix_order(mat, p: int, limit: int = 1000) -> int:
    n = len(mat)
    ident = [[int(i == j) for j in range(n)] for i in range(n)]
    cur = [list(r) for r in mat]
    for k in range(1, limit + 1):
        if [[x % p for x in r] for r in cur] == ident:
            return k
        cur = [[sum(cur[i][l] * mat[l][j] for l in range(n)) % p for j in range(n)] for i in range(n)]
    raise ValueError("order exceeds limit")


# the three A6 points

# gamma_i = e*_{i,4} + e*_{i+1,2} + e*_{i+2,1}, written in the generators
# e*_{k,1} of the three copies of discr A6 (e*_{k,j} = j e*_{k,1})
def gamma(i: int) -> Element:
    v = [0, 0, 0]
    v[i % 3] = 4
    v[(i + 1) % 3] = 2
    v[(i + 2) % 3] = 1
    return tuple(v)


def sigma_prime() -> FiniteQuadraticForm:
    return direct_sum([discr_An(6)] * 3)


def cyclic_shift_matrix() -> list[list[int]]:
    """e_{0k} -> e_{1k} -> e_{2k} -> e_{0k} on coordinates (column convention)."""
    return [[0, 0, 1], [1, 0, 0], [0, 1, 0]]


def hyperbolic_form_2() -> FiniteQuadraticForm:
    """(Z/2)^2 with b off-diagonal 1/2 and q = 0 on both generators."""
    h = Fraction(1, 2)
    return FiniteQuadraticForm((2, 2), ((0, h), (h, 0)), (0, 0))
