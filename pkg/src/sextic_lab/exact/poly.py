"""Sparse multivariate polynomials over Q or Q(w).

A polynomial stores its ordered variable names, a map from exponent tuples to
nonzero coefficients, and a scalar-domain tag. Rational coefficients are kept
as ``int`` when integral and :class:`~fractions.Fraction` otherwise; Q(w)
coefficients are always :class:`Eisenstein`. Values are immutable by
convention: no operation mutates its operands.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .eisenstein import Eisenstein

QQ = "QQ"
QQW = "QQw"
DOMAINS = (QQ, QQW)


class DomainError(ValueError):
    """Operands live in different rings, or a value is outside the ring."""


class NotDivisibleError(ArithmeticError):
    pass


def _coerce_q(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, Eisenstein):
        if c.om == 0:
            return _coerce_q(c.re)
        raise DomainError(f"{c} is not rational; promote the polynomial to QQw explicitly")
    raise DomainError(f"unsupported coefficient {c!r}")


def _coerce_w(c):
    if isinstance(c, Eisenstein):
        return c
    if isinstance(c, (int, Fraction)) and not isinstance(c, bool):
        return Eisenstein(c)
    raise DomainError(f"unsupported coefficient {c!r}")


def coerce_scalar(c, domain: str):
    return _coerce_q(c) if domain == QQ else _coerce_w(c)


def grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("variables", "terms", "domain")

    def __init__(self, variables: Iterable[str], terms: Mapping | None = None,
                 domain: str = QQ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        if domain not in DOMAINS:
            raise DomainError(f"unknown domain {domain!r}")
        n = len(variables)
        clean = {}
        if terms:
            coerce = _coerce_q if domain == QQ else _coerce_w
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ValueError(f"bad exponent vector {exps} for {variables}")
                c = coerce(c)
                if c:
                    clean[exps] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "domain", domain)

    @classmethod
    def _raw(cls, variables, terms, domain):
        # terms already canonical; skips validation in hot loops
        p = object.__new__(cls)
        object.__setattr__(p, "variables", variables)
        object.__setattr__(p, "terms", terms)
        object.__setattr__(p, "domain", domain)
        return p

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # construction helpers

    @classmethod
    def zero(cls, variables, domain=QQ) -> MultiPoly:
        return cls(variables, None, domain)

    @classmethod
    def const(cls, c, variables, domain=QQ) -> MultiPoly:
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c}, domain)

    @classmethod
    def var(cls, name: str, variables, domain=QQ) -> MultiPoly:
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} not among {variables}")
        return cls(variables, {exps: 1}, domain)

    @classmethod
    def gens(cls, variables, domain=QQ) -> tuple[MultiPoly, ...]:
        return tuple(cls.var(v, variables, domain) for v in variables)

    @classmethod
    def monomial(cls, exps, variables, coef=1, domain=QQ) -> MultiPoly:
        return cls(variables, {tuple(exps): coef}, domain)

    # basic queries

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise ValueError(f"{var!r} not among {self.variables}") from None

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        if not self.terms:
            return -1
        i = self.index(var)
        return max(e[i] for e in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, self._zero_scalar())

    def coefficient(self, exps) -> object:
        return self.terms.get(tuple(exps), self._zero_scalar())

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self.variables)
                     if any(e[i] for e in self.terms))

    def _zero_scalar(self):
        return 0 if self.domain == QQ else Eisenstein(0)

    def sorted_terms(self) -> list[tuple[tuple[int, ...], object]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def leading_coefficient(self):
        """Coefficient of the grlex-largest monomial."""
        if not self.terms:
            return self._zero_scalar()
        return self.terms[max(self.terms, key=grlex_key)]

    # arithmetic

    def _check(self, other: MultiPoly):
        if self.variables != other.variables:
            raise DomainError(f"variable mismatch: {self.variables} vs {other.variables}")
        if self.domain != other.domain:
            raise DomainError(f"domain mismatch: {self.domain} vs {other.domain}")

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, Eisenstein)) and not isinstance(other, bool):
            return MultiPoly.const(other, self.variables, self.domain)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if len(other.terms) > len(self.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out = dict(a)
        coerce = _coerce_q if self.domain == QQ else None
        for e, c in b.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s:
                    out[e] = coerce(s) if coerce else s
                else:
                    del out[e]
        return MultiPoly._raw(self.variables, out, self.domain)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._raw(self.variables, {e: -c for e, c in self.terms.items()}, self.domain)

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c) -> MultiPoly:
        c = coerce_scalar(c, self.domain)
        if not c:
            return MultiPoly.zero(self.variables, self.domain)
        coerce = _coerce_q if self.domain == QQ else (lambda v: v)
        return MultiPoly._raw(self.variables,
                              {e: coerce(v * c) for e, v in self.terms.items()},
                              self.domain)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Eisenstein)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if not a or not b:
            return MultiPoly.zero(self.variables, self.domain)
        out: dict = {}
        get = out.get
        n = self.nvars
        if n == 1:
            for (e1,), c1 in a.items():
                for (e2,), c2 in b.items():
                    k = (e1 + e2,)
                    s = get(k)
                    out[k] = c1 * c2 if s is None else s + c1 * c2
        else:
            for e1, c1 in a.items():
                for e2, c2 in b.items():
                    k = tuple([x + y for x, y in zip(e1, e2)])
                    s = get(k)
                    out[k] = c1 * c2 if s is None else s + c1 * c2
        coerce = _coerce_q if self.domain == QQ else (lambda v: v)
        return MultiPoly._raw(self.variables,
                              {e: coerce(c) for e, c in out.items() if c},
                              self.domain)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Eisenstein)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> MultiPoly:
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = MultiPoly.const(1, self.variables, self.domain)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Eisenstein)) and not isinstance(other, bool):
            if not other:
                raise ZeroDivisionError("polynomial division by zero")
            inv = (1 / Fraction(other)) if not isinstance(other, Eisenstein) else other.inverse()
            return self.scale(inv)
        if isinstance(other, MultiPoly):
            return self.exact_div(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return (self.variables == other.variables and self.domain == other.domain
                    and self.terms == other.terms)
        if isinstance(other, (int, Fraction, Eisenstein)):
            if not other:
                return not self.terms
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, self.domain, frozenset(self.terms.items())))

    def __repr__(self):
        return f"MultiPoly({self.variables}, {self!s}, domain={self.domain})"

    def __str__(self):
        from .textfmt import format_poly
        return format_poly(self)

    # calculus and structure

    def derivative(self, var: str) -> MultiPoly:
        i = self.index(var)
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = e[:i] + (k - 1,) + e[i + 1:]
                out[ne] = c * k
        return MultiPoly(self.variables, out, self.domain)

    def coefficients_in(self, var: str) -> dict[int, MultiPoly]:
        """Split into ``{k: coefficient of var^k}``; the coefficients keep the
        same variable list with ``var`` absent."""
        i = self.index(var)
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            ne = e[:i] + (0,) + e[i + 1:]
            buckets.setdefault(e[i], {})[ne] = c
        return {k: MultiPoly._raw(self.variables, t, self.domain) for k, t in buckets.items()}

    def with_variables(self, variables) -> MultiPoly:
        """Re-embed into another variable list (which must contain every used variable)."""
        variables = tuple(variables)
        pos = []
        for i, v in enumerate(self.variables):
            if v in variables:
                pos.append((i, variables.index(v)))
            elif any(e[i] for e in self.terms):
                raise DomainError(f"variable {v!r} is used but missing from {variables}")
        n = len(variables)
        out = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in pos:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return MultiPoly._raw(variables, out, self.domain)

    def rename(self, mapping: Mapping[str, str]) -> MultiPoly:
        return MultiPoly._raw(tuple(mapping.get(v, v) for v in self.variables),
                              dict(self.terms), self.domain)

    def to_domain(self, domain: str) -> MultiPoly:
        """Explicit change of scalar domain (Q -> Q(w), or back when possible)."""
        return MultiPoly(self.variables, self.terms, domain)

    def map_coefficients(self, fn) -> MultiPoly:
        return MultiPoly(self.variables, {e: fn(c) for e, c in self.terms.items()}, self.domain)

    def conjugate(self) -> MultiPoly:
        if self.domain == QQ:
            return self
        return self.map_coefficients(lambda c: c.conjugate())

    def monomial_content(self) -> tuple[int, ...]:
        """Exponent vector of the largest monomial dividing every term."""
        if not self.terms:
            return (0,) * self.nvars
        it = iter(self.terms)
        m = list(next(it))
        for e in it:
            m = [min(a, b) for a, b in zip(m, e)]
        return tuple(m)

    def divide_monomial(self, exps) -> MultiPoly:
        exps = tuple(exps)
        out = {}
        for e, c in self.terms.items():
            ne = tuple(a - b for a, b in zip(e, exps))
            if min(ne, default=0) < 0:
                raise NotDivisibleError(f"monomial {exps} does not divide {self}")
            out[ne] = c
        return MultiPoly._raw(self.variables, out, self.domain)

    def primitive(self) -> tuple[Fraction, MultiPoly]:
        """``(content, prim)`` with integer, gcd-1 coefficients in ``prim``,
        positive grlex-leading coefficient, and ``self == content * prim``."""
        if self.domain != QQ:
            raise DomainError("primitive part is defined over QQ only")
        if not self.terms:
            return Fraction(0), self
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = lcm(den, c.denominator)
        nums = [int(c * den) for c in self.terms.values()]
        g = 0
        for v in nums:
            g = gcd(g, v)
        content = Fraction(g, den)
        if self.leading_coefficient() < 0:
            content = -content
        return content, self.scale(1 / content)

    def evaluate(self, point: Mapping[str, object]):
        """Evaluate at scalar values for every variable."""
        vals = [point[v] for v in self.variables]
        total = self._zero_scalar()
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term = term * v ** k
            total = total + term
        return total

    # division

    def exact_div(self, other: MultiPoly) -> MultiPoly:
        """Exact quotient ``self / other``; raises if there is a remainder."""
        q, r = self.divmod_lex(other)
        if r:
            raise NotDivisibleError("polynomial division leaves a remainder")
        return q

    def divmod_lex(self, other: MultiPoly) -> tuple[MultiPoly, MultiPoly]:
        """Multivariate division by one divisor in lex order. The remainder
        collects terms whose lex-leading monomial is not divisible."""
        self._check(other)
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        lm = max(other.terms)
        lc = other.terms[lm]
        inv = (Fraction(1) / lc) if self.domain == QQ else lc.inverse()
        coerce = _coerce_q if self.domain == QQ else (lambda v: v)
        rest = dict(self.terms)
        quot: dict = {}
        rem: dict = {}
        while rest:
            e = max(rest)
            c = rest.pop(e)
            shift = tuple(a - b for a, b in zip(e, lm))
            if min(shift) < 0:
                rem[e] = c
                continue
            f = coerce(c * inv)
            quot[shift] = f
            for oe, oc in other.terms.items():
                if oe == lm:
                    continue
                k = tuple(a + b for a, b in zip(oe, shift))
                v = rest.get(k, 0) - f * oc
                if v:
                    rest[k] = coerce(v)
                else:
                    rest.pop(k, None)
        return (MultiPoly._raw(self.variables, quot, self.domain),
                MultiPoly._raw(self.variables, rem, self.domain))

    # univariate views

    def to_coeff_list(self, var: str) -> list:
        """Dense coefficients (low to high) in ``var``; every other variable
        must be absent."""
        i = self.index(var)
        if not self.terms:
            return []
        out = [self._zero_scalar()] * (self.degree(var) + 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise DomainError(f"polynomial is not univariate in {var!r}")
            out[e[i]] = c
        return out

    @classmethod
    def from_coeff_list(cls, coeffs, var: str, variables=None, domain=QQ) -> MultiPoly:
        variables = tuple(variables) if variables is not None else (var,)
        i = variables.index(var)
        n = len(variables)
        terms = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * n
                e[i] = k
                terms[tuple(e)] = c
        return cls(variables, terms, domain)


def poly_arith(p: MultiPoly, q: MultiPoly, op: str) -> MultiPoly:
    """Apply ``add``, ``sub`` or ``mul`` after checking both operands agree."""
    if not isinstance(p, MultiPoly) or not isinstance(q, MultiPoly):
        raise DomainError("poly_arith needs two MultiPoly operands")
    p._check(q)
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def substitute(p: MultiPoly, mapping: Mapping[str, MultiPoly]) -> MultiPoly:
    """Ring homomorphism sending each variable of ``p`` to a polynomial.

    Every variable that occurs in ``p`` must be mapped; all images must share
    one variable list and the domain of ``p`` (promote first if needed).
    """
    images = []
    for v in p.variables:
        img = mapping.get(v)
        if img is None:
            if any(e[p.index(v)] for e in p.terms):
                raise DomainError(f"variable {v!r} is not mapped")
        images.append(img)
    present = [img for img in images if img is not None]
    if not present:
        raise DomainError("substitution maps no variables")
    target = present[0]
    for img in present:
        target._check(img)
    if target.domain != p.domain:
        raise DomainError(f"domain mismatch: {p.domain} vs {target.domain}")
    cache: list[dict[int, MultiPoly]] = [{} for _ in images]

    def power(i: int, k: int) -> MultiPoly:
        got = cache[i].get(k)
        if got is None:
            if k == 1:
                got = images[i]
            else:
                half = power(i, k // 2)
                got = half * half
                if k % 2:
                    got = got * images[i]
            cache[i][k] = got
        return got

    # group by the first variable's exponent to reuse partial products
    acc: dict = {}
    coerce = _coerce_q if p.domain == QQ else (lambda v: v)
    for e, c in p.terms.items():
        term = None
        for i, k in enumerate(e):
            if k:
                term = power(i, k) if term is None else term * power(i, k)
        if term is None:
            term = MultiPoly.const(1, target.variables, target.domain)
        for te, tc in term.terms.items():
            acc[te] = acc.get(te, 0) + c * tc
    return MultiPoly._raw(target.variables,
                          {e: coerce(c) for e, c in acc.items() if c},
                          target.domain)


def proportional(p: MultiPoly, q: MultiPoly, over: Iterable[str] = ()) -> bool:
    """True iff ``p = lambda * q`` for a nonzero scalar ``lambda``.

    Variables listed in ``over`` are treated as part of the scalar field
    (so ``lambda`` may be a nonzero rational function in them). The test
    cross-multiplies a matching pair of coefficients, never divides.
    """
    p._check(q)
    if not p.terms or not q.terms:
        return not p.terms and not q.terms
    over = set(over)
    main = [i for i, v in enumerate(p.variables) if v not in over]

    def split(r: MultiPoly):
        out: dict = {}
        for e, c in r.terms.items():
            key = tuple(e[i] for i in main)
            out.setdefault(key, {})[e] = c
        return out

    sp, sq = split(p), split(q)
    if set(sp) != set(sq):
        return False
    key = max(sp, key=grlex_key)
    cp = MultiPoly(p.variables, sp[key], p.domain)
    cq = MultiPoly(p.variables, sq[key], p.domain)
    return p * cq == q * cp


def normalized(p: MultiPoly) -> MultiPoly:
    """Scale so the grlex-leading coefficient is 1."""
    if not p.terms:
        return p
    lc = p.leading_coefficient()
    inv = (Fraction(1) / lc) if p.domain == QQ else lc.inverse()
    return p.scale(inv)
