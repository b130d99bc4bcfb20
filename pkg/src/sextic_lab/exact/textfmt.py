"""Human-readable polynomial text: ``-3/4*x^2*y + (1/2+w)*z - 5``.

Coefficients are integers or ``p/q``; over Q(w) a non-rational coefficient
is printed in parentheses using the reserved name ``w``. The parser accepts
the printer's output and, more generally, sums, products, integer powers,
parentheses and division by nonzero constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .eisenstein import Eisenstein
from .poly import QQ, QQW, DomainError, MultiPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def format_scalar(c) -> str:
    if isinstance(c, Eisenstein):
        return str(c.re) if c.om == 0 else str(c)
    return str(c)


def _format_monomial(exps, variables) -> str:
    parts = []
    for v, k in zip(variables, exps):
        if k == 1:
            parts.append(v)
        elif k > 1:
            parts.append(f"{v}^{k}")
    return "*".join(parts)


def format_poly(p: MultiPoly) -> str:
    if not p.terms:
        return "0"
    out = []
    for exps, c in p.sorted_terms():
        mono = _format_monomial(exps, p.variables)
        if isinstance(c, Eisenstein) and c.om != 0:
            coef, neg = f"({c})", False
        else:
            val = c.re if isinstance(c, Eisenstein) else c
            neg = val < 0
            coef = str(abs(val))
        if mono:
            body = mono if coef == "1" else f"{coef}*{mono}"
        else:
            body = coef
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


class _Parser:
    def __init__(self, text: str, variables, domain: str):
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
            num, ident, op = m.groups()
            if num is not None:
                self.tokens.append(("num", int(num)))
            elif ident is not None:
                self.tokens.append(("id", ident))
            else:
                self.tokens.append(("op", "^" if op == "**" else op))
            pos = m.end()
        self.i = 0
        self.variables = tuple(variables)
        self.domain = domain

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op):
            raise ValueError(f"expected {op!r}, got {tok[1]!r}")

    def parse(self) -> MultiPoly:
        p = self.expr()
        if self.i != len(self.tokens):
            raise ValueError(f"trailing input at token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            q = self.unary()
            if op == "*":
                p = p * q
            else:
                if not q.is_constant() or not q:
                    raise ValueError("division only by nonzero constants")
                p = p / q.constant_term()
        return p

    def unary(self):
        tok = self.peek()
        if tok == ("op", "-"):
            self.take()
            return -self.unary()
        if tok == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            sign = 1
            if self.peek() == ("op", "-"):
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer literal")
            if sign < 0:
                raise ValueError("negative exponents are not polynomial")
            base = base ** val
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return MultiPoly.const(val, self.variables, self.domain)
        if kind == "id":
            if val in self.variables:
                return MultiPoly.var(val, self.variables, self.domain)
            if val == "w":
                if self.domain != QQW:
                    raise DomainError("'w' needs the QQw domain")
                return MultiPoly.const(Eisenstein(0, 1), self.variables, self.domain)
            raise ValueError(f"unknown variable {val!r}")
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str, variables=None, domain: str = QQ) -> MultiPoly:
    """Parse polynomial text. Without ``variables`` the identifiers are taken
    in order of first appearance (``w`` excluded over QQw)."""
    if variables is None:
        seen = []
        for m in _TOKEN.finditer(text):
            ident = m.group(2)
            if ident and ident not in seen and not (domain == QQW and ident == "w"):
                seen.append(ident)
        variables = seen
    return _Parser(text, variables, domain).parse()


def parse_rational(text: str) -> Fraction:
    """Strict ``p`` or ``p/q`` parser (optional sign)."""
    m = re.fullmatch(r"\s*([-+]?\d+)(?:\s*/\s*(\d+))?\s*", text)
    if not m:
        raise ValueError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def parse_scalar(text: str):
    """Parse ``p/q`` or ``p/q+r/s*w`` (as written by :func:`format_scalar`)."""
    text = text.strip()
    if "w" not in text:
        return parse_rational(text)
    p = parse_poly(text, variables=(), domain=QQW)
    if not p.is_constant():
        raise ValueError(f"not a scalar: {text!r}")
    return p.constant_term()
