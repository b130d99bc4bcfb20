"""Sylvester resultants and fraction-free determinants."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .poly import QQ, MultiPoly


class DegenerateInputError(ValueError):
    pass


def bareiss_det(matrix: list[list]):
    """Determinant by fraction-free (Bareiss) elimination.

    Entries may be scalars or polynomials; every division performed is exact.
    The input is not modified.
    """
    m = [list(row) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return m[k][k] * 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = pivot * row_i[j] - mik * row_k[j]
                row_i[j] = _exact_div(num, prev)
            row_i[k] = 0 * pivot
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def _exact_div(num, den):
    if isinstance(den, int) and den == 1:
        return num
    if isinstance(num, MultiPoly):
        if isinstance(den, MultiPoly):
            if den.is_constant():
                return num / den.constant_term()
            return num.exact_div(den)
        return num / den
    if isinstance(num, int) and isinstance(den, int):
        q, r = divmod(num, den)
        if r:
            return Fraction(num, den)
        return q
    return num / den


def sylvester_matrix(a: list, b: list, zero=0) -> list[list]:
    """Sylvester matrix of coefficient lists given highest degree first."""
    m, n = len(a) - 1, len(b) - 1
    size = m + n
    rows = []
    for i in range(n):
        rows.append([zero] * i + list(a) + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + list(b) + [zero] * (size - n - 1 - i))
    return rows


def resultant(p: MultiPoly, q: MultiPoly, var: str) -> MultiPoly:
    """Sylvester resultant of ``p`` and ``q`` with respect to ``var``.

    The result keeps the variable list of the inputs (``var`` absent). For a
    factor of degree 0 in ``var`` the usual convention ``Res(p, c) = c^deg p``
    applies.
    """
    p._check(q)
    if not p or not q:
        raise DegenerateInputError("resultant with the zero polynomial")
    dp, dq = p.degree(var), q.degree(var)
    if dp <= 0 and dq <= 0:
        raise DegenerateInputError(f"both polynomials are constant in {var!r}")
    zero = MultiPoly.zero(p.variables, p.domain)
    cp, cq = p.coefficients_in(var), q.coefficients_in(var)
    if dq == 0:
        return cq[0] ** dp
    if dp == 0:
        return cp[0] ** dq
    a = [cp.get(k, zero) for k in range(dp, -1, -1)]
    b = [cq.get(k, zero) for k in range(dq, -1, -1)]
    # clear denominators: the determinant is then computed over integers
    content_p, a = _content_split(a)
    content_q, b = _content_split(b)
    det = bareiss_det(sylvester_matrix(a, b, zero))
    if not isinstance(det, MultiPoly):
        det = MultiPoly.const(det, p.variables, p.domain)
    return det.scale(content_p ** dq * content_q ** dp)


def _content_split(coeffs: list[MultiPoly]):
    """Pull a common rational factor out of a coefficient list (QQ only)."""
    if not coeffs or coeffs[0].domain != QQ:
        return 1, coeffs
    den = 1
    for c in coeffs:
        for v in c.terms.values():
            if isinstance(v, Fraction):
                den = lcm(den, v.denominator)
    g = 0
    for c in coeffs:
        for v in c.terms.values():
            g = gcd(g, int(v * den))
    if g == 0:
        return 1, coeffs
    content = Fraction(g, den)
    inv = 1 / content
    return content, [c.scale(inv) for c in coeffs]


def resultant_univariate(a: list, b: list):
    """Resultant of two dense coefficient lists (lowest degree first)."""
    a = [c for c in a]
    b = [c for c in b]
    while a and not a[-1]:
        a.pop()
    while b and not b[-1]:
        b.pop()
    if not a or not b:
        raise DegenerateInputError("resultant with the zero polynomial")
    if len(a) == 1 and len(b) == 1:
        raise DegenerateInputError("both polynomials are constant")
    if len(b) == 1:
        return b[0] ** (len(a) - 1)
    if len(a) == 1:
        return a[0] ** (len(b) - 1)
    return bareiss_det(sylvester_matrix(a[::-1], b[::-1]))


