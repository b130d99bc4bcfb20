"""Dense univariate helpers on coefficient lists (lowest degree first).

Coefficients may be ints, Fractions or Eisenstein numbers; all functions
return trimmed lists (no trailing zeros, ``[]`` for the zero polynomial).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .eisenstein import Eisenstein


def trim(a: list) -> list:
    a = list(a)
    while a and not a[-1]:
        a.pop()
    return a


def deg(a: list) -> int:
    return len(trim(a)) - 1


def add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def sub(a: list, b: list) -> list:
    return add(a, [-c for c in b])


def mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
    return trim(out)


def scale(a: list, c) -> list:
    return trim([x * c for x in a])


def _inv(c):
    return c.inverse() if isinstance(c, Eisenstein) else Fraction(1) / c


def divmod_(a: list, b: list) -> tuple[list, list]:
    a, b = trim(a), trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    inv = _inv(b[-1])
    r = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] * inv
        q[k] = c
        if c:
            for j, y in enumerate(b):
                r[k + j] = r[k + j] - c * y
    return trim(q), trim(r[: len(b) - 1])


def monic(a: list) -> list:
    a = trim(a)
    if not a:
        return a
    return scale(a, _inv(a[-1]))


def gcd_monic(a: list, b: list) -> list:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b)[1]
    return monic(a)


def deriv(a: list) -> list:
    return trim([k * a[k] for k in range(1, len(a))])


def evaluate(a: list, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def squarefree_part(a: list) -> list:
    """Monic ``a / gcd(a, a')``."""
    a = trim(a)
    if len(a) <= 1:
        return monic(a)
    g = gcd_monic(a, deriv(a))
    return monic(divmod_(a, g)[0])


def primitive_int(a: list) -> list[int]:
    """Integer multiple of a rational polynomial with gcd-1 coefficients and
    positive leading coefficient."""
    a = trim(a)
    if not a:
        return []
    den = 1
    for c in a:
        den = lcm(den, Fraction(c).denominator)
    ints = [int(Fraction(c) * den) for c in a]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return [v // g for v in ints]


def power(a: list, n: int) -> list:
    out = [1]
    for _ in range(n):
        out = mul(out, a)
    return out


def multiplicity(a: list, root) -> int:
    """Order of vanishing of ``a`` at ``root``."""
    a = trim(a)
    if not a:
        raise ValueError("the zero polynomial vanishes to infinite order")
    k = 0
    lin = [-root, 1]
    while True:
        q, r = divmod_(a, lin)
        if r:
            return k
        a, k = q, k + 1
