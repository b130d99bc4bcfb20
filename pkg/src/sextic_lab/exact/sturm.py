"""Real root isolation with Sturm sequences, and exact rational roots."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import upoly
from .poly import DomainError, MultiPoly


@dataclass(frozen=True)
class IsolatingInterval:
    """``[lo, hi]`` containing exactly one real root of the squarefree
    polynomial ``poly`` (integer coefficients, lowest degree first).
    ``lo == hi`` marks an exact rational root."""

    lo: Fraction
    hi: Fraction
    poly: tuple[int, ...]

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def approx(self) -> float:
        """Decimal approximation of the midpoint; display only."""
        return float((self.lo + self.hi) / 2)

    def refine(self, width) -> IsolatingInterval:
        """Bisect until narrower than ``width`` (exact roots stay exact)."""
        width = Fraction(width)
        lo, hi = self.lo, self.hi
        p = list(self.poly)
        s_lo = _sign(upoly.evaluate(p, lo))
        while hi - lo >= width and lo != hi:
            mid = (lo + hi) / 2
            s_mid = _sign(upoly.evaluate(p, mid))
            if s_mid == 0:
                lo = hi = mid
            elif s_mid == s_lo:
                lo = mid
            else:
                hi = mid
        return IsolatingInterval(lo, hi, self.poly)

    def to_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _coeffs(p) -> list:
    if isinstance(p, MultiPoly):
        used = p.used_variables()
        if len(used) > 1:
            raise DomainError("sturm_isolate needs a univariate polynomial")
        if p.domain != "QQ":
            raise DomainError("real roots need rational coefficients")
        var = used[0] if used else p.variables[0]
        return p.to_coeff_list(var)
    return upoly.trim(p)


def sturm_sequence(p: list) -> list[list]:
    seq = [upoly.trim(p), upoly.deriv(p)]
    while seq[-1]:
        r = upoly.divmod_(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-c for c in r])
    return seq


def _variations(seq, x) -> int:
    count, last = 0, 0
    for q in seq:
        s = _sign(upoly.evaluate(q, x))
        if s:
            if last and s != last:
                count += 1
            last = s
    return count


def cauchy_bound(p: list) -> Fraction:
    lc = Fraction(p[-1])
    return 1 + max((abs(Fraction(c) / lc) for c in p[:-1]), default=Fraction(0))


def sturm_isolate(p) -> list[IsolatingInterval]:
    """Isolate the distinct real roots of ``p``, sorted by lower endpoint."""
    a = _coeffs(p)
    if not a:
        raise DomainError("the zero polynomial has no isolated roots")
    if len(a) == 1:
        return []
    sq = upoly.primitive_int(upoly.squarefree_part([Fraction(c) for c in a]))
    key = tuple(sq)
    seq = sturm_sequence(sq)
    bound = cauchy_bound(sq)
    out: list[IsolatingInterval] = []

    def count(lo, hi):
        return _variations(seq, lo) - _variations(seq, hi)

    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = count(lo, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(IsolatingInterval(lo, hi, key))
            continue
        mid = (lo + hi) / 2
        if upoly.evaluate(sq, mid) == 0:
            out.append(IsolatingInterval(mid, mid, key))
            delta = (hi - lo) / 4
            while True:
                a_, b_ = mid - delta, mid + delta
                if (upoly.evaluate(sq, a_) != 0 and upoly.evaluate(sq, b_) != 0
                        and count(a_, b_) == 1):
                    break
                delta /= 2
            stack.append((lo, mid - delta))
            stack.append((mid + delta, hi))
        else:
            stack.append((lo, mid))
            stack.append((mid, hi))
    out.sort(key=lambda iv: iv.lo)
    # neighbours may share a bisection point; shrink until they are disjoint
    for k in range(len(out) - 1):
        while out[k].hi >= out[k + 1].lo:
            out[k] = out[k].refine(out[k].width / 2)
    return out


def count_real_roots(p) -> int:
    return len(sturm_isolate(p))


def rational_roots(p) -> list[Fraction]:
    """All rational roots (without multiplicity), ascending."""
    a = _coeffs(p)
    if not a:
        raise DomainError("the zero polynomial has every root")
    if len(a) == 1:
        return []
    sq = upoly.primitive_int(upoly.squarefree_part([Fraction(c) for c in a]))
    lead = abs(sq[-1])
    # distinct rationals with denominator <= lead are >= 1/lead^2 apart
    target = Fraction(1, 2 * lead * lead)
    roots = []
    for iv in sturm_isolate(sq):
        if iv.is_exact:
            roots.append(iv.lo)
            continue
        iv = iv.refine(target)
        if iv.is_exact:
            roots.append(iv.lo)
            continue
        cand = ((iv.lo + iv.hi) / 2).limit_denominator(lead)
        if iv.contains(cand) and upoly.evaluate(sq, cand) == 0:
            roots.append(cand)
    return sorted(roots)
