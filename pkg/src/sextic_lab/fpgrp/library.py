"""Named presentations and the concrete target group of order 42."""

from __future__ import annotations

from .multable import MulTable, d14_x_c3
from .presentation import Presentation, parse_presentation
from .words import conjugate, inverse, mul, power

G_TEXT = "<w,x | x^2, w^2=x*w^5*x>"
G2_TEXT = "<w,x | x^2, w^21, x*w^15*x=w^6, [w^7,x]>"
D14XC3_TEXT = "<a,b,x | x^2, a^3, b^7, x*b*x=b^6, [a,b], [a,x]>"
FREE2_TEXT = "<a,b | >"


def presentation_G() -> Presentation:
    """The two-generator group: w is the loop product, x the involution."""
    return parse_presentation(G_TEXT)


def presentation_G2() -> Presentation:
    return parse_presentation(G2_TEXT)


def presentation_d14_x_c3() -> Presentation:
    return parse_presentation(D14XC3_TEXT)


def build_vankampen_presentation() -> Presentation:
    """Generators r1..r6 with the monodromy relations of the pencil.

    With w = r6 r5 and t = r2 r1, and the fiber generators
    r2' = t^-1 r1 t, r1' = t^-2 r2 t^2:

    * tangency:   r4 = r5,  r3 = r4^-1 r6 r4
    * two cusps:  w^3 r6 = r4 w^3,  t^3 r2 = r1 t^3
    * fiber eta4: r3 = t^-1 r1 t
    * cusp at 1/2: A^3 r4 = B A^3 where B = r2' r1' r2'^-1, A = r4 B
    * infinity:   w^2 t = 1
    """
    r1, r2, r3, r4, r5, r6 = ((i,) for i in range(1, 7))
    w = mul(r6, r5)
    t = mul(r2, r1)
    r2p = conjugate(r1, t)
    r1p = conjugate(r2, power(t, 2))
    B = mul(r2p, r1p, inverse(r2p))
    A = mul(r4, B)
    A3 = power(A, 3)

    def eq(lhs, rhs):
        return mul(lhs, inverse(rhs))

    relators = (
        eq(r4, r5),
        eq(r3, conjugate(r6, r4)),
        eq(mul(power(w, 3), r6), mul(r4, power(w, 3))),
        eq(mul(power(t, 3), r2), mul(r1, power(t, 3))),
        eq(r3, conjugate(r1, t)),
        eq(mul(A3, r4), mul(B, A3)),
        mul(power(w, 2), t),
    )
    return Presentation(("r1", "r2", "r3", "r4", "r5", "r6"), relators)


def vankampen_loops() -> dict[str, tuple[int, ...]]:
    """The words w = r6 r5 and x = w r6 in the van Kampen generators."""
    w = (6, 5)
    return {"w": w, "x": mul(w, (6,))}


def d14_x_c3_images(table: MulTable | None = None) -> tuple[MulTable, list[int]]:
    """Images of (w, x) in D14 x C3: x -> reflection s, w -> r * a."""
    table = d14_x_c3() if table is None else table
    index = {lab: i for i, lab in enumerate(table.labels)}
    return table, [index[((1, 0), 1)], index[((0, 1), 0)]]


def dihedral_images(table: MulTable) -> list[int]:
    """Images of (w, x) in the dihedral group of order 14: w -> r, x -> s."""
    index = {lab: i for i, lab in enumerate(table.labels)}
    return [index[(1, 0)], index[(0, 1)]]


NAMED = {
    "G": presentation_G,
    "G2": presentation_G2,
    "D14xC3": presentation_d14_x_c3,
    "vankampen": build_vankampen_presentation,
}


def lookup(name_or_text: str) -> Presentation:
    if name_or_text in NAMED:
        return NAMED[name_or_text]()
    return parse_presentation(name_or_text)


__all__ = [
    "G_TEXT", "G2_TEXT", "D14XC3_TEXT", "presentation_G", "presentation_G2",
    "presentation_d14_x_c3", "build_vankampen_presentation", "vankampen_loops",
    "d14_x_c3_images", "dihedral_images", "NAMED", "lookup",
]
