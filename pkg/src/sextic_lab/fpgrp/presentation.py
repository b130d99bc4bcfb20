"""Finitely presented groups and their text format.

Grammar::

    presentation := "<" names "|" [relation ("," relation)*] ">"
    names        := name ("," name)*
    relation     := word | word "=" word
    word         := factor ("*" factor)*
    factor       := (name | "1" | "(" word ")" | "[" word "," word "]") ["^" integer]

An equation ``lhs=rhs`` becomes the relator ``lhs * rhs^-1``. Relators are
stored freely and cyclically reduced; trivial ones are dropped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from ..exact.snf import smith_normal_form
from .words import (Word, WordSyntaxError, cyclic_reduce, exponent_sums, format_word,
                    inverse, mul, parse_word)

_NAME = re.compile(r"[^\W\d]\w*$")


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    def __post_init__(self):
        gens = tuple(self.generators)
        if len(set(gens)) != len(gens):
            raise ValueError("duplicate generator names")
        for g in gens:
            if not _NAME.match(g):
                raise ValueError(f"bad generator name {g!r}")
        rels = []
        for r in self.relators:
            if any(g == 0 or abs(g) > len(gens) for g in r):
                raise ValueError(f"relator {r} refers to a missing generator")
            r = cyclic_reduce(r)
            if r:
                rels.append(r)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relators", tuple(rels))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    def word(self, text: str) -> Word:
        return parse_word(text, self.generators)

    def format_word(self, w: Sequence[int]) -> str:
        return format_word(w, self.generators)

    def __str__(self) -> str:
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{','.join(self.generators)} | {rels}>"

    def exponent_matrix(self) -> list[list[int]]:
        return [exponent_sums(r, self.ngens) for r in self.relators]


def _split_top(text: str, sep: str) -> list[str]:
    out, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def parse_presentation(text: str) -> Presentation:
    s = text.strip()
    if not (s.startswith("<") and s.endswith(">")):
        raise WordSyntaxError("a presentation is written <gens | relations>")
    body = s[1:-1]
    if "|" not in body:
        raise WordSyntaxError("missing '|' between generators and relations")
    head, tail = body.split("|", 1)
    names = tuple(n.strip() for n in head.split(",") if n.strip())
    if not names:
        raise WordSyntaxError("no generators")
    rels = []
    for chunk in _split_top(tail, ","):
        chunk = chunk.strip()
        if not chunk:
            continue
        sides = chunk.split("=")
        if len(sides) > 2:
            raise WordSyntaxError(f"more than one '=' in {chunk!r}")
        lhs = parse_word(sides[0], names)
        rhs = parse_word(sides[1], names) if len(sides) == 2 else ()
        rels.append(mul(lhs, inverse(rhs)))
    return Presentation(names, tuple(rels))


def abelianization(p: Presentation) -> tuple[int, ...]:
    """Invariant factors of the abelianization other than 1; a 0 stands
    for a free cyclic factor."""
    m = p.exponent_matrix()
    if not m:
        return (0,) * p.ngens
    factors = list(smith_normal_form(m).factors)
    factors += [0] * (p.ngens - len(factors))
    return tuple(d for d in factors if d != 1)


def free_group(names: Sequence[str]) -> Presentation:
    return Presentation(tuple(names), ())


# Tietze moves, used to test invariance of derived data

def add_redundant_relator(p: Presentation, i: int, j: int) -> Presentation:
    """Append the product of relators i and j."""
    return Presentation(p.generators, p.relators + (mul(p.relators[i], p.relators[j]),))


def add_generator(p: Presentation, name: str, word: Sequence[int]) -> Presentation:
    """New generator ``name`` with the defining relator name = word."""
    gens = p.generators + (name,)
    return Presentation(gens, p.relators + (mul((len(gens),), inverse(word)),))
