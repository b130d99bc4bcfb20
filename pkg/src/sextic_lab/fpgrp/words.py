"""Words in a free group: tuples of signed 1-based generator indices."""

from __future__ import annotations

import re
from typing import Iterable, Sequence

Word = tuple[int, ...]


class WordSyntaxError(ValueError):
    pass


def free_reduce(w: Iterable[int]) -> Word:
    out: list[int] = []
    for g in w:
        if g == 0:
            raise ValueError("generator index 0 is not allowed")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def cyclic_reduce(w: Iterable[int]) -> Word:
    w = list(free_reduce(w))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i:j + 1])


def inverse(w: Sequence[int]) -> Word:
    return tuple(-g for g in reversed(w))


def mul(*ws: Sequence[int]) -> Word:
    return free_reduce(g for w in ws for g in w)


def power(w: Sequence[int], k: int) -> Word:
    base = tuple(w) if k >= 0 else inverse(w)
    return free_reduce(base * abs(k))


def commutator(a: Sequence[int], b: Sequence[int]) -> Word:
    """[a, b] = a b a^-1 b^-1."""
    return mul(a, b, inverse(a), inverse(b))


def conjugate(w: Sequence[int], by: Sequence[int]) -> Word:
    """by^-1 w by."""
    return mul(inverse(by), w, by)


def exponent_sums(w: Sequence[int], ngens: int) -> list[int]:
    out = [0] * ngens
    for g in w:
        out[abs(g) - 1] += 1 if g > 0 else -1
    return out


# text form: "w^2*x*w^-5*x", "1" for the empty word; the parser also takes
# parentheses with exponents and commutators [u, v]

_TOKEN = re.compile(r"\s*(?:(?P<num>-?\d+)|(?P<name>[^\W\d]\w*)|(?P<op>[\^*()\[\],]))")


def _tokens(text: str) -> list[tuple[str, str]]:
    out, pos = [], 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise WordSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _WordParser:
    def __init__(self, text: str, names: Sequence[str]):
        self.toks = _tokens(text)
        self.i = 0
        self.index = {n: k + 1 for k, n in enumerate(names)}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise WordSyntaxError(f"expected {value or 'a token'}, got {tok[1]!r}")
        self.i += 1
        return tok

    def word(self) -> Word:
        parts = [self.factor()]
        while self.peek()[1] == "*":
            self.take("*")
            parts.append(self.factor())
        return mul(*parts)

    def factor(self) -> Word:
        kind, val = self.peek()
        if val == "(":
            self.take("(")
            base = self.word()
            self.take(")")
        elif val == "[":
            self.take("[")
            a = self.word()
            self.take(",")
            b = self.word()
            self.take("]")
            base = commutator(a, b)
        elif kind == "num" and val == "1":
            self.take()
            base = ()
        elif kind == "name":
            self.take()
            if val not in self.index:
                raise WordSyntaxError(f"unknown generator {val!r}")
            base = (self.index[val],)
        else:
            raise WordSyntaxError(f"unexpected token {val!r}")
        if self.peek()[1] == "^":
            self.take("^")
            kind, val = self.take()
            if kind != "num":
                raise WordSyntaxError("exponent must be an integer")
            base = power(base, int(val))
        return base

    def done(self) -> bool:
        return self.i == len(self.toks)


def parse_word(text: str, names: Sequence[str]) -> Word:
    p = _WordParser(text, names)
    w = p.word()
    if not p.done():
        raise WordSyntaxError(f"trailing input after word: {text!r}")
    return w


def format_word(w: Sequence[int], names: Sequence[str]) -> str:
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = names[abs(w[i]) - 1]
        k = (j - i) * (1 if w[i] > 0 else -1)
        parts.append(name if k == 1 else f"{name}^{k}")
        i = j
    return "*".join(parts)
