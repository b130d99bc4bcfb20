"""Todd-Coxeter coset enumeration (HLT strategy with coincidence handling).

Columns are laid out as (g1, g1^-1, g2, g2^-1, ...); column ``c ^ 1`` is the
inverse of column ``c``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Sequence

from .presentation import Presentation
from .words import Word, free_reduce

DEFAULT_LIMIT = 10 ** 6
COMPLETE = "complete"
OVERFLOW = "overflow"


def default_limit() -> int:
    raw = os.environ.get("SEXTIC_LAB_COSET_LIMIT")
    if raw:
        try:
            value = int(raw)
        except ValueError:
            raise ValueError(f"SEXTIC_LAB_COSET_LIMIT must be an integer, got {raw!r}") from None
        if value < 1:
            raise ValueError("SEXTIC_LAB_COSET_LIMIT must be positive")
        return value
    return DEFAULT_LIMIT


def column(g: int) -> int:
    return 2 * (abs(g) - 1) + (g < 0)


class IncompleteTableError(ValueError):
    pass


@dataclass
class CosetTable:
    """Coset action of a finitely presented group on a subgroup.

    ``table[c][col]`` is the coset reached from ``c`` or ``None``. After a
    complete enumeration the table is compressed and standardized so that
    cosets are numbered 0..n-1 in breadth-first order.
    """

    presentation: Presentation
    subgroup: tuple[Word, ...]
    table: list[list[int | None]]
    status: str
    defined: int = 0
    max_live: int = 0

    @property
    def is_complete(self) -> bool:
        return self.status == COMPLETE

    @property
    def index(self) -> int:
        if not self.is_complete:
            raise IncompleteTableError("enumeration did not complete")
        return len(self.table)

    def act(self, coset: int, word: Sequence[int]) -> int | None:
        for g in word:
            coset = self.table[coset][column(g)]
            if coset is None:
                return None
        return coset

    def is_permutation_table(self) -> bool:
        n = len(self.table)
        for col in range(2 * self.presentation.ngens):
            images = [row[col] for row in self.table]
            if None in images or sorted(images) != list(range(n)):
                return False
            if any(self.table[row[col]][col ^ 1] != c for c, row in enumerate(self.table)):
                return False
        return True

    def relators_hold(self) -> bool:
        return all(self.act(c, r) == c for r in self.presentation.relators
                   for c in range(len(self.table)))

    def to_json(self) -> dict:
        return {"status": self.status, "cosets": len(self.table) if self.is_complete else None,
                "defined": self.defined, "max_live": self.max_live}


class _Enumerator:
    def __init__(self, pres: Presentation, limit: int):
        self.ncols = 2 * pres.ngens
        self.rows: list[list[int | None]] = [[None] * self.ncols]
        self.parent = [0]
        self.live = 1
        self.limit = limit
        self.defined = 1
        self.max_live = 1
        self.overflow = False

    def rep(self, c: int) -> int:
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def define(self, c: int, col: int) -> bool:
        if self.live >= self.limit:
            self.overflow = True
            return False
        d = len(self.rows)
        self.rows.append([None] * self.ncols)
        self.parent.append(d)
        self.rows[c][col] = d
        self.rows[d][col ^ 1] = c
        self.live += 1
        self.defined += 1
        self.max_live = max(self.max_live, self.live)
        return True

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        lo, hi = min(a, b), max(a, b)
        self.parent[hi] = lo
        self.live -= 1
        queue.append(hi)

    def coincidence(self, a: int, b: int) -> None:
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            g = queue[i]
            i += 1
            row = self.rows[g]
            for col in range(self.ncols):
                d = row[col]
                if d is None:
                    continue
                inv = col ^ 1
                if self.rows[d][inv] == g:
                    self.rows[d][inv] = None
                mu, nu = self.rep(g), self.rep(d)
                if self.rows[mu][col] is not None:
                    self._merge(nu, self.rows[mu][col], queue)
                elif self.rows[nu][inv] is not None:
                    self._merge(mu, self.rows[nu][inv], queue)
                else:
                    self.rows[mu][col] = nu
                    self.rows[nu][inv] = mu

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        cols = [column(g) for g in word]
        f = b = c
        i, j = 0, len(cols) - 1
        while True:
            while i <= j and self.rows[f][cols[i]] is not None:
                f = self.rows[f][cols[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and self.rows[b][cols[j] ^ 1] is not None:
                b = self.rows[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                self.rows[f][cols[i]] = b
                self.rows[b][cols[i] ^ 1] = f
                return
            if not self.define(f, cols[i]):
                return


def coset_enumerate(pres: Presentation, subgroup: Sequence[Sequence[int]] = (),
                    limit: int | None = None) -> CosetTable:
    """Enumerate cosets of the subgroup generated by ``subgroup``.

    Relators are scanned in declaration order from each live coset in
    creation order; missing entries are then filled. Exceeding ``limit``
    live cosets stops the run with status ``overflow``.
    """
    limit = default_limit() if limit is None else limit
    if limit < 1:
        raise ValueError("limit must be positive")
    subgroup = tuple(free_reduce(w) for w in subgroup)
    for w in subgroup:
        if any(abs(g) > pres.ngens for g in w):
            raise ValueError("subgroup generator uses an unknown generator")
    en = _Enumerator(pres, limit)
    for w in subgroup:
        en.scan_and_fill(0, w)
    c = 0
    while c < len(en.rows) and not en.overflow:
        if en.is_live(c):
            for r in pres.relators:
                en.scan_and_fill(c, r)
                if not en.is_live(c) or en.overflow:
                    break
            if en.is_live(c) and not en.overflow:
                for col in range(en.ncols):
                    if en.rows[c][col] is None and not en.define(c, col):
                        break
        c += 1
    if en.overflow:
        rows = [list(r) for r in en.rows]
        return CosetTable(pres, subgroup, rows, OVERFLOW, en.defined, en.max_live)
    return CosetTable(pres, subgroup, _standardize(en), COMPLETE, en.defined, en.max_live)


def _standardize(en: _Enumerator) -> list[list[int]]:
    """Renumber live cosets 0..n-1 in breadth-first order from coset 0."""
    order = {0: 0}
    queue = [0]
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for col in range(en.ncols):
            d = en.rep(en.rows[c][col])
            if d not in order:
                order[d] = len(queue)
                queue.append(d)
    return [[order[en.rep(en.rows[c][col])] for col in range(en.ncols)] for c in queue]


def group_order(pres: Presentation, limit: int | None = None) -> int | None:
    ct = coset_enumerate(pres, (), limit)
    return ct.index if ct.is_complete else None
