"""Concrete finite groups as multiplication tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Hashable, Sequence

from .cosets import CosetTable, IncompleteTableError, column
from .presentation import Presentation

NOT_HOM = "not_hom"
HOM = "hom"
EPIMORPHISM = "epimorphism"


class InvalidTableError(ValueError):
    pass


@dataclass(frozen=True)
class MulTable:
    """``mul[a][b]`` is the index of a*b; ``identity`` the neutral element.
    ``labels`` optionally names the elements."""

    mul: tuple[tuple[int, ...], ...]
    identity: int = 0
    labels: tuple | None = None

    def __post_init__(self):
        n = len(self.mul)
        object.__setattr__(self, "mul", tuple(tuple(r) for r in self.mul))
        if n == 0 or any(len(r) != n for r in self.mul):
            raise InvalidTableError("table must be square and nonempty")
        if not 0 <= self.identity < n:
            raise InvalidTableError("identity out of range")
        e = self.identity
        if any(self.mul[e][a] != a or self.mul[a][e] != a for a in range(n)):
            raise InvalidTableError("identity is not two-sided")
        for row in self.mul:
            if sorted(row) != list(range(n)):
                raise InvalidTableError("rows must be permutations")
        inv = [0] * n
        for a in range(n):
            inv[a] = self.mul[a].index(e)
        object.__setattr__(self, "_inv", tuple(inv))

    @property
    def order(self) -> int:
        return len(self.mul)

    def __len__(self):
        return len(self.mul)

    def m(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inv(self, a: int) -> int:
        return self._inv[a]

    def pow(self, a: int, k: int) -> int:
        base = a if k >= 0 else self.inv(a)
        out = self.identity
        for _ in range(abs(k)):
            out = self.mul[out][base]
        return out

    def element_order(self, a: int) -> int:
        k, cur = 1, a
        while cur != self.identity:
            cur = self.mul[cur][a]
            k += 1
        return k

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a b a^-1 b^-1."""
        m = self.mul
        return m[m[m[a][b]][self.inv(a)]][self.inv(b)]

    def is_associative(self) -> bool:
        m = self.mul
        n = len(m)
        return all(m[m[a][b]][c] == m[a][m[b][c]] for a in range(n) for b in range(n) for c in range(n))

    def is_abelian(self) -> bool:
        m = self.mul
        return all(m[a][b] == m[b][a] for a in range(len(m)) for b in range(a))

    def center(self) -> list[int]:
        m = self.mul
        n = len(m)
        return [a for a in range(n) if all(m[a][b] == m[b][a] for b in range(n))]

    def closure(self, gens: Sequence[int]) -> set[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.mul[a][g]
                    if b not in seen:
                        seen.add(b)
                        nxt.append(b)
            frontier = nxt
        return seen

    def derived_subgroup(self) -> set[int]:
        n = self.order
        comms = {self.commutator(a, b) for a in range(n) for b in range(n)}
        return self.closure(sorted(comms))

    def evaluate(self, word: Sequence[int], images: Sequence[int]) -> int:
        out = self.identity
        for g in word:
            x = images[abs(g) - 1]
            out = self.mul[out][x if g > 0 else self.inv(x)]
        return out

    def generating_set(self) -> list[int]:
        """Greedy small generating set, preferring elements of large order."""
        ranked = sorted(range(self.order), key=lambda a: (-self.element_order(a), a))
        gens: list[int] = []
        span = {self.identity}
        for a in ranked:
            if a not in span:
                gens.append(a)
                span = self.closure(gens)
                if len(span) == self.order:
                    break
        return gens


def table_from_function(elements: Sequence[Hashable], op: Callable, identity) -> MulTable:
    index = {x: i for i, x in enumerate(elements)}
    mul = [[index[op(a, b)] for b in elements] for a in elements]
    return MulTable(tuple(map(tuple, mul)), index[identity], tuple(elements))


def cyclic_table(n: int) -> MulTable:
    return table_from_function(list(range(n)), lambda a, b: (a + b) % n, 0)


def dihedral_elements(n: int) -> list[tuple[int, int]]:
    """Pairs (i, e) standing for r^i s^e in the dihedral group of order 2n."""
    return [(i, e) for e in (0, 1) for i in range(n)]


def dihedral_op(n: int):
    def op(a, b):
        (i, e), (j, f) = a, b
        # r^i s^e r^j s^f = r^(i + (-1)^e j) s^(e + f)
        return ((i + (j if e == 0 else -j)) % n, (e + f) % 2)
    return op


def dihedral_table(n: int) -> MulTable:
    """Dihedral group of order 2n."""
    return table_from_function(dihedral_elements(n), dihedral_op(n), (0, 0))


def direct_product(t1: MulTable, t2: MulTable) -> MulTable:
    pairs = [(a, b) for a in range(t1.order) for b in range(t2.order)]
    labels = None
    if t1.labels is not None and t2.labels is not None:
        labels = tuple((t1.labels[a], t2.labels[b]) for a, b in pairs)
    index = {p: i for i, p in enumerate(pairs)}
    mul = [[index[(t1.mul[a][c], t2.mul[b][d])] for c, d in pairs] for a, b in pairs]
    return MulTable(tuple(map(tuple, mul)), index[(t1.identity, t2.identity)], labels)


def d14_x_c3() -> MulTable:
    """D14 x C3 with elements labelled ((i, e), k) for r^i s^e a^k."""
    return direct_product(dihedral_table(7), cyclic_table(3))


def table_from_cosets(ct: CosetTable) -> MulTable:
    """The regular representation read off a complete coset table of the
    trivial subgroup: coset c stands for the element carrying 0 to c."""
    if not ct.is_complete:
        raise IncompleteTableError("the coset table is not complete")
    if any(ct.subgroup):
        raise IncompleteTableError("need the coset table of the trivial subgroup")
    n = len(ct.table)
    words: list[list[int] | None] = [None] * n
    words[0] = []
    queue = [0]
    ngens = ct.presentation.ngens
    i = 0
    while i < len(queue):
        c = queue[i]
        i += 1
        for g in range(1, ngens + 1):
            for s in (g, -g):
                d = ct.table[c][column(s)]
                if words[d] is None:
                    words[d] = words[c] + [s]
                    queue.append(d)
    mul = [[ct.act(a, words[b]) for b in range(n)] for a in range(n)]
    return MulTable(tuple(map(tuple, mul)), 0)


def generator_images(ct: CosetTable) -> list[int]:
    """Elements of table_from_cosets(ct) represented by the generators."""
    return [ct.table[0][column(g)] for g in range(1, ct.presentation.ngens + 1)]


def verify_homomorphism(src: Presentation, images: Sequence[int], tgt: MulTable) -> str:
    if len(images) != src.ngens:
        raise ValueError("one image per generator is required")
    if any(not 0 <= x < tgt.order for x in images):
        raise ValueError("image outside the target group")
    if any(tgt.evaluate(r, images) != tgt.identity for r in src.relators):
        return NOT_HOM
    if len(tgt.closure(list(images))) == tgt.order:
        return EPIMORPHISM
    return HOM


def identify_small_group(t: MulTable) -> dict:
    """Structural invariants; enough to tell apart the groups of order 42."""
    hist = Counter(t.element_order(a) for a in range(t.order))
    return {
        "order": t.order,
        "abelian": t.is_abelian(),
        "center_order": len(t.center()),
        "derived_order": len(t.derived_subgroup()),
        "element_orders": {str(k): hist[k] for k in sorted(hist)},
    }


def isomorphism_check(t1: MulTable, t2: MulTable, limit: int = 100) -> bool:
    """Search for an isomorphism by backtracking over images of a generating
    set of ``t1``, pruned by element orders."""
    return find_isomorphism(t1, t2, limit) is not None


def find_isomorphism(t1: MulTable, t2: MulTable, limit: int = 100) -> list[int] | None:
    if t1.order != t2.order:
        return None
    if t1.order > limit:
        raise ValueError(f"isomorphism search is limited to order <= {limit}")
    ord1 = [t1.element_order(a) for a in range(t1.order)]
    ord2 = [t2.element_order(a) for a in range(t2.order)]
    if Counter(ord1) != Counter(ord2) or t1.is_abelian() != t2.is_abelian():
        return None
    gens = t1.generating_set()
    by_order: dict[int, list[int]] = {}
    for b, k in enumerate(ord2):
        by_order.setdefault(k, []).append(b)

    def extend(images: list[int]) -> list[int] | None:
        phi = {t1.identity: t2.identity}
        queue = [t1.identity]
        i = 0
        while i < len(queue):
            a = queue[i]
            i += 1
            for g, h in zip(gens, images):
                a2, b2 = t1.mul[a][g], t2.mul[phi[a]][h]
                if a2 in phi:
                    if phi[a2] != b2:
                        return None
                else:
                    phi[a2] = b2
                    queue.append(a2)
        if len(set(phi.values())) != t1.order:
            return None
        return [phi[a] for a in range(t1.order)]

    def search(k: int, images: list[int]) -> list[int] | None:
        if k == len(gens):
            return extend(images)
        for b in by_order[ord1[gens[k]]]:
            found = search(k + 1, images + [b])
            if found is not None:
                return found
        return None

    return search(0, [])
