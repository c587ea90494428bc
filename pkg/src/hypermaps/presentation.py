"""Coset enumeration for quotients of free products of involutions.

A :class:`Presentation` lists relators over Delta (arity 3) or over the
bipartite subgroup (arity 4); the squares of the generators are implicit.
Enumeration is relative to the trivial subgroup, so the coset table is the
right regular representation of the quotient group.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass

from .errors import CapacityExceeded
from .hypermap import Hypermap, Perm
from .words import BWord, DeltaWord

DEFAULT_MAX_COSETS = 10**6


@dataclass(frozen=True)
class Presentation:
    arity: int
    relators: tuple
    max_cosets: int = DEFAULT_MAX_COSETS

    def __post_init__(self):
        if self.arity not in (3, 4):
            raise ValueError("arity must be 3 (Delta) or 4 (bipartite subgroup)")
        if self.max_cosets < 1:
            raise ValueError("max_cosets must be positive")
        kind = DeltaWord if self.arity == 3 else BWord
        rels = []
        for r in self.relators:
            w = r if isinstance(r, kind) else kind(r)
            if len(w):
                rels.append(w)
        object.__setattr__(self, "relators", tuple(rels))

    @classmethod
    def from_text(cls, text: str, max_cosets: int = DEFAULT_MAX_COSETS) -> Presentation:
        lines = [line.split("#", 1)[0].strip() for line in text.splitlines()]
        lines = [line for line in lines if line]
        if not lines or lines[0] not in ("delta", "b"):
            raise ValueError("presentation text must start with 'delta' or 'b'")
        arity = 3 if lines[0] == "delta" else 4
        return cls(arity, tuple(lines[1:]), max_cosets)

    def to_text(self) -> str:
        head = "delta" if self.arity == 3 else "b"
        return "\n".join([head] + [str(r) for r in self.relators]) + "\n"


class _CosetTable:
    """HLT enumeration with coincidence processing.

    Every generator is its own inverse, so a single column per generator
    holds both ``c.x`` and ``c.x^-1``.
    """

    def __init__(self, ngens: int, cap: int):
        self.ngens = ngens
        self.cap = cap
        self.table: list[list[int | None]] = [[None] * ngens]
        self.parent = [0]

    def define(self, c: int, x: int) -> int:
        if len(self.table) >= self.cap:
            raise CapacityExceeded(self.cap, "coset enumeration")
        d = len(self.table)
        self.table.append([None] * self.ngens)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x] = c
        return d

    def rep(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    def _merge(self, k: int, l: int, queue: list[int]) -> None:
        k, l = self.rep(k), self.rep(l)
        if k == l:
            return
        k, l = min(k, l), max(k, l)
        self.parent[l] = k
        queue.append(l)

    def coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            dead = queue[i]
            i += 1
            row = table[dead]
            for x in range(self.ngens):
                d = row[x]
                if d is None:
                    continue
                if table[d][x] == dead:
                    table[d][x] = None
                mu, nu = self.rep(dead), self.rep(d)
                if table[mu][x] is not None:
                    self._merge(nu, table[mu][x], queue)
                elif table[nu][x] is not None:
                    self._merge(mu, table[nu][x], queue)
                else:
                    table[mu][x] = nu
                    table[nu][x] = mu

    def scan_and_fill(self, c: int, word: Sequence[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i and table[b][word[j]] is not None:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            self.define(f, word[i])

    def run(self, relators: Sequence[Sequence[int]]) -> None:
        c = 0
        while c < len(self.table):
            for r in relators:
                if not self.is_live(c):
                    break
                self.scan_and_fill(c, r)
            if self.is_live(c):
                for x in range(self.ngens):
                    if self.table[c][x] is None:
                        self.define(c, x)
            c += 1

    def standardized(self) -> tuple[Perm, ...]:
        """Renumber live cosets by BFS discovery from coset 0."""
        order = [0]
        index = {0: 0}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for x in range(self.ngens):
                d = self.table[c][x]
                if d not in index:
                    index[d] = len(order)
                    order.append(d)
                    queue.append(d)
        return tuple(tuple(index[self.table[c][x]] for c in order) for x in range(self.ngens))


def coset_enumerate(p: Presentation) -> tuple[Perm, ...]:
    """The quotient group's right regular action, one permutation per generator.

    Coset 0 is the identity; the remaining cosets are numbered in BFS order
    over generators taken in increasing order.
    """
    ct = _CosetTable(p.arity, p.max_cosets)
    ct.run([r.letters for r in p.relators])
    return ct.standardized()


def regular_hypermap_from_delta_relators(relators, cap: int = DEFAULT_MAX_COSETS) -> Hypermap:
    """The regular hypermap whose subgroup is the normal closure of ``relators`` in Delta."""
    gens = coset_enumerate(Presentation(3, tuple(relators), cap))
    return Hypermap(*gens)


def bipartite_hypermap_from_b_relators(relators, cap: int = DEFAULT_MAX_COSETS) -> Hypermap:
    """The bipartite-regular hypermap whose subgroup is the normal closure of
    ``relators`` in the bipartite subgroup.

    Flags are ``(q, 0)`` numbered ``q`` and ``(q, 1)`` numbered ``|Q| + q``
    for ``q`` in the enumerated quotient ``Q``.
    """
    from .construct import hypermap_from_b_action

    a, b, c, d = coset_enumerate(Presentation(4, tuple(relators), cap))
    return hypermap_from_b_action(a, b, c, d)
