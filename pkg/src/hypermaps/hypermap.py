"""Finite hypermaps as triples of involutions and their single-hypermap invariants.

Flags are ``0 .. n-1`` and flag 0 is the base flag.  Generators act on the
right: the image of flag ``f`` under ``h_i`` is ``h.gens[i][f]`` and a word
``w`` acts by applying its letters left to right.
"""

from __future__ import annotations

import json
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import asdict, dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import BoundaryPresent, NotBipartite, NotInvolution, NotTransitive, OddFlagCount
from .words import ThetaClass

Perm = tuple[int, ...]

# generator pairs whose orbits are vertices, edges and faces
CELL_GENERATORS = {"vertex": (1, 2), "edge": (2, 0), "face": (0, 1)}


def validate(h0: Sequence[int], h1: Sequence[int], h2: Sequence[int]) -> None:
    """Raise unless the three sequences are involutions generating a transitive group."""
    n = len(h0)
    if n == 0:
        raise ValueError("a hypermap needs at least one flag")
    gens = (h0, h1, h2)
    for i, g in enumerate(gens):
        if len(g) != n:
            raise ValueError(f"h{i} has {len(g)} entries, expected {n}")
        if any(not (0 <= x < n) for x in g):
            raise NotInvolution(i)
        if any(g[g[f]] != f for f in range(n)):
            raise NotInvolution(i)
    seen = [False] * n
    seen[0] = True
    stack = [0]
    count = 1
    while stack:
        f = stack.pop()
        for g in gens:
            y = g[f]
            if not seen[y]:
                seen[y] = True
                count += 1
                stack.append(y)
    if count != n:
        raise NotTransitive(count, n)


def _orbits(n: int, gens: Sequence[Perm]) -> list[tuple[int, ...]]:
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        orbit = [start]
        stack = [start]
        while stack:
            f = stack.pop()
            for g in gens:
                y = g[f]
                if not seen[y]:
                    seen[y] = True
                    orbit.append(y)
                    stack.append(y)
        out.append(tuple(sorted(orbit)))
    return out


class BipartiteType(NamedTuple):
    """Valencies (l1, l2; m; n), with l1 the valency of vertices in the part of flag 0."""

    l1: int
    l2: int
    m: int
    n: int

    def canonical(self) -> BipartiteType:
        return BipartiteType(min(self.l1, self.l2), max(self.l1, self.l2), self.m, self.n)

    def __str__(self):
        return f"({self.l1},{self.l2};{self.m};{self.n})"


@dataclass(frozen=True)
class InvariantReport:
    n: int
    V: int
    E: int
    F: int
    chi: int | None
    orientable: bool
    has_boundary: bool
    bipartite: bool
    genus: int | None
    uniform_type: tuple[int, int, int] | None
    bipartite_type: tuple[int, int, int, int] | None

    def as_dict(self) -> dict:
        d = asdict(self)
        for key in ("uniform_type", "bipartite_type"):
            if d[key] is not None:
                d[key] = list(d[key])
        return d

    def to_text(self) -> str:
        lines = []
        for key, value in self.as_dict().items():
            if value is None:
                text = "-"
            elif isinstance(value, bool):
                text = str(value).lower()
            elif key == "uniform_type":
                text = "({},{},{})".format(*value)
            elif key == "bipartite_type":
                text = str(BipartiteType(*value))
            else:
                text = str(value)
            lines.append(f"{key}: {text}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Hypermap:
    """A transitive action of Delta on ``n`` flags by three involutions."""

    h0: Perm
    h1: Perm
    h2: Perm

    def __post_init__(self):
        for name in ("h0", "h1", "h2"):
            object.__setattr__(self, name, tuple(int(x) for x in getattr(self, name)))
        validate(self.h0, self.h1, self.h2)

    @property
    def n(self) -> int:
        return len(self.h0)

    def __len__(self):
        return len(self.h0)

    @property
    def gens(self) -> tuple[Perm, Perm, Perm]:
        return (self.h0, self.h1, self.h2)

    # -- action -----------------------------------------------------------

    def act(self, flag: int, w: Iterable[int]) -> int:
        gens = self.gens
        for x in w:
            flag = gens[x][flag]
        return flag

    def evaluate(self, w: Iterable[int]) -> Perm:
        """The permutation of flags induced by the Delta-word ``w``."""
        perm = list(range(self.n))
        gens = self.gens
        for x in w:
            g = gens[x]
            perm = [g[f] for f in perm]
        return tuple(perm)

    # -- cells ------------------------------------------------------------

    def cells(self, kind: str) -> list[tuple[int, ...]]:
        """Vertices, edges or faces as sorted flag tuples, ordered by smallest flag."""
        return self._cells[kind]

    @cached_property
    def _cells(self) -> dict[str, list[tuple[int, ...]]]:
        gens = self.gens
        return {kind: _orbits(self.n, [gens[i] for i in pair]) for kind, pair in CELL_GENERATORS.items()}

    @property
    def V(self) -> int:
        return len(self.cells("vertex"))

    @property
    def E(self) -> int:
        return len(self.cells("edge"))

    @property
    def F(self) -> int:
        return len(self.cells("face"))

    def euler_characteristic(self) -> int:
        if self.n % 2:
            raise OddFlagCount(self.n)
        return self.V + self.E + self.F - self.n // 2

    def has_boundary(self) -> bool:
        # a conjugate of R_i lies in a flag stabiliser iff h_i fixes some flag
        return any(g[f] == f for g in self.gens for f in range(self.n))

    def genus(self) -> int:
        if self.has_boundary():
            raise BoundaryPresent("genus")
        chi = self.euler_characteristic()
        if self.is_orientable():
            return (2 - chi) // 2
        return 2 - chi

    # -- colourings -------------------------------------------------------

    def theta_coloring(self, t: ThetaClass) -> tuple[int, ...] | None:
        """2-colouring of the flags compatible with ``t``, or None if the
        stabiliser of flag 0 is not contained in ``t``."""
        cache = self._coloring_cache
        if t not in cache:
            cache[t] = self._compute_coloring(t)
        return cache[t]

    @cached_property
    def _coloring_cache(self) -> dict:
        return {}

    def _compute_coloring(self, t: ThetaClass) -> tuple[int, ...] | None:
        flips = t.parity_vector
        gens = self.gens
        color = [-1] * self.n
        color[0] = 0
        queue = deque([0])
        while queue:
            f = queue.popleft()
            for i, g in enumerate(gens):
                y = g[f]
                if color[y] < 0:
                    color[y] = color[f] ^ flips[i]
                    queue.append(y)
        # BFS tree edges agree by construction; every other edge must too
        for i, g in enumerate(gens):
            if any(color[g[f]] != color[f] ^ flips[i] for f in range(self.n)):
                return None
        return tuple(color)

    def is_conservative(self, t: ThetaClass) -> bool:
        return self.theta_coloring(t) is not None

    def is_orientable(self) -> bool:
        return self.is_conservative(ThetaClass.PLUS)

    def is_bipartite(self) -> bool:
        return self.is_conservative(ThetaClass.HAT0)

    def bipartite_parts(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The two orbits of the bipartite subgroup; the first contains flag 0."""
        color = self.theta_coloring(ThetaClass.HAT0)
        if color is None:
            raise NotBipartite("hypermap is not bipartite")
        a = tuple(f for f in range(self.n) if color[f] == 0)
        b = tuple(f for f in range(self.n) if color[f] == 1)
        return a, b

    # -- types ------------------------------------------------------------

    def _valencies(self, kind: str) -> set[int]:
        return {len(c) // 2 for c in self.cells(kind)}

    def uniform_type(self) -> tuple[int, int, int] | None:
        if self.has_boundary():
            raise BoundaryPresent("valency")
        vals = [self._valencies(kind) for kind in ("vertex", "edge", "face")]
        if any(len(v) != 1 for v in vals):
            return None
        return tuple(v.pop() for v in vals)

    def bipartite_type(self) -> BipartiteType | None:
        if self.has_boundary():
            raise BoundaryPresent("valency")
        color = self.theta_coloring(ThetaClass.HAT0)
        if color is None:
            raise NotBipartite("bipartite-type of a non-bipartite hypermap")
        edges, faces = self._valencies("edge"), self._valencies("face")
        by_part: list[set[int]] = [set(), set()]
        for cell in self.cells("vertex"):
            by_part[color[cell[0]]].add(len(cell) // 2)
        if len(edges) != 1 or len(faces) != 1 or any(len(p) != 1 for p in by_part):
            return None
        return BipartiteType(by_part[0].pop(), by_part[1].pop(), edges.pop(), faces.pop())

    def report(self) -> InvariantReport:
        boundary = self.has_boundary()
        chi = None if self.n % 2 else self.euler_characteristic()
        bipartite = self.is_bipartite()
        btype = self.bipartite_type() if bipartite and not boundary else None
        return InvariantReport(
            n=self.n,
            V=self.V,
            E=self.E,
            F=self.F,
            chi=chi,
            orientable=self.is_orientable(),
            has_boundary=boundary,
            bipartite=bipartite,
            genus=None if boundary else self.genus(),
            uniform_type=None if boundary else self.uniform_type(),
            bipartite_type=tuple(btype) if btype is not None else None,
        )

    def is_map(self) -> bool:
        """True when h2 h0 has order dividing 2."""
        return all(self.h0[self.h2[self.h0[self.h2[f]]]] == f for f in range(self.n))

    # -- serialisation ----------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self.n)] + [" ".join(map(str, g)) for g in self.gens]
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {"n": self.n, "h0": list(self.h0), "h1": list(self.h1), "h2": list(self.h2)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_text(cls, text: str) -> Hypermap:
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if len(lines) != 4:
            raise ValueError(f"hypermap text needs 4 non-empty lines, found {len(lines)}")
        n = int(lines[0])
        gens = [tuple(int(x) for x in line.split()) for line in lines[1:]]
        for i, g in enumerate(gens):
            if len(g) != n:
                raise ValueError(f"line for h{i} has {len(g)} entries, expected {n}")
        return cls(*gens)

    @classmethod
    def from_dict(cls, data: dict) -> Hypermap:
        gens = [data[k] for k in ("h0", "h1", "h2")]
        if "n" in data and any(len(g) != data["n"] for g in gens):
            raise ValueError("generator length does not match n")
        return cls(*gens)

    @classmethod
    def loads(cls, text: str) -> Hypermap:
        """Read either the text or the JSON format."""
        if text.lstrip().startswith("{"):
            return cls.from_dict(json.loads(text))
        return cls.from_text(text)

    def bfs_order(self, root: int = 0) -> list[int]:
        """Flags in breadth-first order from ``root``, generators tried as h0, h1, h2."""
        order = [root]
        seen = {root}
        i = 0
        while i < len(order):
            f = order[i]
            i += 1
            for g in self.gens:
                if g[f] not in seen:
                    seen.add(g[f])
                    order.append(g[f])
        return order

    def rebase(self, root: int) -> Hypermap:
        """Isomorphic copy with ``root`` as flag 0 and the rest in BFS order."""
        return self.relabel(self.bfs_order(root))

    def relabel(self, order: Sequence[int]) -> Hypermap:
        """The isomorphic hypermap whose flag ``k`` is this hypermap's flag ``order[k]``."""
        pos = [0] * self.n
        for k, f in enumerate(order):
            pos[f] = k
        return Hypermap(*(tuple(pos[g[f]] for f in order) for g in self.gens))
