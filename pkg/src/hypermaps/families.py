"""Named hypermaps and a seeded random generator."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import NotTransitive, Unsatisfiable
from .hypermap import Hypermap
from .presentation import DEFAULT_MAX_COSETS, bipartite_hypermap_from_b_relators, regular_hypermap_from_delta_relators
from .words import BWord, DeltaWord

# (uv)^2 for each pair of distinct free generators of the bipartite subgroup
COMMUTING_B_RELATORS = tuple(BWord((u, v)) ** 2 for u, v in combinations(range(4), 2))
KLEIN_RELATORS = COMMUTING_B_RELATORS + (BWord("bdc"),)
TORUS_RELATORS = COMMUTING_B_RELATORS
DERIVED_SUBGROUP_RELATORS = (DeltaWord("1212"), DeltaWord("2020"), DeltaWord("0101"))


def p2() -> Hypermap:
    """Cayley hypermap of C2^3 = <x0, x1, x2>: the regular (2,2,2) sphere hypermap.

    Element ``x0^e0 x1^e1 x2^e2`` is flag ``e0 + 2 e1 + 4 e2``.
    """
    return Hypermap(*(tuple(x ^ (1 << i) for x in range(8)) for i in range(3)))


def _dihedral_step(k: int, j: int, e: int, gen: str) -> tuple[int, int]:
    """Right-multiply r^j s^e (r of order 2k) by s, rs or r^k."""
    if gen == "s":
        return j, e ^ 1
    if gen == "rs":
        return (j + (-1) ** e) % (2 * k), e ^ 1
    return (j + k) % (2 * k), e


def pp2k(k: int) -> Hypermap:
    """Regular hypermap of type (2,2,2k) on the projective plane, 4k flags.

    Cayley hypermap of the dihedral group of order 4k with h0 = s, h1 = rs,
    h2 = r^k; element r^j s^e is flag 2j + e.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    gens = []
    for gen in ("s", "rs", "rk"):
        perm = []
        for j in range(2 * k):
            for e in (0, 1):
                jj, ee = _dihedral_step(k, j, e, gen)
                perm.append(2 * jj + ee)
        gens.append(perm)
    return Hypermap(*gens)


def sphere222k(k: int) -> Hypermap:
    """Regular hypermap of type (2,2,2k) on the sphere, 8k flags.

    Cayley hypermap of (dihedral of order 4k) x <z> with h0 = s, h1 = rs,
    h2 = z; element r^j s^e z^c is flag 4j + 2e + c.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    gens: list[list[int]] = [[], [], []]
    for j in range(2 * k):
        for e in (0, 1):
            for c in (0, 1):
                for i, gen in enumerate(("s", "rs")):
                    jj, ee = _dihedral_step(k, j, e, gen)
                    gens[i].append(4 * jj + 2 * ee + c)
                gens[2].append(4 * j + 2 * e + (c ^ 1))
    return Hypermap(*gens)


def p2_presented(cap: int = DEFAULT_MAX_COSETS) -> Hypermap:
    """P2 rebuilt by coset enumeration over the derived subgroup of Delta."""
    return regular_hypermap_from_delta_relators(DERIVED_SUBGROUP_RELATORS, cap)


def k_klein(cap: int = DEFAULT_MAX_COSETS) -> Hypermap:
    """Bipartite-regular (2,4,4) hypermap on the Klein bottle, 16 flags."""
    return bipartite_hypermap_from_b_relators(KLEIN_RELATORS, cap)


def t_torus(cap: int = DEFAULT_MAX_COSETS) -> Hypermap:
    """Regular (2,4,4) hypermap on the torus, 32 flags; orientable double cover of K."""
    return bipartite_hypermap_from_b_relators(TORUS_RELATORS, cap)


def _random_involution(n: int, rng: random.Random, fixed_point_free: bool) -> list[int]:
    flags = list(range(n))
    rng.shuffle(flags)
    pairs = n // 2 if fixed_point_free else rng.randint(0, n // 2)
    perm = list(range(n))
    for t in range(pairs):
        x, y = flags[2 * t], flags[2 * t + 1]
        perm[x], perm[y] = y, x
    return perm


def random_hypermap(n: int, seed: int, allow_boundary: bool = False) -> Hypermap:
    """Reproducible random hypermap on ``n`` flags, rejection-sampled until transitive."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if not allow_boundary and n % 2:
        raise Unsatisfiable(f"no fixed-point-free involution on {n} flags")
    rng = random.Random(seed)
    while True:
        gens = [_random_involution(n, rng, not allow_boundary) for _ in range(3)]
        try:
            return Hypermap(*gens)
        except NotTransitive:
            continue


@dataclass(frozen=True)
class FamilySpec:
    """A named family member: ``p2``, ``pp2k:K``, ``sphere222k:K``, ``klein``,
    ``torus`` or ``random:N:SEED``."""

    family: str
    k: int | None = None
    seed: int | None = None

    FAMILIES = ("p2", "pp2k", "sphere222k", "klein", "torus", "random")

    def __post_init__(self):
        if self.family not in self.FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("pp2k", "sphere222k", "random"):
            if self.k is None or self.k < 1:
                raise ValueError(f"{self.family} needs a parameter >= 1")
        if self.family == "random" and self.seed is None:
            raise ValueError("random needs a seed")

    @classmethod
    def parse(cls, text: str) -> FamilySpec:
        parts = text.strip().lower().split(":")
        name = {"k": "klein", "t": "torus"}.get(parts[0], parts[0])
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise ValueError(f"invalid family spec {text!r}") from None
        if name == "random":
            if len(nums) != 2:
                raise ValueError("random family spec is random:N:SEED")
            return cls(name, nums[0], nums[1])
        if name in ("pp2k", "sphere222k"):
            if len(nums) != 1:
                raise ValueError(f"{name} family spec is {name}:K")
            return cls(name, nums[0])
        if nums:
            raise ValueError(f"{name} takes no parameters")
        return cls(name)

    def build(self, allow_boundary: bool = False) -> Hypermap:
        if self.family == "p2":
            return p2()
        if self.family == "pp2k":
            return pp2k(self.k)
        if self.family == "sphere222k":
            return sphere222k(self.k)
        if self.family == "klein":
            return k_klein()
        if self.family == "torus":
            return t_torus()
        return random_hypermap(self.k, self.seed, allow_boundary)
