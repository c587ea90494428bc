"""Coverings, isomorphisms and automorphisms, regularity tests, and
membership in the image of a phi-construction."""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass

from .errors import CapacityExceeded, NoKernelRelators, NotBipartite, NotBipartiteRegular
from .hypermap import Hypermap
from .words import BWord, EpimorphismSpec, ThetaClass, embed

MAX_QUOTIENT_ORDER = 64


@dataclass(frozen=True)
class FlagMap:
    """An equivariant map of flags; ``images[f]`` is the image of source flag ``f``."""

    source: Hypermap
    target: Hypermap
    images: tuple[int, ...]

    def __call__(self, flag: int) -> int:
        return self.images[flag]

    def is_equivariant(self) -> bool:
        im = self.images
        return all(
            im[g[f]] == g2[im[f]]
            for g, g2 in zip(self.source.gens, self.target.gens)
            for f in range(self.source.n)
        )

    def is_bijective(self) -> bool:
        return len(set(self.images)) == self.target.n == self.source.n


def _tree_edges(h: Hypermap) -> list[tuple[int, int, int]]:
    """BFS spanning-tree edges ``(parent, generator, child)`` from flag 0."""
    edges = []
    seen = [False] * h.n
    seen[0] = True
    order = [0]
    for f in order:
        for i, g in enumerate(h.gens):
            y = g[f]
            if not seen[y]:
                seen[y] = True
                order.append(y)
                edges.append((f, i, y))
    return edges


def _extend(g: Hypermap, h: Hypermap, t: int, tree) -> tuple[int, ...] | None:
    im = [0] * g.n
    im[0] = t
    hg = h.gens
    for f, i, y in tree:
        im[y] = hg[i][im[f]]
    for gi, hi in zip(g.gens, hg):
        for f in range(g.n):
            if im[gi[f]] != hi[im[f]]:
                return None
    return tuple(im)


def _extensions(g: Hypermap, h: Hypermap, targets) -> Iterator[tuple[int, ...]]:
    tree = _tree_edges(g)
    for t in targets:
        im = _extend(g, h, t, tree)
        if im is not None:
            yield im


def find_covering(g: Hypermap, h: Hypermap) -> FlagMap | None:
    """The covering ``g -> h`` sending flag 0 to the smallest possible flag, if any."""
    if g.n % h.n:
        return None
    for im in _extensions(g, h, range(h.n)):
        return FlagMap(g, h, im)
    return None


def covers(g: Hypermap, h: Hypermap) -> bool:
    return find_covering(g, h) is not None


def is_isomorphic(g: Hypermap, h: Hypermap) -> bool:
    return g.n == h.n and find_covering(g, h) is not None


def automorphisms(h: Hypermap) -> list[FlagMap]:
    """All automorphisms; each is fixed by the image of flag 0 since Aut acts freely."""
    return [FlagMap(h, h, im) for im in _extensions(h, h, range(h.n))]


def automorphism_count(h: Hypermap) -> int:
    return sum(1 for _ in _extensions(h, h, range(h.n)))


def is_regular(h: Hypermap) -> bool:
    tree = _tree_edges(h)
    return all(_extend(h, h, t, tree) is not None for t in range(h.n))


def is_theta_regular(h: Hypermap, t: ThetaClass) -> bool:
    """Aut(h) is transitive on the ``t``-orbit of flag 0; False when h is not
    ``t``-conservative."""
    color = h.theta_coloring(t)
    if color is None:
        return False
    tree = _tree_edges(h)
    return all(_extend(h, h, f, tree) is not None for f in range(h.n) if color[f] == 0)


def is_bipartite_regular(h: Hypermap) -> bool:
    return is_theta_regular(h, ThetaClass.HAT0)


def _kernel_part(b: Hypermap, phi: EpimorphismSpec) -> int | None:
    """0 if the kernel lies in the stabiliser of flag 0, 1 if its R0-conjugate
    does (the kernel fixes all of part B), None otherwise."""
    if not phi.kernel_relators:
        raise NoKernelRelators(f"{phi.name} has no kernel relators")
    parts = b.bipartite_parts()
    perms = [b.evaluate(embed(r)) for r in phi.kernel_relators]
    # a normal closure inside the bipartite subgroup fixes f0 iff it fixes
    # f0's whole orbit under that subgroup
    for k, part in enumerate(parts):
        if all(p[f] == f for p in perms for f in part):
            return k
    return None


def in_image_of(b: Hypermap, phi: EpimorphismSpec) -> bool:
    """Whether ``b`` is isomorphic to ``phi_construct(h, phi)`` for some ``h``."""
    if not b.is_bipartite():
        raise NotBipartite("membership needs a bipartite hypermap")
    return _kernel_part(b, phi) is not None


def recover_preimage(b: Hypermap, phi: EpimorphismSpec) -> Hypermap | None:
    """A hypermap ``h`` with ``phi_construct(h, phi)`` isomorphic to ``b``, or None."""
    if not b.is_bipartite():
        raise NotBipartite("membership needs a bipartite hypermap")
    k = _kernel_part(b, phi)
    if k is None:
        return None
    part = b.bipartite_parts()[k]
    local = {f: j for j, f in enumerate(part)}
    # the kernel acts trivially on the part, so any preimage of R_i will do
    gens = []
    for s in phi.section():
        perm = b.evaluate(embed(s))
        gens.append(tuple(local[perm[f]] for f in part))
    base = 0 if k == 0 else b.h0[0]
    return Hypermap(*gens).rebase(local[base])


def _group_from_generators(gens: list[tuple[int, ...]], cap: int) -> list[tuple[int, ...]]:
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    order = [ident]
    for p in order:
        for g in gens:
            q = tuple(g[x] for x in p)
            if q not in seen:
                if len(order) >= cap:
                    raise CapacityExceeded(cap, "quotient group enumeration")
                seen.add(q)
                order.append(q)
    return order


def b_quotient_min_generators(b: Hypermap) -> int:
    """Smallest number of elements generating the bipartite subgroup modulo
    the stabiliser of flag 0, for bipartite-regular ``b``.

    That quotient acts regularly on part A; it is enumerated there and
    subgroups are grown one generator at a time.
    """
    if not is_bipartite_regular(b):
        raise NotBipartiteRegular("hypermap is not bipartite-regular")
    part = b.bipartite_parts()[0]
    local = {f: j for j, f in enumerate(part)}
    gens = []
    for x in "abcd":
        perm = b.evaluate(embed(BWord(x)))
        gens.append(tuple(local[perm[f]] for f in part))
    elements = _group_from_generators(gens, MAX_QUOTIENT_ORDER)
    order = len(elements)
    if order == 1:
        return 0
    index = {p: k for k, p in enumerate(elements)}
    mult = [[index[tuple(q[x] for x in p)] for q in elements] for p in elements]

    def closure(gen_ids: tuple[int, ...]) -> int:
        mask = 1
        stack = [0]
        while stack:
            e = stack.pop()
            for g in gen_ids:
                y = mult[e][g]
                if not mask >> y & 1:
                    mask |= 1 << y
                    stack.append(y)
        return mask

    full = (1 << order) - 1
    level = {}
    for g in range(1, order):
        level.setdefault(closure((g,)), (g,))
    k = 1
    while full not in level:
        k += 1
        nxt = {}
        for mask, gen_ids in level.items():
            for g in range(1, order):
                if not mask >> g & 1:
                    ids = gen_ids + (g,)
                    nxt.setdefault(closure(ids), ids)
        level = nxt
    return k
