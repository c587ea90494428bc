"""Brute-force reference computations used to cross-check the main algorithms.

These deliberately avoid the code paths they check: group elements are
found by naive closure, partitions by union-find, and maps by group
elements rather than spanning trees.  They are only meant for small inputs.
"""

from __future__ import annotations

from itertools import combinations, product

from .hypermap import Hypermap


def compose(p, q):
    """``p`` then ``q``."""
    return tuple(q[x] for x in p)


def inverse(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def generated_group(gens) -> set:
    """All products of ``gens``, by closure until nothing new appears."""
    gens = [tuple(g) for g in gens]
    group = {tuple(range(len(gens[0])))}
    while True:
        new = {compose(p, g) for p in group for g in gens} - group
        if not new:
            return group
        group |= new


def orbit_count(n: int, perms) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for x in range(n):
            rx, ry = find(x), find(p[x])
            if rx != ry:
                parent[rx] = ry
    return len({find(x) for x in range(n)})


def chi(h: Hypermap) -> int:
    g0, g1, g2 = h.gens
    return orbit_count(h.n, [g1, g2]) + orbit_count(h.n, [g2, g0]) + orbit_count(h.n, [g0, g1]) - h.n // 2


def automorphism_count(h: Hypermap) -> int:
    """Count flags ``t`` for which ``0.g -> t.g`` (g in Mon) is well defined."""
    mon = generated_group(h.gens)
    count = 0
    for t in range(h.n):
        psi = {}
        ok = True
        for g in mon:
            src, dst = g[0], g[t]
            if psi.setdefault(src, dst) != dst:
                ok = False
                break
        count += ok
    return count


def closure_cover_size(h: Hypermap) -> int:
    """Index of the normal closure of the base stabiliser, computed inside Mon(h)."""
    mon = generated_group(h.gens)
    stab = {g for g in mon if g[0] == 0}
    normal = set(stab)
    while True:
        conj = {compose(compose(inverse(x), s), x) for s in normal for x in mon}
        grown = generated_group(list(normal | conj))
        if grown == normal:
            break
        normal = grown
    return len(mon) // len(normal)


def covering_core_size(h: Hypermap) -> int:
    return len(generated_group(h.gens))


def min_generators(elements, mult) -> int:
    """Smallest ``k`` such that some ``k`` elements generate the whole group.

    ``elements`` are indices with 0 the identity and ``mult[x][y]`` their product.
    """
    order = len(elements)
    if order == 1:
        return 0
    for k in range(1, order):
        for combo in combinations(range(1, order), k):
            seen = {0}
            frontier = [0]
            while frontier:
                x = frontier.pop()
                for g in combo:
                    y = mult[x][g]
                    if y not in seen:
                        seen.add(y)
                        frontier.append(y)
            if len(seen) == order:
                return k
    raise AssertionError("unreachable")


def elementary_abelian_quotient_order(rank: int, relations) -> int:
    """Order of F_2^rank modulo the span of ``relations`` (0/1 vectors)."""
    rows = [int("".join(map(str, v)), 2) for v in relations]
    basis = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
    return 2 ** (rank - len(basis))


def c2_cube_table():
    """Right multiplication by x0, x1, x2 in C2^3, elements as bitmasks."""
    return tuple(tuple(x ^ (1 << i) for x in range(8)) for i in range(3))


def all_colorings_consistent(h: Hypermap, flips) -> bool:
    """Whether some 2-colouring of the flags flips across h_i exactly when
    ``flips[i]`` is 1, by trying every colouring with flag 0 coloured 0."""
    for bits in product((0, 1), repeat=h.n - 1):
        color = (0,) + bits
        if all(color[g[f]] == color[f] ^ flips[i] for i, g in enumerate(h.gens) for f in range(h.n)):
            return True
    return False
