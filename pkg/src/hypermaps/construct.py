"""Operators producing new hypermaps: duals, double covers, the bipartite
phi-construction, the covering core and the closure cover."""

from __future__ import annotations

from collections import deque

from .errors import CapacityExceeded
from .hypermap import Hypermap, Perm
from .words import EpimorphismSpec, Sigma, invert_sigma

DEFAULT_CORE_CAP = 200_000


def sigma_dual(h: Hypermap, sigma: Sigma) -> Hypermap:
    """Relabel generator roles: generator ``sigma[i]`` of the dual is ``h_i``.

    With the subgroup of ``h`` mapped by R_i -> R_sigma(i), flag ``H.y`` goes to
    the coset of ``y`` relabelled, and R_j acts there as R_{sigma^-1(j)} did
    before.  For sigma = (01) the vertices of the dual are the edges of ``h``.
    """
    inv = invert_sigma(sigma)
    return Hypermap(*(h.gens[inv[j]] for j in range(3)))


def double_cover(h: Hypermap) -> Hypermap:
    """The orientable double cover; ``h`` itself when already orientable.

    Flag ``(f, e)`` is numbered ``e * n + f`` and every generator toggles ``e``.
    """
    if h.is_orientable():
        return h
    n = h.n
    return Hypermap(*(tuple(g[f % n] + n * (1 - f // n) for f in range(2 * n)) for g in h.gens))


def hypermap_from_b_action(a: Perm, b: Perm, c: Perm, d: Perm) -> Hypermap:
    """Bipartite hypermap from an action of a, b, c, d on a set ``Q``.

    The flags are ``Q x {0, 1}`` with ``(q, e)`` numbered ``e * |Q| + q``.
    Writing a coset of the base stabiliser as ``g`` (part 0) or ``g R0``
    (part 1) with ``g`` in the bipartite subgroup,

        g R0 . R1 = g (R0 R1 R0) R0 = g c R0,    g R0 . R2 = g d R0,

    so R0 swaps the parts, R1 acts as ``a`` on part 0 and ``c`` on part 1,
    and R2 acts as ``b`` on part 0 and ``d`` on part 1.
    """
    m = len(a)
    h0 = tuple(list(range(m, 2 * m)) + list(range(m)))
    h1 = tuple(list(a) + [m + c[q] for q in range(m)])
    h2 = tuple(list(b) + [m + d[q] for q in range(m)])
    return Hypermap(h0, h1, h2)


def phi_construct(h: Hypermap, phi: EpimorphismSpec) -> Hypermap:
    """The bipartite hypermap whose subgroup is the preimage of ``h``'s under ``phi``.

    The bipartite subgroup acts on the flags of ``h`` through ``phi`` with
    base stabiliser equal to that preimage, so its cosets there are the flags
    of ``h``; the cosets in all of Delta add the split over {1, R0}.  Raises
    NotTransitive when ``phi`` is not onto for this instance.
    """
    a, b, c, d = (h.evaluate(w) for w in phi.images)
    return hypermap_from_b_action(a, b, c, d)


def _right_multiplier(h: Hypermap):
    """Identity element and ``step(p, i) = p * h_i`` on image tuples.

    For up to 256 flags elements are stored as bytes and multiplied with
    ``bytes.translate``.
    """
    if h.n <= 256:
        tables = [bytes(g) + bytes(256 - h.n) for g in h.gens]
        return bytes(range(h.n)), lambda p, i: p.translate(tables[i])
    gens = h.gens
    return tuple(range(h.n)), lambda p, i: tuple(gens[i][x] for x in p)


def _enumerate_monodromy(h: Hypermap, cap: int, what: str):
    ident, step = _right_multiplier(h)
    index = {ident: 0}
    order = [ident]
    cols: list[list[int]] = [[], [], []]
    i = 0
    while i < len(order):
        p = order[i]
        i += 1
        for k in range(3):
            q = step(p, k)
            j = index.get(q)
            if j is None:
                if len(order) >= cap:
                    raise CapacityExceeded(cap, what)
                j = index[q] = len(order)
                order.append(q)
            cols[k].append(j)
    return order, cols


def monodromy_elements(h: Hypermap, cap: int = DEFAULT_CORE_CAP) -> list[Perm]:
    """Elements of Mon(h) as image tuples, identity first, in BFS order over
    right multiplication by h0, h1, h2."""
    order, _ = _enumerate_monodromy(h, cap, "monodromy group enumeration")
    return [tuple(p) for p in order]


def covering_core(h: Hypermap, cap: int = DEFAULT_CORE_CAP) -> Hypermap:
    """The smallest regular hypermap covering ``h``: Mon(h) acting on itself
    by right multiplication."""
    _, cols = _enumerate_monodromy(h, cap, "covering core")
    return Hypermap(*cols)


def monodromy_order(h: Hypermap, cap: int = DEFAULT_CORE_CAP) -> int:
    return len(monodromy_elements(h, cap))


def _spanning_tree_words(h: Hypermap) -> list[tuple[int, ...]]:
    words: list[tuple[int, ...] | None] = [None] * h.n
    words[0] = ()
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for i, g in enumerate(h.gens):
            y = g[f]
            if words[y] is None:
                words[y] = words[f] + (i,)
                queue.append(y)
    return words


def schreier_generators(h: Hypermap) -> list[tuple[int, ...]]:
    """Delta-words generating the stabiliser of flag 0, one per non-tree edge."""
    words = _spanning_tree_words(h)
    gens = []
    for f in range(h.n):
        for i, g in enumerate(h.gens):
            y = g[f]
            w = words[f] + (i,) + words[y][::-1]
            if words[y] != words[f] + (i,) and words[f] != words[y] + (i,):
                gens.append(w)
    return gens


class _Congruence:
    """Union-find that keeps its partition invariant under the generators."""

    def __init__(self, h: Hypermap):
        self.gens = h.gens
        self.parent = list(range(h.n))
        self.pending: list[tuple[int, int]] = []

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        self.pending.append((x, y))
        while self.pending:
            x, y = self.pending.pop()
            rx, ry = self.find(x), self.find(y)
            if rx == ry:
                continue
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx
            # x ~ y forces x.g ~ y.g; pairing the roots' images is enough
            for g in self.gens:
                self.pending.append((g[rx], g[ry]))


def closure_cover(h: Hypermap) -> Hypermap:
    """The largest regular hypermap covered by ``h``.

    Its flags are the classes of the finest partition that is preserved by
    the generators and puts ``f`` and ``f.s`` together for every flag ``f``
    and every stabiliser generator ``s``; on these classes the normal
    closure of the stabiliser acts trivially.
    """
    cong = _Congruence(h)
    for s in schreier_generators(h):
        perm = h.evaluate(s)
        for f in range(h.n):
            if perm[f] != f:
                cong.union(f, perm[f])
    reps = sorted({cong.find(f) for f in range(h.n)})
    index = {r: k for k, r in enumerate(reps)}
    quotient = tuple(tuple(index[cong.find(g[r])] for r in reps) for g in h.gens)
    # renumber so that the output is independent of union-find internals
    return Hypermap(*quotient).rebase(0)
