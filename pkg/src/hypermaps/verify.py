"""End-to-end verification of the known facts about the phi-constructions.

Each criterion returns a list of :class:`Check` results; ``run`` collects
them for the ``verify-paper`` command and the acceptance tests.  All checks
are exact integer or boolean comparisons.
"""

from __future__ import annotations

import random
from collections.abc import Callable
from dataclasses import dataclass
from functools import lru_cache

from . import oracles
from .construct import closure_cover, covering_core, double_cover, monodromy_order, phi_construct, sigma_dual
from .errors import CapacityExceeded
from .families import (
    DERIVED_SUBGROUP_RELATORS,
    k_klein,
    p2,
    p2_presented,
    pp2k,
    random_hypermap,
    sphere222k,
    t_torus,
)
from .hypermap import Hypermap
from .morphism import (
    automorphism_count,
    b_quotient_min_generators,
    covers,
    in_image_of,
    is_bipartite_regular,
    is_isomorphic,
    is_regular,
    recover_preimage,
)
from .presentation import Presentation, coset_enumerate
from .words import BUILTIN_SPECS, PHI1, PHI2, PHI3, PHI4, PHI5, BWord, DeltaWord, reduce

PHIS = tuple(BUILTIN_SPECS.values())
K_RANGE = range(1, 6)
# bound on |Mon(h)| for random inputs whose cores are built
MAX_MON = 200


@dataclass(frozen=True)
class Check:
    criterion: int
    label: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status}  [{self.criterion}] {self.label}"
        if self.detail:
            text += f"  ({self.detail})"
        return text


class _Collector:
    def __init__(self, criterion: int):
        self.criterion = criterion
        self.checks: list[Check] = []

    def __call__(self, label: str, passed: bool, detail: str = "") -> None:
        self.checks.append(Check(self.criterion, label, bool(passed), detail))

    def equal(self, label: str, got, expected) -> None:
        self(label, got == expected, f"got {got}, expected {expected}")


@lru_cache(maxsize=None)
def _klein() -> Hypermap:
    return k_klein()


@lru_cache(maxsize=None)
def _torus() -> Hypermap:
    return t_torus()


def random_pool(count: int, sizes=(2, 4, 6, 8), seed: int = 0, allow_boundary: bool = False) -> list[Hypermap]:
    rng = random.Random(seed)
    return [random_hypermap(rng.choice(sizes), rng.randrange(2**32), allow_boundary) for _ in range(count)]


def small_monodromy_pool(count: int, max_order: int, seed: int, sizes=(2, 4, 6, 8), where=None) -> list[Hypermap]:
    """Random boundary-free hypermaps whose monodromy group has at most
    ``max_order`` elements and which satisfy ``where``, if given."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        h = random_hypermap(rng.choice(sizes), rng.randrange(2**32))
        if where is not None and not where(h):
            continue
        try:
            monodromy_order(h, max_order)
        except CapacityExceeded:
            continue
        out.append(h)
    return out


def criterion_flag_counts() -> list[Check]:
    c = _Collector(1)
    c.equal("|P2| = 8", p2().n, 8)
    c.equal("|K| = 16", _klein().n, 16)
    c.equal("|T| = 32", _torus().n, 32)
    for k in K_RANGE:
        c.equal(f"|PP{2 * k}| = {4 * k}", pp2k(k).n, 4 * k)
    pool = random_pool(25, sizes=range(2, 11, 2), seed=101) + random_pool(25, sizes=range(1, 11), seed=102, allow_boundary=True)
    bad = [(h.n, phi.name) for h in pool for phi in PHIS if phi_construct(h, phi).n != 2 * h.n]
    c("|phi_i(h)| = 2|h| on 50 random hypermaps, all five phi_i", not bad, f"failures: {bad[:3]}" if bad else "250 cases")
    return c.checks


def criterion_klein_torus() -> list[Check]:
    c = _Collector(2)
    K, T = _klein(), _torus()
    c("K is bipartite-regular", is_bipartite_regular(K))
    c("K is not regular", not is_regular(K))
    c.equal("K is uniform of type (2,4,4)", K.uniform_type(), (2, 4, 4))
    c.equal("chi(K) = 0", K.euler_characteristic(), 0)
    c("K is non-orientable without boundary", not K.is_orientable() and not K.has_boundary())
    c("T is isomorphic to K+", is_isomorphic(T, double_cover(K)))
    c("T is regular", is_regular(T))
    c("T is orientable", T.is_orientable())
    c.equal("chi(T) = 0", T.euler_characteristic(), 0)
    c("D_(01)(T) is a map", sigma_dual(T, (1, 0, 2)).is_map())
    c("covering core of K is isomorphic to T", is_isomorphic(covering_core(K), T))
    plus_closure = closure_cover(double_cover(K))
    closure_plus = double_cover(closure_cover(K))
    c("(K+)^Delta is not isomorphic to (K^Delta)+", not is_isomorphic(plus_closure, closure_plus))
    c.equal("|(K+)^Delta| = 2 |(K^Delta)+|", plus_closure.n, 2 * closure_plus.n)
    return c.checks


def criterion_phi2_p2() -> list[Check]:
    c = _Collector(3)
    B = phi_construct(p2(), PHI2)
    btype = B.bipartite_type()
    c.equal("phi2(P2) has bipartite-type (1,2;4;4)", btype.canonical() if btype else None, (1, 2, 4, 4))
    c("covering core of phi2(P2) is isomorphic to T", is_isomorphic(covering_core(B), _torus()))
    return c.checks


def criterion_membership() -> list[Check]:
    c = _Collector(4)
    inputs = {"P2": p2(), "PP2": pp2k(1), "PP4": pp2k(2), "sphere222k(2)": sphere222k(2)}
    for name, h in inputs.items():
        for phi in PHIS:
            c(f"{phi.name}({name}) is in im {phi.name}", in_image_of(phi_construct(h, phi), phi))
    for phi in PHIS:
        c(f"T is not in im {phi.name}", not in_image_of(_torus(), phi))
        c(f"K is not in im {phi.name}", not in_image_of(_klein(), phi))
    c.equal("T's bipartite quotient needs 4 generators", b_quotient_min_generators(_torus()), 4)
    return c.checks


def chi_formula(phi_name: str, R: Hypermap) -> int:
    """Predicted characteristic of phi_i(R) for regular R without boundary."""
    chi = R.euler_characteristic()
    _, _, n = R.uniform_type()
    if phi_name == "phi3":
        return 2 * (chi - R.F)
    if phi_name == "phi4":
        return 2 * (chi - R.E)
    if phi_name == "phi5":
        return chi + (2 if n % 2 == 0 else 1) * R.F - R.n // 2
    raise ValueError(phi_name)


def bipartite_type_formula(phi_name: str, R: Hypermap) -> tuple[int, int, int, int]:
    """Predicted canonical bipartite-type of phi_i(R) for regular R of type (l,m,n)."""
    l, m, n = R.uniform_type()
    if phi_name == "phi3":
        t = (l, m, 2 * l, 2 * m)
    elif phi_name == "phi4":
        t = (l, n, 2 * l, 2 * n)
    elif phi_name == "phi5":
        t = (l, n, 2 * m, n) if n % 2 == 0 else (l, n, 2 * m, 2 * n)
    else:
        raise ValueError(phi_name)
    return (min(t[0], t[1]), max(t[0], t[1]), t[2], t[3])


def criterion_chi_formulas() -> list[Check]:
    c = _Collector(5)
    for k in K_RANGE:
        R = pp2k(k)
        b3, b4, b5 = (phi_construct(R, phi) for phi in (PHI3, PHI4, PHI5))
        c.equal(f"chi(phi3(PP{2 * k})) = 0", b3.euler_characteristic(), 0)
        c.equal(f"chi(phi4(PP{2 * k})) = 2-2k", b4.euler_characteristic(), 2 - 2 * k)
        c.equal(f"chi(phi5(PP{2 * k})) = 3-2k", b5.euler_characteristic(), 3 - 2 * k)
        c(f"phi4(PP{2 * k}) and phi5(PP{2 * k}) are non-orientable", not b4.is_orientable() and not b5.is_orientable())
        c.equal(f"genus of phi4(PP{2 * k}) is 2k", b4.genus(), 2 * k)
        c.equal(f"genus of phi5(PP{2 * k}) is 2k-1", b5.genus(), 2 * k - 1)
    regulars = [(f"PP{2 * k}", pp2k(k)) for k in K_RANGE] + [(f"sphere222k({k})", sphere222k(k)) for k in K_RANGE]
    for name, R in regulars:
        for phi in (PHI3, PHI4, PHI5):
            B = phi_construct(R, phi)
            c.equal(f"chi({phi.name}({name})) formula vs orbit count", oracles.chi(B), chi_formula(phi.name, R))
            btype = B.bipartite_type()
            c.equal(
                f"bipartite-type of {phi.name}({name})",
                tuple(btype.canonical()) if btype else None,
                bipartite_type_formula(phi.name, R),
            )
    return c.checks


def genus_sweep() -> list[tuple[str, Hypermap, bool, int]]:
    """Witnesses (name, hypermap, orientable, genus) for every surface in range."""
    out = []
    for k in K_RANGE:
        out.append((f"phi5(PP{2 * k})", phi_construct(pp2k(k), PHI5), False, 2 * k - 1))
        out.append((f"phi4(PP{2 * k})", phi_construct(pp2k(k), PHI4), False, 2 * k))
    out.append(("phi1(P2)", phi_construct(p2(), PHI1), True, 0))
    out.append(("T", _torus(), True, 1))
    for k in (2, 3):
        out.append((f"phi4(sphere222k({k}))", phi_construct(sphere222k(k), PHI4), True, 2 * k - 1))
    for k in (2, 3, 4):
        out.append((f"phi5(sphere222k({k}))", phi_construct(sphere222k(k), PHI5), True, 2 * k - 2))
    return sorted(out, key=lambda item: (not item[2], item[3]))


def criterion_genus_sweep() -> list[Check]:
    c = _Collector(6)
    witnesses = genus_sweep()
    for name, B, orientable, genus in witnesses:
        kind = "orientable" if orientable else "non-orientable"
        ok = (
            is_bipartite_regular(B)
            and not B.has_boundary()
            and B.is_orientable() == orientable
            and B.genus() == genus
        )
        c(f"{kind} genus {genus}: {name} is bipartite-regular", ok)
    covered_n = sorted(g for _, _, o, g in witnesses if not o)
    covered_o = sorted(g for _, _, o, g in witnesses if o)
    c.equal("non-orientable genera covered", covered_n, list(range(1, 11)))
    c.equal("orientable genera covered", covered_o, list(range(0, 7)))
    return c.checks


def _all(pairs) -> tuple[bool, str]:
    failures = [name for name, ok in pairs if not ok]
    return not failures, f"{len(pairs)} cases" if not failures else f"failures: {failures[:3]}"


def criterion_properties() -> list[Check]:
    c = _Collector(7)
    pool = random_pool(100, sizes=(2, 4, 6, 8), seed=7)
    small = small_monodromy_pool(20, MAX_MON, seed=17)
    regulars = [covering_core(h) for h in small] + [p2(), pp2k(2), sphere222k(2), _torus()]

    cases = []
    for h in pool + regulars:
        reg = is_regular(h)
        for phi in PHIS:
            cases.append((f"{phi.name} n={h.n}", is_bipartite_regular(phi_construct(h, phi)) == reg))
    c("bipartite-regular phi(h) iff regular h (100 random + regular inputs)", *_all(cases))
    c("the sample contains both regular and non-regular inputs",
      any(is_regular(h) for h in pool + regulars) and not all(is_regular(h) for h in pool))

    cases = []
    for h in small:
        core = covering_core(h)
        for phi in PHIS:
            cases.append((f"{phi.name} n={h.n}", covers(phi_construct(core, phi), phi_construct(h, phi))))
    c("h_Delta -> h implies phi(h_Delta) -> phi(h) (20 covering pairs)", *_all(cases))

    cases = []
    for h in pool:
        a = automorphism_count(h)
        for phi in PHIS:
            b = automorphism_count(phi_construct(h, phi))
            cases.append((f"{phi.name} n={h.n}", b in (a, 2 * a)))
    c("|Aut(phi(h))| / |Aut(h)| in {1, 2}", *_all(cases))

    cases = []
    for h in small:
        core, clo = covering_core(h), closure_cover(h)
        for phi in PHIS:
            B = phi_construct(h, phi)
            chain = [covering_core(B), phi_construct(core, phi), B, phi_construct(clo, phi), closure_cover(B)]
            ok = all(covers(x, y) for x, y in zip(chain, chain[1:]))
            cases.append((f"{phi.name} n={h.n}", ok))
    c("phi(h)_Delta -> phi(h_Delta) -> phi(h) -> phi(h^Delta) -> phi(h)^Delta", *_all(cases))

    boundary_pool = random_pool(50, sizes=range(1, 9), seed=27, allow_boundary=True)
    cases = []
    for h in pool + boundary_pool:
        for phi in PHIS:
            B = phi_construct(h, phi)
            cases.append((f"{phi.name} n={h.n}", B.is_orientable() == h.is_orientable()
                          and B.has_boundary() == h.has_boundary()))
    c("h and phi_i(h) agree on orientability and boundary", *_all(cases))

    cases = []
    for h in pool[:40]:
        for phi in PHIS:
            cases.append((f"{phi.name} n={h.n}",
                          is_isomorphic(phi_construct(double_cover(h), phi), double_cover(phi_construct(h, phi)))))
    c("phi_i(h+) is isomorphic to phi_i(h)+", *_all(cases))

    nonorientable = small_monodromy_pool(20, MAX_MON, seed=37, where=lambda h: not h.is_orientable())
    cases = []
    for h in nonorientable:
        plus_core = covering_core(double_cover(h))
        core_plus = double_cover(covering_core(h))
        ok = is_isomorphic(plus_core, core_plus) and covers(closure_cover(double_cover(h)), double_cover(closure_cover(h)))
        cases.append((f"n={h.n}", ok))
    c("(h+)_Delta iso (h_Delta)+ and (h+)^Delta -> (h^Delta)+ on 20 non-orientable h",
      *_all(cases))
    return c.checks


def lift_relator(w: DeltaWord, section) -> BWord:
    return BWord(tuple(x for letter in w for x in section[letter].letters))


def criterion_oracles() -> list[Check]:
    c = _Collector(8)
    c("P2 by coset enumeration is isomorphic to the Cayley P2", is_isomorphic(p2_presented(), p2()))
    c.equal("K by coset enumeration has 16 flags", _klein().n, 16)
    c.equal("T by coset enumeration has 32 flags", _torus().n, 32)

    table = coset_enumerate(Presentation(3, ("0101", "1212", "2020")))
    c("C2^3 presentation gives the C2^3 multiplication table",
      is_isomorphic(Hypermap(*table), Hypermap(*oracles.c2_cube_table())))
    pairs = [BWord((u, v)) ** 2 for u in range(4) for v in range(u + 1, 4)]
    c.equal("(uv)^2 relators give |C2^4| = 16 cosets",
            len(coset_enumerate(Presentation(4, tuple(pairs)))[0]), oracles.elementary_abelian_quotient_order(4, []))
    c.equal("adding bdc gives 8 cosets",
            len(coset_enumerate(Presentation(4, tuple(pairs) + (BWord("bdc"),)))[0]),
            oracles.elementary_abelian_quotient_order(4, [(0, 1, 1, 1)]))

    K = _klein()
    c.equal("closure cover of K matches the normal-closure oracle", closure_cover(K).n, oracles.closure_cover_size(K))
    cases = []
    for h in small_monodromy_pool(20, MAX_MON, seed=47):
        cases.append((f"n={h.n}", closure_cover(h).n == oracles.closure_cover_size(h)
                      and covering_core(h).n == oracles.covering_core_size(h)))
    c("closure cover and core sizes match the oracle on 20 random hypermaps", *_all(cases))

    rng = random.Random(8)
    hs = random_pool(10, sizes=(4, 6, 8, 10), seed=88)
    cases = []
    for i in range(1000):
        h = hs[i % len(hs)]
        w = [rng.randrange(3) for _ in range(rng.randrange(0, 20))]
        cases.append((str(w), h.evaluate(w) == h.evaluate(reduce(w)) == h.evaluate(DeltaWord(w))))
    c("evaluate(h, w) = evaluate(h, reduce(w)) on 1000 random words", *_all(cases))

    # each kernel relator normally generates the whole kernel: on finite
    # quotients of Delta the lifted presentation has the same order
    quotients = [DERIVED_SUBGROUP_RELATORS]
    for k in (2, 3):
        quotients.append((DeltaWord("01" * (2 * k)), DeltaWord("2" + "01" * k), DeltaWord("1212"), DeltaWord("2020")))
    cases = []
    for rels in quotients:
        order = len(coset_enumerate(Presentation(3, rels))[0])
        for phi in PHIS:
            section = phi.section()
            lifted = tuple(lift_relator(r, section) for r in rels) + phi.kernel_relators
            cases.append((f"{phi.name} |Q|={order}", len(coset_enumerate(Presentation(4, lifted))[0]) == order))
    c("kernel relators generate each kernel (finite quotient orders agree)", *_all(cases))

    cases = []
    for h in (p2(), pp2k(1), pp2k(2), sphere222k(2)):
        for phi in PHIS:
            r = recover_preimage(phi_construct(h, phi), phi)
            cases.append((f"{phi.name} n={h.n}", r is not None and is_isomorphic(r, h)))
    c("recover_preimage inverts phi_construct", *_all(cases))
    return c.checks


CRITERIA: dict[int, tuple[str, Callable[[], list[Check]]]] = {
    1: ("flag counts", criterion_flag_counts),
    2: ("Klein bottle and torus examples", criterion_klein_torus),
    3: ("phi2(P2)", criterion_phi2_p2),
    4: ("membership in im phi", criterion_membership),
    5: ("Euler characteristic formulas", criterion_chi_formulas),
    6: ("genus sweep", criterion_genus_sweep),
    7: ("random property suite", criterion_properties),
    8: ("oracle equivalences", criterion_oracles),
}


def run(selected=None) -> list[Check]:
    checks = []
    for number, (_, fn) in CRITERIA.items():
        if selected is None or number in selected:
            checks.extend(fn())
    return checks


def format_table(checks: list[Check]) -> str:
    lines = [check.line() for check in checks]
    passed = sum(check.passed for check in checks)
    lines.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(lines) + "\n"
