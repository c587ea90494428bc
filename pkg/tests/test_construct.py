import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from hypermaps import oracles
from hypermaps.construct import (
    closure_cover,
    covering_core,
    double_cover,
    monodromy_order,
    phi_construct,
    sigma_dual,
)
from hypermaps.errors import CapacityExceeded, NotTransitive
from hypermaps.families import pp2k, random_hypermap, sphere222k
from hypermaps.hypermap import Hypermap
from hypermaps.morphism import (
    automorphism_count,
    covers,
    is_bipartite_regular,
    is_isomorphic,
    is_regular,
)
from hypermaps.words import BUILTIN_SPECS, PHI1, PHI2, PHI3, PHI4, EpimorphismSpec, compose_sigma, parse_sigma

PHIS = list(BUILTIN_SPECS.values())
SIGMAS = ["e", "01", "02", "12", "012", "021"]
small = st.builds(
    lambda n, seed, boundary: random_hypermap(n, seed, boundary),
    st.sampled_from([2, 4, 6]),
    st.integers(0, 5000),
    st.just(False),
)
small_any = st.builds(
    lambda n, seed: random_hypermap(n, seed, True), st.integers(1, 6), st.integers(0, 5000)
)


def test_dual_examples(K, T, P2):
    assert is_isomorphic(sigma_dual(K, parse_sigma("e")), K)
    assert sigma_dual(T, parse_sigma("01")).is_map()
    d = sigma_dual(P2, parse_sigma("01"))
    assert (d.V, d.E, d.F) == (P2.E, P2.V, P2.F)


@settings(max_examples=30, deadline=None)
@given(small_any, st.sampled_from(SIGMAS), st.sampled_from(SIGMAS))
def test_dual_properties(h, s, t):
    s, t = parse_sigma(s), parse_sigma(t)
    d = sigma_dual(h, s)
    assert d.n == h.n
    # the cell built from generators {i, j} of h is the cell built from {s(i), s(j)} of the dual
    g = d.gens
    pairs = {"vertex": (1, 2), "edge": (2, 0), "face": (0, 1)}
    for kind, (i, j) in pairs.items():
        assert len(h.cells(kind)) == oracles.orbit_count(d.n, [g[s[i]], g[s[j]]])
    assert is_isomorphic(sigma_dual(d, t), sigma_dual(h, compose_sigma(s, t)))


def test_double_cover_examples(K, T):
    assert is_isomorphic(double_cover(K), T) and double_cover(K).n == 32
    assert double_cover(T) is T
    for k in range(1, 4):
        h = double_cover(pp2k(k))
        assert h.n == 8 * k and h.is_orientable() and oracles.chi(h) == 2


@settings(max_examples=30, deadline=None)
@given(small)
def test_double_cover_properties(h):
    d = double_cover(h)
    assert d.is_orientable() and covers(d, h)
    if not h.is_orientable():
        assert d.n == 2 * h.n and d.euler_characteristic() == 2 * h.euler_characteristic()


def test_phi2_of_p2(P2, T):
    b = phi_construct(P2, PHI2)
    assert b.n == 16
    assert b.bipartite_type() == (2, 1, 4, 4)
    assert b.bipartite_type().canonical() == (1, 2, 4, 4)
    assert is_isomorphic(covering_core(b), T)


def test_phi1_of_p2_is_sphere_map(P2):
    b = phi_construct(P2, PHI1)
    assert b.is_map() and b.euler_characteristic() == 2


@pytest.mark.parametrize("k", range(1, 6))
def test_phi4_chi_on_pp2k(k):
    assert phi_construct(pp2k(k), PHI4).euler_characteristic() == 2 - 2 * k


def test_phi_rejects_non_epimorphism():
    spec = EpimorphismSpec("flat", ("1", "1", "1", "1"))
    with pytest.raises(NotTransitive):
        phi_construct(pp2k(2), spec)


@settings(max_examples=40, deadline=None)
@given(small_any, st.sampled_from(PHIS))
def test_phi_doubles_flags_and_is_bipartite(h, phi):
    b = phi_construct(h, phi)
    assert b.n == 2 * h.n
    assert b.is_bipartite()
    assert b.bipartite_parts()[0] == tuple(range(h.n))
    assert b.is_orientable() == h.is_orientable()
    assert b.has_boundary() == h.has_boundary()


@settings(max_examples=40, deadline=None)
@given(small, st.sampled_from(PHIS))
def test_phi_bipartite_regular_iff_regular(h, phi):
    assert is_bipartite_regular(phi_construct(h, phi)) == is_regular(h)
    ratio, rem = divmod(automorphism_count(phi_construct(h, phi)), automorphism_count(h))
    assert rem == 0 and ratio in (1, 2)


@pytest.mark.parametrize("phi", PHIS, ids=lambda p: p.name)
@pytest.mark.parametrize("R", [pp2k(2), sphere222k(2)], ids=["pp4", "sphere4"])
def test_phi_regular_inputs(phi, R):
    assert is_bipartite_regular(phi_construct(R, phi))


@settings(max_examples=25, deadline=None)
@given(small, st.sampled_from(PHIS))
def test_phi_preserves_coverings_and_double_covers(h, phi):
    assume(monodromy_order(h, 10**6) <= 800)
    core = covering_core(h)
    assert covers(phi_construct(core, phi), phi_construct(h, phi))
    assert is_isomorphic(phi_construct(h.rebase(h.n - 1), phi), phi_construct(h, phi))
    assert is_isomorphic(phi_construct(double_cover(h), phi), double_cover(phi_construct(h, phi)))


@settings(max_examples=25, deadline=None)
@given(small_any)
def test_core_and_closure_match_oracles(h):
    assume(oracles.covering_core_size(h) <= 800)
    core = covering_core(h)
    assert core.n == oracles.covering_core_size(h)
    assert is_regular(core) and covers(core, h)
    cl = closure_cover(h)
    assert cl.n == oracles.closure_cover_size(h)
    assert is_regular(cl) and covers(h, cl)


def test_core_and_closure_examples(K, T):
    assert is_isomorphic(covering_core(K), T)
    assert is_isomorphic(covering_core(T), T)
    assert is_isomorphic(closure_cover(T), T)
    cl = closure_cover(K)
    assert cl.n == oracles.closure_cover_size(K) == 8
    assert not is_isomorphic(double_cover(cl), closure_cover(double_cover(K)))


def test_core_capacity():
    h = random_hypermap(12, 3)
    with pytest.raises(CapacityExceeded):
        covering_core(h, 5)


@settings(max_examples=30, deadline=None)
@given(small_any)
def test_phi4_is_conjugate_of_phi3(h):
    s = parse_sigma("12")
    assert is_isomorphic(phi_construct(h, PHI4), sigma_dual(phi_construct(sigma_dual(h, s), PHI3), s))


def test_construct_is_pure(K):
    before = K.to_text()
    for phi in PHIS:
        phi_construct(K, phi)
    closure_cover(K)
    assert K.to_text() == before and isinstance(K, Hypermap)
