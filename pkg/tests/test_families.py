import pytest

from hypermaps import oracles
from hypermaps.construct import double_cover
from hypermaps.errors import Unsatisfiable
from hypermaps.families import FamilySpec, p2, p2_presented, pp2k, random_hypermap, sphere222k
from hypermaps.morphism import is_bipartite_regular, is_isomorphic, is_regular


def test_p2(P2):
    assert P2.n == 8 and P2.uniform_type() == (2, 2, 2)
    assert is_regular(P2) and P2.euler_characteristic() == 2
    assert is_isomorphic(P2, p2_presented())


@pytest.mark.parametrize("k", range(1, 6))
def test_pp2k(k):
    h = pp2k(k)
    assert h.n == 4 * k and is_regular(h)
    assert (h.V, h.E, h.F) == (k, k, 1)
    assert h.uniform_type() == (2, 2, 2 * k)
    assert not h.is_orientable()


@pytest.mark.parametrize("k", range(1, 11))
def test_characteristics(k):
    assert oracles.chi(pp2k(k)) == 1
    assert oracles.chi(sphere222k(k)) == 2


@pytest.mark.parametrize("k", range(1, 6))
def test_sphere222k(k):
    h = sphere222k(k)
    assert h.n == 8 * k and is_regular(h) and h.is_orientable()
    assert (h.V, h.E, h.F) == (2 * k, 2 * k, 2)
    assert h.uniform_type() == (2, 2, 2 * k)


def test_sphere_is_double_cover_of_projective_plane():
    for k in range(1, 4):
        assert is_isomorphic(sphere222k(k), double_cover(pp2k(k)))


def test_klein_and_torus(K, T):
    assert is_isomorphic(double_cover(K), T)
    assert K.n == 16 and is_bipartite_regular(K) and not is_regular(K)
    assert K.uniform_type() == (2, 4, 4)
    assert T.euler_characteristic() == 0 and T.is_orientable() and is_regular(T)


def test_random():
    assert random_hypermap(2, 17) == random_hypermap(2, 99)
    for seed in range(20):
        h = random_hypermap(8, seed)
        assert h.n == 8 and not h.has_boundary()
        assert h == random_hypermap(8, seed)
    with pytest.raises(Unsatisfiable):
        random_hypermap(7, 0)
    assert random_hypermap(7, 0, allow_boundary=True).n == 7
    with pytest.raises(ValueError):
        random_hypermap(0, 0)


@pytest.mark.parametrize(
    "text, n",
    [("p2", 8), ("pp2k:3", 12), ("sphere222k:2", 16), ("klein", 16), ("K", 16), ("torus", 32), ("random:6:4", 6)],
)
def test_family_spec(text, n):
    assert FamilySpec.parse(text).build().n == n


@pytest.mark.parametrize("text", ["pp2k", "pp2k:0", "klein:2", "random:4", "cube", "pp2k:x"])
def test_family_spec_errors(text):
    with pytest.raises(ValueError):
        FamilySpec.parse(text)


def test_pp2k_rejects_zero():
    with pytest.raises(ValueError):
        pp2k(0)
    with pytest.raises(ValueError):
        sphere222k(0)


def test_p2_cayley_numbering():
    assert p2().gens == oracles.c2_cube_table()
