import pytest

from hypermaps import oracles
from hypermaps.errors import CapacityExceeded
from hypermaps.families import COMMUTING_B_RELATORS, DERIVED_SUBGROUP_RELATORS, KLEIN_RELATORS
from hypermaps.hypermap import Hypermap
from hypermaps.morphism import is_bipartite_regular, is_isomorphic, is_regular
from hypermaps.presentation import (
    Presentation,
    bipartite_hypermap_from_b_relators,
    coset_enumerate,
    regular_hypermap_from_delta_relators,
)
from hypermaps.words import BWord, DeltaWord, embed


def _order(arity, relators):
    return len(coset_enumerate(Presentation(arity, relators))[0])


def test_quotient_orders():
    assert _order(3, DERIVED_SUBGROUP_RELATORS) == 8
    assert _order(4, COMMUTING_B_RELATORS) == 16
    assert _order(4, KLEIN_RELATORS) == 8


def test_klein_order_matches_linear_algebra():
    # abelianised over F2: bdc gives the single relation b + c + d = 0
    assert oracles.elementary_abelian_quotient_order(4, [(0, 1, 1, 1)]) == 8


def test_derived_table_is_c2_cube():
    table = coset_enumerate(Presentation(3, DERIVED_SUBGROUP_RELATORS))
    assert is_isomorphic(Hypermap(*table), Hypermap(*oracles.c2_cube_table()))


def test_dihedral_with_coincidences():
    # the relator 01 identifies R0 with R1, which forces coset merges; quotient is C2 x C2
    table = coset_enumerate(Presentation(3, [DeltaWord("0101"), DeltaWord("01"), DeltaWord("1212"), DeltaWord("0202")]))
    assert len(table[0]) == 4


def test_relators_fix_every_coset():
    table = coset_enumerate(Presentation(4, KLEIN_RELATORS))
    for r in KLEIN_RELATORS:
        for c in range(len(table[0])):
            x = c
            for letter in r:
                x = table[letter][x]
            assert x == c


def test_capacity():
    with pytest.raises(CapacityExceeded):
        coset_enumerate(Presentation(3, [], 100))
    with pytest.raises(CapacityExceeded):
        bipartite_hypermap_from_b_relators([], 100)
    with pytest.raises(CapacityExceeded):
        regular_hypermap_from_delta_relators([], 100)
    with pytest.raises(ValueError):
        Presentation(3, [], 0)


def test_deterministic():
    first = coset_enumerate(Presentation(4, KLEIN_RELATORS))
    assert all(coset_enumerate(Presentation(4, KLEIN_RELATORS)) == first for _ in range(3))


def test_builds(K, T, P2):
    p = regular_hypermap_from_delta_relators(DERIVED_SUBGROUP_RELATORS)
    assert p.n == 8 and is_regular(p) and is_isomorphic(p, P2)
    assert K.n == 16 and is_bipartite_regular(K)
    assert T.n == 32 and is_bipartite_regular(T)
    assert K.act(0, embed(BWord("bdc"))) == 0


def test_part_a_is_first_half(K):
    assert K.bipartite_parts()[0] == tuple(range(8))


def test_text_format():
    text = "b\n# klein\nabab\nacac\nadad\nbcbc\nbdbd\ncdcd\nbdc\n"
    p = Presentation.from_text(text)
    assert p.arity == 4 and len(p.relators) == 7
    assert Presentation.from_text(p.to_text()) == p
    with pytest.raises(ValueError):
        Presentation.from_text("gamma\n01\n")
