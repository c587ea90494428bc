import pytest
from hypothesis import given
from hypothesis import strategies as st

from hypermaps.words import (
    BUILTIN_SPECS,
    PHI1,
    PHI3,
    PHI4,
    PHI5,
    BWord,
    DeltaWord,
    EpimorphismSpec,
    ThetaClass,
    apply_phi,
    apply_sigma,
    compose_sigma,
    embed,
    invert_sigma,
    parse_sigma,
    reduce,
    theta_parity,
)

delta_letters = st.lists(st.integers(0, 2), max_size=30)
b_letters = st.lists(st.integers(0, 3), max_size=20)
sigmas = st.sampled_from(["e", "01", "02", "12", "012", "021"]).map(parse_sigma)


@pytest.mark.parametrize(
    "raw, expected",
    [([0, 0], ()), ([0, 1, 1, 0], ()), ([1, 0, 1], (1, 0, 1)), ([], ()), ([2, 1, 1, 2, 0], (0,))],
)
def test_reduce_examples(raw, expected):
    assert reduce(raw) == expected
    assert DeltaWord(raw).letters == expected


def test_reduce_keeps_word_type():
    w = reduce(BWord("abba"))
    assert isinstance(w, BWord) and len(w) == 0


@pytest.mark.parametrize("bw, expected", [("c", (0, 1, 0)), ("bd", (2, 0, 2, 0)), ("cd", (0, 1, 2, 0))])
def test_embed_examples(bw, expected):
    assert embed(BWord(bw)).letters == expected


def test_text_forms():
    assert str(DeltaWord(())) == "e"
    assert DeltaWord.parse("e") == DeltaWord(())
    assert str(BWord("cdad")) == "cdad"
    with pytest.raises(ValueError):
        BWord("abx")
    with pytest.raises(ValueError):
        DeltaWord([3])


@pytest.mark.parametrize(
    "word, tag, bit", [([0], "hat0", 1), ([0, 1], "plus", 0), ([1, 2], "sub0", 0), ([2], "hat2", 1), ([0], "sub0", 0)]
)
def test_theta_parity_examples(word, tag, bit):
    assert theta_parity(word, ThetaClass.from_tag(tag)) == bit


def test_seven_distinct_classes():
    vectors = {t.parity_vector for t in ThetaClass}
    assert len(vectors) == 7 and (0, 0, 0) not in vectors


@pytest.mark.parametrize(
    "word, sigma, expected",
    [([0, 1, 2], "01", (1, 0, 2)), ([0, 1], "e", (0, 1)), ([1, 2, 1], "12", (2, 1, 2))],
)
def test_apply_sigma_examples(word, sigma, expected):
    assert apply_sigma(DeltaWord(word), parse_sigma(sigma)).letters == expected


def test_parse_sigma():
    assert parse_sigma("012") == (1, 2, 0)
    assert parse_sigma("(12)") == (0, 2, 1)
    for bad in ("0", "011", "013"):
        with pytest.raises(ValueError):
            parse_sigma(bad)


@pytest.mark.parametrize("bw, phi, expected", [("d", PHI1, (2,)), ("cdad", PHI5, ()), ("bd", PHI1, ())])
def test_apply_phi_examples(bw, phi, expected):
    assert apply_phi(BWord(bw), phi).letters == expected


@pytest.mark.parametrize("name", sorted(BUILTIN_SPECS))
def test_builtin_kernel_relators_vanish(name):
    spec = BUILTIN_SPECS[name]
    assert spec.kernel_relators
    for r in spec.kernel_relators:
        assert len(spec(r)) == 0
    assert all(len(w) % 2 == 1 for w in spec.images)


@pytest.mark.parametrize("name", sorted(BUILTIN_SPECS))
def test_section_maps_onto_generators(name):
    spec = BUILTIN_SPECS[name]
    for i, s in enumerate(spec.section()):
        assert spec(s).letters == (i,)


def test_spec_text_round_trip():
    text = "# comment\n1\n2\n010\n0\nkernel: cdad\n"
    spec = EpimorphismSpec.from_text(text, name="p5")
    assert spec.images == PHI5.images and spec.kernel_relators == PHI5.kernel_relators
    assert EpimorphismSpec.from_text(spec.to_text()) == EpimorphismSpec("custom", spec.images, spec.kernel_relators)
    with pytest.raises(ValueError):
        EpimorphismSpec.from_text("1\n2\n0\n")


@given(delta_letters)
def test_reduce_idempotent_and_shortening(raw):
    r = reduce(raw)
    assert reduce(r) == r
    assert len(r) <= len(raw)
    assert all(x != y for x, y in zip(r, r[1:]))


@given(delta_letters)
def test_word_times_reverse_is_identity(raw):
    assert reduce(raw + raw[::-1]) == ()
    w = DeltaWord(raw)
    assert len(w + w.inverse()) == 0


@given(delta_letters, delta_letters, st.sampled_from(list(ThetaClass)))
def test_theta_parity_additive(u, v, t):
    assert theta_parity(u + v, t) == theta_parity(u, t) ^ theta_parity(v, t)


@given(b_letters)
def test_embedded_words_lie_in_bipartite_subgroup(letters):
    w = embed(BWord(letters))
    assert theta_parity(w, ThetaClass.HAT0) == 0
    assert w.letters.count(0) % 2 == 0


@given(sigmas, sigmas, delta_letters)
def test_sigma_composition(s, t, raw):
    w = DeltaWord(raw)
    assert apply_sigma(apply_sigma(w, s), t) == apply_sigma(w, compose_sigma(s, t))
    assert apply_sigma(apply_sigma(w, s), invert_sigma(s)) == w


@given(b_letters)
def test_phi4_is_phi3_conjugated_by_12(letters):
    # conjugating by (12) also swaps a<->b and c<->d on the bipartite side
    swap = parse_sigma("12")
    swapped = BWord([{0: 1, 1: 0, 2: 3, 3: 2}[x] for x in letters])
    assert PHI4(BWord(letters)) == apply_sigma(PHI3(swapped), swap)
