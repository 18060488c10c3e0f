import pytest
from hypothesis import given, strategies as st

from oracles import cancel_letters
from weakid.words import (
    IDENTITY,
    Endomorphism,
    Word,
    WordSyntaxError,
    apply_endo,
    exponent_sums,
    invert,
    multiply,
    parse_word,
)

letters = st.lists(st.integers(1, 4).flatmap(lambda g: st.sampled_from([g, -g])), max_size=12)
words = letters.map(Word.from_letters)
endos = st.dictionaries(st.integers(1, 4), words, max_size=4).map(Endomorphism)


def W(*syl):
    return Word(tuple(syl))


@pytest.mark.parametrize(
    "text, expected",
    [
        ("g1*g1^-1", ()),
        ("[g1,g2]", ((1, 1), (2, 1), (1, -1), (2, -1))),
        ("g2^3*g2^-1", ((2, 2),)),
        ("g1 g2 (g2^-1 g1^-1)", ()),
        ("[g1^2, g3]^-1", ((3, 1), (1, 2), (3, -1), (1, -2))),
        ("1", ()),
        ("  g12 ^ -2 ", ((12, -2),)),
    ],
)
def test_parse_examples(text, expected):
    assert parse_word(text).syllables == expected


@pytest.mark.parametrize("text, pos", [("g0", 0), ("g1*", 3), ("[g1 g2]", 6), ("g1)", 2), ("x1", 0), ("g1^", 3)])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(WordSyntaxError) as info:
        parse_word(text)
    assert info.value.position == pos


def test_multiply_examples():
    assert multiply(W((1, 1)), W((1, -1))) == IDENTITY
    assert multiply(W((1, 2)), W((1, 3))) == W((1, 5))
    u, v = W((1, 1), (2, 1)), W((2, -1), (3, 1))
    expected = Word.from_letters(cancel_letters(u.letters() + v.letters()))
    assert expected == W((1, 1), (3, 1))
    assert multiply(u, v) == expected


def test_invert_examples():
    assert invert(IDENTITY) == IDENTITY
    assert invert(W((1, 2))) == W((1, -2))
    assert invert(W((1, 1), (2, -3))) == W((2, 3), (1, -1))


def test_apply_endo_examples():
    c = parse_word("[g1,g2]")
    assert apply_endo(Endomorphism(), c) == c
    e = Endomorphism({1: parse_word("g1*g2"), 2: parse_word("g2")})
    # brute-force substitution on letters, then reduce
    subst = []
    for x in c.letters():
        img = e.image(abs(x)).letters()
        subst += img if x > 0 else [-y for y in reversed(img)]
    oracle = Word.from_letters(cancel_letters(subst))
    assert apply_endo(e, c) == oracle == parse_word("g1*g2*g1^-1*g2^-1")
    assert apply_endo(Endomorphism({1: IDENTITY}), c) == IDENTITY


def test_exponent_sums_examples():
    assert exponent_sums(parse_word("[g1,g2]")) == {}
    assert exponent_sums(parse_word("g1^6")) == {1: 6}
    assert exponent_sums(parse_word("g1^2*g2^-1*g1")) == {1: 3, 2: -1}


@given(letters)
def test_reduction_matches_letter_cancellation(ls):
    assert Word.from_letters(ls).letters() == cancel_letters(ls)


@given(words)
def test_print_parse_roundtrip(u):
    assert parse_word(str(u)) == u


@given(words, words)
def test_invariants_of_reduced_form(u, v):
    w = multiply(u, v)
    assert all(a[0] != b[0] for a, b in zip(w.syllables, w.syllables[1:]))
    assert all(e != 0 for _, e in w.syllables)


@given(words, words, words)
def test_multiply_associative(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))


@given(words)
def test_invert_involution(u):
    assert invert(invert(u)) == u
    assert multiply(u, invert(u)) == IDENTITY
    assert multiply(IDENTITY, u) == u == multiply(u, IDENTITY)


@given(endos, words, words)
def test_apply_endo_is_homomorphic(e, u, v):
    assert apply_endo(e, multiply(u, v)) == multiply(apply_endo(e, u), apply_endo(e, v))


@given(endos, endos, words)
def test_endo_composition(e, f, u):
    assert apply_endo(e.compose(f), u) == apply_endo(e, apply_endo(f, u))


@given(words, words)
def test_exponent_sums_additive(u, v):
    a, b = exponent_sums(u), exponent_sums(v)
    total = {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)}
    assert exponent_sums(multiply(u, v)) == {k: x for k, x in total.items() if x}
