import pytest
from hypothesis import given

from foxcalc.freegroup import (FreeWord, ParseError, RankMismatch, commutator, conjugate, cyclic_reduce,
                               enumerate_words, identity, invert, multiply, occurs, parse_word, power,
                               render, shortlex_key, word_length)

from conftest import word_strategy


def W(text, rank=2):
    return parse_word(text, rank)


def test_parse_basic():
    assert W("x1*x2^-1").syllables == ((1, 1), (2, -1))
    assert W("x1*x1^-1") == identity(2)
    assert W(" x1 ^ 2 * x2 ").syllables == ((1, 2), (2, 1))


def test_parse_commutator_bracket():
    assert W("[x2,x1^3]").syllables == ((2, -1), (1, -3), (2, 1), (1, 3))


def test_parse_nested_and_powers():
    assert W("(x1*x2)^2") == W("x1*x2*x1*x2")
    assert W("(x1*x2)^-1") == W("x2^-1*x1^-1")
    assert W("[x1,x2]^0") == identity(2)
    assert W("x1^+2") == W("x1*x1")


@pytest.mark.parametrize("text, pos", [("x1*", 3), ("x1 x2", 3), ("y1", 0), ("[x1 x2]", 4), ("x", 1), ("(x1", 3)])
def test_parse_syntax_errors_report_position(text, pos):
    with pytest.raises(ParseError) as exc:
        W(text)
    assert exc.value.position == pos


def test_parse_generator_out_of_range():
    with pytest.raises(ParseError, match="out of range"):
        W("x3")
    with pytest.raises(ParseError, match="out of range"):
        W("x0")


def test_multiply_examples():
    assert multiply(W("x1"), W("x1^-1")) == identity(2)
    assert multiply(W("x1*x2"), W("x2^-1*x1")) == W("x1^2")
    w = W("x2*x1^-3")
    assert multiply(identity(2), w) == w


def test_rank_mismatch():
    with pytest.raises(RankMismatch):
        multiply(W("x1"), parse_word("x1", 3))


def test_invert_examples():
    assert invert(W("x1*x2")) == W("x2^-1*x1^-1")
    assert invert(identity(2)) == identity(2)
    assert invert(W("x1^3")) == W("x1^-3")


@pytest.mark.parametrize("text, conj, core", [
    ("x1*x2*x1^-1", "x1", "x2"),
    ("x2", "e", "x2"),
    ("e", "e", "e"),
    ("x1^3*x2*x1^-1", "x1", "x1^2*x2"),
    ("x1*x2^2*x1*x2^-1*x1^-2", "x1", "x2^2*x1*x2^-1*x1^-1"),
    ("x2*x1*x2^-2", "x2", "x1*x2^-1"),
    ("x1*x2*x1", "e", "x1*x2*x1"),
])
def test_cyclic_reduce(text, conj, core):
    assert cyclic_reduce(W(text)) == (W(conj), W(core))


def test_occurs():
    assert occurs(W("x1*x2*x1^-1"), 2)
    assert not occurs(W("x1^3"), 2)
    assert not occurs(identity(2), 1)


def test_helpers():
    a, b = W("x1"), W("x2")
    assert commutator(a, b) == W("x1^-1*x2^-1*x1*x2")
    assert conjugate(a, b) == W("x2^-1*x1*x2")
    assert power(W("x1*x2*x1"), 2) == W("x1*x2*x1^2*x2*x1")
    assert power(W("x2*x1*x2^-1"), -3) == W("x2*x1^-3*x2^-1")
    assert word_length(W("x1^3*x2^-2")) == 5
    assert render(W("x1^2*x2^-1")) == "x1^2*x2^-1"
    assert render(identity(2)) == "e"


def test_shortlex_order():
    words = list(enumerate_words(2, 2))
    assert words[:5] == [W("e"), W("x1"), W("x1^-1"), W("x2"), W("x2^-1")]
    assert words == sorted(words, key=shortlex_key)
    assert len(words) == 1 + 4 + 12


def test_words_are_immutable_and_hashable():
    w = W("x1*x2")
    with pytest.raises(AttributeError):
        w.rank = 3
    assert {w: 1}[W("x1*x2")] == 1


@given(word_strategy(3), word_strategy(3), word_strategy(3))
def test_group_axioms(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(a, invert(a)) == identity(3)
    assert multiply(identity(3), a) == a == multiply(a, identity(3))


@given(word_strategy(3))
def test_render_round_trip(w):
    assert parse_word(render(w), 3) == w


@given(word_strategy(3, 20))
def test_cyclic_reduce_recomposes(v):
    conj, core = cyclic_reduce(v)
    assert multiply(multiply(conj, core), invert(conj)) == v
    syl = core.syllables
    if len(syl) >= 2:
        (g0, e0), (g1, e1) = syl[0], syl[-1]
        assert g0 != g1 or (e0 > 0) == (e1 > 0)
    # maximality: the conjugator accounts for all the cancellation
    assert word_length(v) == word_length(core) + 2 * word_length(conj)


@given(word_strategy(3, 15))
def test_power_matches_repeated_product(a):
    acc = identity(3)
    for m in range(4):
        assert power(a, m) == acc
        assert power(a, -m) == invert(acc)
        acc = multiply(acc, a)


@given(word_strategy(3))
def test_absent_generator_means_subgroup_word(v):
    for k in (1, 2, 3):
        if not occurs(v, k):
            assert all(g != k for g, _ in v.syllables)


def test_freeword_constructor_normalizes():
    assert FreeWord(2, [(1, 2), (1, -2), (2, 0)]) == identity(2)
    with pytest.raises(ValueError):
        FreeWord(2, [(3, 1)])
