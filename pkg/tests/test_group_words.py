import random

import pytest
from hypothesis import given, strategies as st

from milnor_skein.errors import ResourceError
from milnor_skein.group_words import (
    GroupRingElement,
    augment,
    fox_derivative,
    mu_of_word,
    parse_word,
    word_inverse,
    word_multiply,
    word_normalize,
)
from milnor_skein.multilinear import coefficient, magnus_of_word

letters = st.integers(1, 4).flatmap(lambda i: st.sampled_from([i, -i]))
words = st.lists(letters, max_size=12).map(tuple)
seqs = st.permutations([1, 2, 3, 4]).flatmap(lambda p: st.integers(1, 4).map(lambda r: p[:r]))


def E(*ws, coeffs=None):
    coeffs = coeffs or [1] * len(ws)
    out = GroupRingElement()
    for w, c in zip(ws, coeffs):
        out = out + GroupRingElement.from_word(w) * c
    return out


@pytest.mark.parametrize(
    "w, expected",
    [((1, -1), ()), ((1, 2), (1, 2)), ((1, 2, -2, 1), (1, 1)), ((-3, 2, -2, 3, 1), (1,))],
)
def test_normalize(w, expected):
    assert word_normalize(w) == expected


@pytest.mark.parametrize(
    "a, b, expected",
    [((1,), (-1,), ()), ((1,), (), (1,)), ((1, 2), (-2, 3), (1, 3)), ((1, 2), (-2, -1), ())],
)
def test_multiply(a, b, expected):
    assert word_multiply(a, b) == expected


@pytest.mark.parametrize("w, expected", [((1, 2), (-2, -1)), ((), ()), ((-1,), (1,))])
def test_inverse(w, expected):
    assert word_inverse(w) == expected


def test_parse_word_literal():
    assert parse_word("1 2 -1 -2") == (1, 2, -1, -2)
    assert parse_word("") == ()
    with pytest.raises(ValueError):
        parse_word("1 0")


def test_fox_examples():
    assert fox_derivative(1, (1,)) == GroupRingElement.one()
    assert fox_derivative(1, (2,)) == GroupRingElement()
    assert fox_derivative(1, ()) == GroupRingElement()
    assert fox_derivative(2, (1, 2)) == E((1,))


def test_fox_of_inverse_forced_by_product_rule():
    # 0 = d1(x1^-1 x1) = d1(x1^-1) + x1^-1 * d1(x1)
    d_inv = fox_derivative(1, (-1,))
    assert d_inv + GroupRingElement.from_word((-1,)) * fox_derivative(1, (1,)) == GroupRingElement()
    assert d_inv == E((-1,), coeffs=[-1])


@pytest.mark.parametrize(
    "e, value",
    [(GroupRingElement.one(), 1), (E((1,), (2,), coeffs=[1, -1]), 0), (E((1, 2), (), coeffs=[2, 3]), 5)],
)
def test_augment(e, value):
    assert augment(e) == value


@pytest.mark.parametrize(
    "w, seq, value",
    [((1,), [1], 1), ((1, 2, -1, -2), [1, 2], 1), ((1, 2, -1, -2), [2, 1], -1), ((), [1], 0)],
)
def test_mu_of_word_examples(w, seq, value):
    assert mu_of_word(w, seq) == value


def test_mu_of_word_rejects_repeats():
    with pytest.raises(ValueError):
        mu_of_word((1, 1), [1, 1])


def test_term_guard():
    w = (1, 2) * 100
    with pytest.raises(ResourceError):
        fox_derivative(1, w, max_terms=5)


def test_fox_matches_magnus_on_1000_words():
    rng = random.Random(11)
    for _ in range(1000):
        n = rng.randint(1, 4)
        w = word_normalize(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(0, 20)))
        seq = rng.sample(range(1, n + 1), rng.randint(1, n))
        assert mu_of_word(w, seq) == coefficient(magnus_of_word(w), seq)


@given(words, words, st.integers(1, 4))
def test_product_rule(u, v, i):
    lhs = fox_derivative(i, word_multiply(u, v))
    rhs = fox_derivative(i, u) + GroupRingElement.from_word(u) * fox_derivative(i, v)
    assert lhs == rhs


@given(words)
def test_normalize_idempotent(w):
    assert word_normalize(word_normalize(w)) == word_normalize(w)
    assert word_multiply(w, word_inverse(w)) == ()


@given(words, words, words)
def test_multiply_associative(a, b, c):
    assert word_multiply(word_multiply(a, b), c) == word_multiply(a, word_multiply(b, c))


def _spelled_mu(spelling, seq):
    # iterated derivative on a word kept unreduced, letter by letter
    e = GroupRingElement._raw({tuple(spelling): 1})
    for i in reversed(seq):
        e = fox_derivative(i, e)
    return augment(e)


@given(words, seqs, st.data())
def test_mu_ignores_spelling(w, seq, data):
    pos = data.draw(st.integers(0, len(w)))
    a = data.draw(letters)
    padded = w[:pos] + (a, -a) + w[pos:]
    assert _spelled_mu(padded, seq) == mu_of_word(w, seq)
    assert mu_of_word(word_normalize(padded), seq) == mu_of_word(w, seq)
