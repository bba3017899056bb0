"""Permutations in one-line notation and reduced words."""

from hypothesis import given, settings
from hypothesis import strategies as st

from tiedbox.perms import (
    all_perms,
    compose,
    identity,
    inverse,
    length,
    lex_least_word,
    perm_from_word,
    right_longer,
    sgen,
    young_subgroup,
)

perms4 = st.sampled_from(all_perms(4))


def test_basics():
    assert identity(3) == (1, 2, 3)
    assert sgen(3, 1) == (2, 1, 3)
    assert len(all_perms(4)) == 24


@given(perms4, perms4)
@settings(max_examples=100, deadline=None)
def test_compose_inverse(w, v):
    assert compose(w, inverse(w)) == identity(4)
    assert inverse(compose(w, v)) == compose(inverse(v), inverse(w))


@given(perms4)
@settings(max_examples=100, deadline=None)
def test_reduced_word_roundtrip(w):
    word = lex_least_word(w)
    assert len(word) == length(w)
    assert perm_from_word(4, word) == w


def test_length_counts_inversions():
    for w in all_perms(4):
        inv = sum(
            1
            for i in range(4)
            for j in range(i + 1, 4)
            if w[i] > w[j]
        )
        assert length(w) == inv


def test_lex_least_word_is_lex_least():
    # brute force over all reduced words for a few elements
    import itertools

    for w in all_perms(3):
        target = length(w)
        words = [
            word
            for word in itertools.product((1, 2), repeat=target)
            if perm_from_word(3, word) == w
        ]
        assert lex_least_word(w) == min(words)


def test_right_longer_matches_length():
    for w in all_perms(4):
        for i in (1, 2, 3):
            ws = compose(w, sgen(4, i))
            # multiplying on the right by s_i lengthens exactly when the
            # predicate holds
            assert right_longer(w, i) == (length(ws) > length(w))


def test_young_subgroup_sizes():
    import math

    assert len(young_subgroup((2, 2))) == 4
    assert len(young_subgroup((3, 1))) == math.factorial(3)
    assert identity(4) in young_subgroup((2, 2))
