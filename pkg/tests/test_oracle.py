import pytest
from hypothesis import given, strategies as st

from checkerboard.braidword import BraidWord
from checkerboard.laurent import LaurentPoly
from checkerboard.moves import torus_words
from checkerboard.oracle import (
    UnusedGenerator, alexander_closure, braid_permutation, component_count, genus_from_word, reduced_burau_at,
)


def w(letters, n=None):
    return BraidWord.of(letters, n)


def test_permutation_examples():
    assert braid_permutation(w([1, 1, 1])) == (1, 0)
    assert component_count(w([1, 1, 1])) == 1
    assert braid_permutation(w([1, 1])) == (0, 1)
    assert component_count(w([1, 1])) == 2
    assert component_count(w([1, 2, 1, 2, 1])) == 2


def test_alexander_examples():
    assert alexander_closure(w([1] * 3)) == LaurentPoly.from_coeffs([1, -1, 1])
    assert alexander_closure(w([1] * 7)) == LaurentPoly.from_coeffs([1, -1, 1, -1, 1, -1, 1])
    std, alt = torus_words(4, 5)
    assert alexander_closure(std) == alexander_closure(alt)


def test_torus_knot_formula():
    # Δ of T(p,q) is (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))
    for p, q in [(2, 3), (2, 5), (3, 4), (3, 5), (2, 9)]:
        t = LaurentPoly.monomial(1)
        num = (t ** (p * q) - 1) * (t - 1)
        den = (t ** p - 1) * (t ** q - 1)
        expected = num.exact_div(den).normalized()
        std, alt = torus_words(p, q)
        assert alexander_closure(std) == expected
        assert alexander_closure(alt) == expected


def test_split_closure_is_zero():
    assert alexander_closure(w([1, 1, 3, 3], 4)).is_zero()


def test_genus_examples():
    assert genus_from_word(w([1, 1, 1])) == (2, 1)
    assert genus_from_word(w([1, 1, 1, 2, 2, 1, 1, 2, 3, 2, 2, 2, 3])) == (10, 5)
    assert genus_from_word(torus_words(4, 5)[0]) == (12, 6)
    with pytest.raises(UnusedGenerator):
        genus_from_word(w([1, 1], 3))


def test_burau_respects_braid_relations():
    for t in (-3, 2, 5):
        assert reduced_burau_at(w([1, 2, 1]), t) == reduced_burau_at(w([2, 1, 2]), t)
        assert reduced_burau_at(w([1, 3], 4), t) == reduced_burau_at(w([3, 1], 4), t)


@given(st.lists(st.integers(1, 3), min_size=1, max_size=14))
def test_knot_polynomial_properties(letters):
    word = w(letters, 4)
    delta = alexander_closure(word)
    if component_count(word) == 1 and word.uses_all_generators():
        _, c = delta.coeffs()
        assert abs(delta(1)) == 1
        assert c == c[::-1]
        # degree of a fibred knot polynomial is twice the genus
        assert delta.span() == 2 * genus_from_word(word)[1]


@given(st.lists(st.integers(1, 3), min_size=1, max_size=12), st.integers(0, 11))
def test_conjugation_invariance(letters, k):
    k %= len(letters)
    assert alexander_closure(w(letters, 4)) == alexander_closure(w(letters[k:] + letters[:k], 4))
