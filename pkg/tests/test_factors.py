import pytest
from hypothesis import given

import oracles
from strategies import binary
from wordlab.errors import LengthCapExceeded, NonBinaryAlphabet
from wordlab.factors import (
    bispecial_count,
    factor_count,
    highly_bispecial_words,
    is_attractor,
    is_highly_bispecial,
    max_factor_count,
    max_factor_count_binomial,
    minimal_forbidden_words,
    smallest_attractor,
    special_factors,
)
from wordlab.palindromes import is_palindrome
from wordlab.words import all_words, complement

V, W = "0011", "001011"
TABLE = {1: 2, 2: 4, 3: 6, 4: 9, 5: 13, 6: 17, 7: 22, 8: 28, 9: 35, 10: 43, 11: 51, 12: 60, 13: 70, 14: 81, 15: 93}


def test_max_factor_count_examples():
    assert max_factor_count(4) == 9
    assert max_factor_count(6) == 17
    assert max_factor_count(15) == 93
    assert max_factor_count(0) == 1


def test_closed_forms_agree():
    assert all(max_factor_count(n) == max_factor_count_binomial(n) for n in range(1, 1001))
    assert {n: max_factor_count(n) for n in TABLE} == TABLE


def test_factor_count_maxima_by_enumeration():
    for n in range(1, 13):
        assert max(factor_count(u) for u in all_words(n)) == TABLE[n]


def test_special_factor_examples():
    assert special_factors(V).bispecial == {""}
    assert special_factors(W).bispecial == {"", "0", "01", "1"}
    assert special_factors("0").bispecial == set()
    with pytest.raises(NonBinaryAlphabet):
        special_factors("012")


def test_highly_bispecial_examples():
    assert is_highly_bispecial(W)
    assert is_highly_bispecial("001110")
    assert not is_highly_bispecial("000000")
    with pytest.raises(LengthCapExceeded):
        is_highly_bispecial("0" * 15)


def test_highly_bispecial_sets():
    for n in range(4, 11):
        shapes = set()
        for a, b in ("01", "10"):
            shapes |= {a + a + b * (n - 3) + a, a + b * (n - 3) + a + a, a + b * (n - 2) + a}
        if n == 6:
            shapes |= {W, complement(W)}
        assert set(highly_bispecial_words(n)) == shapes


def test_bispecial_bound():
    for n in range(3, 11):
        assert max(bispecial_count(u) for u in all_words(n)) == n - 2


def test_minimal_forbidden_word_examples():
    assert minimal_forbidden_words(V) == {"000", "10", "111"}
    assert minimal_forbidden_words(W) == {"000", "0011", "100", "1010", "110", "111"}
    assert minimal_forbidden_words("0", 2) == {"1", "00"}


def test_minimal_forbidden_word_bound():
    for n in range(3, 10):
        assert max(len(minimal_forbidden_words(u, 2)) for u in all_words(n)) == n


def test_palindrome_with_non_palindromic_maw():
    p = "0010110100"
    assert is_palindrome(p) and p.startswith(W)
    assert V in minimal_forbidden_words(p)


def test_attractor_examples():
    found = smallest_attractor(V)
    assert found.size == 2
    assert is_attractor(V, [2, 3])
    assert found.witness == (1, 3)  # lexicographically least of the minimum sets
    assert smallest_attractor(W).size == 3
    assert smallest_attractor("0000") == (1, (1,))
    with pytest.raises(LengthCapExceeded):
        smallest_attractor("0" * 21)


def test_only_w_and_its_mirror_need_three_positions():
    for n in range(1, 6):
        assert all(smallest_attractor(u).size <= 2 for u in all_words(n))
    assert [u for u in all_words(6) if smallest_attractor(u).size > 2] == [W, "110100"]


@given(binary(max_size=12))
def test_factor_count_matches_oracle(u):
    assert factor_count(u) == len(oracles.factors(u))
    assert factor_count(u) <= max_factor_count(len(u))


@given(binary(max_size=10))
def test_minimal_forbidden_words_match_oracle(u):
    assert minimal_forbidden_words(u, 2) == oracles.maws(u)


@given(binary(max_size=12))
def test_bispecial_matches_oracle(u):
    assert special_factors(u).bispecial == oracles.bispecial(u)


@given(binary(min_size=1, max_size=7))
def test_smallest_attractor_matches_oracle(u):
    found = smallest_attractor(u)
    assert found.size == oracles.min_attractor_size(u)
    assert oracles.attractor_ok(u, found.witness)
