import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

import oracles
from strategies import binary
from wordlab.errors import (
    EmptyWordUndefined,
    InvalidExponent,
    LengthCapExceeded,
    LengthMismatch,
    NonBinaryAlphabet,
    ParseError,
)
from wordlab.words import (
    Word,
    all_words,
    complement,
    embedding_count,
    exponent,
    factor_set,
    fractional_power,
    is_abelian_square,
    is_asymmetric,
    is_dyck,
    is_primitive,
    is_reverse_shuffle_square,
    is_shuffle_square,
    is_tangram,
    min_period,
    mirror,
    parse_word,
    perfect_shuffle,
    rotations,
    scattered_subwords,
    words_upto,
)

V, W = "0011", "001011"


def test_word_sigma_inferred_and_declared():
    assert Word("0120").sigma == 3
    assert Word("").sigma == 2
    assert Word("01", 5).sigma == 5
    with pytest.raises(ParseError):
        Word("012", 2)
    with pytest.raises(ParseError):
        Word("0a1")


def test_parse_word_annotations():
    assert parse_word("0120;sigma=4").sigma == 4
    assert parse_word("ε") == ""
    assert parse_word("") == ""
    with pytest.raises(ParseError):
        parse_word("01x")


def test_mirror_examples():
    assert mirror(W) == "110100"
    assert mirror(V) == "1100"
    assert mirror("") == ""


def test_complement_examples():
    assert complement(V) == "1100"
    assert complement(W) == "110100"
    assert complement("") == ""
    with pytest.raises(NonBinaryAlphabet):
        complement("012")


def test_rotations_examples():
    assert rotations(V) == ["0011", "0110", "1100", "1001"]
    assert rotations("01") == ["01", "10"]
    assert len(set(rotations(W))) == 6
    assert rotations("") == []


def test_primitive_examples():
    assert is_primitive(W)
    assert not is_primitive("0101")
    assert is_primitive("0")
    with pytest.raises(EmptyWordUndefined):
        is_primitive("")


def test_asymmetric_examples():
    assert is_asymmetric(W)
    assert not is_asymmetric(V)
    assert not is_asymmetric("01")


def test_dyck_examples():
    assert is_dyck(V) and is_dyck(W)
    assert not is_dyck("10")
    assert is_dyck("")


def test_perfect_shuffle_examples():
    assert perfect_shuffle("01", "01") == V
    assert perfect_shuffle("011", "001") == W
    assert perfect_shuffle("", "") == ""
    with pytest.raises(LengthMismatch):
        perfect_shuffle("0", "01")


def test_shuffle_square_examples():
    assert is_shuffle_square(V)
    assert not is_shuffle_square(W)
    assert is_shuffle_square("00")
    with pytest.raises(LengthCapExceeded):
        is_shuffle_square("0" * 26)


def test_reverse_shuffle_square_examples():
    assert is_reverse_shuffle_square("0110")
    assert not is_reverse_shuffle_square(V)
    assert is_reverse_shuffle_square("")


def test_abelian_square_and_tangram_examples():
    assert is_abelian_square("0110")
    assert not is_abelian_square(V) and not is_abelian_square(W)
    assert is_abelian_square("00")
    assert is_tangram(V) and not is_tangram(W) and is_tangram("")


def test_factor_set_examples():
    assert factor_set(V) == {"", "0", "00", "001", "0011", "01", "011", "1", "11"}
    assert len(factor_set(W)) == 17
    assert factor_set("0") == {"", "0"}


def test_period_and_exponent_examples():
    assert (min_period("0101"), exponent("0101")) == (2, Fraction(2))
    assert (min_period("01010"), exponent("01010")) == (2, Fraction(5, 2))
    assert (min_period(W), exponent(W)) == (6, Fraction(1))
    with pytest.raises(EmptyWordUndefined):
        min_period("")


def test_fractional_power_examples():
    assert fractional_power(W, Fraction(8, 6)) == "00101100"
    assert fractional_power(W, "11/6") == "00101100101"
    assert fractional_power(W, 1) == W
    with pytest.raises(InvalidExponent):
        fractional_power(W, Fraction(1, 4))


def test_scattered_subwords_and_embeddings():
    # the four listed subwords are present, but 0010 and 0101 are subwords too
    assert scattered_subwords(W, 4) == {"0001", "0010", "0011", "0101", "0111", "1011"}
    assert embedding_count(W, "0011") == 5
    assert embedding_count(W, "") == 1


def test_enumeration_order_and_counts():
    assert list(all_words(2)) == ["00", "01", "10", "11"]
    assert list(all_words(0)) == [""]
    assert sum(1 for _ in words_upto(5)) == 63
    assert sum(1 for _ in all_words(3, 3)) == 27


@given(binary())
def test_mirror_complement_involutions_commute(u):
    assert mirror(mirror(u)) == u
    assert complement(complement(u)) == u
    assert mirror(complement(u)) == complement(mirror(u))


@given(binary(min_size=1))
def test_primitive_iff_not_a_proper_power(u):
    power = any(len(u) % d == 0 and u == u[:d] * (len(u) // d) for d in range(1, len(u)))
    assert is_primitive(u) == (not power)
    e = exponent(u)
    assert is_primitive(u) == (not (e.denominator == 1 and e.numerator > 1))


@given(binary(max_size=10))
def test_reverse_shuffle_square_iff_abelian_square(u):
    assert is_reverse_shuffle_square(u) == is_abelian_square(u) == oracles.reverse_shuffle_square(u)


@given(binary(max_size=10))
def test_shuffle_square_matches_subset_search(u):
    assert is_shuffle_square(u) == oracles.shuffle_square(u)


@given(binary(max_size=12))
def test_tangram_iff_some_rotation_abelian_square(u):
    assert is_tangram(u) == (u == "" or any(is_abelian_square(r) for r in rotations(u)))


@given(binary(max_size=12))
def test_factor_set_matches_oracle(u):
    assert factor_set(u) == oracles.factors(u)


@given(binary(max_size=8))
def test_shuffle_of_complement_and_mirror_is_antipalindrome(x):
    assert oracles.antipal(perfect_shuffle(complement(x), mirror(x)))


@given(binary(min_size=1, max_size=12))
def test_min_period_matches_oracle(u):
    assert min_period(u) == oracles.period(u)


@given(binary(max_size=9), st.integers(0, 5))
def test_scattered_subwords_match_combinations(u, k):
    if k > len(u):
        return
    want = {"".join(u[i] for i in c) for c in itertools.combinations(range(len(u)), k)}
    assert scattered_subwords(u, k) == want


@given(binary(max_size=9), binary(max_size=3))
def test_embedding_count_matches_combinations(u, x):
    want = sum(1 for c in itertools.combinations(range(len(u)), len(x)) if "".join(u[i] for i in c) == x)
    assert embedding_count(u, x) == want
