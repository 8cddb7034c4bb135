import pytest
from hypothesis import given

import oracles
from strategies import binary
from wordlab.errors import CapTooSmall, EmptyWordUndefined, LengthCapExceeded, NotProlongable, ParseError
from wordlab.infinite import (
    InfiniteWordSpec,
    contains_mirrored_factor,
    fibonacci,
    mirror_avoidance,
    morphic_prefix_properties,
    overlap_free_dyck_brute,
    overlap_free_dyck_generate,
    palindromic_periodicity_census,
    period_doubling,
    periodic_factor_set,
    periodic_is_rich,
    periodic_palindrome_census,
    prefix,
    prefix_properties,
    thue_morse,
)
from wordlab.palindromes import is_palindromic_periodicity, is_rich
from wordlab.transforms import DVORAKOVA, ZERO_W_MORPHISM, apply_morphism
from wordlab.words import all_words

W = "001011"


def test_prefix_examples():
    assert prefix(InfiniteWordSpec.parse("named:fibonacci"), 13) == "0100101001001"
    assert prefix(InfiniteWordSpec.parse("named:thue_morse"), 16) == "0110100110010110"
    assert prefix(InfiniteWordSpec.parse("periodic:001011"), 12) == W * 2
    assert prefix(InfiniteWordSpec.parse("morphic:0:0001011,1:001011@0"), 10) == "0001011000"


def test_spec_text_round_trip():
    for text in ("periodic:001011", "named:period_doubling", "morphic:0:0001011,1:001011@0"):
        assert str(InfiniteWordSpec.parse(text)) == text
    with pytest.raises(ParseError):
        InfiniteWordSpec.parse("cyclic:01")
    with pytest.raises(NotProlongable):
        InfiniteWordSpec.parse("morphic:0:10,1:01@0")


def test_periodic_factor_set_examples():
    assert periodic_factor_set(W, 5) == {"00101", "01011", "10110", "01100", "11001", "10010"}
    assert periodic_factor_set("01", 2) == {"01", "10"}
    assert periodic_factor_set(W, 1) == {"0", "1"}


def test_periodic_palindrome_census_examples():
    found, saturated = periodic_palindrome_census(W, 36)
    assert found == {"", "0", "1", "00", "11", "010", "101", "0110", "1001"} and saturated
    assert periodic_palindrome_census("0", 10)[1] is False
    found, saturated = periodic_palindrome_census("01", 12)
    assert not saturated and {"010", "101", "01010"} <= found
    with pytest.raises(CapTooSmall):
        periodic_palindrome_census(W, 11)


def test_periodic_richness_examples():
    assert not periodic_is_rich(W)
    assert periodic_is_rich("0")
    # stated as rich, but (102012)^2 has 12 palindromes rather than 13
    assert not periodic_is_rich("102012")
    with pytest.raises(EmptyWordUndefined):
        periodic_is_rich("")


def test_palindromic_periodicity_census_examples():
    assert palindromic_periodicity_census(W, 48) == (30, True)
    assert palindromic_periodicity_census("0", 8) == (8, False)
    brute = {x for n in range(1, 17) for x in periodic_factor_set("01", n) if is_palindromic_periodicity(x)}
    assert palindromic_periodicity_census("01", 16)[0] == len(brute)
    with pytest.raises(CapTooSmall):
        palindromic_periodicity_census(W, 23)


def test_mirror_avoidance_examples():
    assert mirror_avoidance(W, 5)
    assert not mirror_avoidance(W, 4)
    assert not mirror_avoidance("0", 1)


def test_mirror_avoidance_threshold():
    assert all(contains_mirrored_factor(u, 4) for u in all_words(9))
    assert [u for u in all_words(8) if not contains_mirrored_factor(u, 4)] == ["00010111", "11101000"]


def test_named_words():
    assert fibonacci(8) == "01001010"
    assert thue_morse(0) == ""
    assert period_doubling(8) == "10111010"


def test_fibonacci_prefixes_are_rich_and_thue_morse_is_not():
    f = fibonacci(100)
    assert all(is_rich(f[:k]) for k in range(101))
    t = thue_morse(64)
    assert "00101100" in t and not is_rich(t[:16])


def test_morphic_prefix_reports():
    assert morphic_prefix_properties(ZERO_W_MORPHISM, "0", 200)["palindromes"] == 11
    image = apply_morphism(DVORAKOVA, thue_morse(64))
    report = prefix_properties(image)
    assert report["palindromes"] == 13
    # the image of 0 already holds the cube 000
    assert not report["cube_free"] and "000" in DVORAKOVA.images[0]


def test_overlap_free_dyck_generator_examples():
    found = overlap_free_dyck_generate(12)
    assert {"0011", W, "01"} <= found
    with pytest.raises(LengthCapExceeded):
        overlap_free_dyck_generate(31)


def test_overlap_free_dyck_generator_misses_squares():
    brute = overlap_free_dyck_brute(12)
    assert brute == {u for u in oracles.words_upto(12) if _dyck(u) and oracles.overlap_free(u)}
    missing = brute - overlap_free_dyck_generate(12)
    assert missing == {"0101", "00110011", "001011001011", "001101001101", "010011010011"}
    assert overlap_free_dyck_generate(12) - {""} <= brute


def _dyck(u):
    h = 0
    for c in u:
        h += 1 if c == "0" else -1
        if h < 0:
            return False
    return h == 0


@given(binary(min_size=1, max_size=6))
def test_periodic_factor_set_matches_sliding_window(u):
    for n in range(0, 9):
        big = u * (n // len(u) + 2)
        assert periodic_factor_set(u, n) == {big[i : i + n] for i in range(len(u))}
