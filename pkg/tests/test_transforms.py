import pytest
from hypothesis import given

import oracles
from strategies import binary
from wordlab.errors import (
    EmptyWordUndefined,
    InvalidLength,
    NonBinaryAlphabet,
    NotLyndon,
    NotProlongable,
    OrderOutOfRange,
    ParseError,
)
from wordlab.infinite import fibonacci, thue_morse
from wordlab.lyndon import is_debruijn, lyndon_words_of_length
from wordlab.palindromes import is_antipalindrome, is_palindrome, is_rich
from wordlab.transforms import (
    FIBONACCI,
    IDENTITY,
    NAMED_MORPHISMS,
    TAU,
    Morphism,
    apply_morphism,
    brute_force_pre_antipalindromes,
    bwt,
    derivative,
    fixed_point,
    generate_pre_antipalindromes,
    higgins_debruijn_bwt_candidates,
    inverse_bwt,
    is_bwt_image,
    is_cyclic,
    is_rotation_of_own_bwt,
    morphism_is_overlap_free,
    pansiot,
    permutation_to_json,
    standard_permutation,
)
from wordlab.words import rotations

V, W = "0011", "001011"


def test_derivative_examples():
    assert derivative(V) == "101"
    assert derivative(W) == "10201"
    assert derivative("00") == "1"
    assert derivative(W).sigma == 3
    with pytest.raises(NonBinaryAlphabet):
        derivative("012")
    with pytest.raises(EmptyWordUndefined):
        derivative("")


def test_pansiot_examples():
    assert pansiot(V) == "010"
    assert pansiot(W) == "01110"
    assert pansiot("00") == "0"


def test_pre_antipalindrome_examples():
    assert generate_pre_antipalindromes(3) == {"001", "011", "100", "110"}
    five = generate_pre_antipalindromes(5)
    assert five == {a + u + a for u in generate_pre_antipalindromes(3) for a in "01"}
    assert len(five) == 8
    with pytest.raises(InvalidLength):
        generate_pre_antipalindromes(4)


def test_pre_antipalindrome_recursion_matches_brute_force():
    for n in (3, 5, 7, 9, 11):
        want = {u for u in oracles.words(n) if oracles.antipal(oracles.pansiot(u))}
        assert generate_pre_antipalindromes(n) == brute_force_pre_antipalindromes(n) == want


def test_morphism_examples():
    assert apply_morphism(TAU, V) == "01011010"
    assert apply_morphism(TAU, W) == "010110011010"
    assert apply_morphism(TAU, "") == ""
    assert fixed_point(FIBONACCI, "0", 13) == "0100101001001"
    with pytest.raises(NotProlongable):
        fixed_point(Morphism(("10", "01")), "0", 5)


def test_morphism_text_format():
    m = Morphism.parse("0:01,1:10")
    assert m == TAU and str(m) == "0:01,1:10"
    assert set(NAMED_MORPHISMS) >= {"tau", "fibonacci", "currie-rampersad", "dvorakova", "mrs-mu", "0w"}
    with pytest.raises(ParseError):
        Morphism.parse("0:01,2:10")


def test_morphism_overlap_freeness_examples():
    assert morphism_is_overlap_free(TAU)
    assert not morphism_is_overlap_free(Morphism(("00", "11")))
    assert morphism_is_overlap_free(IDENTITY)


def test_bwt_examples():
    assert bwt("0120") == "2001"
    assert bwt(V) == "1010"
    assert bwt(W) == "101100"
    with pytest.raises(EmptyWordUndefined):
        bwt("")


def test_standard_permutation_examples():
    pi = standard_permutation("101100")
    assert pi == (4, 1, 5, 6, 2, 3)
    assert is_cyclic(pi)
    assert standard_permutation("0") == (1,) and is_cyclic((1,))
    assert permutation_to_json(pi) == "[4, 1, 5, 6, 2, 3]"


def test_rotation_of_own_bwt_examples():
    assert is_rotation_of_own_bwt(W)
    assert not is_rotation_of_own_bwt(V)
    assert is_rotation_of_own_bwt("01")
    with pytest.raises(NotLyndon):
        is_rotation_of_own_bwt("10")


def test_higgins_candidates():
    assert higgins_debruijn_bwt_candidates(2) == {"1010"}
    assert higgins_debruijn_bwt_candidates(3) == {"10011010", "10100110"}
    for u in higgins_debruijn_bwt_candidates(4):
        assert is_debruijn(inverse_bwt(u), 4)
    with pytest.raises(OrderOutOfRange):
        higgins_debruijn_bwt_candidates(6)


def test_known_derivative_and_pansiot_of_thue_morse():
    assert derivative(thue_morse(20)) == "0120210121020120210"
    # period doubling, built independently as the fixed point of 0->11, 1->10
    assert pansiot(thue_morse(200)) == fixed_point(Morphism(("11", "10")), "1", 199)


def test_fibonacci_derivative_uses_swapped_letters():
    f = fibonacci(300)
    assert derivative(f) == apply_morphism(Morphism(("021", "02")), f)[:299]
    assert derivative(f) != apply_morphism(Morphism(("201", "20")), f)[:299]


def test_derivative_of_periodic_w_is_not_rich():
    # (102012)^2 has only 12 distinct palindromes, one short
    assert derivative(W * 2 + W[0]) == "102012" * 2
    assert not is_rich("102012" * 2)
    assert len(oracles.pal_factors("102012" * 2)) == 12


def test_lyndon_words_of_length_12_fixed_by_bwt():
    # one entry of the frozen census, cross-checked by rotation sorting
    ours = [u for u in lyndon_words_of_length(12) if is_rotation_of_own_bwt(u)]
    assert ours == [u for u in oracles.words(12) if oracles.lyndon(u) and oracles.bwt(u) in u + u]
    assert len(ours) == 7


@given(binary(min_size=1, max_size=12))
def test_pansiot_palindrome_iff_palindrome_or_antipalindrome(u):
    assert is_palindrome(pansiot(u)) == (is_palindrome(u) or is_antipalindrome(u))


@given(binary(min_size=1, max_size=12))
def test_derivative_of_antipalindrome_is_palindrome(u):
    assert derivative(u) == oracles.derivative(u)
    if is_antipalindrome(u):
        assert is_palindrome(derivative(u))


@given(binary(min_size=2, max_size=13))
def test_derivative_of_palindrome_is_never_antipalindrome(u):
    if is_palindrome(u):
        d = str(derivative(u))
        assert "2" in d or not is_antipalindrome(d)


@given(binary(max_size=10))
def test_tau_swaps_palindromes_and_antipalindromes(u):
    image = apply_morphism(TAU, u)
    assert image == oracles.tau(u)
    if is_palindrome(u):
        assert is_antipalindrome(image)
    if is_antipalindrome(u):
        assert is_palindrome(image)


@given(binary(min_size=1, max_size=12))
def test_bwt_invariant_under_rotation(u):
    assert bwt(u) == oracles.bwt(u)
    assert all(bwt(r) == bwt(u) for r in rotations(u))


@given(binary(min_size=1, max_size=12))
def test_inverse_bwt_recovers_least_rotation(u):
    b = bwt(u)
    primitive = len(set(rotations(u))) == len(u)
    assert is_bwt_image(b) == primitive
    if primitive:
        assert inverse_bwt(b) == min(rotations(u))
