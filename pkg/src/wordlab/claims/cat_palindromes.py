"""Claims about palindromes, palindromic length, richness, specifications,
codings and mirror/pattern avoidance."""

from __future__ import annotations

import random

from ..infinite import (
    contains_mirrored_factor,
    fibonacci,
    mirror_avoidance,
    palindromic_periodicity_census,
    period_doubling,
    periodic_is_rich,
    periodic_palindrome_census,
    thue_morse,
)
from ..lyndon import is_balanced
from ..palindromes import (
    induced_partition,
    is_antipalindrome,
    is_circularly_rich,
    is_palindrome,
    is_rich,
    is_two_palindrome_product,
    is_weakly_rich,
    minimal_pal_specification,
    pal_specification,
    palindrome_count,
    palindromic_factors,
    palindromic_length,
    ravsky_P,
)
from ..repetitions import find_pattern, is_overlap_free, is_power_free
from ..transforms import (
    TAU,
    Morphism,
    apply_morphism,
    brute_force_pre_antipalindromes,
    derivative,
    fixed_point,
    generate_pre_antipalindromes,
    morphism_is_overlap_free,
    pansiot,
)
from ..words import all_words, complement, factor_set, is_asymmetric, mirror, rotations, words_upto
from .core import Suite, claim, clean

V = "0011"
W = "001011"


def _orbit(u: str) -> list[str]:
    return sorted({u, mirror(u), complement(u), mirror(complement(u))})


def _binary_upto(n: int, start: int = 1):
    for k in range(start, n + 1):
        yield from all_words(k)


# --- anti-palindromes and asymmetry ------------------------------------------------------


@claim(
    "PAL-ANTIPAL-VW",
    "0011 and 001011 are anti-palindromes; 0011 is a rotation of its reversal and 001011 is not.",
    {"v_antipalindrome": True, "w_antipalindrome": True, "v_rotation_of_mirror": True, "w_rotation_of_mirror": False},
    provenance="PAPER",
    anchor="anti-palindromes",
    bound="two fixed words",
    tags=("palindromes", "example"),
)
def _antipal_vw(budget):
    return {
        "v_antipalindrome": is_antipalindrome(V),
        "w_antipalindrome": is_antipalindrome(W),
        "v_rotation_of_mirror": mirror(V) in rotations(V),
        "w_rotation_of_mirror": mirror(W) in rotations(W),
    }


@claim(
    "PAL-ASYM-6",
    "No binary word shorter than 6 is asymmetric; the asymmetric words of length 6 are the 12 rotations of 001011 and of 110100.",
    {"shorter": 0, "length6": sorted(set(rotations(W)) | set(rotations(mirror(W))))},
    provenance="PAPER",
    anchor="asymmetric words",
    bound="all binary words of length 1..6",
    tags=("palindromes", "enumerative"),
)
def _asym(budget):
    return {
        "shorter": sum(1 for u in _binary_upto(5) if is_asymmetric(u)),
        "length6": [u for u in all_words(6) if is_asymmetric(u)],
    }


@claim(
    "PAL-TWO-PAL",
    "A binary word is a product of two palindromes iff it is a rotation of its reversal.",
    clean(2**15 - 1),
    provenance="PAPER",
    anchor="two-palindrome products",
    bound="all binary words of length 0..14",
    tags=("palindromes", "enumerative", "equivalence"),
)
def _two_pal(budget):
    suite = Suite()
    for u in words_upto(14):
        suite.add(u, is_two_palindrome_product(u) == (u == "" or mirror(u) in rotations(u)))
    return suite.result()


@claim(
    "PAL-TWO-PAL-VW",
    "0011 is a product of two palindromes; 001011 is not.",
    {"v": True, "w": False},
    provenance="PAPER",
    anchor="two-palindrome products",
    bound="two fixed words",
    tags=("palindromes", "example"),
)
def _two_pal_vw(budget):
    return {"v": is_two_palindrome_product(V), "w": is_two_palindrome_product(W)}


# --- palindromic length --------------------------------------------------------------------

LADDER = {2: V, 3: W, 4: "00101100", 5: "00101100101", 6: "00101110001011"}


def _shortest_by_pl(max_len: int) -> dict[int, tuple[int, list[str]]]:
    best: dict[int, tuple[int, list[str]]] = {}
    for u in _binary_upto(max_len):
        k = palindromic_length(u)
        if k not in best:
            best[k] = (len(u), [])
        if best[k][0] == len(u):
            best[k][1].append(u)
    return best


@claim(
    "PAL-LADDER",
    "Palindromic lengths 0011:2, 001011:3, 00101100:4, 00101100101:5, 00101110001011:6; for k = 3..6 the listed "
    "word has minimum length among binary words of palindromic length k, and for k = 4, 5, 6 the shortest words "
    "are exactly its images under reversal and complement.",
    {
        "values": {k: k for k in LADDER},
        "shortest": {
            3: {"length": 6, "listed_is_shortest": True},
            4: {"length": 8, "listed_is_shortest": True, "orbit_only": True},
            5: {"length": 11, "listed_is_shortest": True, "orbit_only": True},
            6: {"length": 14, "listed_is_shortest": True, "orbit_only": True},
        },
    },
    provenance="PAPER",
    anchor="palindromic length",
    bound="all binary words of length 1..14",
    tags=("palindromes", "enumerative", "acceptance"),
    cost="tens of seconds in pure Python",
)
def _ladder(budget):
    best = _shortest_by_pl(14)
    shortest = {}
    for k in range(3, 7):
        length, words = best[k]
        entry = {"length": length, "listed_is_shortest": LADDER[k] in words}
        if k >= 4:
            entry["orbit_only"] = sorted(words) == _orbit(LADDER[k])
        shortest[k] = entry
    return {"values": {k: palindromic_length(u) for k, u in LADDER.items()}, "shortest": shortest}


@claim(
    "PAL-LADDER-SETS",
    "The complete sets of shortest binary words of palindromic length 3..6.",
    {
        3: sorted(set(rotations(W)) | set(rotations(mirror(W)))),
        4: _orbit("00101100"),
        5: _orbit("00101100101"),
        6: _orbit("00101110001011"),
    },
    provenance="DERIVED",
    anchor="palindromic length",
    bound="all binary words of length 1..14",
    tags=("palindromes", "enumerative"),
    cost="tens of seconds in pure Python",
)
def _ladder_sets(budget):
    best = _shortest_by_pl(14)
    return {k: sorted(best[k][1]) for k in range(3, 7)}


@claim(
    "PAL-W-PROPER",
    "Every proper factor of 001011 has palindromic length at most 2.",
    {"max_proper": 2},
    provenance="PAPER",
    anchor="palindromic length",
    bound="the 20 proper factors",
    tags=("palindromes", "example"),
)
def _w_proper(budget):
    return {"max_proper": max(palindromic_length(f) for f in factor_set(W) if 0 < len(f) < len(W))}


@claim(
    "PAL-RAVSKY",
    "The largest palindromic length of a binary word of length n is n//6 + (n+4)//6 + 1, except 5 at n = 11.",
    {"enumerated": {n: ravsky_P(n) for n in range(1, 15)}, "P11": 5},
    provenance="PAPER",
    anchor="palindromic length",
    bound="all binary words of length 1..14",
    tags=("palindromes", "enumerative", "acceptance"),
    cost="tens of seconds in pure Python",
)
def _ravsky(budget):
    enumerated = {n: max(palindromic_length(u) for u in all_words(n)) for n in range(1, 15)}
    return {"enumerated": enumerated, "P11": enumerated[11]}


# --- richness -----------------------------------------------------------------------------


@claim(
    "PAL-RICH",
    "Binary words of length <= 7 are rich; 00101100 is a shortest non-rich binary word; (001011)^2 is not rich; "
    "all rotations of 001011 are rich.",
    {
        "all_rich_upto_7": True,
        "shortest_nonrich_length": 8,
        "00101100_nonrich": True,
        "w_squared_rich": False,
        "w_rotations_rich": True,
    },
    provenance="PAPER",
    anchor="rich words",
    bound="all binary words of length 0..8",
    tags=("palindromes", "enumerative", "acceptance"),
)
def _rich(budget):
    shortest = next(len(u) for u in words_upto(12) if not is_rich(u))
    return {
        "all_rich_upto_7": all(is_rich(u) for u in words_upto(7)),
        "shortest_nonrich_length": shortest,
        "00101100_nonrich": not is_rich("00101100"),
        "w_squared_rich": is_rich(W + W),
        "w_rotations_rich": all(is_rich(r) for r in rotations(W)),
    }


@claim(
    "PAL-RICH-NONRICH-8",
    "The non-rich binary words of length 8.",
    ["00101100", "00110100", "11001011", "11010011"],
    provenance="DERIVED",
    anchor="rich words",
    bound="all binary words of length 8",
    tags=("palindromes", "enumerative"),
)
def _nonrich8(budget):
    return [u for u in all_words(8) if not is_rich(u)]


@claim(
    "PAL-RICH-FACTORS",
    "A rich word has only rich factors and is weakly rich.",
    clean(sum(3**k for k in range(9))),
    provenance="PAPER",
    anchor="rich words",
    bound="all ternary words of length 0..8",
    tags=("palindromes", "enumerative", "equivalence"),
)
def _rich_factors(budget):
    suite = Suite()
    for u in words_upto(8, 3):
        ok = True
        if is_rich(u):
            ok = is_weakly_rich(u) and is_rich(u[1:]) and is_rich(u[:-1])
        suite.add(u, ok)
    return suite.result()


@claim(
    "PAL-RICH-PALINDROMES",
    "Binary palindromes shorter than 14 are rich; 00101100110100 is a non-rich palindrome of length 14.",
    {"all_rich_below_14": True, "example_palindrome": True, "example_rich": False},
    provenance="PAPER",
    anchor="rich words",
    bound="all binary palindromes of length 1..13",
    tags=("palindromes", "enumerative"),
)
def _rich_pals(budget):
    ok = True
    for n in range(1, 14):
        for half in all_words((n + 1) // 2):
            p = half + half[: n // 2][::-1]
            ok = ok and is_rich(p)
    x = "00101100110100"
    return {"all_rich_below_14": ok, "example_palindrome": is_palindrome(x), "example_rich": is_rich(x)}


@claim(
    "PAL-GLEN",
    "A binary word is circularly rich iff all its rotations are rich and it is a product of two palindromes.",
    clean(2**11 - 2),
    provenance="PAPER",
    anchor="circular richness",
    bound="all binary words of length 1..10",
    tags=("palindromes", "enumerative", "equivalence", "acceptance"),
)
def _glen(budget):
    suite = Suite()
    for u in _binary_upto(10):
        expect = all(is_rich(r) for r in rotations(u)) and is_two_palindrome_product(u)
        suite.add(u, is_circularly_rich(u) == expect)
    return suite.result()


@claim(
    "PAL-WEAKLY-RICH",
    "0010200 is weakly rich but not rich; 0120 is neither; every binary word is weakly rich.",
    {"0010200": [True, False], "0120": [False, False], "binary_all_weakly_rich": True},
    provenance="PAPER",
    anchor="weak richness",
    bound="binary words of length 0..12",
    tags=("palindromes", "example"),
)
def _weakly(budget):
    return {
        "0010200": [is_weakly_rich("0010200"), is_rich("0010200")],
        "0120": [is_weakly_rich("0120"), is_rich("0120")],
        "binary_all_weakly_rich": all(is_weakly_rich(u) for u in words_upto(12)),
    }


# --- palindromic specification ---------------------------------------------------------------


def _spec_ok(u: str, pairs) -> bool:
    n = len(u)
    return induced_partition(frozenset(pairs), n) == induced_partition(pal_specification(u), n)


@claim(
    "PAL-SPEC",
    "S(0120) = S(0123); minimal palindromic specifications: 00, 010, 0110, 01210 have 1; 0^n (n >= 3) has 2; "
    "0123 has 0; 0100101001 has 3; 001011 has 4; the listed witness sets are valid.",
    {
        "S_0120_eq_S_0123": True,
        "sizes": {"00": 1, "010": 1, "0110": 1, "01210": 1, "0123": 0, "0100101001": 3, "001011": 4},
        "zeros": {n: 2 for n in range(3, 11)},
        "listed_witnesses_valid": True,
    },
    provenance="PAPER",
    anchor="palindromic specification",
    bound="fixed words; 0^n for n = 3..10",
    tags=("palindromes", "example"),
)
def _spec(budget):
    listed = {
        "00": [(1, 2)],
        "010": [(1, 3)],
        "0110": [(1, 4)],
        "01210": [(1, 5)],
        "0100101001": [(1, 6), (4, 6), (2, 10)],
        "001011": [(1, 2), (2, 4), (3, 5), (5, 6)],
    }
    for n in range(3, 11):
        listed["0" * n] = [(1, n), (2, n)]
    sizes = {u: minimal_pal_specification(u).size for u in ("00", "010", "0110", "01210", "0123", "0100101001", W)}
    return {
        "S_0120_eq_S_0123": pal_specification("0120") == pal_specification("0123"),
        "sizes": sizes,
        "zeros": {n: minimal_pal_specification("0" * n).size for n in range(3, 11)},
        "listed_witnesses_valid": all(_spec_ok(u, p) and all(q in pal_specification(u) for q in p) for u, p in listed.items()),
    }


@claim(
    "PAL-SPEC-W-SHORTEST",
    "No word shorter than 001011 over an alphabet of size <= 3 has minimal palindromic specification 4.",
    {"max_below_6": 3},
    provenance="PAPER",
    anchor="palindromic specification",
    bound="weakly rich ternary words of length 0..5",
    tags=("palindromes", "enumerative"),
)
def _spec_w(budget):
    return {"max_below_6": max(minimal_pal_specification(u).size for u in words_upto(5, 3) if is_weakly_rich(u))}


@claim(
    "PAL-BALANCED-SPEC",
    "Balanced binary words have minimal palindromic specification at most 3.",
    {"max": 3},
    provenance="PAPER",
    anchor="palindromic specification",
    bound="all balanced binary words of length 0..12",
    tags=("palindromes", "enumerative"),
)
def _balanced_spec(budget):
    return {"max": max(minimal_pal_specification(u).size for u in words_upto(12) if is_balanced(u))}


# --- w^∞ ----------------------------------------------------------------------------------------


@claim(
    "PAL-WINF-9",
    "(001011)^∞ has exactly 9 palindromic factors (ε included) and is not rich.",
    {"palindromes": ["", "0", "1", "00", "11", "010", "101", "0110", "1001"], "saturated": True, "rich": False},
    provenance="PAPER",
    anchor="palindromes in w^∞",
    bound="factors of length <= 36",
    tags=("palindromes", "infinite", "acceptance"),
)
def _winf(budget):
    found, saturated = periodic_palindrome_census(W, 36)
    return {"palindromes": found, "saturated": saturated, "rich": periodic_is_rich(W)}


@claim(
    "PAL-PERIODICITY-30",
    "(001011)^∞ has exactly 30 distinct nonempty factors that are palindromic periodicities.",
    {"count": 30, "saturated": True},
    provenance="PAPER",
    anchor="palindromic periodicities",
    bound="factors of length <= 48",
    tags=("palindromes", "infinite", "acceptance"),
)
def _periodicities(budget):
    count, saturated = palindromic_periodicity_census(W, 48)
    return {"count": count, "saturated": saturated}


# --- derivative, Pansiot coding, tau -----------------------------------------------------------


@claim(
    "PAL-DERIVATIVE",
    "Derivatives: 0011 -> 101, 001011 -> 10201; the derivative of an anti-palindrome is a palindrome; the "
    "derivative of a binary palindrome of length >= 2 is never a binary anti-palindrome; the derivative of "
    "(001011)^∞ is (102012)^∞.",
    {
        "v": "101",
        "w": "10201",
        "antipal_to_pal": clean(2**13 - 2),
        "pal_never_antipal": clean(sum(2 ** ((n + 1) // 2) for n in range(2, 14))),
        "period": "102012",
    },
    provenance="PAPER",
    anchor="derivative",
    bound="binary words of length 1..12; palindromes of length 2..13",
    tags=("palindromes", "enumerative", "equivalence"),
)
def _derivative(budget):
    forward = Suite()
    for u in _binary_upto(12):
        forward.add(u, not is_antipalindrome(u) or is_palindrome(derivative(u)))
    backward = Suite()
    for n in range(2, 14):
        for half in all_words((n + 1) // 2):
            p = half + half[: n // 2][::-1]
            d = str(derivative(p))
            # a 2 makes d non-binary, and so not an anti-palindrome
            backward.add(p, "2" in d or not is_antipalindrome(d))
    return {
        "v": derivative(V),
        "w": derivative(W),
        "antipal_to_pal": forward.result(),
        "pal_never_antipal": backward.result(),
        "period": str(derivative(W * 2 + W[0]))[:6],
    }


@claim(
    "PAL-DERIVATIVE-RICH",
    "(102012)^∞, the derivative of (001011)^∞, is rich, as (102012)^2 is rich; so is the derivative of "
    "(001011)^2.",
    {"square_rich": True, "periodic_rich": True, "derivative_of_w2_rich": True},
    provenance="PAPER",
    anchor="derivative",
    bound="one periodic word",
    tags=("palindromes", "example"),
)
def _derivative_rich(budget):
    period = str(derivative(W * 2 + W[0]))[:6]
    square = period * 2
    out = {
        "square_rich": is_rich(square),
        "periodic_rich": periodic_is_rich(period),
        "derivative_of_w2_rich": is_rich(derivative(W * 2)),
    }
    poor = [square[:k] for k in range(len(square) + 1) if not is_rich(square[:k])]
    if poor:
        out["counterexample"] = poor[0]
    return out


@claim(
    "PAL-PANSIOT",
    "Pansiot codings 0011 -> 010, 001011 -> 01110; the coding of u is a palindrome iff u is a palindrome or an "
    "anti-palindrome.",
    {"v": "010", "w": "01110", "equivalence": clean(2**13 - 2)},
    provenance="PAPER",
    anchor="Pansiot coding",
    bound="all binary words of length 1..12",
    tags=("palindromes", "enumerative", "equivalence", "acceptance"),
)
def _pansiot(budget):
    suite = Suite()
    for u in _binary_upto(12):
        suite.add(u, is_palindrome(pansiot(u)) == (is_palindrome(u) or is_antipalindrome(u)))
    return {"v": pansiot(V), "w": pansiot(W), "equivalence": suite.result()}


@claim(
    "PAL-PREANTI",
    "The words of length 3 whose Pansiot coding is an anti-palindrome are 001, 011, 100, 110; the recursive "
    "construction matches direct filtering for odd lengths 3..11.",
    {"length3": ["001", "011", "100", "110"], "agree": {n: True for n in (3, 5, 7, 9, 11)}},
    provenance="PAPER",
    anchor="Pansiot coding",
    bound="all binary words of odd length 3..11",
    tags=("palindromes", "enumerative", "equivalence", "acceptance"),
)
def _preanti(budget):
    return {
        "length3": brute_force_pre_antipalindromes(3),
        "agree": {n: generate_pre_antipalindromes(n) == brute_force_pre_antipalindromes(n) for n in (3, 5, 7, 9, 11)},
    }


@claim(
    "PAL-TAU",
    "The Thue-Morse morphism sends the anti-palindromes 0011 and 001011 to the overlap-free palindromes 01011010 "
    "and 010110011010; it sends palindromes to anti-palindromes and anti-palindromes to palindromes.",
    {
        "v": ["01011010", True, True],
        "w": ["010110011010", True, True],
        "equivalence": clean(2**11 - 1),
    },
    provenance="PAPER",
    anchor="Thue-Morse morphism",
    bound="all binary words of length 0..10",
    tags=("palindromes", "enumerative", "equivalence"),
)
def _tau(budget):
    suite = Suite()
    for u in words_upto(10):
        t = apply_morphism(TAU, u)
        ok = (not is_palindrome(u) or is_antipalindrome(t)) and (not is_antipalindrome(u) or is_palindrome(t))
        suite.add(u, ok)
    tv, tw = apply_morphism(TAU, V), apply_morphism(TAU, W)
    return {
        "v": [tv, is_palindrome(tv), is_overlap_free(tv)],
        "w": [tw, is_palindrome(tw), is_overlap_free(tw)],
        "equivalence": suite.result(),
    }


def _random_morphisms(count: int, seed: int = 20240601) -> list[Morphism]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        b = "".join(rng.choice("01") for _ in range(rng.randint(1, 5)))
        m = Morphism((a, b))
        if m.target_sigma == 2 and m not in out:
            out.append(m)
    return out


@claim(
    "PAL-RS-MORPHISM",
    "A binary morphism maps overlap-free words to overlap-free words iff the image of 001011 is overlap-free; "
    "checked on 50 fixed pseudo-random morphisms against all overlap-free words of length <= 10.",
    clean(50),
    provenance="PAPER",
    anchor="overlap-free morphisms",
    bound="50 morphisms with images of length 1..5; overlap-free words of length 0..10",
    tags=("palindromes", "repetitions", "equivalence"),
)
def _rs_morphism(budget):
    sample = [u for u in words_upto(10) if is_overlap_free(u)]
    suite = Suite()
    for m in _random_morphisms(50):
        direct = all(is_overlap_free(apply_morphism(m, u)) for u in sample)
        suite.add(str(m), morphism_is_overlap_free(m) == direct)
    return suite.result()


@claim(
    "PAL-TAU-OVERLAP",
    "u is overlap-free iff its Thue-Morse image is.",
    clean(2**11 - 1),
    provenance="PAPER",
    anchor="Thue-Morse morphism",
    bound="all binary words of length 0..10",
    tags=("palindromes", "repetitions", "equivalence"),
)
def _tau_of(budget):
    suite = Suite()
    for u in words_upto(10):
        suite.add(u, is_overlap_free(u) == is_overlap_free(apply_morphism(TAU, u)))
    return suite.result()


# --- infinite words -----------------------------------------------------------------------------


@claim(
    "PAL-INFINITE-CODINGS",
    "Fibonacci prefixes up to length 100 are rich; 00101100 occurs early in Thue-Morse, whose prefix of length 16 "
    "is not rich; the derivative of Thue-Morse is square-free and begins 0120210121020120210; the Pansiot coding "
    "of Thue-Morse is the period-doubling word; the Pansiot coding of Fibonacci is its image under 0->11, 1->0.",
    {
        "fibonacci_rich_upto_100": True,
        "tm64_contains_00101100": True,
        "tm16_rich": False,
        "tm_derivative_square_free": True,
        "tm_derivative_prefix": "0120210121020120210",
        "tm_pansiot_is_period_doubling": True,
        "fibonacci_pansiot_matches": True,
    },
    provenance="PAPER",
    anchor="Fibonacci and Thue-Morse words",
    bound="prefixes of length <= 500",
    tags=("palindromes", "infinite"),
)
def _codings(budget):
    fib = fibonacci(501)
    tm = thue_morse(501)
    dtm = derivative(tm)
    return {
        "fibonacci_rich_upto_100": all(is_rich(fib[:k]) for k in range(101)),
        "tm64_contains_00101100": "00101100" in tm[:64],
        "tm16_rich": is_rich(tm[:16]),
        "tm_derivative_square_free": is_power_free(dtm, 2, strict=False),
        "tm_derivative_prefix": dtm[:19],
        "tm_pansiot_is_period_doubling": pansiot(tm) == period_doubling(500),
        "fibonacci_pansiot_matches": pansiot(fib) == apply_morphism(Morphism(("11", "0")), fib)[:500],
    }


def _fib_derivative_vs(images: tuple[str, str]) -> dict:
    fib = fibonacci(501)
    got = str(derivative(fib))
    want = apply_morphism(Morphism(images), fib)[:500]
    out = {"matches": got == want}
    if got != want:
        k = next(i for i, (x, y) in enumerate(zip(got, want)) if x != y)
        # shortest Fibonacci prefix whose derivative already disagrees
        out["counterexample"] = fib[: k + 2]
    return out


@claim(
    "PAL-FIB-DERIVATIVE",
    "The derivative of the Fibonacci word is its image under 0->201, 1->20.",
    {"matches": True},
    provenance="PAPER",
    anchor="Fibonacci and Thue-Morse words",
    bound="prefix of length 500",
    tags=("palindromes", "infinite"),
)
def _fib_derivative(budget):
    return _fib_derivative_vs(("201", "20"))


@claim(
    "PAL-FIB-DERIVATIVE-SWAPPED",
    "With the derivative 1 + u_i - u_(i+1), the derivative of the Fibonacci word is its image under 0->021, "
    "1->02, the stated morphism with the letters 0 and 2 exchanged.",
    {"matches": True},
    provenance="DERIVED",
    anchor="Fibonacci and Thue-Morse words",
    bound="prefix of length 500",
    tags=("palindromes", "infinite"),
)
def _fib_derivative_swapped(budget):
    return _fib_derivative_vs(("021", "02"))


@claim(
    "PAL-MIRROR",
    "(001011)^∞ has no length-5 factor whose reversal is a factor; every binary word of length 9 has a length-4 "
    "factor whose reversal is a factor, and some word of length 8 does not.",
    {"w_infinite_k5": True, "all_length9_k4": True, "length8_counterexample": "00010111"},
    provenance="PAPER",
    anchor="mirror avoidance",
    bound="all binary words of length 8 and 9",
    tags=("palindromes", "enumerative", "acceptance"),
)
def _mirror(budget):
    avoiding8 = [u for u in all_words(8) if not contains_mirrored_factor(u, 4)]
    return {
        "w_infinite_k5": mirror_avoidance(W, 5),
        "all_length9_k4": all(contains_mirrored_factor(u, 4) for u in all_words(9)),
        "length8_counterexample": avoiding8[0] if avoiding8 else None,
    }


@claim(
    "PAL-MIRROR-8-SET",
    "The binary words of length 8 with no length-4 factor whose reversal is a factor.",
    ["00010111", "11101000"],
    provenance="DERIVED",
    anchor="mirror avoidance",
    bound="all binary words of length 8",
    tags=("palindromes", "enumerative"),
)
def _mirror8(budget):
    return [u for u in all_words(8) if not contains_mirrored_factor(u, 4)]


CURRIE_LAFRANCE = {
    "X Y X Y~ X": "001011",
    "X Y X Y~ X~": "00101101111",
    "X Y X~ Y~ X": "00101111",
}


@claim(
    "PAL-CURRIE-LAFRANCE",
    "Replacing each 1 of the Thue-Morse word by 001011, 00101101111 or 00101111 gives words avoiding "
    "X Y X Y~ X, X Y X Y~ X~ and X Y X~ Y~ X respectively (X, Y nonempty, ~ is reversal).",
    {p: True for p in CURRIE_LAFRANCE},
    provenance="PAPER",
    anchor="reversal patterns",
    bound="images of the Thue-Morse prefix of length 32",
    tags=("palindromes", "infinite"),
    cost="seconds",
)
def _currie_lafrance(budget):
    tm = thue_morse(max(16, int(32 * budget)))
    return {
        pattern: find_pattern(apply_morphism(Morphism(("0", one)), tm), pattern) is None
        for pattern, one in CURRIE_LAFRANCE.items()
    }


@claim(
    "PAL-APERIODIC-11",
    "The fixed point of 0->0001011, 1->001011 has 11 palindromic factors (ε included).",
    {200: 11, 2000: 11},
    provenance="PAPER",
    anchor="palindromes in infinite words",
    bound="prefixes of length 200 and 2000",
    tags=("palindromes", "infinite"),
)
def _aperiodic(budget):
    m = Morphism(("0001011", "001011"))
    return {n: palindrome_count(fixed_point(m, "0", n)) for n in (200, 2000)}


@claim(
    "PAL-FACTORS-VW",
    "Palindromic factors of 0011 and 001011.",
    {"v": ["", "0", "1", "00", "11"], "w": ["", "0", "1", "00", "11", "010", "101"]},
    provenance="DERIVED",
    anchor="rich words",
    bound="two fixed words",
    tags=("palindromes", "example"),
)
def _pal_vw(budget):
    return {"v": palindromic_factors(V), "w": palindromic_factors(W)}
