"""Claims about squares, overlaps, cubes, runs, anti-squares, Dyck words and
shuffles."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..infinite import overlap_free_dyck_brute, overlap_free_dyck_generate, thue_morse
from ..palindromes import is_antipalindrome, palindrome_count
from ..repetitions import (
    contains_square,
    distinct_primitive_rooted_squares,
    has_antisquare_factor,
    is_antisquare,
    is_cube_free,
    is_minimal_antisquare,
    is_overlap_free,
    is_power_free,
    restivo_salemi_decompose,
    runs,
    sum_of_exponents,
)
from ..transforms import CURRIE_RAMPERSAD, DVORAKOVA, apply_morphism
from ..words import (
    all_words,
    complement,
    exponent,
    is_abelian_square,
    is_dyck,
    is_primitive,
    is_reverse_shuffle_square,
    is_shuffle_square,
    is_tangram,
    mirror,
    perfect_shuffle,
    rotations,
    words_upto,
)
from .core import Suite, claim, clean

V = "0011"
W = "001011"


@claim(
    "REP-SQUARES",
    "Every binary word of length 4 contains a square (some word of length 3 does not); 0011 is a shortest "
    "binary word with 2 distinct primitive-rooted squares and 001011 a shortest with 3.",
    {
        "all_length4_contain_square": True,
        "square_free_length3": ["010", "101"],
        "shortest_with": {2: [4, True], 3: [6, True]},
        "w_squares": ["00", "11", "0101"],
    },
    provenance="PAPER",
    anchor="squares",
    bound="all binary words of length 1..8",
    tags=("repetitions", "enumerative"),
)
def _squares(budget):
    shortest = {}
    for k, word in ((2, V), (3, W)):
        length = next(len(u) for u in words_upto(8) if len(distinct_primitive_rooted_squares(u)) >= k)
        shortest[k] = [length, length == len(word) and len(distinct_primitive_rooted_squares(word)) >= k]
    return {
        "all_length4_contain_square": all(contains_square(u) for u in all_words(4)),
        "square_free_length3": [u for u in all_words(3) if not contains_square(u)],
        "shortest_with": shortest,
        "w_squares": distinct_primitive_rooted_squares(W),
    }


@claim(
    "REP-RESTIVO-SALEMI",
    "An overlap-free binary word u is x tau(y) z with x, z in {ε, 0, 1, 00, 11} and y overlap-free; the "
    "decomposition is unique when |u| >= 7, and 001011 = 00 tau(1) 11 = 0 tau(00) 1 shows 7 is sharp.",
    {
        "w": [["0", "00", "1"], ["00", "1", "11"]],
        "unique_7_to_16": clean(518),
        "every_overlap_free_decomposes": True,
        "x_fixed_by_prefix_7": True,
        "z_fixed_by_suffix_7": True,
    },
    provenance="PAPER",
    anchor="overlap-free words",
    bound="all overlap-free binary words of length 0..16",
    tags=("repetitions", "enumerative", "equivalence", "acceptance"),
)
def _restivo_salemi(budget):
    suite = Suite()
    decomposes = True
    by_prefix: dict[str, set] = {}
    by_suffix: dict[str, set] = {}
    for u in words_upto(16):
        if not is_overlap_free(u):
            continue
        found = restivo_salemi_decompose(u)
        decomposes = decomposes and bool(found)
        if len(u) >= 7:
            suite.add(u, len(found) == 1)
            for d in found:
                by_prefix.setdefault(u[:7], set()).add(d.x)
                by_suffix.setdefault(u[-7:], set()).add(d.z)
    return {
        "w": [list(d) for d in restivo_salemi_decompose(W)],
        "unique_7_to_16": suite.result(),
        "every_overlap_free_decomposes": decomposes,
        "x_fixed_by_prefix_7": all(len(xs) == 1 for xs in by_prefix.values()),
        "z_fixed_by_suffix_7": all(len(zs) == 1 for zs in by_suffix.values()),
    }


def _max_sigma(n: int) -> tuple[Fraction, list[str]]:
    best, where = Fraction(-1), []
    for u in all_words(n):
        s = sum_of_exponents(u)
        if s > best:
            best, where = s, [u]
        elif s == best:
            where.append(u)
    return best, where


@claim(
    "REP-RUNS",
    "runs(001011) are the occurrences (1,2), (2,5), (5,6); the largest sum of run exponents is 4 at length 4, 6 "
    "at length 6 and 25/2 at length 10, where 0010100101 attains it; every binary word of length n <= 14 has "
    "fewer than n runs.",
    {
        "w_runs": [[1, 2, 1], [2, 5, 2], [5, 6, 1]],
        "max_sigma": {4: "4/1", 6: "6/1", 10: "25/2"},
        "0010100101_attains": True,
        "runs_below_n": clean(2**15 - 2),
    },
    provenance="PAPER",
    anchor="runs",
    bound="all binary words of length 1..14",
    tags=("repetitions", "enumerative", "acceptance"),
    cost="about a minute in pure Python",
)
def _runs(budget):
    maxima = {n: _max_sigma(n) for n in (4, 6, 10)}
    suite = Suite()
    for n in range(1, 15):
        for u in all_words(n):
            suite.add(u, len(runs(u)) < n)
    return {
        "w_runs": [[r.i, r.j, r.period] for r in runs(W)],
        "max_sigma": {n: best for n, (best, _) in maxima.items()},
        "0010100101_attains": "0010100101" in maxima[10][1],
        "runs_below_n": suite.result(),
    }


@claim(
    "REP-RUNS-ARGMAX",
    "The binary words attaining the largest sum of run exponents at lengths 4, 6 and 10.",
    {
        4: ["0000", "0011", "1100", "1111"],
        6: ["000000", "000011", "000111", "001001", "001011", "001100", "001111", "011011", "100100", "110000",
            "110011", "110100", "110110", "111000", "111100", "111111"],
        10: ["0010100101", "0011001100", "0101101011", "1010010100", "1100110011", "1101011010"],
    },
    provenance="DERIVED",
    anchor="runs",
    bound="all binary words of length 4, 6, 10",
    tags=("repetitions", "enumerative"),
)
def _runs_argmax(budget):
    return {n: _max_sigma(n)[1] for n in (4, 6, 10)}


@claim(
    "REP-RUNS-MAXIMAL",
    "Every reported run is maximal from the definition: exponent at least 2, and each one-letter extension that "
    "exists has a smaller exponent; and every factor occurrence of exponent >= 2 lies in some run of the same period.",
    clean(2**11 - 1),
    provenance="TRIVIAL",
    anchor="runs",
    bound="all binary words of length 0..10",
    tags=("repetitions", "enumerative", "equivalence"),
)
def _runs_maximal(budget):
    suite = Suite()
    for u in words_upto(10):
        n = len(u)
        found = runs(u)
        ok = True
        for r in found:
            e = exponent(u[r.i - 1 : r.j])
            ok &= e >= 2 and r.period == len(u[r.i - 1 : r.j]) / e
            if r.i > 1:
                ok &= exponent(u[r.i - 2 : r.j]) < e
            if r.j < n:
                ok &= exponent(u[r.i - 1 : r.j + 1]) < e
        for i in range(n):
            for j in range(i + 2, n + 1):
                e = exponent(u[i:j])
                if e >= 2:
                    p = (j - i) / e
                    ok &= any(r.period == p and r.i <= i + 1 and j <= r.j for r in found)
        suite.add(u, ok)
    return suite.result()


@claim(
    "REP-ANTISQUARE",
    "0011 is a minimal anti-square; 001011 is not an anti-square.",
    {"v_antisquare": True, "v_minimal": True, "w_antisquare": False},
    provenance="PAPER",
    anchor="anti-squares",
    bound="two fixed words",
    tags=("repetitions", "example"),
)
def _antisquare(budget):
    return {"v_antisquare": is_antisquare(V), "v_minimal": is_minimal_antisquare(V), "w_antisquare": is_antisquare(W)}


def _antisquare_avoiders(n: int) -> list[str]:
    return [u for u in all_words(n) if not has_antisquare_factor(u)]


@claim(
    "REP-ANTISQUARE-8",
    "Every binary word of length 8 with no anti-square factor other than 01 and 10 contains 001011 or 110100.",
    clean(72),
    provenance="PAPER",
    anchor="anti-squares",
    bound="all binary words of length 8",
    tags=("repetitions", "enumerative"),
)
def _antisquare8(budget):
    suite = Suite()
    for u in _antisquare_avoiders(8):
        suite.add(u, W in u or complement(W) in u)
    return suite.result()


@claim(
    "REP-ANTISQUARE-8-CENSUS",
    "Census of length-8 binary words with no anti-square factor other than 01 and 10: how many there are, how "
    "many contain 001011 or 110100, and how many are cube-free.",
    {"avoiders": 72, "containing_w_or_complement": 10, "cube_free_avoiders": 0},
    provenance="DERIVED",
    anchor="anti-squares",
    bound="all binary words of length 8",
    tags=("repetitions", "enumerative"),
)
def _antisquare8_census(budget):
    av = _antisquare_avoiders(8)
    return {
        "avoiders": len(av),
        "containing_w_or_complement": sum(1 for u in av if W in u or complement(W) in u),
        "cube_free_avoiders": sum(1 for u in av if is_cube_free(u)),
    }


@claim(
    "REP-CURRIE-RAMPERSAD",
    "The morphism 0->001011, 1->001101, 2->011001 sends 0 to 001011, 2 to a rotation of 001011 and 1 to a "
    "rotation of its complement, and maps cube-free ternary words to cube-free binary words.",
    {"image_shapes": True, "cube_free_images": clean(5641)},
    provenance="PAPER",
    anchor="cube-free morphisms",
    bound="all cube-free ternary words of length 0..8",
    tags=("repetitions", "enumerative"),
)
def _currie_rampersad(budget):
    a, b, c = CURRIE_RAMPERSAD.images
    suite = Suite()
    for u in words_upto(8, 3):
        if is_cube_free(u):
            suite.add(u, is_cube_free(apply_morphism(CURRIE_RAMPERSAD, u)))
    shapes = a == W and c in rotations(W) and b in rotations(complement(W))
    return {"image_shapes": shapes, "cube_free_images": suite.result()}


def _dvorakova_sources():
    return [u for u in words_upto(14) if is_power_free(u, "7/3", strict=True)]


@claim(
    "REP-DVORAKOVA",
    "The morphism 0->0001011, 1->1001011 maps every 7/3+-free binary word to a cube-free word with at most 13 "
    "palindromic factors.",
    {"cube_free": clean(747), "at_most_13_palindromes": clean(747)},
    provenance="PAPER",
    anchor="cube-free words with few palindromes",
    bound="all 7/3+-free binary words of length 0..14",
    tags=("repetitions", "enumerative"),
)
def _dvorakova(budget):
    cube, pals = Suite(), Suite()
    for u in _dvorakova_sources():
        image = apply_morphism(DVORAKOVA, u)
        cube.add(u, is_cube_free(image))
        pals.add(u, palindrome_count(image) <= 13)
    out = {"cube_free": cube.result(), "at_most_13_palindromes": pals.result()}
    if cube.first is not None:
        out["counterexample"] = cube.first
        out["counterexample_image"] = apply_morphism(DVORAKOVA, cube.first)
    return out


@claim(
    "REP-DVORAKOVA-3PLUS",
    "The same images have no factor of exponent greater than 3 and at most 13 palindromic factors; the "
    "image of the Thue-Morse prefix of length 300 has exactly 13 and largest exponent 3.",
    {"three_plus_free": clean(747), "at_most_13_palindromes": clean(747), "tm_image": {"palindromes": 13, "max_exponent_3": True}},
    provenance="DERIVED",
    anchor="cube-free words with few palindromes",
    bound="all 7/3+-free binary words of length 0..14; Thue-Morse prefix of length 300",
    tags=("repetitions", "enumerative"),
)
def _dvorakova_3plus(budget):
    free, pals = Suite(), Suite()
    for u in _dvorakova_sources():
        image = apply_morphism(DVORAKOVA, u)
        free.add(u, is_power_free(image, 3, strict=True))
        pals.add(u, palindrome_count(image) <= 13)
    tm_image = apply_morphism(DVORAKOVA, thue_morse(300))
    return {
        "three_plus_free": free.result(),
        "at_most_13_palindromes": pals.result(),
        "tm_image": {
            "palindromes": palindrome_count(tm_image),
            "max_exponent_3": is_power_free(tm_image, 3, strict=True) and not is_cube_free(tm_image),
        },
    }


@claim(
    "REP-MRS-DYCK",
    "The overlap-free Dyck words are exactly mu(x) and 0 mu(x) 1 (mu: 0->01, 1->0011, 2->001011) for square-free "
    "ternary x avoiding 212 and 20102, with x beginning 01 and ending 10 in the second form.",
    {"missing": [], "extra": []},
    provenance="PAPER",
    anchor="overlap-free Dyck words",
    bound="all words of length 0..24",
    tags=("repetitions", "enumerative", "equivalence", "acceptance"),
)
def _mrs(budget):
    generated = overlap_free_dyck_generate(24)
    brute = overlap_free_dyck_brute(24)
    missing = sorted(brute - generated, key=lambda s: (len(s), s))
    out = {"missing": missing, "extra": sorted(generated - brute, key=lambda s: (len(s), s))}
    if missing:
        out["counterexample"] = missing[0]
    return out


@claim(
    "REP-MRS-PRIMITIVE",
    "The words produced by the mu(x) / 0 mu(x) 1 construction are exactly the primitive overlap-free Dyck words; "
    "the non-primitive ones are squares.",
    {"generated_eq_primitive": True, "non_primitive_are_squares": True, "non_primitive_count": 13},
    provenance="DERIVED",
    anchor="overlap-free Dyck words",
    bound="all words of length 0..24",
    tags=("repetitions", "enumerative"),
)
def _mrs_primitive(budget):
    generated = overlap_free_dyck_generate(24)
    brute = overlap_free_dyck_brute(24)
    primitive = {u for u in brute if u and is_primitive(u)}
    others = brute - primitive - {""}
    return {
        "generated_eq_primitive": generated - {""} == primitive,
        "non_primitive_are_squares": all(exponent(u) == 2 for u in others),
        "non_primitive_count": len(others),
    }


# --- shuffles ------------------------------------------------------------------------------


@claim(
    "SHUF-VW",
    "0011 is a shuffle square and 001011 is not; 0011 and 0101 are the shortest nonempty Dyck shuffle squares; "
    "001011 = 001 011 is the shortest word with two letters of the form x y = y ⧢ x (perfect shuffle), the "
    "solutions at that length being 001011 and 110100.",
    {"v": True, "w": False, "shortest_dyck": ["0011", "0101"], "xy_shortest": ["001011", "110100"]},
    provenance="PAPER",
    anchor="shuffles",
    bound="all binary words of length 1..8",
    tags=("shuffles", "enumerative"),
)
def _shuffle_vw(budget):
    dyck = [u for u in words_upto(8) if u and is_dyck(u) and is_shuffle_square(u)]
    shortest = [u for u in dyck if len(u) == len(dyck[0])]
    xy = []
    for n in range(2, 9, 2):
        xy = [u for u in all_words(n) if len(set(u)) > 1 and u == perfect_shuffle(u[n // 2 :], u[: n // 2])]
        if xy:
            break
    return {"v": is_shuffle_square(V), "w": is_shuffle_square(W), "shortest_dyck": shortest, "xy_shortest": xy}


@claim(
    "SHUF-HE",
    "The number of binary shuffle squares of length 2n exceeds the central binomial coefficient C(2n, n) for n = 3, 4.",
    {6: {"count": 22, "binomial": 20, "exceeds": True}, 8: {"count": 82, "binomial": 70, "exceeds": True}},
    provenance="PAPER",
    anchor="shuffle squares",
    bound="all binary words of length 6 and 8",
    tags=("shuffles", "enumerative", "acceptance"),
)
def _he(budget):
    out = {}
    for n in (6, 8):
        count = sum(1 for u in all_words(n) if is_shuffle_square(u))
        out[n] = {"count": count, "binomial": comb(n, n // 2), "exceeds": count > comb(n, n // 2)}
    return out


@claim(
    "SHUF-HENSHALL",
    "A binary word is a reverse shuffle square iff it is an abelian square.",
    clean(2**13 - 1),
    provenance="PAPER",
    anchor="reverse shuffle squares",
    bound="all binary words of length 0..12",
    tags=("shuffles", "enumerative", "equivalence", "acceptance"),
)
def _henshall(budget):
    suite = Suite()
    for u in words_upto(12):
        suite.add(u, is_reverse_shuffle_square(u) == is_abelian_square(u))
    return suite.result()


@claim(
    "SHUF-TANGRAM",
    "A binary word is a tangram iff some rotation is an abelian square; 0011 has the abelian-square rotation "
    "0110 and 001011 has none.",
    {"equivalence": clean(2**13 - 1), "v_rotation": "0110", "w_rotation": None},
    provenance="PAPER",
    anchor="tangrams",
    bound="all binary words of length 0..12",
    tags=("shuffles", "enumerative", "equivalence"),
)
def _tangram(budget):
    suite = Suite()
    for u in words_upto(12):
        suite.add(u, is_tangram(u) == (u == "" or any(is_abelian_square(r) for r in rotations(u))))
    first = lambda u: next((r for r in rotations(u) if is_abelian_square(r)), None)
    return {"equivalence": suite.result(), "v_rotation": first(V), "w_rotation": first(W)}


@claim(
    "SHUF-ANTIPAL",
    "Anti-palindromes of even length are exactly the perfect shuffles of the complement of x with the reversal "
    "of x; 0011 comes from x = 10 and 001011 from x = 100.",
    {"equivalence": clean(sum(2**n for n in range(0, 13, 2))), "v_x": "10", "w_x": "100"},
    provenance="PAPER",
    anchor="shuffles",
    bound="all binary words of even length 0..12",
    tags=("shuffles", "enumerative", "equivalence"),
)
def _antipal_shuffle(budget):
    suite = Suite()
    for n in range(0, 13, 2):
        for u in all_words(n):
            x = complement(u[0::2])  # forced by the letters in odd positions
            shuffles = perfect_shuffle(complement(x), mirror(x)) == u
            suite.add(u, shuffles == (is_antipalindrome(u) or u == ""))
    x_of = lambda u: complement(u[0::2])
    return {"equivalence": suite.result(), "v_x": x_of(V), "w_x": x_of(W)}
