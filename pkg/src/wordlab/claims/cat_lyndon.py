"""Claims about Lyndon words, Lyndon trees, de Bruijn words and the
Burrows-Wheeler transform."""

from __future__ import annotations

from ..lyndon import (
    debruijn_fm,
    generalized_debruijn_au,
    is_christoffel,
    is_debruijn,
    is_generalized_debruijn_ghs,
    is_generalized_debruijn_primitive,
    is_lyndon,
    left_lyndon_tree,
    left_standard_factorization,
    lyndon_words,
    lyndon_words_of_length,
    right_lyndon_tree,
    right_standard_factorization,
    two_lyndon_factorizations,
)
from ..transforms import (
    bwt,
    bwt_of_debruijn,
    higgins_debruijn_bwt_candidates,
    inverse_bwt,
    is_rotation_of_own_bwt,
    standard_permutation,
)
from ..words import all_words, is_primitive, mirror, rotations, words_upto
from .core import Suite, claim, clean

V = "0011"
W = "001011"


@claim(
    "LYN-TWO-FACT",
    "0011 and 001011 are Lyndon words with 2 and 3 factorizations into two Lyndon words.",
    {"v": [["0", "011"], ["001", "1"]], "w": [["0", "01011"], ["001", "011"], ["00101", "1"]]},
    provenance="PAPER",
    anchor="Lyndon factorizations",
    bound="two fixed words",
    tags=("lyndon", "example"),
)
def _two_fact(budget):
    return {"v": two_lyndon_factorizations(V), "w": two_lyndon_factorizations(W)}


@claim(
    "LYN-TWO-FACT-SHORTEST",
    "For n = 3, 4, 5 the only shortest binary word with n factorizations into two Lyndon words is 00(10)^(n-2)11, "
    "of length 2n; larger n are not checked.",
    {n: {"length": 2 * n, "words": ["00" + "10" * (n - 2) + "11"]} for n in (3, 4, 5)},
    provenance="PAPER",
    anchor="Lyndon factorizations",
    bound="all binary words of length 2..10",
    tags=("lyndon", "enumerative"),
)
def _two_fact_shortest(budget):
    out = {}
    for n in (3, 4, 5):
        for length in range(2, 11):
            hits = [u for u in all_words(length) if len(two_lyndon_factorizations(u)) == n]
            if hits:
                out[n] = {"length": length, "words": hits}
                break
    return out


@claim(
    "LYN-STANDARD",
    "Right standard factorizations 0011 = 0.011 and 001011 = 0.01011; left standard factorization 0011 = 001.1.",
    {"right_v": ["0", "011"], "right_w": ["0", "01011"], "left_v": ["001", "1"]},
    provenance="PAPER",
    anchor="standard factorizations",
    bound="two fixed words",
    tags=("lyndon", "example"),
)
def _standard(budget):
    return {
        "right_v": right_standard_factorization(V),
        "right_w": right_standard_factorization(W),
        "left_v": left_standard_factorization(V),
    }


@claim(
    "LYN-TREES-CHRISTOFFEL",
    "For a binary Lyndon word the right and left Lyndon trees coincide iff the word is a (primitive) lower "
    "Christoffel word.",
    clean(sum(1 for _ in lyndon_words(10))),
    provenance="PAPER",
    anchor="Lyndon trees",
    bound="all binary Lyndon words of length 1..10",
    tags=("lyndon", "enumerative", "equivalence"),
)
def _trees(budget):
    suite = Suite()
    for u in lyndon_words(10):
        suite.add(u, (right_lyndon_tree(u) == left_lyndon_tree(u)) == (is_christoffel(u) and is_primitive(u)))
    return suite.result()


@claim(
    "LYN-FM",
    "Concatenating the Lyndon words of length dividing k in lexicographic order gives the least binary de Bruijn "
    "word of order k: 0011 for k = 2, 00010111 for k = 3; the construction is a de Bruijn word for k <= 10.",
    {"fm2": "0011", "fm3": "00010111", "least_by_enumeration": {1: True, 2: True, 3: True, 4: True}, "valid_upto_10": True},
    provenance="PAPER",
    anchor="de Bruijn words",
    bound="orders 1..10; exhaustive for orders 1..4",
    tags=("lyndon", "debruijn", "enumerative", "acceptance"),
)
def _fm(budget):
    least = {}
    for k in range(1, 5):
        first = next(u for u in all_words(2**k) if is_debruijn(u, k))
        least[k] = first == debruijn_fm(k)
    return {
        "fm2": debruijn_fm(2),
        "fm3": debruijn_fm(3),
        "least_by_enumeration": least,
        "valid_upto_10": all(is_debruijn(debruijn_fm(k), k) for k in range(1, 11)),
    }


def _primitive_count(k: int) -> int:
    return sum(1 for x in all_words(k) if is_primitive(x))


@claim(
    "LYN-AU",
    "Concatenating the Lyndon words of length k in lexicographic order gives the least word containing every "
    "primitive binary word of length k exactly once as a cyclic factor: 001011 for k = 3; the construction is "
    "valid for k <= 10.",
    {"au3": "001011", "au3_valid": True, "least_by_enumeration": {2: True, 3: True, 4: True}, "valid_upto_10": True},
    provenance="PAPER",
    anchor="generalized de Bruijn words",
    bound="orders 1..10; exhaustive for orders 2..4",
    tags=("lyndon", "debruijn", "enumerative", "acceptance"),
)
def _au(budget):
    least = {}
    for k in range(2, 5):
        first = next(u for u in all_words(_primitive_count(k)) if is_generalized_debruijn_primitive(u, k))
        least[k] = first == generalized_debruijn_au(k)
    return {
        "au3": generalized_debruijn_au(3),
        "au3_valid": is_generalized_debruijn_primitive(W, 3),
        "least_by_enumeration": least,
        "valid_upto_10": all(is_generalized_debruijn_primitive(generalized_debruijn_au(k), k) for k in range(1, 11)),
    }


def _ghs_words() -> list[str]:
    return [u for u in all_words(6) if is_generalized_debruijn_ghs(u)]


@claim(
    "LYN-GHS-6",
    "The binary words of length 6 having min(2^i, 6) distinct cyclic factors of each length i are exactly "
    "000111, 001011 and 110100.",
    {"000111", "001011", "110100"},
    provenance="PAPER",
    anchor="generalized de Bruijn words",
    bound="all binary words of length 6",
    tags=("lyndon", "debruijn", "enumerative", "acceptance"),
)
def _ghs(budget):
    found = set(_ghs_words())
    extra = sorted(found - {"000111", W, mirror(W)})
    if extra:
        return {"words": found, "counterexample": extra[0]}
    return found


@claim(
    "LYN-GHS-6-ROTATION",
    "The same words counted up to rotation: 18 words in 3 rotation classes, one per listed word.",
    {"words": 18, "rotation_classes": 3, "listed_in_distinct_classes": True, "listed_cover_all": True},
    provenance="DERIVED",
    anchor="generalized de Bruijn words",
    bound="all binary words of length 6",
    tags=("lyndon", "debruijn", "enumerative"),
)
def _ghs_rotation(budget):
    found = _ghs_words()
    # cyclic factors do not change under rotation, so the set is a union of rotation classes
    classes = {min(rotations(u)) for u in found}
    listed = {min(rotations(u)) for u in ("000111", W, mirror(W))}
    return {
        "words": len(found),
        "rotation_classes": len(classes),
        "listed_in_distinct_classes": len(listed) == 3,
        "listed_cover_all": listed == classes,
    }


def _debruijn_words(k: int) -> list[str]:
    return [u for u in all_words(2**k) if is_debruijn(u, k)]


def _linear(u: str, k: int) -> str:
    # a cyclic de Bruijn word written out so every length-k factor appears linearly
    return u + u[: k - 1]


def _extends(small: str, k: int, big: str, k2: int) -> bool:
    return _linear(big, k2).startswith(_linear(small, k))


@claim(
    "LYN-BECHER-HEIBER",
    "0011.001011.110100 is a de Bruijn word of order 4 extending 0011; no binary de Bruijn word of order k "
    "extends to order k+1 (k = 2, 3), and every one of order 2 extends to order 4.",
    {"vww_debruijn_4": True, "vww_extends_v": True, "extend_by_1": {2: 0, 3: 0}, "extend_by_2": {2: [4, 4]}},
    provenance="PAPER",
    anchor="de Bruijn words",
    bound="all de Bruijn words of orders 2, 3, 4",
    tags=("lyndon", "debruijn", "enumerative"),
)
def _becher_heiber(budget):
    vww = V + W + mirror(W)
    db = {k: _debruijn_words(k) for k in (2, 3, 4)}
    by1 = {k: sum(1 for a in db[k] if any(_extends(a, k, b, k + 1) for b in db[k + 1])) for k in (2, 3)}
    by2 = {2: [sum(1 for a in db[2] if any(_extends(a, 2, b, 4) for b in db[4])), len(db[2])]}
    return {
        "vww_debruijn_4": is_debruijn(vww, 4),
        "vww_extends_v": _extends(V, 2, vww, 4),
        "extend_by_1": by1,
        "extend_by_2": by2,
    }


# --- Burrows-Wheeler ------------------------------------------------------------------------


@claim(
    "BWT-EXAMPLES",
    "BWT(0120) = 2001, BWT(0011) = 1010, BWT(001011) = 101100 (a rotation of 001011); the standard permutation "
    "of 101100 is 1->4, 2->1, 3->5, 4->6, 5->2, 6->3.",
    {"0120": "2001", "0011": "1010", "001011": "101100", "w_rotation": True, "pi_101100": [4, 1, 5, 6, 2, 3]},
    provenance="PAPER",
    anchor="Burrows-Wheeler transform",
    bound="fixed words",
    tags=("bwt", "example", "acceptance"),
)
def _bwt_examples(budget):
    return {
        "0120": bwt("0120"),
        "0011": bwt(V),
        "001011": bwt(W),
        "w_rotation": is_rotation_of_own_bwt(W),
        "pi_101100": standard_permutation("101100"),
    }


@claim(
    "BWT-ROTATIONS",
    "The BWT of a word equals the BWT of each of its rotations.",
    clean(sum(3**k for k in range(1, 8))),
    provenance="PAPER",
    anchor="Burrows-Wheeler transform",
    bound="all ternary words of length 1..7",
    tags=("bwt", "enumerative", "equivalence"),
)
def _bwt_rotations(budget):
    suite = Suite()
    for u in words_upto(7, 3):
        if u:
            b = bwt(u)
            suite.add(u, all(bwt(r) == b for r in rotations(u)))
    return suite.result()


@claim(
    "BWT-FIXED-20",
    "Exactly 13 binary Lyndon words of length 20 are rotations of their BWT.",
    13,
    provenance="PAPER",
    anchor="Burrows-Wheeler transform",
    bound="all binary Lyndon words of length 20",
    tags=("bwt", "enumerative", "acceptance"),
    cost="tens of seconds",
)
def _bwt_fixed(budget):
    return sum(1 for u in lyndon_words_of_length(20) if is_rotation_of_own_bwt(u))


@claim(
    "BWT-FIXED-CENSUS",
    "Number of binary Lyndon words of length n that are rotations of their BWT, n = 1..16.",
    {1: 2, 2: 1, 3: 2, 4: 2, 5: 2, 6: 5, 7: 4, 8: 2, 9: 7, 10: 3, 11: 4, 12: 7, 13: 6, 14: 6, 15: 9, 16: 9},
    provenance="DERIVED",
    anchor="Burrows-Wheeler transform",
    bound="all binary Lyndon words of length 1..16",
    tags=("bwt", "enumerative"),
    cost="seconds",
)
def _bwt_census(budget):
    counts = {n: 0 for n in range(1, 17)}
    for u in lyndon_words(16):
        counts[len(u)] += is_rotation_of_own_bwt(u)
    return counts


@claim(
    "BWT-HIGGINS",
    "Thue-Morse images of length 2^k with cyclic standard permutation are exactly the BWTs of order-k de Bruijn "
    "words: {1010} for k = 2 and {10011010, 10100110} for k = 3, the BWTs of 0011, 00010111 and 00011101.",
    {
        "candidates": {2: ["1010"], 3: ["10011010", "10100110"]},
        "inverses": {"1010": "0011", "10011010": "00010111", "10100110": "00011101"},
        "matches_debruijn_bwts": {2: True, 3: True, 4: True},
    },
    provenance="PAPER",
    anchor="Burrows-Wheeler transform",
    bound="orders 2..4",
    tags=("bwt", "debruijn", "enumerative", "acceptance"),
)
def _higgins(budget):
    cands = {k: higgins_debruijn_bwt_candidates(k) for k in (2, 3, 4)}
    matches = {}
    for k in (2, 3, 4):
        images = {bwt(u) for u in _debruijn_words(k)}
        matches[k] = images == cands[k] and all(bwt_of_debruijn(c, k) for c in cands[k])
    return {
        "candidates": {k: cands[k] for k in (2, 3)},
        "inverses": {c: inverse_bwt(c) for k in (2, 3) for c in cands[k]},
        "matches_debruijn_bwts": matches,
    }


@claim(
    "LYN-LYNDON-VW",
    "0011 and 001011 are Lyndon words.",
    [True, True],
    provenance="PAPER",
    anchor="Lyndon words",
    bound="two fixed words",
    tags=("lyndon", "example"),
)
def _lyndon_vw(budget):
    return [is_lyndon(V), is_lyndon(W)]
