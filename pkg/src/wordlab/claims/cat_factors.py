"""Claims about factor complexity, attractors, special factors, minimal
forbidden words, balance and scattered subwords."""

from __future__ import annotations

from ..factors import (
    factor_count,
    highly_bispecial_words,
    is_attractor,
    max_factor_count,
    max_factor_count_binomial,
    minimal_forbidden_words,
    smallest_attractor,
    special_factors,
)
from ..lyndon import borel_laubie_product_is_christoffel, is_balanced, is_christoffel, is_minimal_unbalanced, lyndon_words
from ..palindromes import (
    is_abelian_unbordered,
    is_minimal_palindromic,
    is_palindrome,
    is_rich,
)
from ..words import all_words, complement, embedding_count, factor_set, min_period, scattered_subwords, words_upto
from .core import Suite, claim, clean

V = "0011"
W = "001011"

TABLE = {1: 2, 2: 4, 3: 6, 4: 9, 5: 13, 6: 17, 7: 22, 8: 28, 9: 35, 10: 43, 11: 51, 12: 60, 13: 70, 14: 81, 15: 93}


@claim(
    "FAC-TABLE1",
    "The largest number of distinct factors (ε included) of a binary word of length n is "
    "sum_i min(2^i, n-i+1) = 2^(k+1) - 1 + C(n-k+1, 2) with 2^k + k - 1 <= n <= 2^(k+1) + k, "
    "tabulated for n = 1..15.",
    {"enumerated": TABLE, "formula": TABLE, "closed_forms_agree_upto_1000": True},
    provenance="PAPER",
    anchor="factor complexity",
    bound="all binary words of length 1..15; formulas for n <= 1000",
    tags=("factors", "enumerative", "acceptance"),
)
def _table1(budget):
    return {
        "enumerated": {n: max(factor_count(u) for u in all_words(n)) for n in range(1, 16)},
        "formula": {n: max_factor_count(n) for n in range(1, 16)},
        "closed_forms_agree_upto_1000": all(max_factor_count(n) == max_factor_count_binomial(n) for n in range(1, 1001)),
    }


@claim(
    "FAC-VW",
    "0011 has the 9 factors listed and 001011 the 17 listed; both reach the maximum for their length.",
    {
        "v": {"", "0", "00", "001", "0011", "01", "011", "1", "11"},
        "w": {"", "0", "00", "001", "0010", "00101", "001011", "01", "010", "0101", "01011", "011", "1", "10",
              "101", "1011", "11"},
        "both_maximal": True,
    },
    provenance="PAPER",
    anchor="factor complexity",
    bound="two fixed words",
    tags=("factors", "example"),
)
def _factors_vw(budget):
    return {
        "v": factor_set(V),
        "w": factor_set(W),
        "both_maximal": factor_count(V) == max_factor_count(4) and factor_count(W) == max_factor_count(6),
    }


@claim(
    "FAC-MAW",
    "Minimal forbidden words: 0011 has 000, 10, 111; 001011 has 000, 0011, 100, 1010, 110, 111; a binary word "
    "of length n >= 3 has at most n of them, the maximum n being reached for n = 3..10, by 001011 at n = 6.",
    {
        "v": {"000", "10", "111"},
        "w": {"000", "0011", "100", "1010", "110", "111"},
        "max_count": {n: n for n in range(3, 11)},
        "w_attains": True,
    },
    provenance="PAPER",
    anchor="minimal forbidden words",
    bound="all binary words of length 3..10",
    tags=("factors", "enumerative", "acceptance"),
)
def _maw(budget):
    return {
        "v": minimal_forbidden_words(V),
        "w": minimal_forbidden_words(W),
        "max_count": {n: max(len(minimal_forbidden_words(u, 2)) for u in all_words(n)) for n in range(3, 11)},
        "w_attains": len(minimal_forbidden_words(W)) == 6,
    }


def _palindromes_of_length(n: int):
    for half in all_words((n + 1) // 2):
        yield half + half[: n // 2][::-1]


@claim(
    "FAC-MAW-PALINDROME",
    "0010110100 is the shortest palindrome beginning with 001011; among its minimal forbidden words are 0011 and "
    "1100, which are not palindromes; every shorter binary palindrome has only palindromic minimal forbidden words.",
    {"shortest_palindrome_with_prefix_w": "0010110100", "non_palindromic_maws": {"0011", "1100"}, "shorter_all_palindromic": True},
    provenance="PAPER",
    anchor="minimal forbidden words",
    bound="all binary palindromes of length 1..10",
    tags=("factors", "palindromes", "enumerative"),
)
def _maw_pal(budget):
    shortest = next(p for n in range(6, 13) for p in _palindromes_of_length(n) if p.startswith(W))
    shorter = all(
        all(is_palindrome(x) for x in minimal_forbidden_words(p, 2))
        for n in range(1, len(shortest))
        for p in _palindromes_of_length(n)
    )
    return {
        "shortest_palindrome_with_prefix_w": shortest,
        "non_palindromic_maws": {x for x in minimal_forbidden_words(shortest) if not is_palindrome(x)},
        "shorter_all_palindromic": shorter,
    }


def _min_attractor_sizes(n: int) -> dict[str, int]:
    return {u: smallest_attractor(u).size for u in all_words(n)}


@claim(
    "FAC-ATTRACTOR",
    "{2,3} is a smallest attractor of 0011 (size 2); 001011 and 110100 are the only binary words of length <= 6 "
    "with no attractor of size 2.",
    {"v_size": 2, "v_23_is_attractor": True, "needing_3": {n: [] for n in range(1, 6)} | {6: ["001011", "110100"]}},
    provenance="PAPER",
    anchor="string attractors",
    bound="all binary words of length 1..6",
    tags=("factors", "enumerative", "acceptance"),
)
def _attractor(budget):
    return {
        "v_size": smallest_attractor(V).size,
        "v_23_is_attractor": is_attractor(V, [2, 3]),
        "needing_3": {n: [u for u, k in _min_attractor_sizes(n).items() if k > 2] for n in range(1, 7)},
    }


@claim(
    "FAC-ATTRACTOR-WITNESSES",
    "Smallest attractors with the lexicographically least position set: 0011 and 001011.",
    {"v": {"size": 2, "witness": [1, 3]}, "w": {"size": 3, "witness": [1, 3, 5]}},
    provenance="DERIVED",
    anchor="string attractors",
    bound="two fixed words",
    tags=("factors", "example"),
)
def _attractor_witness(budget):
    return {u: dict(zip(("size", "witness"), smallest_attractor(x))) for u, x in (("v", V), ("w", W))}


@claim(
    "FAC-BISPECIAL",
    "The only bispecial factor of 0011 is ε; those of 001011 are ε, 0, 01, 1; words of length n >= 3 have at most "
    "n - 2 bispecial factors, and 001^(n-3)0 and 01^(n-2)0 have exactly n - 2 for n >= 4.",
    {
        "v": [""],
        "w": ["", "0", "1", "01"],
        "max": {n: n - 2 for n in range(3, 13)},
        "examples_reach": True,
    },
    provenance="PAPER",
    anchor="bispecial factors",
    bound="all binary words of length 3..12",
    tags=("factors", "enumerative"),
)
def _bispecial(budget):
    reach = all(
        len(special_factors(u).bispecial) == n - 2
        for n in range(4, 13)
        for u in ("00" + "1" * (n - 3) + "0", "0" + "1" * (n - 2) + "0")
    )
    return {
        "v": special_factors(V).bispecial,
        "w": special_factors(W).bispecial,
        "max": {n: max(len(special_factors(u).bispecial) for u in all_words(n)) for n in range(3, 13)},
        "examples_reach": reach,
    }


def _shapes(n: int) -> set[str]:
    out = set()
    for a, b in ("01", "10"):
        out |= {a + a + b * (n - 3) + a, a + b * (n - 3) + a + a, a + b * (n - 2) + a}
    return out


def _up_to_complement(words) -> list[str]:
    return sorted({min(u, complement(u)) for u in words})


@claim(
    "FAC-HIGHLY-BISPECIAL",
    "The least highly bispecial binary word of length n >= 4 is 001^(n-3)0, except 001011 at n = 6; up to "
    "complement the highly bispecial words are the three shapes aab^(n-3)a, ab^(n-3)aa, ab^(n-2)a, plus 001011 "
    "at n = 6.",
    {
        "least": {n: ("001011" if n == 6 else "00" + "1" * (n - 3) + "0") for n in range(4, 13)},
        "up_to_complement_count": {n: (4 if n == 6 else 3) for n in range(4, 13)},
        "shapes_match": {n: True for n in range(4, 13)},
    },
    provenance="PAPER",
    anchor="bispecial factors",
    bound="all binary words of length 4..12",
    tags=("factors", "enumerative"),
)
def _highly(budget):
    sets = {n: highly_bispecial_words(n) for n in range(4, 13)}
    expected_sets = {n: _shapes(n) | ({W, complement(W)} if n == 6 else set()) for n in sets}
    return {
        "least": {n: ws[0] for n, ws in sets.items()},
        "up_to_complement_count": {n: len(_up_to_complement(ws)) for n, ws in sets.items()},
        "shapes_match": {n: set(ws) == expected_sets[n] for n, ws in sets.items()},
    }


@claim(
    "FAC-HIGHLY-BISPECIAL-SETS",
    "Exact sets of highly bispecial binary words for n = 4..8 (both letter assignments).",
    {n: sorted(_shapes(n) | ({W, complement(W)} if n == 6 else set())) for n in range(4, 9)},
    provenance="DERIVED",
    anchor="bispecial factors",
    bound="all binary words of length 4..8",
    tags=("factors", "enumerative"),
)
def _highly_sets(budget):
    return {n: highly_bispecial_words(n) for n in range(4, 9)}


# --- balance -----------------------------------------------------------------------------------


def _has_0z0_1z1(u: str) -> bool:
    facts = factor_set(u)
    return any(is_palindrome(z) and "0" + z + "0" in facts and "1" + z + "1" in facts for z in facts)


@claim(
    "FAC-BALANCE",
    "A binary word is unbalanced iff 0z0 and 1z1 are factors for some palindrome z; the shortest unbalanced words "
    "are 0011 and 1100; 0011 and 001011 are minimal unbalanced; balanced words are rich.",
    {
        "criterion": clean(2**13 - 1),
        "shortest_unbalanced": ["0011", "1100"],
        "v_minimal_unbalanced": True,
        "w_minimal_unbalanced": True,
        "balanced_rich": clean(2**13 - 1),
    },
    provenance="PAPER",
    anchor="balanced words",
    bound="all binary words of length 0..12",
    tags=("factors", "lyndon", "enumerative", "equivalence", "acceptance"),
)
def _balance(budget):
    crit, rich = Suite(), Suite()
    for u in words_upto(12):
        bal = is_balanced(u)
        crit.add(u, (not bal) == _has_0z0_1z1(u))
        rich.add(u, not bal or is_rich(u))
    unbalanced = [u for u in words_upto(6) if not is_balanced(u)]
    return {
        "criterion": crit.result(),
        "shortest_unbalanced": [u for u in unbalanced if len(u) == len(unbalanced[0])],
        "v_minimal_unbalanced": is_minimal_unbalanced(V),
        "w_minimal_unbalanced": is_minimal_unbalanced(W),
        "balanced_rich": rich.result(),
    }


def _power_of_christoffel_or_mirror(x: str) -> bool:
    p = min_period(x)
    if len(x) % p or len(x) // p < 2:
        return False
    root = x[:p]
    return is_christoffel(root) or is_christoffel(root[::-1])


@claim(
    "FAC-MIN-UNBALANCED",
    "u = a z b with {a, b} = {0, 1} is minimal unbalanced iff b z a is a proper power of a lower Christoffel word or "
    "of its reversal; 1(10)^(n-1)0 and 0(01)^(n-1)1 = 00(10)^(n-2)11 are minimal unbalanced for n > 1.",
    {"characterization": clean(sum(2 ** (n - 1) for n in range(2, 13))), "families": True, "equal_ends_minimal": 0},
    provenance="PAPER",
    anchor="balanced words",
    bound="all binary words of length 2..12",
    tags=("factors", "lyndon", "enumerative", "equivalence", "acceptance"),
)
def _min_unbalanced(budget):
    suite = Suite()
    equal_ends = 0
    for n in range(2, 13):
        for u in all_words(n):
            if u[0] == u[-1]:
                equal_ends += is_minimal_unbalanced(u)
                continue
            bza = u[-1] + u[1:-1] + u[0]
            suite.add(u, is_minimal_unbalanced(u) == _power_of_christoffel_or_mirror(bza))
    families = all(
        is_minimal_unbalanced("1" + "10" * (n - 1) + "0")
        and is_minimal_unbalanced("0" + "01" * (n - 1) + "1")
        and "0" + "01" * (n - 1) + "1" == "00" + "10" * (n - 2) + "11"
        for n in range(2, 7)
    )
    return {"characterization": suite.result(), "families": families, "equal_ends_minimal": equal_ends}


def _christoffel_words(max_len: int) -> list[str]:
    return [u for u in lyndon_words(max_len) if is_christoffel(u)]


@claim(
    "FAC-BOREL-LAUBIE",
    "For lower Christoffel words u < z, uz is a lower Christoffel word iff |u|_0 |z|_1 - |z|_0 |u|_1 = 1; "
    "001 and 011 are Christoffel and 001011 is not.",
    {"equivalence": clean(123), "example": {"u": True, "z": True, "uz": False, "det_is_1": False}},
    provenance="PAPER",
    anchor="balanced words",
    bound="all pairs of lower Christoffel words with |uz| <= 10",
    tags=("factors", "lyndon", "enumerative", "equivalence", "acceptance"),
)
def _borel_laubie(budget):
    chris = _christoffel_words(9)
    suite = Suite()
    for u in chris:
        for z in chris:
            if u < z and len(u) + len(z) <= 10:
                suite.add(u + "." + z, borel_laubie_product_is_christoffel(u, z) == is_christoffel(u + z))
    return {
        "equivalence": suite.result(),
        "example": {
            "u": is_christoffel("001"),
            "z": is_christoffel("011"),
            "uz": is_christoffel(W),
            "det_is_1": borel_laubie_product_is_christoffel("001", "011"),
        },
    }


# --- scattered subwords -------------------------------------------------------------------------


@claim(
    "FAC-SCATTERED",
    "The scattered subwords of length 4 of 001011 are 0001, 0011, 0111 and 1011; 0011 has 5 embeddings in 001011.",
    {"subwords": {"0001", "0011", "0111", "1011"}, "embeddings": 5},
    provenance="PAPER",
    anchor="scattered subwords",
    bound="one fixed word",
    tags=("factors", "example"),
)
def _scattered(budget):
    found = scattered_subwords(W, 4)
    listed = {"0001", "0011", "0111", "1011"}
    out = {"subwords": found, "embeddings": embedding_count(W, V)}
    extra = sorted(found - listed)
    if extra:
        out["counterexample"] = extra[0]
    return out


@claim(
    "FAC-MINIMAL-PALINDROMIC",
    "0011 and 001011 are minimal palindromic; minimal palindromic binary words are abelian unbordered.",
    {"v": True, "w": True, "implication": clean(2**15 - 1)},
    provenance="PAPER",
    anchor="scattered subwords",
    bound="all binary words of length 0..14",
    tags=("factors", "palindromes", "enumerative", "equivalence"),
)
def _minimal_pal(budget):
    suite = Suite()
    for u in words_upto(14):
        suite.add(u, not is_minimal_palindromic(u) or is_abelian_unbordered(u))
    return {"v": is_minimal_palindromic(V), "w": is_minimal_palindromic(W), "implication": suite.result()}
