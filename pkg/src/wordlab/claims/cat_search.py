"""Budgeted searches certifying lower bounds for infinite binary words."""

from __future__ import annotations

from .core import claim
from .search import DEFAULT_NODES, bounded_search_max_length


def _search(predicate: str, bound: int, budget: float) -> dict:
    result = bounded_search_max_length(predicate, bound, int(DEFAULT_NODES * budget))
    return {"maxlen": result.maxlen, "witness": result.witness}


@claim(
    "SEARCH-PAL-1",
    "Only the empty word has at most 1 palindromic factor.",
    {"maxlen": 0, "witness": ""},
    provenance="TRIVIAL",
    anchor="palindromes in infinite words",
    bound="breadth-first search over binary words",
    tags=("search",),
    bounded=True,
)
def _pal1(budget):
    return _search("palindromes", 1, budget)


@claim(
    "SEARCH-PAL-8",
    "Binary words with at most 8 palindromic factors have length at most 8, so every infinite binary word has at "
    "least 9.",
    {"maxlen": 8, "witness": "00101100"},
    provenance="DERIVED",
    anchor="palindromes in infinite words",
    bound="breadth-first search, node budget 200000 x WORDLAB_BUDGET",
    tags=("search", "palindromes", "acceptance"),
    bounded=True,
)
def _pal8(budget):
    return _search("palindromes", 8, budget)


@claim(
    "SEARCH-PERIODICITY-29",
    "Binary words with at most 29 distinct nonempty palindromic periodicities as factors have bounded length, so "
    "every infinite binary word has at least 30.",
    {"maxlen": 29, "witness": "0" * 29},
    provenance="DERIVED",
    anchor="palindromic periodicities",
    bound="breadth-first search, node budget 200000 x WORDLAB_BUDGET",
    tags=("search", "palindromes", "acceptance"),
    bounded=True,
    cost="seconds",
)
def _per29(budget):
    return _search("periodicities", 29, budget)


@claim(
    "SEARCH-CUBEFREE-PAL-12",
    "Cube-free binary words with at most 12 palindromic factors have bounded length, so every infinite cube-free "
    "binary word has at least 13.",
    {"maxlen": 50, "witness": "01001001101001101001001101001101001001101001001101"},
    provenance="DERIVED",
    anchor="cube-free words with few palindromes",
    bound="breadth-first search, node budget 200000 x WORDLAB_BUDGET",
    tags=("search", "repetitions", "acceptance"),
    bounded=True,
    cost="seconds",
)
def _cube12(budget):
    return _search("cubefree-palindromes", 12, budget)
