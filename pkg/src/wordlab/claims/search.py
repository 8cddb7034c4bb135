"""Breadth-first searches for the longest binary word satisfying a factor-closed
condition.

Every condition here is inherited by factors, so a word qualifies only if the
word minus its last letter does; extending the qualifying words of one length
by one letter therefore reaches all qualifying words of the next.  When the
frontier empties at depth ``d``, no qualifying word has length ``d``, and no
infinite word can satisfy the condition.
"""

from __future__ import annotations

from typing import NamedTuple

from ..palindromes import is_palindromic_periodicity
from ..repetitions import suffix_is_free

DEFAULT_NODES = 200_000

PREDICATES = {
    "palindromes": "at most `bound` distinct palindromic factors, ε included",
    "periodicities": "at most `bound` distinct nonempty factors that are palindromic periodicities",
    "cubefree-palindromes": "cube-free with at most `bound` distinct palindromic factors, ε included",
}


class SearchResult(NamedTuple):
    maxlen: int | str  # "open" when the node budget ran out first
    witness: str  # least qualifying word of length maxlen (or of the deepest level reached)
    nodes: int

    def to_json(self) -> dict:
        return {"maxlen": self.maxlen, "witness": self.witness, "nodes": self.nodes}


def _new_palindrome(t: str) -> int:
    # only the longest palindromic suffix of t can be a new palindrome
    for i in range(len(t)):
        p = t[i:]
        if p == p[::-1]:
            return int(p not in t[:-1])
    return 0


def _new_factors(t: str) -> list[str]:
    # suffixes of t not occurring in t[:-1]; if one is new, so are all longer ones
    prev = t[:-1]
    for i in range(len(t) - 1, -1, -1):
        if t[i:] not in prev:
            return [t[j:] for j in range(i, -1, -1)]
    return []


def _initial(predicate: str) -> int:
    return 0 if predicate == "periodicities" else 1


def _step(predicate: str, t: str, count: int) -> int | None:
    """Updated count for ``t`` given the count of ``t[:-1]``, or None if ``t`` is excluded."""
    if predicate == "periodicities":
        return count + sum(1 for f in _new_factors(t) if is_palindromic_periodicity(f))
    if predicate == "cubefree-palindromes" and not suffix_is_free(t, 3, strict=False):
        return None
    return count + _new_palindrome(t)


def bounded_search_max_length(predicate: str, bound: int, budget: int | None = DEFAULT_NODES) -> SearchResult:
    """Longest binary word meeting ``predicate`` with parameter ``bound``.

    ``budget`` caps the number of generated nodes (None for no cap).  The
    witness is the lexicographically least word of the reported length.
    """
    if predicate not in PREDICATES:
        raise KeyError(f"unknown search predicate {predicate!r}; known: {sorted(PREDICATES)}")
    start = _initial(predicate)
    if start > bound:
        raise ValueError(f"bound {bound} excludes even the empty word")
    frontier = [("", start)]
    nodes = 0
    depth = 0
    while True:
        nxt = []
        for s, count in frontier:
            for a in "01":
                t = s + a
                nodes += 1
                c = _step(predicate, t, count)
                if c is not None and c <= bound:
                    nxt.append((t, c))
        if not nxt:
            return SearchResult(depth, frontier[0][0], nodes)
        frontier = nxt
        depth += 1
        if budget is not None and nodes >= budget:
            return SearchResult("open", frontier[0][0], nodes)
