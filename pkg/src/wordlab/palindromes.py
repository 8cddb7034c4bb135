"""Palindromic structure of finite words.

Predicates (palindrome, anti-palindrome, rich, weakly rich), palindromic factor
censuses, palindromic length, palindromic specifications and their minimal
subsets, palindromic periodicities and palindromic subsequences.
"""

from __future__ import annotations

import itertools
import json
from typing import NamedTuple

from . import kernels
from .errors import InvalidLength, LengthCapExceeded, NotWeaklyRich
from .words import WordLike, require_binary, require_nonempty

SPEC_CAP = 12

PalSpecification = frozenset  # of (i, j) pairs, 1-based and inclusive
PositionPartition = tuple  # of sorted tuples of positions


class MinimalSpecification(NamedTuple):
    size: int
    witness: frozenset


def is_palindrome(u: WordLike) -> bool:
    return u == u[::-1]


def is_antipalindrome(u: WordLike) -> bool:
    require_binary(u, "is_antipalindrome")
    n = len(u)
    return all(u[i] != u[n - 1 - i] for i in range(n))


def palindromic_factors(u: WordLike) -> set[str]:
    """All distinct palindromic factors, the empty word included."""
    s = str(u)
    n = len(s)
    found = {""}
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and s[lo] == s[hi]:
            found.add(s[lo : hi + 1])
            lo -= 1
            hi += 1
    return found


def palindrome_count(u: WordLike) -> int:
    return kernels.palindrome_count(str(u))


def is_rich(u: WordLike) -> bool:
    return kernels.palindrome_count(str(u)) == len(u) + 1


def is_circularly_rich(u: WordLike) -> bool:
    require_nonempty(u, "is_circularly_rich")
    return is_rich(str(u) * 2)


def is_weakly_rich(u: WordLike) -> bool:
    last: dict[str, int] = {}
    for i, c in enumerate(u):
        if c in last:
            gap = u[last[c] + 1 : i]
            if gap != gap[::-1]:
                return False
        last[c] = i
    return True


def pal_specification(u: WordLike) -> frozenset:
    """``{(i, j) : u[i..j] is a palindrome}`` with 1-based inclusive positions."""
    s = str(u)
    n = len(s)
    pairs = set()
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and s[lo] == s[hi]:
            pairs.add((lo + 1, hi + 1))
            lo -= 1
            hi += 1
    return frozenset(pairs)


def specification_to_json(spec) -> str:
    return json.dumps(sorted([i, j] for i, j in spec))


def specification_from_json(text: str) -> frozenset:
    return frozenset((int(i), int(j)) for i, j in json.loads(text))


def induced_partition(spec, n: int) -> tuple:
    """Blocks of positions forced equal by the palindromes listed in ``spec``."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in spec:
        for k in range((j - i) // 2 + 1):
            a, b = find(i + k), find(j - k)
            if a != b:
                parent[max(a, b)] = min(a, b)
    blocks: dict[int, list[int]] = {}
    for pos in range(1, n + 1):
        blocks.setdefault(find(pos), []).append(pos)
    return tuple(tuple(b) for b in sorted(blocks.values()))


def minimal_pal_specification(u: WordLike, cap: int = SPEC_CAP) -> MinimalSpecification:
    """Smallest subset of the palindromic specification inducing the same partition.

    Ties go to the lexicographically least sorted list of pairs.
    """
    if not is_weakly_rich(u):
        raise NotWeaklyRich(f"{u!r} is not weakly rich")
    if len(u) > cap:
        raise LengthCapExceeded(f"minimal specification search capped at length {cap}")
    n = len(u)
    full = pal_specification(u)
    target = induced_partition(full, n)
    # single positions never force an equation, so they never appear in a minimum
    useful = sorted(p for p in full if p[0] < p[1])
    for size in range(len(useful) + 1):
        for subset in itertools.combinations(useful, size):
            if induced_partition(subset, n) == target:
                witness = frozenset(subset)
                assert induced_partition(witness, n) == target
                return MinimalSpecification(size, witness)
    raise AssertionError("the full specification always induces its own partition")


def palindromic_length(u: WordLike) -> int:
    return kernels.palindromic_length(str(u))


def ravsky_P(n: int) -> int:
    """Largest palindromic length of a binary word of length ``n``."""
    if n < 1:
        raise InvalidLength(f"n must be at least 1, got {n}")
    if n == 11:
        return 5
    return n // 6 + (n + 4) // 6 + 1


def longest_palindromic_subsequence(u: WordLike) -> int:
    s = str(u)
    n = len(s)
    if n == 0:
        return 0
    # best[i] after processing length L: LPS of s[i:i+L]
    prev2 = [0] * (n + 1)
    prev = [1] * n
    for length in range(2, n + 1):
        cur = [0] * (n - length + 1)
        for i in range(n - length + 1):
            j = i + length - 1
            if s[i] == s[j]:
                cur[i] = prev2[i + 1] + 2
            else:
                cur[i] = max(prev[i], prev[i + 1])
        prev2, prev = prev, cur
    return prev[0]


def is_minimal_palindromic(u: WordLike) -> bool:
    return 2 * longest_palindromic_subsequence(u) <= len(u)


def is_abelian_unbordered(u: WordLike) -> bool:
    s = str(u)
    n = len(s)
    counts_pre: dict[str, int] = {}
    counts_suf: dict[str, int] = {}
    for k in range(1, n):
        a, b = s[k - 1], s[n - k]
        counts_pre[a] = counts_pre.get(a, 0) + 1
        counts_suf[b] = counts_suf.get(b, 0) + 1
        if counts_pre == counts_suf:
            return False
    return True


def is_two_palindrome_product(u: WordLike) -> bool:
    s = str(u)
    return any(is_palindrome(s[:k]) and is_palindrome(s[k:]) for k in range(len(s) + 1))


def is_palindromic_periodicity(u: WordLike) -> bool:
    """Is ``u`` a prefix of ``(ps)^ω`` for palindromes ``p``, ``s`` with ``|ps| <= |u|``?"""
    s = str(u)
    n = len(s)
    if n == 0:
        return True
    for period in range(1, n + 1):
        if all(s[i] == s[i + period] for i in range(n - period)) and is_two_palindrome_product(
            s[:period]
        ):
            return True
    return False
