"""Factor complexity, special and bispecial factors, minimal forbidden words and
string attractors."""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import NamedTuple

from . import kernels
from .errors import LengthCapExceeded
from .words import WordLike, factor_set, require_binary, sigma_of, all_words

BISPECIAL_CAP = 14
ATTRACTOR_CAP = 20


class SpecialFactors(NamedTuple):
    left: frozenset
    right: frozenset
    bispecial: frozenset


class AttractorResult(NamedTuple):
    size: int
    witness: tuple  # sorted 1-based positions


def max_factor_count(n: int) -> int:
    """Largest number of distinct factors (ε included) of a binary word of length ``n``."""
    return sum(min(2**i, n - i + 1) for i in range(n + 1))


def max_factor_count_binomial(n: int) -> int:
    """Same quantity via ``2^(k+1) - 1 + C(n-k+1, 2)`` with ``2^k + k - 1 <= n <= 2^(k+1) + k``."""
    k = 0
    while not (2**k + k - 1 <= n <= 2 ** (k + 1) + k):
        k += 1
    return 2 ** (k + 1) - 1 + comb(n - k + 1, 2)


def factor_count(u: WordLike) -> int:
    return kernels.distinct_factor_count(str(u))


def special_factors(u: WordLike) -> SpecialFactors:
    require_binary(u, "special_factors")
    facts = factor_set(u)
    left = frozenset(x for x in facts if "0" + x in facts and "1" + x in facts)
    right = frozenset(x for x in facts if x + "0" in facts and x + "1" in facts)
    return SpecialFactors(left, right, left & right)


def bispecial_count(u: WordLike) -> int:
    return len(special_factors(u).bispecial)


@lru_cache(maxsize=None)
def max_bispecial_count(n: int) -> int:
    # lru_cache fills idempotently, so concurrent first calls only duplicate work
    return max(bispecial_count(u) for u in all_words(n))


def is_highly_bispecial(u: WordLike) -> bool:
    require_binary(u, "is_highly_bispecial")
    if len(u) > BISPECIAL_CAP:
        raise LengthCapExceeded(f"highly-bispecial test capped at length {BISPECIAL_CAP}")
    return bispecial_count(u) == max_bispecial_count(len(u))


def highly_bispecial_words(n: int) -> list[str]:
    if n > BISPECIAL_CAP:
        raise LengthCapExceeded(f"highly-bispecial census capped at length {BISPECIAL_CAP}")
    best = max_bispecial_count(n)
    return [u for u in all_words(n) if bispecial_count(u) == best]


def minimal_forbidden_words(u: WordLike, sigma: int | None = None) -> set[str]:
    """Words ``x`` that are not factors of ``u`` while every proper factor of ``x`` is.

    A candidate ``a y b`` only needs ``a y`` and ``y b`` checked, since every
    other proper factor is a factor of one of those two.
    """
    sigma = sigma or sigma_of(u)
    letters = "0123456789"[:sigma]
    facts = factor_set(u)
    out = {a for a in letters if a not in facts}
    for y in facts:
        for a in letters:
            if a + y not in facts:
                continue
            for b in letters:
                x = a + y + b
                if x not in facts and y + b in facts:
                    out.add(x)
    return out


def _factor_masks(s: str) -> list[int]:
    """For each distinct nonempty factor, the bitmask of positions covered by its occurrences."""
    n = len(s)
    masks: dict[str, int] = {}
    for i in range(n):
        for j in range(i + 1, n + 1):
            span = ((1 << (j - i)) - 1) << i
            f = s[i:j]
            masks[f] = masks.get(f, 0) | span
    # a factor whose mask contains another's is implied by it
    distinct = sorted(set(masks.values()), key=lambda m: bin(m).count("1"))
    kept: list[int] = []
    for m in distinct:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def is_attractor(u: WordLike, positions) -> bool:
    """Does every nonempty factor have an occurrence covering one of ``positions`` (1-based)?"""
    chosen = 0
    for p in positions:
        chosen |= 1 << (p - 1)
    return all(m & chosen for m in _factor_masks(str(u)))


def smallest_attractor(u: WordLike, cap: int = ATTRACTOR_CAP) -> AttractorResult:
    """A minimum-size attractor; among those, the lexicographically least position list."""
    if len(u) > cap:
        raise LengthCapExceeded(f"attractor search capped at length {cap}")
    s = str(u)
    masks = _factor_masks(s)
    for size in range(len(s) + 1):
        for combo in itertools.combinations(range(len(s)), size):
            chosen = 0
            for p in combo:
                chosen |= 1 << p
            if all(m & chosen for m in masks):
                return AttractorResult(size, tuple(p + 1 for p in combo))
    raise AssertionError("the full position set is always an attractor")
