"""Lyndon words, standard factorizations and Lyndon trees, balanced and
Christoffel words, and de Bruijn words with two of their generalizations.

The letter order is 0 < 1 < 2 < ...  Lyndon trees are nested 2-tuples whose
leaves are single-letter strings, e.g. ``("0", ("0", ("1", "1")))``; that is
also their JSON shape.
"""

from __future__ import annotations

import json
from typing import Iterator, Union

from .errors import (
    NotLyndon,
    OrderOutOfRange,
    PreconditionViolated,
    WordTooShort,
)
from .words import WordLike, Word, is_primitive, require_binary, require_nonempty

LyndonTree = Union[str, tuple]

MAX_ORDER = 20


def is_lyndon(u: WordLike) -> bool:
    require_nonempty(u, "is_lyndon")
    s = str(u)
    return all(s < s[i:] + s[:i] for i in range(1, len(s)))


def lyndon_words(max_len: int, sigma: int = 2) -> Iterator[str]:
    """All Lyndon words of length 1..max_len in lexicographic order (Duval's generation)."""
    if max_len < 1:
        return
    w = [-1]
    while w:
        w[-1] += 1
        yield "".join(map(str, w))
        period = len(w)
        while len(w) < max_len:
            w.append(w[len(w) - period])
        while w and w[-1] == sigma - 1:
            w.pop()


def lyndon_words_of_length(k: int, sigma: int = 2) -> list[str]:
    return [x for x in lyndon_words(k, sigma) if len(x) == k]


def two_lyndon_factorizations(u: WordLike) -> list[tuple[str, str]]:
    if len(u) < 2:
        raise WordTooShort("a factorization into two Lyndon words needs |u| >= 2")
    s = str(u)
    return [(s[:k], s[k:]) for k in range(1, len(s)) if is_lyndon(s[:k]) and is_lyndon(s[k:])]


def _check_factorizable(u: WordLike) -> str:
    s = str(u)
    if len(s) < 2:
        raise WordTooShort("standard factorization needs |u| >= 2")
    if not is_lyndon(s):
        raise NotLyndon(f"{s!r} is not a Lyndon word")
    return s


def right_standard_factorization(u: WordLike) -> tuple[str, str]:
    """``u = s t`` with ``t`` the lexicographically least proper suffix."""
    s = _check_factorizable(u)
    k = min(range(1, len(s)), key=lambda i: s[i:])
    return s[:k], s[k:]


def left_standard_factorization(u: WordLike) -> tuple[str, str]:
    """``u = s t`` with ``s`` the longest proper prefix that is a Lyndon word."""
    s = _check_factorizable(u)
    k = max(i for i in range(1, len(s)) if is_lyndon(s[:i]))
    return s[:k], s[k:]


def _tree(s: str, factor) -> LyndonTree:
    if len(s) == 1:
        return s
    left, right = factor(s)
    return (_tree(left, factor), _tree(right, factor))


def right_lyndon_tree(u: WordLike) -> LyndonTree:
    if not is_lyndon(u):
        raise NotLyndon(f"{u!r} is not a Lyndon word")
    return _tree(str(u), right_standard_factorization)


def left_lyndon_tree(u: WordLike) -> LyndonTree:
    if not is_lyndon(u):
        raise NotLyndon(f"{u!r} is not a Lyndon word")
    return _tree(str(u), left_standard_factorization)


def tree_word(tree: LyndonTree) -> str:
    return tree if isinstance(tree, str) else tree_word(tree[0]) + tree_word(tree[1])


def tree_to_json(tree: LyndonTree) -> str:
    return json.dumps(tree)


# --- balance ------------------------------------------------------------------------


def is_balanced(u: WordLike) -> bool:
    require_binary(u, "is_balanced")
    s = str(u)
    n = len(s)
    ones = [0]
    for c in s:
        ones.append(ones[-1] + (c == "1"))
    for length in range(1, n):
        counts = [ones[i + length] - ones[i] for i in range(n - length + 1)]
        if max(counts) - min(counts) > 1:
            return False
    return True


def is_christoffel(u: WordLike) -> bool:
    """Lower Christoffel word: a balanced Lyndon word."""
    require_binary(u, "is_christoffel")
    return bool(u) and is_lyndon(u) and is_balanced(u)


def is_minimal_unbalanced(u: WordLike) -> bool:
    # balance is inherited by factors, so the two longest proper factors suffice
    require_binary(u, "is_minimal_unbalanced")
    return not is_balanced(u) and is_balanced(u[1:]) and is_balanced(u[:-1])


def borel_laubie_product_is_christoffel(u: WordLike, z: WordLike) -> bool:
    """For Christoffel ``u < z``: is ``uz`` Christoffel?  Decided by a 2x2 determinant."""
    if not (is_christoffel(u) and is_christoffel(z) and str(u) < str(z)):
        raise PreconditionViolated("needs lower Christoffel words u < z")
    return u.count("0") * z.count("1") - z.count("0") * u.count("1") == 1


# --- de Bruijn words --------------------------------------------------------------------


def _check_order(k: int) -> None:
    if not 1 <= k <= MAX_ORDER:
        raise OrderOutOfRange(f"order must be in 1..{MAX_ORDER}, got {k}")


def debruijn_fm(k: int) -> Word:
    """Least binary de Bruijn word of order ``k``: Lyndon words of length dividing ``k``, in order."""
    _check_order(k)
    return Word("".join(x for x in lyndon_words(k) if k % len(x) == 0), 2)


def generalized_debruijn_au(k: int) -> Word:
    """Concatenation in lexicographic order of the binary Lyndon words of length ``k``."""
    _check_order(k)
    return Word("".join(lyndon_words_of_length(k)), 2)


def cyclic_factors(u: WordLike, k: int) -> list[str]:
    """The ``|u|`` cyclic factors of length ``k <= |u|``, one per starting position."""
    s = str(u)
    ext = s + s[: k - 1] if k else s
    return [ext[i : i + k] for i in range(len(s))]


def is_debruijn(u: WordLike, k: int) -> bool:
    require_binary(u, "is_debruijn")
    require_nonempty(u, "is_debruijn")
    if len(u) != 2**k:
        return False
    return len(set(cyclic_factors(u, k))) == len(u)


def is_generalized_debruijn_primitive(u: WordLike, k: int) -> bool:
    """Every primitive binary word of length ``k`` is a cyclic factor exactly once,
    and no other word of length ``k`` is."""
    require_binary(u, "is_generalized_debruijn_primitive")
    require_nonempty(u, "is_generalized_debruijn_primitive")
    if not 1 <= k <= len(u):
        return False
    primitive = [x for x in _binary_words(k) if is_primitive(x)]
    return sorted(cyclic_factors(u, k)) == primitive


def _binary_words(k: int) -> Iterator[str]:
    for m in range(2**k):
        yield format(m, f"0{k}b") if k else ""


def is_generalized_debruijn_ghs(u: WordLike) -> bool:
    """For every ``0 <= i <= n = |u|`` there are ``min(2^i, n)`` distinct cyclic factors of length ``i``."""
    require_binary(u, "is_generalized_debruijn_ghs")
    require_nonempty(u, "is_generalized_debruijn_ghs")
    n = len(u)
    return all(len(set(cyclic_factors(u, i))) == min(2**i, n) for i in range(1, n + 1))
