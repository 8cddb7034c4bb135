"""Finite words over small digit alphabets and the alphabet-generic operations on them.

A word is a string of ASCII digits.  :class:`Word` is a ``str`` subclass that
additionally carries the alphabet size ``sigma``; every public function in the
package accepts either a plain ``str`` or a :class:`Word`.  When no alphabet size
is given it is inferred as ``max(2, largest digit + 1)``.

Positions in everything user-facing are 1-based.
"""

from __future__ import annotations

import itertools
import re
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

from .errors import (
    EmptyWordUndefined,
    InvalidExponent,
    LengthCapExceeded,
    LengthMismatch,
    NonBinaryAlphabet,
    ParseError,
)

SHUFFLE_CAP = 24

_DIGITS = re.compile(r"[0-9]*")
_ANNOTATED = re.compile(r"^\s*([0-9]*)\s*(?:[;,@ ]\s*sigma\s*=\s*([0-9]+))?\s*$")


class Word(str):
    """A finite word together with the size of its alphabet."""

    def __new__(cls, symbols: str = "", sigma: int | None = None):
        if not _DIGITS.fullmatch(symbols):
            raise ParseError(f"not a digit word: {symbols!r}")
        inferred = infer_sigma(symbols)
        if sigma is None:
            sigma = inferred
        elif sigma < 1 or (symbols and int(max(symbols)) >= sigma):
            raise ParseError(f"word {symbols!r} does not fit alphabet size {sigma}")
        self = super().__new__(cls, symbols)
        self.sigma = sigma
        return self

    def __repr__(self) -> str:
        return f"Word({str.__repr__(self)}, sigma={self.sigma})"

    def __reduce__(self):
        return (Word, (str(self), self.sigma))


WordLike = Union[str, Word]


def infer_sigma(s: str) -> int:
    return max(2, int(max(s)) + 1) if s else 2


def sigma_of(u: WordLike) -> int:
    return u.sigma if isinstance(u, Word) else infer_sigma(u)


def parse_word(text: str) -> Word:
    """Parse ``"0120"`` or ``"0120;sigma=3"`` (also ``,``, ``@`` or a space as separator).

    ``""`` and ``"ε"`` both denote the empty word.
    """
    if text.strip() in ("ε", "eps", "epsilon"):
        return Word("")
    m = _ANNOTATED.match(text)
    if not m:
        raise ParseError(f"cannot parse word {text!r}")
    sigma = int(m.group(2)) if m.group(2) else None
    return Word(m.group(1), sigma)


def as_word(u: WordLike, sigma: int | None = None) -> Word:
    if isinstance(u, Word) and (sigma is None or sigma == u.sigma):
        return u
    if isinstance(u, Word):
        return Word(str(u), sigma)
    return Word(u, sigma)


def require_binary(u: WordLike, op: str = "") -> None:
    if sigma_of(u) != 2:
        raise NonBinaryAlphabet(f"{op or 'operation'} needs a binary word, got {u!r}")


def require_nonempty(u: WordLike, op: str = "") -> None:
    if not u:
        raise EmptyWordUndefined(f"{op or 'operation'} is undefined on the empty word")


def all_words(n: int, sigma: int = 2) -> Iterator[str]:
    """All words of length ``n`` over ``0..sigma-1`` in lexicographic order."""
    letters = "0123456789"[:sigma]
    for t in itertools.product(letters, repeat=n):
        yield "".join(t)


def words_upto(n: int, sigma: int = 2) -> Iterator[str]:
    for k in range(n + 1):
        yield from all_words(k, sigma)


# --- symmetry -----------------------------------------------------------------


def mirror(u: WordLike) -> Word:
    return Word(u[::-1], sigma_of(u))


_FLIP = str.maketrans("01", "10")


def complement(u: WordLike) -> Word:
    require_binary(u, "complement")
    return Word(u.translate(_FLIP), 2)


def rotations(u: WordLike) -> list[Word]:
    sigma = sigma_of(u)
    return [Word(u[i:] + u[:i], sigma) for i in range(len(u))]


def is_primitive(u: WordLike) -> bool:
    require_nonempty(u, "is_primitive")
    # u is primitive iff it occurs in uu only at positions 0 and |u|
    return (u + u).find(u, 1) == len(u)


def is_asymmetric(u: WordLike) -> bool:
    require_nonempty(u, "is_asymmetric")
    orbit = {u[i:] + u[:i] for i in range(len(u))}
    r = u[::-1]
    orbit.update(r[i:] + r[:i] for i in range(len(r)))
    return len(orbit) == 2 * len(u)


def is_dyck(u: WordLike) -> bool:
    require_binary(u, "is_dyck")
    height = 0
    for c in u:
        height += 1 if c == "0" else -1
        if height < 0:
            return False
    return height == 0


# --- shuffles -----------------------------------------------------------------


def perfect_shuffle(x: WordLike, y: WordLike) -> Word:
    if len(x) != len(y):
        raise LengthMismatch(f"perfect shuffle needs equal lengths, got {len(x)} and {len(y)}")
    return Word("".join(a + b for a, b in zip(x, y)), max(sigma_of(x), sigma_of(y)))


def is_shuffle_square(z: WordLike, cap: int = SHUFFLE_CAP) -> bool:
    """Decide whether ``z`` lies in the ordinary shuffle of some ``x`` with itself.

    Exact search.  Since both copies are the same word, one can always take the
    first copy to be ahead of the second; the state is then the position in
    ``z`` plus the part of the first copy not yet matched by the second.
    """
    if len(z) > cap:
        raise LengthCapExceeded(f"shuffle-square decision capped at length {cap}")
    s = str(z)
    n = len(s)
    if n % 2 or any(c % 2 for c in Counter(s).values()):
        return False
    half = n // 2

    @lru_cache(maxsize=None)
    def search(i: int, pending: str, used: int) -> bool:
        if i == n:
            return not pending
        c = s[i]
        if pending and pending[0] == c and search(i + 1, pending[1:], used):
            return True
        return used < half and search(i + 1, pending + c, used + 1)

    return search(0, "", 0)


def is_reverse_shuffle_square(z: WordLike, cap: int = SHUFFLE_CAP) -> bool:
    """Decide whether ``z`` is a shuffle of some ``x`` with its reversal (exhaustive)."""
    if len(z) > cap:
        raise LengthCapExceeded(f"reverse-shuffle-square decision capped at length {cap}")
    s = str(z)
    n = len(s)
    if n % 2 or not is_tangram(s):
        return False
    half = n // 2
    # Letters sent to x fill x from the left; letters sent to mirror(x) fill x
    # from the right.  Where the two fronts cross they must agree.
    x: list[str | None] = [None] * half

    def search(pos: int, left: int, right: int) -> bool:
        if pos == n:
            return True
        c = s[pos]
        if left < half:
            prev = x[left]
            if prev is None or prev == c:
                x[left] = c
                if search(pos + 1, left + 1, right):
                    return True
                x[left] = prev
        if right < half:
            slot = half - 1 - right
            prev = x[slot]
            if prev is None or prev == c:
                x[slot] = c
                if search(pos + 1, left, right + 1):
                    return True
                x[slot] = prev
        return False

    return search(0, 0, 0)


def is_abelian_square(z: WordLike) -> bool:
    n = len(z)
    if n % 2:
        return False
    return Counter(z[: n // 2]) == Counter(z[n // 2 :])


def is_tangram(z: WordLike) -> bool:
    return all(c % 2 == 0 for c in Counter(z).values())


# --- factors, periods, subwords -------------------------------------------------


def factor_set(u: WordLike) -> set[str]:
    s = str(u)
    n = len(s)
    return {s[i:j] for i in range(n + 1) for j in range(i, n + 1)}


def factors_of_length(u: WordLike, k: int) -> set[str]:
    s = str(u)
    return {s[i : i + k] for i in range(len(s) - k + 1)}


def has_period(u: WordLike, p: int) -> bool:
    return all(u[i] == u[i + p] for i in range(len(u) - p))


def min_period(u: WordLike) -> int:
    require_nonempty(u, "min_period")
    # KMP failure function: period = n - longest proper border
    s = str(u)
    fail = [0] * len(s)
    k = 0
    for i in range(1, len(s)):
        while k and s[i] != s[k]:
            k = fail[k - 1]
        if s[i] == s[k]:
            k += 1
        fail[i] = k
    return len(s) - fail[-1]


def exponent(u: WordLike) -> Fraction:
    return Fraction(len(u), min_period(u))


def as_fraction(e: Fraction | int | str) -> Fraction:
    try:
        return Fraction(e)
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidExponent(f"bad exponent {e!r}") from exc


def fractional_power(u: WordLike, e: Fraction | int | str) -> Word:
    """The prefix of ``u`` repeated forever whose length is ``e * |u|``.

    >>> fractional_power("001011", "8/6")
    Word('00101100', sigma=2)
    """
    e = as_fraction(e)
    if e < 0:
        raise InvalidExponent(f"negative exponent {e}")
    length = e * len(u)
    if length.denominator != 1:
        raise InvalidExponent(f"{e} * {len(u)} is not an integer")
    length = int(length)
    if length and not u:
        raise InvalidExponent("positive power of the empty word")
    reps = -(-length // len(u)) if u else 0
    return Word((str(u) * reps)[:length], sigma_of(u))


def scattered_subwords(u: WordLike, length: int) -> set[str]:
    s = str(u)
    return {"".join(t) for t in itertools.combinations(s, length)}


def embedding_count(u: WordLike, x: WordLike) -> int:
    """Number of position sets at which ``x`` occurs as a subsequence of ``u``."""
    # ways[k] = embeddings of x[:k] in the prefix of u read so far
    ways = [1] + [0] * len(x)
    for c in u:
        for k in range(len(x), 0, -1):
            if x[k - 1] == c:
                ways[k] += ways[k - 1]
    return ways[-1]


def letter_count(u: WordLike, letter: str = "0") -> int:
    return u.count(letter)


def power_free_word_list(max_len: int, ok, sigma: int = 2) -> list[str]:
    """Words of length ``<= max_len`` grown letter by letter, keeping those for which
    ``ok(word)`` holds.  ``ok`` only has to look at suffixes when the property is
    factorial, which is what callers rely on."""
    letters = "0123456789"[:sigma]
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [s + a for s in frontier for a in letters if ok(s + a)]
        out.extend(frontier)
    return out
