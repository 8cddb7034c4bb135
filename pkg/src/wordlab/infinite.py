"""Infinite words given by a finite description, evaluated on prefixes.

Every result here is exact for the stated finite bound (a prefix length, a
factor-length cap) and says nothing beyond it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import CapTooSmall, LengthCapExceeded, ParseError
from .palindromes import is_palindromic_periodicity, palindrome_count
from .repetitions import is_cube_free, is_overlap_free, suffix_is_free
from .transforms import (
    FIBONACCI,
    MOL_RAMPERSAD_SHALLIT,
    TAU,
    Morphism,
    apply_morphism,
    fixed_point,
    pansiot,
)
from .words import Word, WordLike, is_dyck, require_nonempty, sigma_of

NAMED = ("fibonacci", "thue_morse", "period_doubling")
DYCK_CAP = 30


@dataclass(frozen=True)
class InfiniteWordSpec:
    kind: str  # "periodic", "morphic" or "named"
    word: str = ""
    morphism: Morphism | None = None
    seed: str = "0"

    @classmethod
    def parse(cls, text: str) -> "InfiniteWordSpec":
        """``periodic:001011``, ``morphic:0:0001011,1:001011@0`` or ``named:fibonacci``."""
        kind, _, rest = text.partition(":")
        if kind == "periodic" and rest.isdigit():
            return cls("periodic", word=rest)
        if kind == "named" and rest in NAMED:
            return cls("named", word=rest)
        if kind == "morphic":
            body, _, seed = rest.rpartition("@")
            spec = cls("morphic", morphism=Morphism.parse(body), seed=seed or "0")
            fixed_point(spec.morphism, spec.seed, 1)  # raises NotProlongable early
            return spec
        raise ParseError(f"cannot parse infinite word {text!r}")

    def __str__(self) -> str:
        if self.kind == "morphic":
            return f"morphic:{self.morphism}@{self.seed}"
        return f"{self.kind}:{self.word}"


def thue_morse(n: int) -> Word:
    return fixed_point(TAU, "0", n) if n else Word("")


def fibonacci(n: int) -> Word:
    return fixed_point(FIBONACCI, "0", n) if n else Word("")


def period_doubling(n: int) -> Word:
    return pansiot(thue_morse(n + 1))


@lru_cache(maxsize=64)
def _named_prefix(name: str, n: int) -> Word:
    return {"fibonacci": fibonacci, "thue_morse": thue_morse, "period_doubling": period_doubling}[name](n)


def prefix(spec: InfiniteWordSpec, n: int) -> Word:
    if spec.kind == "periodic":
        u = spec.word
        require_nonempty(u, "periodic word")
        return Word((u * (n // len(u) + 1))[:n], sigma_of(u))
    if spec.kind == "named":
        return _named_prefix(spec.word, n)
    if n == 0:
        return Word("")
    return fixed_point(spec.morphism, spec.seed, n)


def _periodic_extension(u: str, length: int) -> str:
    return u * (length // len(u) + 2)


def periodic_factor_set(u: WordLike, length: int) -> set[str]:
    """All factors of ``u^∞`` of the given length."""
    require_nonempty(u, "periodic_factor_set")
    s = str(u)
    ext = _periodic_extension(s, length)
    return {ext[i : i + length] for i in range(len(s))}


def periodic_palindrome_census(u: WordLike, cap: int) -> tuple[set[str], bool]:
    """Palindromic factors of ``u^∞`` of length ``<= cap`` and whether the census has
    saturated (no member with length in ``(cap - 2|u|, cap]``)."""
    require_nonempty(u, "periodic_palindrome_census")
    s = str(u)
    if cap < 2 * len(s):
        raise CapTooSmall(f"cap must be at least {2 * len(s)}")
    found = {""}
    for length in range(1, cap + 1):
        found |= {f for f in periodic_factor_set(s, length) if f == f[::-1]}
    saturated = all(len(f) <= cap - 2 * len(s) for f in found)
    return found, saturated


def periodic_is_rich(u: WordLike) -> bool:
    """``u^∞`` is rich iff ``uu`` is."""
    require_nonempty(u, "periodic_is_rich")
    s = str(u) * 2
    return palindrome_count(s) == len(s) + 1


def palindromic_periodicity_census(u: WordLike, cap: int) -> tuple[int, bool]:
    """Number of nonempty factors of ``u^∞`` of length ``<= cap`` that are palindromic
    periodicities, and whether no new one appeared with length in ``(cap - 2|u|, cap]``."""
    require_nonempty(u, "palindromic_periodicity_census")
    s = str(u)
    if cap < 4 * len(s):
        raise CapTooSmall(f"cap must be at least {4 * len(s)}")
    count = 0
    longest = 0
    for length in range(1, cap + 1):
        hits = sum(1 for f in periodic_factor_set(s, length) if is_palindromic_periodicity(f))
        if hits:
            count += hits
            longest = length
    return count, longest <= cap - 2 * len(s)


def contains_mirrored_factor(u: WordLike, k: int) -> bool:
    """Has ``u`` a length-``k`` factor whose reversal is also a factor?"""
    s = str(u)
    facts = {s[i : i + k] for i in range(len(s) - k + 1)}
    return any(f[::-1] in facts for f in facts)


def mirror_avoidance(u: WordLike, k: int) -> bool:
    """True iff no length-``k`` factor of ``u^∞`` has its reversal among those factors."""
    require_nonempty(u, "mirror_avoidance")
    facts = periodic_factor_set(u, k)
    return not any(f[::-1] in facts for f in facts)


def prefix_properties(u: WordLike) -> dict:
    s = str(u)
    return {
        "length": len(s),
        "cube_free": is_cube_free(s),
        "overlap_free": is_overlap_free(s),
        "palindromes": palindrome_count(s),
    }


def morphic_prefix_properties(m: Morphism, seed: str, n: int) -> dict:
    """Cube-freeness, overlap-freeness and palindrome count (ε included) of the
    length-``n`` prefix of the fixed point of ``m`` starting with ``seed``."""
    return prefix_properties(fixed_point(m, seed, n))


# --- overlap-free Dyck words -----------------------------------------------------------


def _ternary_ok(x: str) -> bool:
    return "212" not in x and "20102" not in x


def _square_free_ternary(max_len: int) -> list[str]:
    out = [""]
    frontier = [""]
    for _ in range(max_len):
        frontier = [x + a for x in frontier for a in "012" if suffix_is_free(x + a, 2, strict=False)]
        out.extend(frontier)
    return out


def overlap_free_dyck_generate(maxlen: int) -> set[str]:
    """Overlap-free Dyck words of length ``<= maxlen``, built as ``mu(x)`` or ``0 mu(x) 1``
    from square-free ternary ``x`` avoiding 212 and 20102 (the second form also
    needs ``x`` to begin with 01 and end with 10)."""
    if maxlen > DYCK_CAP:
        raise LengthCapExceeded(f"overlap-free Dyck generation capped at length {DYCK_CAP}")
    out = set()
    # every letter of x contributes at least 2 letters
    for x in _square_free_ternary(maxlen // 2):
        if not _ternary_ok(x):
            continue
        image = str(apply_morphism(MOL_RAMPERSAD_SHALLIT, x))
        if len(image) <= maxlen:
            out.add(image)
        if x.startswith("01") and x.endswith("10") and len(image) + 2 <= maxlen:
            out.add("0" + image + "1")
    return out


def overlap_free_dyck_brute(maxlen: int) -> set[str]:
    """Same set by filtering all overlap-free binary words."""
    out = set()
    frontier = [""]
    for _ in range(maxlen + 1):
        out.update(s for s in frontier if is_dyck(s))
        frontier = [s + a for s in frontier for a in "01" if suffix_is_free(s + a, 2, strict=True)]
    return out
