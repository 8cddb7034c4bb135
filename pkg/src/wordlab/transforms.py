"""Word transforms: derivative, Pansiot coding, morphisms, the Burrows-Wheeler
transform and the standard permutation."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InvalidLength,
    NonBinaryAlphabet,
    NotLyndon,
    NotProlongable,
    OrderOutOfRange,
    ParseError,
)
from .lyndon import is_debruijn, is_lyndon
from .palindromes import is_antipalindrome
from .repetitions import is_overlap_free
from .words import (
    Word,
    WordLike,
    infer_sigma,
    require_binary,
    require_nonempty,
    sigma_of,
)


def derivative(u: WordLike) -> Word:
    """Ternary word whose i-th letter is ``1 + u_i - u_(i+1)``."""
    require_binary(u, "derivative")
    require_nonempty(u, "derivative")
    return Word("".join(str(1 + int(a) - int(b)) for a, b in zip(u, u[1:])), 3)


def pansiot(u: WordLike) -> Word:
    """Binary word of consecutive sums mod 2."""
    require_binary(u, "pansiot")
    require_nonempty(u, "pansiot")
    return Word("".join("0" if a == b else "1" for a, b in zip(u, u[1:])), 2)


@lru_cache(maxsize=None)
def _pre_antipalindromes(n: int) -> frozenset:
    if n == 3:
        return frozenset({"001", "011", "100", "110"})
    inner = _pre_antipalindromes(n - 2)
    if n % 4 == 1:
        return frozenset(a + u + a for u in inner for a in "01")
    return frozenset(a + u + b for u in inner for a, b in ("01", "10"))


def generate_pre_antipalindromes(n: int) -> set[str]:
    """Binary words of odd length ``n >= 3`` whose Pansiot coding is an anti-palindrome,
    built by wrapping shorter ones (same letter at both ends for lengths 1 mod 4,
    different letters for lengths 3 mod 4)."""
    if n < 3 or n % 2 == 0:
        raise InvalidLength(f"pre-antipalindromes have odd length >= 3, got {n}")
    return set(_pre_antipalindromes(n))


def brute_force_pre_antipalindromes(n: int) -> set[str]:
    out = set()
    for m in range(2**n):
        u = format(m, f"0{n}b")
        if n and is_antipalindrome(pansiot(u)):
            out.add(u)
    return out


# --- morphisms --------------------------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    """Letter-to-word substitution; ``images[a]`` is the image of letter ``a``."""

    images: tuple

    @classmethod
    def parse(cls, text: str) -> "Morphism":
        """Parse ``"0:01,1:10"``."""
        table = {}
        for part in text.split(","):
            try:
                key, value = part.split(":")
            except ValueError:
                raise ParseError(f"bad morphism entry {part!r} in {text!r}") from None
            key, value = key.strip(), value.strip()
            if not (key.isdigit() and len(key) == 1 and (value == "" or value.isdigit())):
                raise ParseError(f"bad morphism entry {part!r}")
            table[int(key)] = value
        if sorted(table) != list(range(len(table))):
            raise ParseError(f"morphism must map letters 0..k-1, got {sorted(table)}")
        return cls(tuple(table[a] for a in range(len(table))))

    def __str__(self) -> str:
        return ",".join(f"{a}:{img}" for a, img in enumerate(self.images))

    @property
    def source_sigma(self) -> int:
        return len(self.images)

    @property
    def target_sigma(self) -> int:
        return infer_sigma("".join(self.images))

    def __call__(self, u: WordLike) -> Word:
        return apply_morphism(self, u)


def apply_morphism(m: Morphism, u: WordLike) -> Word:
    try:
        return Word("".join(m.images[int(c)] for c in u), m.target_sigma)
    except IndexError:
        raise ParseError(f"{u!r} uses a letter outside the morphism's domain") from None


def fixed_point(m: Morphism, seed: str, n: int) -> Word:
    """First ``n`` letters of the fixed point of ``m`` starting with ``seed``."""
    image = m.images[int(seed)]
    if len(image) < 2 or image[0] != seed:
        raise NotProlongable(f"{m} is not prolongable on {seed}")
    s = seed
    while len(s) < n:
        s = "".join(m.images[int(c)] for c in s)
    return Word(s[:n], m.target_sigma)


TAU = Morphism(("01", "10"))
FIBONACCI = Morphism(("01", "0"))
CURRIE_RAMPERSAD = Morphism(("001011", "001101", "011001"))
DVORAKOVA = Morphism(("0001011", "1001011"))
MOL_RAMPERSAD_SHALLIT = Morphism(("01", "0011", "001011"))
ZERO_W_MORPHISM = Morphism(("0001011", "001011"))
IDENTITY = Morphism(("0", "1"))

NAMED_MORPHISMS = {
    "tau": TAU,
    "fibonacci": FIBONACCI,
    "currie-rampersad": CURRIE_RAMPERSAD,
    "dvorakova": DVORAKOVA,
    "mrs-mu": MOL_RAMPERSAD_SHALLIT,
    "0w": ZERO_W_MORPHISM,
    "identity": IDENTITY,
}

TEST_WORD = "001011"


def morphism_is_overlap_free(m: Morphism) -> bool:
    """A binary morphism preserves overlap-freeness iff the image of 001011 is overlap-free."""
    if m.source_sigma != 2 or m.target_sigma != 2:
        raise NonBinaryAlphabet(f"{m} is not a binary morphism")
    return is_overlap_free(apply_morphism(m, TEST_WORD))


# --- Burrows-Wheeler ---------------------------------------------------------------------


def bwt(u: WordLike) -> Word:
    """Last letters of the sorted rotations (equal rotations kept, in index order)."""
    require_nonempty(u, "bwt")
    s = str(u)
    n = len(s)
    order = sorted(range(n), key=lambda i: s[i:] + s[:i])
    return Word("".join(s[i - 1] for i in order), sigma_of(u))


def standard_permutation(u: WordLike) -> tuple[int, ...]:
    """1-based images: ``pi[i-1]`` is the rank of letter ``i`` under a stable sort."""
    require_nonempty(u, "standard_permutation")
    order = sorted(range(len(u)), key=lambda i: (u[i], i))
    pi = [0] * len(u)
    for rank, i in enumerate(order, 1):
        pi[i] = rank
    return tuple(pi)


def permutation_to_json(pi) -> str:
    return json.dumps(list(pi))


def is_cyclic(pi) -> bool:
    """Is the permutation (1-based image tuple) a single cycle?"""
    n = len(pi)
    if n == 0:
        return False
    k, steps = 1, 0
    while True:
        k = pi[k - 1]
        steps += 1
        if k == 1:
            return steps == n


def is_bwt_image(u: WordLike) -> bool:
    return is_cyclic(standard_permutation(u))


def inverse_bwt(u: WordLike) -> Word:
    """The least rotation ``r`` with ``bwt(r) == u``; ``u`` must be a BWT image."""
    pi = standard_permutation(u)
    if not is_cyclic(pi):
        raise ValueError(f"{u!r} is not the BWT of any word")
    n = len(u)
    # row r's rotation is preceded (cyclically) by u[r]; pi maps it to that rotation's row
    out = []
    r = 0
    for _ in range(n):
        out.append(u[r])
        r = pi[r] - 1
    return Word("".join(reversed(out)), sigma_of(u))


def is_rotation_of_own_bwt(u: WordLike) -> bool:
    if not is_lyndon(u):
        raise NotLyndon(f"{u!r} is not a Lyndon word")
    b = str(bwt(u))
    return len(b) == len(u) and b in str(u) + str(u)


def higgins_debruijn_bwt_candidates(k: int) -> set[str]:
    """Binary words of length 2^k that are tau-images with a cyclic standard permutation."""
    if not 2 <= k <= 5:
        raise OrderOutOfRange(f"order must be in 2..5, got {k}")
    half = 2 ** (k - 1)
    out = set()
    for m in range(2**half):
        u = "".join("01" if c == "0" else "10" for c in format(m, f"0{half}b"))
        if is_bwt_image(u):
            out.add(u)
    return out


def bwt_of_debruijn(u: WordLike, k: int) -> bool:
    """Is ``u`` the BWT of some binary de Bruijn word of order ``k``?"""
    return is_bwt_image(u) and is_debruijn(inverse_bwt(u), k)
