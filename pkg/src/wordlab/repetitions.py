"""Repetitions in finite words: squares, power-freeness, runs, anti-squares,
the Restivo-Salemi decomposition of overlap-free words and avoidance of
patterns built from reversals and complements."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import kernels
from .errors import NotOverlapFree, UnknownPatternSymbol
from .words import WordLike, as_fraction, is_primitive, require_binary


@dataclass(frozen=True, order=True)
class Run:
    i: int
    j: int
    period: int

    @property
    def exponent(self) -> Fraction:
        return Fraction(self.j - self.i + 1, self.period)

    def to_json(self) -> dict:
        e = self.exponent
        return {"i": self.i, "j": self.j, "period": self.period, "exponent": f"{e.numerator}/{e.denominator}"}


class RSDecomposition(NamedTuple):
    x: str
    y: str
    z: str


def distinct_primitive_rooted_squares(u: WordLike) -> set[str]:
    s = str(u)
    n = len(s)
    found = set()
    for half in range(1, n // 2 + 1):
        for i in range(n - 2 * half + 1):
            root = s[i : i + half]
            if s[i + half : i + 2 * half] == root and is_primitive(root):
                found.add(root + root)
    return found


def contains_square(u: WordLike) -> bool:
    return not is_power_free(u, 2, strict=False)


def max_exponent(u: WordLike) -> Fraction:
    """Largest exponent of a nonempty factor (0 for the empty word)."""
    s = str(u)
    n = len(s)
    best = Fraction(1) if n else Fraction(0)
    for p in range(1, n):
        stretch = 0
        for i in range(n - p):
            stretch = stretch + 1 if s[i] == s[i + p] else 0
            if stretch and Fraction(stretch + p, p) > best:
                best = Fraction(stretch + p, p)
    return best


def is_power_free(u: WordLike, e, strict: bool = False) -> bool:
    """No factor has exponent ``> e`` (``strict``) or ``>= e`` (not strict).

    ``strict=True`` is the "e+-free" notion, e.g. overlap-free is 2+-free.
    """
    e = as_fraction(e)
    s = str(u)
    n = len(s)
    if (e <= 1 and not strict) or (e < 1 and strict):
        return n == 0
    for p in range(1, n):
        stretch = 0
        for i in range(n - p):
            if s[i] == s[i + p]:
                stretch += 1
                length = stretch + p
                if (length > e * p) if strict else (length >= e * p):
                    return False
            else:
                stretch = 0
    return True


def is_overlap_free(u: WordLike) -> bool:
    return is_power_free(u, 2, strict=True)


def is_cube_free(u: WordLike) -> bool:
    return is_power_free(u, 3, strict=False)


def suffix_is_free(u: WordLike, e, strict: bool) -> bool:
    """Whether no suffix of ``u`` violates ``is_power_free(., e, strict)``.

    If ``u[:-1]`` is already free, this decides whether ``u`` is.
    """
    e = as_fraction(e)
    return not kernels.suffix_exceeds(str(u), e.numerator, e.denominator, strict)


_RS_FORMS = ("", "0", "1", "00", "11")


def _tau_preimage(s: str) -> str | None:
    if len(s) % 2:
        return None
    out = []
    for k in range(0, len(s), 2):
        pair = s[k : k + 2]
        if pair == "01":
            out.append("0")
        elif pair == "10":
            out.append("1")
        else:
            return None
    return "".join(out)


def restivo_salemi_decompose(u: WordLike) -> list[RSDecomposition]:
    """Every ``(x, y, z)`` with ``u = x tau(y) z``, ``x, z`` in {ε, 0, 1, 00, 11}
    and ``y`` overlap-free, in a fixed order (x first, shorter and 0-forms first)."""
    require_binary(u, "restivo_salemi_decompose")
    s = str(u)
    if not is_overlap_free(s):
        raise NotOverlapFree(f"{s!r} contains an overlap")
    out = []
    for x in _RS_FORMS:
        if not s.startswith(x):
            continue
        for z in _RS_FORMS:
            if len(x) + len(z) > len(s) or not s.endswith(z):
                continue
            y = _tau_preimage(s[len(x) : len(s) - len(z)])
            if y is not None and is_overlap_free(y):
                out.append(RSDecomposition(x, y, z))
    return out


def runs(u: WordLike) -> list[Run]:
    """All runs, sorted by ``(i, j)``."""
    return sorted(Run(i, j, p) for i, j, p in kernels.runs(str(u)))


def sum_of_exponents(u: WordLike) -> Fraction:
    return sum((r.exponent for r in runs(u)), Fraction(0))


def runs_to_json(rs) -> str:
    return json.dumps([r.to_json() for r in rs])


_FLIP = str.maketrans("01", "10")


def is_antisquare(u: WordLike) -> bool:
    require_binary(u, "is_antisquare")
    n = len(u)
    if n == 0 or n % 2:
        return False
    return u[n // 2 :] == u[: n // 2].translate(_FLIP)


def is_minimal_antisquare(u: WordLike) -> bool:
    if not is_antisquare(u):
        return False
    return not has_antisquare_factor(u, proper=True)


def has_antisquare_factor(u: WordLike, proper: bool = False) -> bool:
    """Any anti-square factor other than 01 and 10 (proper factors only if asked)."""
    require_binary(u, "has_antisquare_factor")
    s = str(u)
    n = len(s)
    for length in range(4, n + 1, 2):
        if proper and length == n:
            break
        for i in range(n - length + 1):
            f = s[i : i + length]
            if f[length // 2 :] == f[: length // 2].translate(_FLIP):
                return True
    return False


# --- reversal / complement patterns ---------------------------------------------------

_TOKEN = re.compile(r"\s*([XYxy])([~^]*)")


def parse_pattern(pattern: str) -> list[tuple[str, bool, bool]]:
    """Parse e.g. ``"X Y X Y~ X"`` into ``(variable, reversed, complemented)`` tokens.

    ``~`` marks reversal and ``^`` complement; they can be combined.
    """
    tokens = []
    pos = 0
    text = pattern.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise UnknownPatternSymbol(f"unexpected {text[pos:].strip()[:1]!r} in pattern {pattern!r}")
        mods = m.group(2)
        tokens.append((m.group(1).upper(), mods.count("~") % 2 == 1, mods.count("^") % 2 == 1))
        pos = m.end()
    if not tokens:
        raise UnknownPatternSymbol("empty pattern")
    return tokens


def _undo(piece: str, rev: bool, comp: bool) -> str:
    if rev:
        piece = piece[::-1]
    if comp:
        piece = piece.translate(_FLIP)
    return piece


def find_pattern(u: WordLike, pattern: str):
    """First factor occurrence matching ``pattern`` as ``(start, {var: value})``, or None.

    Variables take nonempty values; ``start`` is 1-based.
    """
    tokens = parse_pattern(pattern)
    if any(comp for _, _, comp in tokens):
        require_binary(u, "complement pattern")
    s = str(u)
    n = len(s)
    variables = sorted({v for v, _, _ in tokens})
    mult = {v: sum(1 for t in tokens if t[0] == v) for v in variables}
    for start in range(n):
        room = n - start
        for lx in range(1, room + 1):
            used_x = mult.get(variables[0], 0) * lx
            if used_x > room:
                break
            second = variables[1:] or [None]
            max_ly = (room - used_x) // mult[second[0]] if second[0] else 1
            for ly in range(1, max_ly + 1):
                lens = {variables[0]: lx}
                if second[0]:
                    lens[second[0]] = ly
                pos = start
                vals: dict[str, str] = {}
                for var, rev, comp in tokens:
                    piece = s[pos : pos + lens[var]]
                    base = _undo(piece, rev, comp)
                    if vals.setdefault(var, base) != base:
                        break
                    pos += lens[var]
                else:
                    return start + 1, vals
    return None


def avoids_reversal_pattern(u: WordLike, pattern: str) -> bool:
    return find_pattern(u, pattern) is None
