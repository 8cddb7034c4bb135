"""Slow, definition-direct reference implementations.

Nothing here imports wordlab: every function is written straight from the
definition so the library can be checked against something independent.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache


def words(n, alphabet="01"):
    return ["".join(t) for t in itertools.product(alphabet, repeat=n)]


def words_upto(n, alphabet="01"):
    return [u for k in range(n + 1) for u in words(k, alphabet)]


def factors(u):
    return {u[i:j] for i in range(len(u) + 1) for j in range(i, len(u) + 1)}


def is_pal(u):
    return u == u[::-1]


def pal_factors(u):
    return {x for x in factors(u) if is_pal(x)}


def rich(u):
    return len(pal_factors(u)) == len(u) + 1


def pal_length(u):
    @lru_cache(maxsize=None)
    def best(i):
        if i == len(u):
            return 0
        return min(1 + best(j) for j in range(i + 1, len(u) + 1) if is_pal(u[i:j]))

    return best(0)


def period(u):
    return next(p for p in range(1, len(u) + 1) if all(u[i] == u[i + p] for i in range(len(u) - p)))


def runs(u):
    """(i, j, p), 1-based: maximal factors of exponent >= 2 with smallest period p."""
    out = set()
    n = len(u)
    for i in range(n):
        for j in range(i + 2, n + 1):
            x = u[i:j]
            p = period(x)
            if len(x) < 2 * p:
                continue
            left = i > 0 and u[i - 1] == u[i - 1 + p]
            right = j < n and u[j] == u[j - p]
            if not left and not right:
                out.add((i + 1, j, p))
    return out


def sigma_runs(u):
    return sum((Fraction(j - i + 1, p) for i, j, p in runs(u)), Fraction(0))


def has_power(u, num, den):
    """Some factor has exponent >= num/den."""
    for i in range(len(u)):
        for j in range(i + 1, len(u) + 1):
            x = u[i:j]
            if Fraction(len(x), period(x)) >= Fraction(num, den):
                return True
    return False


def overlap_free(u):
    # an overlap a x a x a is a factor of length 2p + 1 with period p
    return not any(
        all(u[k] == u[k + p] for k in range(i, i + p + 1))
        for p in range(1, len(u))
        for i in range(len(u) - 2 * p)
    )


def lyndon(u):
    return bool(u) and all(u < u[i:] + u[:i] for i in range(1, len(u)))


def bwt(u):
    rots = sorted(u[i:] + u[:i] for i in range(len(u)))
    return "".join(r[-1] for r in rots)


def balanced(u):
    for k in range(1, len(u) + 1):
        counts = {u[i : i + k].count("1") for i in range(len(u) - k + 1)}
        if max(counts) - min(counts) > 1:
            return False
    return True


def maws(u, alphabet="01"):
    f = factors(u)
    out = set()
    for k in range(1, len(u) + 3):
        for x in words(k, alphabet):
            if x not in f and x[1:] in f and x[:-1] in f:
                out.add(x)
    return out


def bispecial(u):
    f = factors(u)
    return {x for x in f if all(a + x in f and x + b in f for a in "01" for b in "01")}


def attractor_ok(u, positions):
    # positions 1-based; every factor needs an occurrence covering one of them
    for x in factors(u) - {""}:
        if not any(
            u[i : i + len(x)] == x and any(i < p <= i + len(x) for p in positions)
            for i in range(len(u) - len(x) + 1)
        ):
            return False
    return True


def min_attractor_size(u):
    for k in range(len(u) + 1):
        if any(attractor_ok(u, c) for c in itertools.combinations(range(1, len(u) + 1), k)):
            return k


def shuffle_square(z):
    n = len(z)
    if n % 2:
        return False
    for pick in itertools.combinations(range(n), n // 2):
        chosen = set(pick)
        a = "".join(z[i] for i in pick)
        b = "".join(z[i] for i in range(n) if i not in chosen)
        if a == b:
            return True
    return False


def reverse_shuffle_square(z):
    n = len(z)
    if n % 2:
        return False
    for pick in itertools.combinations(range(n), n // 2):
        chosen = set(pick)
        a = "".join(z[i] for i in pick)
        b = "".join(z[i] for i in range(n) if i not in chosen)
        if a == b[::-1]:
            return True
    return False


def derivative(u):
    return "".join(str(1 + int(a) - int(b)) for a, b in zip(u, u[1:]))


def pansiot(u):
    return "".join(str(int(a) ^ int(b)) for a, b in zip(u, u[1:]))


def tau(u):
    return "".join("01" if c == "0" else "10" for c in u)


def complement(u):
    return u.translate(str.maketrans("01", "10"))


def antipal(u):
    return all(a != b for a, b in zip(u, reversed(u)))


def cyclic_factor_counts_ok(u):
    n = len(u)
    doubled = u + u
    for i in range(n + 1):
        found = {doubled[k : k + i] for k in range(n)} if i else {""}
        if len(found) != min(2**i, n):
            return False
    return True
