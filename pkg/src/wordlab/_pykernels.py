"""Pure-Python versions of the hot kernels.

Same signatures and results as the compiled ``_ckernels`` module; used when the
extension is not built or when ``WORDLAB_PURE`` is set.
"""


def palindromic_length(s):
    n = len(s)
    # pal_end[j] = starts i such that s[i:j] is a palindrome
    pal_end = [[] for _ in range(n + 1)]
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and s[lo] == s[hi]:
            pal_end[hi + 1].append(lo)
            lo -= 1
            hi += 1
    best = [0] + [n] * n
    for j in range(1, n + 1):
        best[j] = min(best[i] for i in pal_end[j]) + 1
    return best[n]


def palindrome_count(s):
    """Distinct palindromic factors of ``s``, the empty word included."""
    n = len(s)
    seen = set()
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and s[lo] == s[hi]:
            seen.add(s[lo : hi + 1])
            lo -= 1
            hi += 1
    return len(seen) + 1


def distinct_factor_count(s):
    """Distinct factors of ``s``, the empty word included."""
    n = len(s)
    return len({s[i:j] for i in range(n) for j in range(i + 1, n + 1)}) + 1


def period_table(s):
    """``table[i][j - i - 1]`` is the least period of ``s[i:j]`` (0-based, j > i)."""
    n = len(s)
    table = []
    for i in range(n):
        t = s[i:]
        fail = [0] * len(t)
        k = 0
        row = [1]
        for q in range(1, len(t)):
            while k and t[q] != t[k]:
                k = fail[k - 1]
            if t[q] == t[k]:
                k += 1
            fail[q] = k
            row.append(q + 1 - k)
        table.append(row)
    return table


def runs(s):
    """Maximal repetitions of ``s`` as ``(i, j, period)`` triples, 1-based, sorted.

    A range is a run when its exponent is at least 2 and extending it by one
    letter on either side (where possible) gives a strictly smaller exponent.
    """
    n = len(s)
    per = period_table(s)
    out = []
    for i in range(n):
        row = per[i]
        for j in range(i + 2, n + 1):
            p = row[j - i - 1]
            length = j - i
            if length < 2 * p:
                continue
            # exponent comparison e' < e  <=>  len' * p < len * p'
            if i > 0:
                q = per[i - 1][j - i]
                if (length + 1) * p >= length * q:
                    continue
            if j < n:
                q = row[j - i]
                if (length + 1) * p >= length * q:
                    continue
            out.append((i + 1, j, p))
    return out


def suffix_exceeds(s, num, den, strict):
    """True when some suffix of ``s`` has exponent ``> num/den`` (``>=`` if not strict)."""
    n = len(s)
    for p in range(1, n + 1):
        if (n * den <= num * p) if strict else (n * den < num * p):
            break
        k = 0
        while k < n - p and s[n - 1 - k] == s[n - 1 - k - p]:
            k += 1
        length = k + p
        if (length * den > num * p) if strict else (length * den >= num * p):
            return True
    return False
