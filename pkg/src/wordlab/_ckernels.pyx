# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot kernels (see ``_pykernels`` for the reference)."""

from libc.stdlib cimport malloc, calloc, free


cdef inline bytes _ascii(s):
    return s.encode("ascii") if isinstance(s, str) else bytes(s)


def palindromic_length(s):
    cdef bytes b = _ascii(s)
    cdef const unsigned char* t = b
    cdef Py_ssize_t n = len(b), center, lo, hi, j
    if n == 0:
        return 0
    cdef int* best = <int*> malloc((n + 1) * sizeof(int))
    if best == NULL:
        raise MemoryError()
    best[0] = 0
    for j in range(1, n + 1):
        best[j] = <int> n + 1
    # pal[lo * n + hi]: t[lo..hi] is a palindrome
    cdef unsigned char* pal = <unsigned char*> calloc(n * n, 1)
    if pal == NULL:
        free(best)
        raise MemoryError()
    for center in range(2 * n - 1):
        lo = center // 2
        hi = lo + center % 2
        while lo >= 0 and hi < n and t[lo] == t[hi]:
            pal[lo * n + hi] = 1
            lo -= 1
            hi += 1
    for j in range(1, n + 1):
        for lo in range(j):
            if pal[lo * n + j - 1] and best[lo] + 1 < best[j]:
                best[j] = best[lo] + 1
    cdef int result = best[n]
    free(pal)
    free(best)
    return result


def palindrome_count(s):
    """Distinct palindromic factors, empty word included (palindromic tree)."""
    cdef bytes b = _ascii(s)
    cdef const unsigned char* t = b
    cdef Py_ssize_t n = len(b), i
    cdef int cap = <int> n + 2
    cdef int* length = <int*> malloc(cap * sizeof(int))
    cdef int* link = <int*> malloc(cap * sizeof(int))
    cdef int* nxt = <int*> malloc(cap * 10 * sizeof(int))
    if length == NULL or link == NULL or nxt == NULL:
        free(length); free(link); free(nxt)
        raise MemoryError()
    for i in range(cap * 10):
        nxt[i] = 0
    # node 0: imaginary root (length -1), node 1: empty palindrome
    length[0] = -1
    link[0] = 0
    length[1] = 0
    link[1] = 0
    cdef int size = 2, last = 1, cur, c, node, sl
    for i in range(n):
        c = t[i] - 48
        cur = last
        while True:
            if i - 1 - length[cur] >= 0 and t[i - 1 - length[cur]] == t[i]:
                break
            cur = link[cur]
        if nxt[cur * 10 + c]:
            last = nxt[cur * 10 + c]
            continue
        node = size
        size += 1
        length[node] = length[cur] + 2
        if length[node] == 1:
            link[node] = 1
        else:
            sl = link[cur]
            while True:
                if i - 1 - length[sl] >= 0 and t[i - 1 - length[sl]] == t[i]:
                    break
                sl = link[sl]
            link[node] = nxt[sl * 10 + c]
        nxt[cur * 10 + c] = node
        last = node
    free(length); free(link); free(nxt)
    # node 0 is not a word; node 1 is the empty word
    return size - 1


def distinct_factor_count(s):
    """Distinct factors, empty word included: sum over suffixes of new prefixes."""
    cdef bytes b = _ascii(s)
    cdef const unsigned char* t = b
    cdef Py_ssize_t n = len(b), i, j
    if n == 0:
        return 1
    # lcp[i][j] for i > j, computed from the back; keep two rows
    cdef int* prev = <int*> calloc(n + 1, sizeof(int))
    cdef int* row = <int*> calloc(n + 1, sizeof(int))
    cdef int* longest = <int*> calloc(n, sizeof(int))
    cdef int* swap
    if prev == NULL or row == NULL or longest == NULL:
        free(prev); free(row); free(longest)
        raise MemoryError()
    for i in range(n - 1, -1, -1):
        for j in range(n - 1, i, -1):
            row[j] = prev[j + 1] + 1 if t[i] == t[j] else 0
            # suffix j repeats a prefix of suffix i; credit the later start
            if row[j] > longest[j]:
                longest[j] = row[j]
        row[n] = 0
        swap = prev
        prev = row
        row = swap
        for j in range(n + 1):
            row[j] = 0
    cdef long long total = 1
    for j in range(n):
        total += (n - j) - longest[j]
    free(prev); free(row); free(longest)
    return total


cdef int* _period_table(const unsigned char* t, Py_ssize_t n) except NULL:
    cdef int* per = <int*> malloc((n * n + 1) * sizeof(int))
    cdef int* fail = <int*> malloc((n + 1) * sizeof(int))
    if per == NULL or fail == NULL:
        free(per); free(fail)
        raise MemoryError()
    cdef Py_ssize_t i, q, m
    cdef int k
    for i in range(n):
        m = n - i
        fail[0] = 0
        per[i * n] = 1
        k = 0
        for q in range(1, m):
            while k and t[i + q] != t[i + k]:
                k = fail[k - 1]
            if t[i + q] == t[i + k]:
                k += 1
            fail[q] = k
            per[i * n + q] = <int> (q + 1 - k)
    free(fail)
    return per


def runs(s):
    cdef bytes b = _ascii(s)
    cdef const unsigned char* t = b
    cdef Py_ssize_t n = len(b), i, j
    cdef long long p, q, length
    out = []
    if n < 2:
        return out
    cdef int* per = _period_table(t, n)
    for i in range(n):
        for j in range(i + 2, n + 1):
            p = per[i * n + j - i - 1]
            length = j - i
            if length < 2 * p:
                continue
            if i > 0:
                q = per[(i - 1) * n + j - i]
                if (length + 1) * p >= length * q:
                    continue
            if j < n:
                q = per[i * n + j - i]
                if (length + 1) * p >= length * q:
                    continue
            out.append((i + 1, j, p))
    free(per)
    return out


def suffix_exceeds(s, long long num, long long den, bint strict):
    cdef bytes b = _ascii(s)
    cdef const unsigned char* t = b
    cdef long long n = len(b), p, k, length
    for p in range(1, n + 1):
        if strict:
            if n * den <= num * p:
                break
        elif n * den < num * p:
            break
        k = 0
        while k < n - p and t[n - 1 - k] == t[n - 1 - k - p]:
            k += 1
        length = k + p
        if strict:
            if length * den > num * p:
                return True
        elif length * den >= num * p:
            return True
    return False
