# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled scan kernels over the symmetric group.

Twin of permutomino._kernels_py with the same call surface and return shapes;
the permutation stream, the envelope test and the forbidden-pattern test all
run on C arrays.  Bounded at n = 12, far beyond the desk scale the library
targets.
"""

BACKEND = "c"

cdef enum:
    MAXN = 12

cdef bint FORBIDDEN_TABLE[120]

_PATTERNS = (
    (5, 2, 3, 4, 1), (5, 2, 3, 1, 4), (5, 1, 3, 4, 2), (5, 1, 3, 2, 4),
    (4, 2, 3, 5, 1), (4, 2, 3, 1, 5), (4, 1, 3, 5, 2), (4, 1, 3, 2, 5),
    (2, 5, 3, 4, 1), (2, 5, 3, 1, 4), (1, 5, 3, 4, 2), (1, 5, 3, 2, 4),
    (2, 4, 3, 5, 1), (2, 4, 3, 1, 5), (1, 4, 3, 5, 2), (1, 4, 3, 2, 5),
)


cdef int _lehmer5(int v0, int v1, int v2, int v3, int v4) noexcept nogil:
    """Index in 0..119 of the order pattern of five distinct ints."""
    cdef int c0 = 0, c1 = 0, c2 = 0, c3 = 0
    if v1 < v0: c0 += 1
    if v2 < v0: c0 += 1
    if v3 < v0: c0 += 1
    if v4 < v0: c0 += 1
    if v2 < v1: c1 += 1
    if v3 < v1: c1 += 1
    if v4 < v1: c1 += 1
    if v3 < v2: c2 += 1
    if v4 < v2: c2 += 1
    if v4 < v3: c3 += 1
    return c0 * 24 + c1 * 6 + c2 * 2 + c3


def _init_table():
    cdef int i
    for i in range(120):
        FORBIDDEN_TABLE[i] = 0
    for pat in _PATTERNS:
        FORBIDDEN_TABLE[_lehmer5(pat[0], pat[1], pat[2], pat[3], pat[4])] = 1


_init_table()


cdef bint _next_perm(int* p, int s, int n) noexcept nogil:
    """Advance p[s:n] to the next lexicographic arrangement; False when done."""
    cdef int i = n - 1, j, t
    while i > s and p[i - 1] >= p[i]:
        i -= 1
    if i <= s:
        return False
    j = n - 1
    while p[j] <= p[i - 1]:
        j -= 1
    t = p[i - 1]; p[i - 1] = p[j]; p[j] = t
    j = n - 1
    while i < j:
        t = p[i]; p[i] = p[j]; p[j] = t
        i += 1; j -= 1
    return True


cdef bint _lower_envelope_unimodal(int* p, int n) noexcept nogil:
    cdef bint is_ext[MAXN]
    cdef int lower[MAXN]
    cdef int i, k, running
    if n < 3:
        return True
    running = 0
    for i in range(n):
        if p[i] > running:
            running = p[i]
            is_ext[i] = 1
        else:
            is_ext[i] = 0
    running = 0
    for i in range(n - 1, -1, -1):
        if p[i] > running:
            running = p[i]
            is_ext[i] = 1
    lower[0] = p[0]
    k = 1
    for i in range(1, n - 1):
        if not is_ext[i]:
            lower[k] = p[i]
            k += 1
    lower[k] = p[n - 1]
    k += 1
    i = 0
    while i + 1 < k and lower[i] > lower[i + 1]:
        i += 1
    while i + 1 < k and lower[i] < lower[i + 1]:
        i += 1
    return i + 1 >= k


cdef int _component_count(int* p, int n) noexcept nogil:
    cdef int comps = 1, running_min = n + 1, r
    for r in range(1, n):
        if p[r - 1] < running_min:
            running_min = p[r - 1]
        if running_min == n - r + 1:
            comps += 1
    return comps


cdef bint _reversal_indecomposable(int* p, int n) noexcept nogil:
    cdef int running_min = n + 1, r
    for r in range(1, n):
        if p[n - r] < running_min:
            running_min = p[n - r]
        if running_min == n - r + 1:
            return False
    return True


cdef int _free_fixed_count(int* p, int n) noexcept nogil:
    cdef int count = 0, running_max = 0, i
    for i in range(n):
        if p[i] == i + 1 and 1 < p[i] < n and running_max < p[i]:
            count += 1
        if p[i] > running_max:
            running_max = p[i]
    return count


cdef bint _avoids_forbidden(int* p, int n) noexcept nogil:
    cdef int i1, i2, i3, i4, i5
    if n < 5:
        return True
    for i1 in range(n - 4):
        for i2 in range(i1 + 1, n - 3):
            for i3 in range(i2 + 1, n - 2):
                for i4 in range(i3 + 1, n - 1):
                    for i5 in range(i4 + 1, n):
                        if FORBIDDEN_TABLE[_lehmer5(p[i1], p[i2], p[i3], p[i4], p[i5])]:
                            return False
    return True


cdef int _setup(int* p, int n, first) except -1:
    """Fill p with the first arrangement; returns the suffix start index."""
    cdef int i, f, k
    if n < 1 or n > MAXN:
        raise ValueError(f"size must be in 1..{MAXN}, got {n}")
    if first is None:
        for i in range(n):
            p[i] = i + 1
        return 0
    f = first
    if not 1 <= f <= n:
        raise ValueError(f"first value must be in 1..{n}")
    p[0] = f
    k = 1
    for i in range(1, n + 1):
        if i != f:
            p[k] = i
            k += 1
    return 1


def scan_stats(int n, first=None):
    cdef int p[MAXN]
    cdef long long components[MAXN + 1]
    cdef long long by_fixed[MAXN]
    cdef long long square = 0, both_ways = 0, first_lt_last = 0
    cdef int start, comps, i
    start = _setup(p, n, first)
    for i in range(n + 1):
        components[i] = 0
    for i in range(n):
        by_fixed[i] = 0
    while True:
        if _lower_envelope_unimodal(p, n):
            square += 1
            comps = _component_count(p, n)
            components[comps] += 1
            if comps == 1:
                by_fixed[_free_fixed_count(p, n)] += 1
                if _reversal_indecomposable(p, n):
                    both_ways += 1
                if p[0] < p[n - 1]:
                    first_lt_last += 1
        if not _next_perm(p, start, n):
            break
    comp_dict = {}
    for i in range(1, n + 1):
        if components[i]:
            comp_dict[i] = components[i]
    width = n - 1 if n > 1 else 1
    return {
        "square": square,
        "components": comp_dict,
        "ctilde_by_fixed": [by_fixed[i] for i in range(width)],
        "both_ways": both_ways,
        "assoc_first_lt_last": first_lt_last,
    }


def square_agreement(int n, first=None):
    cdef int p[MAXN]
    cdef long long by_envelope = 0, by_patterns = 0, disagree = 0
    cdef bint a, b
    cdef int start
    start = _setup(p, n, first)
    while True:
        a = _lower_envelope_unimodal(p, n)
        b = _avoids_forbidden(p, n)
        by_envelope += a
        by_patterns += b
        disagree += a != b
        if not _next_perm(p, start, n):
            break
    return {"by_envelope": by_envelope, "by_patterns": by_patterns, "disagreements": disagree}
