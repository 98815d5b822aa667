# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled pattern-avoidance counting kernel.

Same contract as ``_patterns_py.count_avoiders``: DFS over avoiding
prefixes with incremental occurrence tests on C integer arrays.
"""

KERNEL_NAME = "cython"


cdef bint _is_increasing(tuple pat):
    cdef int i
    for i in range(len(pat) - 1):
        if pat[i] >= pat[i + 1]:
            return False
    return True


cdef struct Pat:
    int m
    int ranks[8]


cdef bint _walk(int* prefix, int k, int v, Pat* pat, int t, int start, int* vals) noexcept nogil:
    # choose an index for pattern slot t among prefix[start..]; slot m-1 is v
    cdef int m = pat.m
    if t == m - 1:
        return True
    cdef int i, j, w
    cdef bint ok
    for i in range(start, k - (m - 2 - t)):
        w = prefix[i]
        if (pat.ranks[t] < pat.ranks[m - 1]) != (w < v):
            continue
        ok = True
        for j in range(t):
            if (pat.ranks[j] < pat.ranks[t]) != (vals[j] < w):
                ok = False
                break
        if not ok:
            continue
        vals[t] = w
        if _walk(prefix, k, v, pat, t + 1, i + 1, vals):
            return True
    return False


cdef bint _completes(int* prefix, int k, int v, Pat* pat) noexcept nogil:
    cdef int vals[8]
    if k < pat.m - 1:
        return False
    return _walk(prefix, k, v, pat, 0, 0, vals)


cdef long long _dfs(int n, int k, int* prefix, int* lis_at, bint* used,
                    int lis_cap, Pat* gpats, int ng) noexcept nogil:
    if k == n:
        return 1
    cdef long long total = 0
    cdef int v, j, w, best, gi
    cdef bint skip
    for v in range(1, n + 1):
        if used[v]:
            continue
        best = 0
        skip = False
        if lis_cap > 0:
            for j in range(k):
                w = prefix[j]
                if w < v and lis_at[j] > best:
                    best = lis_at[j]
            if best + 1 > lis_cap:
                skip = True
        if not skip:
            for gi in range(ng):
                if _completes(prefix, k, v, &gpats[gi]):
                    skip = True
                    break
        if skip:
            continue
        prefix[k] = v
        lis_at[k] = best + 1
        used[v] = True
        total += _dfs(n, k + 1, prefix, lis_at, used, lis_cap, gpats, ng)
        used[v] = False
    return total


def count_avoiders(patterns, int n_max):
    """counts[n] = number of permutations of {1..n} avoiding all patterns."""
    cdef list pats = [tuple(p) for p in patterns]
    cdef int lis_cap = 0
    cdef list general = []
    for p in pats:
        if _is_increasing(p):
            if lis_cap == 0 or len(p) - 1 < lis_cap:
                lis_cap = len(p) - 1
        else:
            if len(p) > 8:
                raise ValueError("general patterns limited to length 8")
            general.append(p)
    cdef int ng = len(general)
    if ng > 8:
        raise ValueError("at most 8 general patterns")

    cdef Pat gpats[8]
    cdef int gi, gj
    for gi in range(ng):
        gpats[gi].m = len(general[gi])
        for gj in range(gpats[gi].m):
            gpats[gi].ranks[gj] = general[gi][gj]

    counts = [0] * (n_max + 1)
    counts[0] = 1

    cdef int prefix[64]
    cdef int lis_at[64]
    cdef bint used[66]
    cdef int n, v
    if n_max > 63:
        raise ValueError("n_max too large for the enumeration kernel")
    for n in range(1, n_max + 1):
        for v in range(n + 2):
            used[v] = False
        counts[n] = _dfs(n, 0, prefix, lis_at, used, lis_cap, gpats, ng)
    return counts
