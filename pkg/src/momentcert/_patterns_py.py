"""Pure-Python pattern-avoidance counting kernel (fallback).

Counts permutations of {1..n} avoiding every pattern in a set, for each
n <= n_max.  DFS over the tree of avoiding prefixes (classical patterns are
prefix-closed); on each extension only occurrences ending at the new element
are tested, by incremental index DFS with early pruning.  Increasing
patterns of any length are handled through a longest-increasing-subsequence
bound instead of subsequence search.

The compiled Cython kernel implements the same algorithm; this module is the
import-time fallback and the reference for differential testing.
"""

from __future__ import annotations

KERNEL_NAME = "pure-python"


def _is_increasing(pat) -> bool:
    return all(pat[i] < pat[i + 1] for i in range(len(pat) - 1))


def _completes(prefix: list[int], v: int, pat: tuple[int, ...]) -> bool:
    """True iff appending v to prefix creates an occurrence of pat whose
    final element is v."""
    m = len(pat)
    k = len(prefix)
    if k < m - 1:
        return False
    last = pat[m - 1]
    vals = [0] * (m - 1)

    def walk(t: int, start: int) -> bool:
        if t == m - 1:
            return True
        for i in range(start, k - (m - 2 - t)):
            w = prefix[i]
            if (pat[t] < last) != (w < v):
                continue
            if any((pat[j] < pat[t]) != (vals[j] < w) for j in range(t)):
                continue
            vals[t] = w
            if walk(t + 1, i + 1):
                return True
        return False

    return walk(0, 0)


def count_avoiders(patterns, n_max: int) -> list[int]:
    """counts[n] = number of permutations of {1..n} avoiding all patterns."""
    pats = [tuple(p) for p in patterns]
    lis_caps = [len(p) - 1 for p in pats if _is_increasing(p)]
    lis_cap = min(lis_caps) if lis_caps else 0  # 0 means no increasing pattern
    general = [p for p in pats if not _is_increasing(p)]

    counts = [0] * (n_max + 1)
    counts[0] = 1

    for n in range(1, n_max + 1):
        prefix: list[int] = []
        used = [False] * (n + 1)
        lis_at: list[int] = []  # LIS length ending exactly at each prefix slot
        total = 0

        def extend() -> None:
            nonlocal total
            if len(prefix) == n:
                total += 1
                return
            for v in range(1, n + 1):
                if used[v]:
                    continue
                if lis_cap:
                    best = 0
                    for w, l in zip(prefix, lis_at):
                        if w < v and l > best:
                            best = l
                    if best + 1 > lis_cap:
                        continue
                    new_lis = best + 1
                else:
                    new_lis = 0
                if any(_completes(prefix, v, p) for p in general):
                    continue
                used[v] = True
                prefix.append(v)
                lis_at.append(new_lis)
                extend()
                lis_at.pop()
                prefix.pop()
                used[v] = False

        extend()
        counts[n] = total
    return counts
