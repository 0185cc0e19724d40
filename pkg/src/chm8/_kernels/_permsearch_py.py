"""Row/column permutation search on integer label matrices (pure Python)."""
from __future__ import annotations

import numpy as np


def _refine(keys_a, keys_b):
    """Compress paired key lists to shared small ints; None if multisets differ."""
    if sorted(keys_a) != sorted(keys_b):
        return None
    table = {k: i for i, k in enumerate(sorted(set(keys_a)))}
    return [table[k] for k in keys_a], [table[k] for k in keys_b]


def search(la, lb, row_a, row_b, col_a, col_b, nlabels):
    """Find ``r, c`` with ``la[i, j] == lb[r[i], c[j]]`` for all ``i, j``.

    ``row_*`` and ``col_*`` are compatible colourings (rows of equal colour
    may be matched only). B rows are tried in increasing index order, so the
    first solution is the lexicographically smallest row map reachable.
    Returns ``(r, c)`` as int arrays or ``None``.
    """
    la = np.asarray(la).tolist()
    lb = np.asarray(lb).tolist()
    row_a = list(map(int, row_a))
    row_b = list(map(int, row_b))
    n = len(la)
    used = [False] * n
    rmap = [-1] * n

    def rec(i, cls_a, cls_b):
        if i == n:
            return cls_a, cls_b
        ra = la[i]
        for b in range(n):
            if used[b] or row_b[b] != row_a[i]:
                continue
            rb = lb[b]
            nxt = _refine(
                [cls_a[j] * nlabels + ra[j] for j in range(n)],
                [cls_b[j] * nlabels + rb[j] for j in range(n)],
            )
            if nxt is None:
                continue
            used[b] = True
            rmap[i] = b
            out = rec(i + 1, *nxt)
            if out is not None:
                return out
            used[b] = False
        return None

    start = _refine(list(map(int, col_a)), list(map(int, col_b)))
    if start is None:
        return None
    found = rec(0, *start)
    if found is None:
        return None
    cls_a, cls_b = found
    taken = [False] * n
    cmap = [-1] * n
    for j in range(n):
        for k in range(n):
            if not taken[k] and cls_b[k] == cls_a[j]:
                taken[k] = True
                cmap[j] = k
                break
    return np.array(rmap, dtype=np.intp), np.array(cmap, dtype=np.intp)
