"""Hot enumeration kernels.

Both kernels run compiled under numba when it is importable and
``HESSENCOUNT_NO_JIT`` is unset (or ``0``); otherwise the identical source
runs as plain Python over numpy arrays.  Set the variable before import.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("HESSENCOUNT_NO_JIT", "").strip() not in ("", "0")

try:
    if _DISABLED:
        raise ImportError
    from numba import njit

    JIT_ENABLED = True
except ImportError:  # pragma: no cover - exercised with HESSENCOUNT_NO_JIT=1
    JIT_ENABLED = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]) and not kwargs:
            return args[0]
        return lambda fn: fn


BUDGET_EXCEEDED = -1


@njit(cache=True, nogil=True)
def _in_span(w, basis, pivots, dim, add, mul, neg, scratch):
    n = w.shape[0]
    for x in range(n):
        scratch[x] = w[x]
    for j in range(dim):
        c = scratch[pivots[j]]
        if c != 0:
            nc = neg[c]
            for x in range(n):
                b = basis[j, x]
                if b != 0:
                    scratch[x] = add[scratch[x], mul[nc, b]]
    for x in range(n):
        if scratch[x] != 0:
            return False
    return True


@njit(cache=True, nogil=True)
def count_flags(T, q, add, mul, neg, need, budget):
    """Count complete flags ``V_1 < ... < V_n`` with ``T V_i <= V_m(i)``.

    ``need[d]`` is the largest ``i`` with ``m(i) == d`` (0 if none); the
    condition for every such ``i`` is checked as soon as ``V_d`` is fixed.
    Each ``V_{k+1}`` is ``V_k`` plus one normalized vector supported off the
    pivot columns of ``V_k``, so every flag is visited exactly once.
    Returns ``BUDGET_EXCEEDED`` once more than ``budget`` candidate
    extensions have been examined.
    """
    n = T.shape[0]
    basis = np.zeros((n, n), dtype=np.int64)
    image = np.zeros((n, n), dtype=np.int64)
    pivots = np.full(n, -1, dtype=np.int64)
    is_pivot = np.zeros(n, dtype=np.bool_)
    code = np.zeros(n + 1, dtype=np.int64)
    free = np.zeros(n, dtype=np.int64)
    vec = np.zeros(n, dtype=np.int64)
    scratch = np.zeros(n, dtype=np.int64)
    total = 0
    steps = 0
    k = 0
    code[0] = 0
    while k >= 0:
        # undo the vector chosen previously at this depth
        if pivots[k] >= 0:
            is_pivot[pivots[k]] = False
            pivots[k] = -1
        nfree = 0
        for x in range(n):
            if not is_pivot[x]:
                free[nfree] = x
                nfree += 1
        # normalized vectors: leading 1 at free[j], arbitrary digits after it
        limit = (q**nfree - 1) // (q - 1)
        placed = False
        while code[k] < limit:
            c = code[k]
            code[k] += 1
            for x in range(n):
                vec[x] = 0
            j = 0
            block = q ** (nfree - 1)
            while c >= block:
                c -= block
                j += 1
                block //= q
            lead = free[j]
            vec[lead] = 1
            for f in range(nfree - 1, j, -1):
                vec[free[f]] = c % q
                c //= q
            steps += 1
            if steps > budget:
                return BUDGET_EXCEEDED
            for x in range(n):
                basis[k, x] = vec[x]
            for r in range(n):
                acc = 0
                for x in range(n):
                    if vec[x] != 0 and T[r, x] != 0:
                        acc = add[acc, mul[T[r, x], vec[x]]]
                image[k, r] = acc
            pivots[k] = lead
            is_pivot[lead] = True
            dim = k + 1
            good = True
            if dim < n:
                for r in range(need[dim]):
                    if not _in_span(image[r], basis, pivots, dim, add, mul, neg, scratch):
                        good = False
                        break
            if good:
                placed = True
                break
            is_pivot[lead] = False
            pivots[k] = -1
        if not placed:
            k -= 1
            continue
        if k == n - 1:
            total += 1
            continue
        k += 1
        code[k] = 0
        pivots[k] = -1
    return total


@njit(cache=True, nogil=True)
def ascent_counts(lo, content, max_asc):
    """Proper colorings of the indifference graph with prescribed color
    multiplicities, tallied by number of ascents.

    Vertex ``v``'s earlier neighbours are ``lo[v] .. v-1``; color ``c`` is
    used exactly ``content[c]`` times.
    """
    n = lo.shape[0]
    ncol = content.shape[0]
    counts = np.zeros(max_asc + 1, dtype=np.int64)
    if n == 0:
        counts[0] = 1
        return counts
    remaining = content.copy()
    color = np.full(n, -1, dtype=np.int64)
    asc = np.zeros(n + 1, dtype=np.int64)
    v = 0
    while v >= 0:
        if color[v] >= 0:
            remaining[color[v]] += 1
        c = color[v] + 1
        placed = False
        a = 0
        while c < ncol:
            if remaining[c] > 0:
                proper = True
                a = 0
                for u in range(lo[v], v):
                    if color[u] == c:
                        proper = False
                        break
                    if color[u] < c:
                        a += 1
                if proper:
                    placed = True
                    break
            c += 1
        if not placed:
            color[v] = -1
            v -= 1
            continue
        color[v] = c
        remaining[c] -= 1
        asc[v + 1] = asc[v] + a
        if v == n - 1:
            counts[asc[n]] += 1
            continue
        v += 1
        color[v] = -1
    return counts
