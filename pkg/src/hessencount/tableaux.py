"""Tableaux statistics: cocharge, Kostka-Foulkes polynomials, modified
Hall-Littlewood functions, and the tabloid / filling statistics that give an
independent route to the same polynomials.

Fillings of all kinds are tuples of row tuples in English notation (row 0 on
top).  Hessenberg functions are taken as plain sequences ``m`` with
``m[j - 1] == m(j)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .algebra import Poly, format_partition, n_statistic, partitions_of

Rows = tuple  # tuple of tuples of positive ints


def _check_sizes(a, b):
    if sum(a) != sum(b):
        raise ValueError(f"size mismatch: |{a}| != |{b}|")


def format_rows(rows: Rows) -> str:
    """``"1 1 2 / 2 3 / 1"``"""
    return " / ".join(" ".join(str(x) for x in row) for row in rows)


def parse_rows(text: str) -> Rows:
    return tuple(tuple(int(x) for x in row.split()) for row in text.split("/") if row.strip())


def content_of(rows: Rows) -> tuple:
    top = max((x for row in rows for x in row), default=0)
    counts = [0] * top
    for row in rows:
        for x in row:
            counts[x - 1] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# Semistandard tableaux and cocharge
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def enumerate_ssyt(shape: tuple, content: tuple) -> tuple:
    """All SSYT of ``shape`` with ``content``, row-major lexicographic order."""
    _check_sizes(shape, content)
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    remaining = list(content)
    grid = [[0] * length for length in shape]
    out = []

    def rec(pos):
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[pos]
        lo = grid[r][c - 1] if c else 1
        floor = grid[r - 1][c] + 1 if r else 1
        for v in range(max(lo, floor), len(remaining) + 1):
            if remaining[v - 1]:
                remaining[v - 1] -= 1
                grid[r][c] = v
                rec(pos + 1)
                remaining[v - 1] += 1
        grid[r][c] = 0

    rec(0)
    return tuple(out)


def kostka_number(shape, content) -> int:
    return len(enumerate_ssyt(tuple(shape), tuple(content)))


def reading_word(rows: Rows) -> list:
    """Rows left to right, bottom row first."""
    return [x for row in reversed(rows) for x in row]


def charge_word(word: Sequence[int]) -> int:
    """Lascoux-Schuetzenberger charge of a word of partition content.

    Standard subwords are peeled off by scanning leftwards cyclically for
    1, 2, ...; the index rises by one each time the scan wraps around.
    """
    content = [0] * (max(word, default=0))
    for x in word:
        content[x - 1] += 1
    if any(a < b for a, b in zip(content, content[1:])):
        raise ValueError(f"content {tuple(content)} of {list(word)} is not a partition")
    alive = list(range(len(word)))
    total = 0
    while alive:
        top = max(word[i] for i in alive)
        chosen = []
        pos = len(alive)  # scan starts just right of the end
        index = 0
        for letter in range(1, top + 1):
            k = pos - 1
            wrapped = False
            while True:
                if k < 0:
                    k = len(alive) - 1
                    wrapped = True
                if word[alive[k]] == letter and k not in chosen:
                    break
                k -= 1
            if letter > 1 and wrapped:
                index += 1
            total += index
            chosen.append(k)
            pos = k
        alive = [a for i, a in enumerate(alive) if i not in set(chosen)]
    return total


def cocharge(rows: Rows) -> int:
    content = content_of(rows)
    return n_statistic(content) - charge_word(reading_word(rows))


@lru_cache(maxsize=None)
def kostka_foulkes(shape: tuple, content: tuple) -> Poly:
    """Modified Kostka-Foulkes polynomial: sum of t**cocharge over SSYT."""
    _check_sizes(shape, content)
    coeffs = {}
    for tab in enumerate_ssyt(tuple(shape), tuple(content)):
        k = cocharge(tab)
        coeffs[k] = coeffs.get(k, 0) + 1
    if not coeffs:
        return Poly()
    return Poly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


@lru_cache(maxsize=None)
def _hall_littlewood_terms(lam: tuple) -> dict:
    return {
        mu: kf for mu in partitions_of(sum(lam)) if not (kf := kostka_foulkes(mu, lam)).is_zero()
    }


def hall_littlewood(lam):
    """Modified Hall-Littlewood function in the Schur basis."""
    from .symfunc import SymFunc

    lam = tuple(lam)
    return SymFunc(sum(lam), "s", _hall_littlewood_terms(lam))


# ---------------------------------------------------------------------------
# Tabloids
# ---------------------------------------------------------------------------

def _multisets(counts, size, start=0):
    """Weakly increasing rows of ``size`` drawn from ``counts`` (lex order)."""
    if size == 0:
        yield ()
        return
    for v in range(start, len(counts)):
        if counts[v]:
            counts[v] -= 1
            for rest in _multisets(counts, size - 1, v):
                yield (v + 1,) + rest
            counts[v] += 1


@lru_cache(maxsize=None)
def enumerate_tabloids(shape: tuple, content: tuple) -> tuple:
    """Row-weakly-increasing fillings of ``shape`` with content ``content``."""
    _check_sizes(shape, content)
    counts = list(content)
    out = []
    rows = []

    def rec(r):
        if r == len(shape):
            out.append(tuple(rows))
            return
        for row in list(_multisets(counts, shape[r])):
            for x in row:
                counts[x - 1] -= 1
            rows.append(row)
            rec(r + 1)
            rows.pop()
            for x in row:
                counts[x - 1] += 1

    rec(0)
    return tuple(out)


def _cells(rows: Rows):
    return [(r, c, x) for r, row in enumerate(rows) for c, x in enumerate(row)]


def _pair_statistic(rows: Rows, bound) -> int:
    """Pairs of entries ``i > k`` where ``i`` sits below ``k`` in its column or
    in a column left of ``k``, and ``i <= bound(j)`` whenever ``j`` is the
    entry right of ``k``."""
    total = 0
    cells = _cells(rows)
    for rk, ck, k in cells:
        right = rows[rk][ck + 1] if ck + 1 < len(rows[rk]) else None
        cap = bound(right) if right is not None else None
        for ri, ci, i in cells:
            if i <= k:
                continue
            if not ((ci == ck and ri > rk) or ci < ck):
                continue
            if cap is not None and i > cap:
                continue
            total += 1
    return total


def tabloid_w(rows: Rows) -> int:
    return _pair_statistic(rows, lambda j: j)


def entry_value(rows: Rows, r: int, c: int) -> int:
    """Smaller entries above in the same column, or below in the next column."""
    x = rows[r][c]
    count = 0
    for r2, row in enumerate(rows):
        if r2 < r and c < len(row) and row[c] < x:
            count += 1
        if r2 > r and c + 1 < len(row) and row[c + 1] < x:
            count += 1
    return count


def tabloid_val(rows: Rows) -> int:
    return sum(entry_value(rows, r, c) for r, c, _ in _cells(rows))


def _poly_from_stats(values) -> Poly:
    coeffs = {}
    for v in values:
        coeffs[v] = coeffs.get(v, 0) + 1
    if not coeffs:
        return Poly()
    return Poly([coeffs.get(k, 0) for k in range(max(coeffs) + 1)])


def monomial_coeff_a(lam, mu) -> Poly:
    """Coefficient of ``m_mu`` in the modified Hall-Littlewood function of
    ``lam``, summed over tabloids with the ``w`` statistic."""
    return _poly_from_stats(tabloid_w(th) for th in enumerate_tabloids(tuple(lam), tuple(mu)))


def monomial_coeff_val(lam, mu) -> Poly:
    return _poly_from_stats(tabloid_val(th) for th in enumerate_tabloids(tuple(lam), tuple(mu)))


# ---------------------------------------------------------------------------
# m-compatible fillings
# ---------------------------------------------------------------------------

def enumerate_compatible_fillings(shape, m: Sequence[int]) -> list:
    """Bijective fillings of ``shape`` by ``1..n`` where every horizontally
    adjacent pair ``k | j`` has ``k <= m(j)``.  Backtracks row-major and
    checks compatibility as each entry is placed."""
    shape = tuple(shape)
    n = len(m)
    if sum(shape) != n:
        raise ValueError(f"size mismatch: |{shape}| != {n}")
    cells = [(r, c) for r, length in enumerate(shape) for c in range(length)]
    grid = [[0] * length for length in shape]
    used = [False] * (n + 1)
    out = []

    def rec(pos):
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in grid))
            return
        r, c = cells[pos]
        left = grid[r][c - 1] if c else 0
        for j in range(1, n + 1):
            if used[j]:
                continue
            if left and left > m[j - 1]:
                continue
            used[j] = True
            grid[r][c] = j
            rec(pos + 1)
            used[j] = False
        grid[r][c] = 0

    rec(0)
    return out


def filling_v(rows: Rows, m: Sequence[int]) -> int:
    return _pair_statistic(rows, lambda j: m[j - 1])


def nilpotent_poincare(lam, m: Sequence[int]) -> Poly:
    """Sum of ``t**v`` over the m-compatible fillings of ``lam``."""
    return _poly_from_stats(filling_v(phi, m) for phi in enumerate_compatible_fillings(lam, m))


__all__ = [
    "charge_word",
    "cocharge",
    "content_of",
    "entry_value",
    "enumerate_compatible_fillings",
    "enumerate_ssyt",
    "enumerate_tabloids",
    "filling_v",
    "format_partition",
    "format_rows",
    "hall_littlewood",
    "kostka_foulkes",
    "kostka_number",
    "monomial_coeff_a",
    "monomial_coeff_val",
    "nilpotent_poincare",
    "parse_rows",
    "reading_word",
    "tabloid_val",
    "tabloid_w",
]
