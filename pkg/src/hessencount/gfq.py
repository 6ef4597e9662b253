"""Exact linear algebra over finite fields and the brute-force oracles.

Field elements of ``F_q`` (``q = p**e``) are ints ``0..q-1`` whose base-``p``
digits are the coefficients of a residue polynomial modulo the
lexicographically least monic irreducible of degree ``e`` over ``F_p``.
Polynomials over ``F_q`` are tuples of field elements, constant term first.
Matrices act on column vectors.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from . import _kernels
from .algebra import parse_partition, partitions_of
from .hessenberg import HessFn
from .symfunc import SymFunc, multiply, plethysm_pd
from .tableaux import hall_littlewood

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """An enumeration would exceed the configured step ceiling."""


class Unrealizable(ValueError):
    """A similarity class type has no operator over the requested field."""


def default_budget() -> int:
    raw = os.environ.get("HESSENCOUNT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


# ---------------------------------------------------------------------------
# Fields
# ---------------------------------------------------------------------------

def _prime_power(q: int):
    if q < 2:
        raise ValueError(f"q = {q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"q = {q} is not a prime power")
    return p, e


def _prime_field_tables(p):
    add = [[(a + b) % p for b in range(p)] for a in range(p)]
    mul = [[(a * b) % p for b in range(p)] for a in range(p)]
    return add, mul


@dataclass(frozen=True, eq=False)
class FieldCtx:
    p: int
    e: int
    modulus: tuple  # monic, over F_p, constant term first
    add: list = field(repr=False)
    mul: list = field(repr=False)
    neg: list = field(repr=False)
    inv: list = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    def tables(self):
        """numpy copies of the tables for the kernels."""
        return (
            np.asarray(self.add, dtype=np.int64),
            np.asarray(self.mul, dtype=np.int64),
            np.asarray(self.neg, dtype=np.int64),
        )

    def sub(self, a, b):
        return self.add[a][self.neg[b]]

    def describe(self) -> dict:
        return {"q": self.q, "p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def __repr__(self):
        return f"FieldCtx(q={self.q}, modulus={self.modulus})"


def _digits(x, p, e):
    out = []
    for _ in range(e):
        out.append(x % p)
        x //= p
    return out


def _undigits(ds, p):
    x = 0
    for d in reversed(ds):
        x = x * p + d
    return x


@lru_cache(maxsize=None)
def field(q: int) -> FieldCtx:
    """The field with ``q`` elements (cached)."""
    p, e = _prime_power(q)
    if e == 1:
        add, mul = _prime_field_tables(p)
        modulus = (0, 1)
    else:
        base = field(p)
        modulus = irreducible_polys(base, e)[0]
        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        for a in range(q):
            da = _digits(a, p, e)
            for b in range(q):
                db = _digits(b, p, e)
                add[a][b] = _undigits([(x + y) % p for x, y in zip(da, db)], p)
                prod_ = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod_[i + j] = (prod_[i + j] + x * y) % p
                for k in range(2 * e - 2, e - 1, -1):
                    c = prod_[k]
                    if c:
                        for j in range(e + 1):
                            prod_[k - e + j] = (prod_[k - e + j] - c * modulus[j]) % p
                mul[a][b] = _undigits(prod_[:e], p)
    neg = [next(b for b in range(q) if add[a][b] == 0) for a in range(q)]
    inv = [0] + [next(b for b in range(q) if mul[a][b] == 1) for a in range(1, q)]
    return FieldCtx(p, e, modulus, add, mul, neg, inv)


def _ctx(ctx_or_q):
    if isinstance(ctx_or_q, FieldCtx):
        return ctx_or_q
    if isinstance(ctx_or_q, tuple):
        p, e = ctx_or_q
        return field(p**e)
    return field(int(ctx_or_q))


# ---------------------------------------------------------------------------
# Polynomials over F_q
# ---------------------------------------------------------------------------

def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def poly_mul(ctx: FieldCtx, f, g):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = ctx.add[out[i + j]][ctx.mul[a][b]]
    return _trim(out)


def poly_rem(ctx: FieldCtx, f, g):
    f = list(f)
    dg = len(g) - 1
    lead_inv = ctx.inv[g[-1]]
    for k in range(len(f) - 1, dg - 1, -1):
        c = f[k]
        if c:
            c = ctx.mul[c][lead_inv]
            for j, b in enumerate(g):
                f[k - dg + j] = ctx.sub(f[k - dg + j], ctx.mul[c][b])
    return _trim(f[:dg])


def poly_pow(ctx: FieldCtx, f, k: int):
    out = (1,)
    for _ in range(k):
        out = poly_mul(ctx, out, f)
    return out


def format_poly(f) -> str:
    terms = []
    for k in range(len(f) - 1, -1, -1):
        c = f[k]
        if not c:
            continue
        var = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        if not var:
            terms.append(str(c))
        else:
            terms.append(var if c == 1 else f"{c}*{var}")
    return " + ".join(terms) if terms else "0"


@lru_cache(maxsize=None)
def _irreducibles(ctx: FieldCtx, d: int) -> tuple:
    q = ctx.q
    lower = [g for k in range(1, d // 2 + 1) for g in _irreducibles(ctx, k)]
    out = []
    for low in product(range(q), repeat=d):
        f = tuple(low) + (1,)
        if all(poly_rem(ctx, f, g) for g in lower):
            out.append(f)
    return tuple(out)


def irreducible_polys(ctx_or_q, d: int) -> list:
    """Monic irreducibles of degree ``d``, ordered lexicographically by
    ``(c_0, c_1, ..., c_{d-1})``; irreducibility by trial division."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    return list(_irreducibles(_ctx(ctx_or_q), d))


def _mobius(k):
    out, r, f = 1, k, 2
    while f * f <= r:
        if r % f == 0:
            r //= f
            if r % f == 0:
                return 0
            out = -out
        f += 1
    return -out if r > 1 else out


def count_irreducible(q: int, d: int) -> int:
    """Number of monic irreducibles of degree ``d`` over ``F_q`` (necklace formula)."""
    return sum(_mobius(d // k) * q**k for k in range(1, d + 1) if d % k == 0) // d


# ---------------------------------------------------------------------------
# Similarity class types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SimilarityClassType:
    """Multiset of ``(degree, partition)`` pairs, stored sorted."""

    pairs: tuple

    def __post_init__(self):
        norm = []
        for d, lam in self.pairs:
            d = int(d)
            lam = tuple(sorted((int(x) for x in lam), reverse=True))
            if d < 1 or not lam or lam[-1] < 1:
                raise ValueError(f"bad type item {(d, lam)}")
            norm.append((d, lam))
        object.__setattr__(self, "pairs", tuple(sorted(norm, key=lambda x: (x[0], x[1]), reverse=False)))

    @property
    def size(self) -> int:
        return sum(d * sum(lam) for d, lam in self.pairs)

    def degree_multiplicities(self) -> dict:
        out = {}
        for d, _ in self.pairs:
            out[d] = out.get(d, 0) + 1
        return out

    def is_realizable(self, q: int) -> bool:
        return all(k <= count_irreducible(q, d) for d, k in self.degree_multiplicities().items())

    def is_split(self) -> bool:
        return all(d == 1 for d, _ in self.pairs)

    def jordan_type(self) -> tuple:
        if not self.is_split():
            raise ValueError("only split types have a Jordan type")
        return tuple(lam for _, lam in self.pairs)

    @classmethod
    def parse(cls, text: str) -> "SimilarityClassType":
        """``"(1,[2,1]);(2,[1])"``"""
        pairs = []
        for item in text.split(";"):
            item = item.strip()
            if not item:
                continue
            if not (item.startswith("(") and item.endswith(")")):
                raise ValueError(f"bad type item {item!r}")
            body = item[1:-1]
            if "," not in body:
                raise ValueError(f"bad type item {item!r}")
            d, lam = body.split(",", 1)
            lam = lam.strip()
            if not (lam.startswith("[") and lam.endswith("]")):
                raise ValueError(f"bad type item {item!r}")
            pairs.append((int(d), parse_partition(lam)))
        if not pairs:
            raise ValueError("empty similarity class type")
        return cls(tuple(pairs))

    @classmethod
    def split(cls, jordan) -> "SimilarityClassType":
        return cls(tuple((1, tuple(lam)) for lam in jordan))

    def __str__(self):
        return ";".join(f"({d},[{','.join(map(str, lam))}])" for d, lam in self.pairs)


def parse_type(text: str) -> SimilarityClassType:
    return SimilarityClassType.parse(text)


def _type_items(n):
    return [(d, lam) for d in range(1, n + 1) for k in range(1, n // d + 1) for lam in partitions_of(k)]


def enumerate_types(n: int, q: int) -> list:
    """All similarity class types of size ``n`` realizable over ``F_q``."""
    items = _type_items(n)
    out = []

    def rec(start, remaining, chosen):
        if remaining == 0:
            tau = SimilarityClassType(tuple(chosen))
            if tau.is_realizable(q):
                out.append(tau)
            return
        for idx in range(start, len(items)):
            d, lam = items[idx]
            w = d * sum(lam)
            if w <= remaining:
                chosen.append((d, lam))
                rec(idx, remaining - w, chosen)
                chosen.pop()

    rec(0, n, [])
    return out


# ---------------------------------------------------------------------------
# Operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LinearOp:
    ctx: FieldCtx
    matrix: tuple  # tuple of row tuples

    @property
    def n(self) -> int:
        return len(self.matrix)

    def array(self) -> np.ndarray:
        return np.asarray(self.matrix, dtype=np.int64).reshape(self.n, self.n)

    def apply(self, v):
        add, mul = self.ctx.add, self.ctx.mul
        out = []
        for row in self.matrix:
            acc = 0
            for a, x in zip(row, v):
                if a and x:
                    acc = add[acc][mul[a][x]]
            out.append(acc)
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, LinearOp) and self.ctx is other.ctx and self.matrix == other.matrix

    def __hash__(self):
        return hash((self.ctx.q, self.matrix))


def companion(ctx: FieldCtx, f) -> list:
    """Companion matrix of monic ``f``: ones below the diagonal, last column ``-c``."""
    k = len(f) - 1
    mat = [[0] * k for _ in range(k)]
    for i in range(1, k):
        mat[i][i - 1] = 1
    for i in range(k):
        mat[i][k - 1] = ctx.neg[f[i]]
    return mat


def block_diag(blocks) -> tuple:
    n = sum(len(b) for b in blocks)
    mat = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                mat[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(row) for row in mat)


def assign_irreducibles(tau: SimilarityClassType, ctx: FieldCtx) -> list:
    """``[(f, lam), ...]`` taking the lexicographically first unused irreducible per degree."""
    used = {}
    out = []
    for d, lam in tau.pairs:
        k = used.get(d, 0)
        polys = _irreducibles(ctx, d) if count_irreducible(ctx.q, d) > k else ()
        if k >= len(polys):
            raise Unrealizable(f"type {tau} needs more than {len(polys)} irreducibles of degree {d} over F_{ctx.q}")
        out.append((polys[k], lam))
        used[d] = k + 1
    return out


def operator_from_type(tau: SimilarityClassType, ctx) -> LinearOp:
    ctx = _ctx(ctx)
    blocks = []
    for f, lam in assign_irreducibles(tau, ctx):
        for part in lam:
            blocks.append(companion(ctx, poly_pow(ctx, f, part)))
    return LinearOp(ctx, block_diag(blocks))


def zero_operator(ctx, n: int) -> LinearOp:
    ctx = _ctx(ctx)
    return LinearOp(ctx, tuple((0,) * n for _ in range(n)))


def mat_mul(ctx: FieldCtx, a, b) -> tuple:
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = 0
            for l in range(k):
                if a[i][l] and b[l][j]:
                    acc = ctx.add[acc][ctx.mul[a[i][l]][b[l][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_inv(ctx: FieldCtx, a):
    """Inverse by Gauss-Jordan; None when singular."""
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        s = ctx.inv[aug[col][col]]
        aug[col] = [ctx.mul[s][x] for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [ctx.sub(x, ctx.mul[f][y]) for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def random_invertible(ctx: FieldCtx, n: int, rng: random.Random):
    while True:
        mat = tuple(tuple(rng.randrange(ctx.q) for _ in range(n)) for _ in range(n))
        inv = mat_inv(ctx, mat)
        if inv is not None:
            return mat, inv


def conjugate_op(T: LinearOp, P, P_inv) -> LinearOp:
    return LinearOp(T.ctx, mat_mul(T.ctx, mat_mul(T.ctx, P, T.matrix), P_inv))


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------

def rref(ctx: FieldCtx, rows) -> tuple:
    """Reduced row-echelon basis of the row span (zero rows dropped)."""
    mat = [list(r) for r in rows]
    out = []
    ncols = len(mat[0]) if mat else 0
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        s = ctx.inv[mat[r][col]]
        mat[r] = [ctx.mul[s][x] for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [ctx.sub(x, ctx.mul[f][y]) for x, y in zip(mat[i], mat[r])]
        r += 1
    out = tuple(tuple(row) for row in mat[:r])
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspaces_of_dim(ctx, n: int, d: int, budget: int | None = None) -> list:
    """Every ``d``-dimensional subspace of ``F_q^n`` as its RREF basis."""
    ctx = _ctx(ctx)
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    budget = default_budget() if budget is None else budget
    if gaussian_binomial(n, d, ctx.q) > budget:
        raise BudgetExceeded(f"{gaussian_binomial(n, d, ctx.q)} subspaces exceed budget {budget}")
    out = []
    for pivots in combinations(range(n), d):
        slots = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, n) if c not in pivots]
        for values in product(range(ctx.q), repeat=len(slots)):
            mat = [[0] * n for _ in range(d)]
            for r, pc in enumerate(pivots):
                mat[r][pc] = 1
            for (r, c), v in zip(slots, values):
                mat[r][c] = v
            out.append(tuple(tuple(row) for row in mat))
    return out


def _reduce(ctx: FieldCtx, basis, v):
    v = list(v)
    for row in basis:
        pc = next(i for i, x in enumerate(row) if x)
        c = v[pc]
        if c:
            v = [ctx.sub(x, ctx.mul[c][y]) for x, y in zip(v, row)]
    return v


def in_subspace(ctx: FieldCtx, basis, v) -> bool:
    """``basis`` must be in RREF."""
    return not any(_reduce(ctx, basis, v))


def contains(ctx: FieldCtx, big, small) -> bool:
    return all(in_subspace(ctx, big, v) for v in small)


def is_invariant(T: LinearOp, basis) -> bool:
    return all(in_subspace(T.ctx, basis, T.apply(v)) for v in basis)


def invariant_subspaces(T: LinearOp, budget: int | None = None) -> dict:
    """``{d: [rref, ...]}`` of all T-invariant subspaces, by direct scan."""
    budget = default_budget() if budget is None else budget
    total = sum(gaussian_binomial(T.n, d, T.ctx.q) for d in range(T.n + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces exceed budget {budget}")
    return {d: [W for W in subspaces_of_dim(T.ctx, T.n, d) if is_invariant(T, W)] for d in range(T.n + 1)}


def flag_counts_by_shape(T: LinearOp, budget: int | None = None) -> dict:
    """``{lam: fl_lam(T)}``: chains of invariant subspaces with jumps ``lam_1, lam_2, ...``."""
    inv = invariant_subspaces(T, budget)
    ctx = T.ctx
    edge_cache = {}

    def above(W, d_from, d_to):
        key = (W, d_to)
        if key not in edge_cache:
            edge_cache[key] = [U for U in inv[d_to] if contains(ctx, U, W)]
        return edge_cache[key]

    out = {}
    for lam in partitions_of(T.n):
        counts = {inv[0][0]: 1}
        dim = 0
        for part in lam:
            nxt = {}
            for W, c in counts.items():
                for U in above(W, dim, dim + part):
                    nxt[U] = nxt.get(U, 0) + c
            counts = nxt
            dim += part
        out[lam] = sum(counts.values())
    return out


def f_t_bruteforce(T: LinearOp, budget: int | None = None) -> SymFunc:
    """Invariant flag generating function from a direct subspace scan."""
    return SymFunc(T.n, "m", flag_counts_by_shape(T, budget))


@lru_cache(maxsize=None)
def f_tau(tau: SimilarityClassType) -> SymFunc:
    """Product of ``p_d[H_lam(x; t)]`` over the pairs of ``tau`` (monomial basis)."""
    out = SymFunc.one()
    for d, lam in tau.pairs:
        out = multiply(out, plethysm_pd(hall_littlewood(lam), d))
    return out


# ---------------------------------------------------------------------------
# Hessenberg point counts by enumeration
# ---------------------------------------------------------------------------

def _need_vector(m: HessFn) -> np.ndarray:
    need = np.zeros(m.n + 1, dtype=np.int64)
    for i, v in enumerate(m, start=1):
        need[v] = max(need[v], i)
    return need


def count_hessenberg_bruteforce(m, T: LinearOp, budget: int | None = None) -> int:
    """Number of complete flags with ``T V_i <= V_m(i)``, by incremental search."""
    m = HessFn(m)
    if m.n != T.n:
        raise ValueError(f"dimension mismatch: m on [{m.n}], operator on F^{T.n}")
    budget = default_budget() if budget is None else budget
    add, mul, neg = T.ctx.tables()
    result = _kernels.count_flags(T.array(), T.ctx.q, add, mul, neg, _need_vector(m), budget)
    if result == _kernels.BUDGET_EXCEEDED:
        raise BudgetExceeded(f"flag search for m={m} over F_{T.ctx.q} exceeded {budget} steps")
    return int(result)


__all__ = [
    "BudgetExceeded",
    "FieldCtx",
    "LinearOp",
    "SimilarityClassType",
    "Unrealizable",
    "companion",
    "conjugate_op",
    "count_hessenberg_bruteforce",
    "count_irreducible",
    "enumerate_types",
    "f_t_bruteforce",
    "f_tau",
    "field",
    "flag_counts_by_shape",
    "gaussian_binomial",
    "invariant_subspaces",
    "irreducible_polys",
    "operator_from_type",
    "parse_type",
    "rref",
    "subspaces_of_dim",
    "zero_operator",
]
