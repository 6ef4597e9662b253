"""Homogeneous symmetric functions as exact finite basis expansions.

The monomial basis is canonical: products, pairings and plethysm all route
through it.  Transition matrices to and from ``m`` are built once per degree.
"""
from __future__ import annotations

import json
import threading
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    Poly,
    RatFunc,
    evaluate,
    format_partition,
    normalize_number,
    partitions_of,
)

BASES = ("m", "e", "h", "p", "s")

#: Largest degree for which transition matrices are built.
DEGREE_CAP = 12

_lock = threading.RLock()


def _check_basis(basis):
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")


def _is_zero(c):
    return c == 0


def _scale(c, x):
    if isinstance(c, (Poly, RatFunc)) or isinstance(x, (Poly, RatFunc)):
        out = c * x
    else:
        out = normalize_number(c * x)
    return out


class SymFunc:
    """Degree-``n`` symmetric function ``sum terms[lam] * b_lam``.

    Equality is mathematical: expansions in different bases compare equal
    when they represent the same function.
    """

    __slots__ = ("degree", "basis", "_terms")

    def __init__(self, degree: int, basis: str, terms=None):
        _check_basis(basis)
        clean = {}
        for lam, c in (terms or {}).items():
            lam = tuple(lam)
            if sum(lam) != degree:
                raise ValueError(f"partition {lam} is not of size {degree}")
            if isinstance(c, Fraction):
                c = normalize_number(c)
            elif isinstance(c, RatFunc) and c.is_polynomial():
                c = c.num
            if not _is_zero(c):
                clean[lam] = c
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SymFunc is immutable")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coeff(self, lam):
        return self._terms.get(tuple(lam), 0)

    def items(self):
        """Terms in reverse-lexicographic partition order."""
        return [(lam, self._terms[lam]) for lam in partitions_of(self.degree) if lam in self._terms]

    def is_zero(self) -> bool:
        return not self._terms

    # constructors ----------------------------------------------------------
    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymFunc":
        lam = tuple(sorted(lam, reverse=True))
        return cls(sum(lam), basis, {lam: 1})

    @classmethod
    def one(cls) -> "SymFunc":
        return cls(0, "m", {(): 1})

    @classmethod
    def zero(cls, degree: int, basis: str = "m") -> "SymFunc":
        return cls(degree, basis, {})

    # arithmetic -------------------------------------------------------------
    def map_coeffs(self, fn) -> "SymFunc":
        return SymFunc(self.degree, self.basis, {lam: fn(c) for lam, c in self._terms.items()})

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            if other == 0:
                return self
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add symmetric functions of different degree")
        a, b = self, other
        if a.basis != b.basis:
            a, b = to_monomial(a), to_monomial(b)
        out = dict(a._terms)
        for lam, c in b._terms.items():
            out[lam] = out.get(lam, 0) + c
        return SymFunc(a.degree, a.basis, out)

    __radd__ = __add__

    def __neg__(self):
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        return self.map_coeffs(lambda c: _scale(c, other))

    def __rmul__(self, other):
        return self.map_coeffs(lambda c: _scale(c, other))

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        if self.basis == other.basis:
            return self._terms == other._terms
        return to_monomial(self)._terms == to_monomial(other)._terms

    __hash__ = None

    # text / json ------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for lam in sorted(self._terms):
            c = self._terms[lam]
            name = f"{self.basis}_{{{format_partition(lam)}}}"
            pieces.append(_format_term(c, name))
        out = pieces[0]
        for piece in pieces[1:]:
            out += " - " + piece[1:] if piece.startswith("-") else " + " + piece
        return out

    def __repr__(self):
        return f"SymFunc({self.degree}, {self.basis!r}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [
                {"partition": list(lam), "coeff": _coeff_to_str(c)} for lam, c in self.items()
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data) -> "SymFunc":
        if isinstance(data, str):
            data = json.loads(data)
        terms = {tuple(t["partition"]): _coeff_from_str(t["coeff"]) for t in data["terms"]}
        return cls(int(data["degree"]), data["basis"], terms)


def _coeff_to_str(c) -> str:
    if isinstance(c, Poly):
        return c.to_str(compact=True)
    return str(c)


def _coeff_from_str(s: str):
    s = s.strip()
    if ")/(" in s:
        num, den = s.strip("()").split(")/(")
        return RatFunc(Poly.parse(num), Poly.parse(den))
    if "t" in s:
        return Poly.parse(s)
    return normalize_number(Fraction(s))


def _format_term(c, name: str) -> str:
    if isinstance(c, RatFunc) and not c.is_polynomial():
        return f"{c}*{name}"
    if isinstance(c, Poly):
        if c.degree == 0:
            c = c.coeffs[0]
        else:
            nonzero = [k for k, x in enumerate(c.coeffs) if x]
            if len(nonzero) == 1:
                body = c.to_str(compact=True)
                return f"{body}*{name}"
            return f"({c.to_str(compact=True)})*{name}"
    if c == 1:
        return name
    if c == -1:
        return "-" + name
    return f"{c}*{name}"


# ---------------------------------------------------------------------------
# Monomial products and transition matrices
# ---------------------------------------------------------------------------

def _distinct_arrangements(vec):
    """Distinct rearrangements of ``vec`` without generating duplicates."""
    counts = {}
    for x in vec:
        counts[x] = counts.get(x, 0) + 1
    values = sorted(counts)
    size = len(vec)
    out = []
    cur = []

    def rec():
        if len(cur) == size:
            out.append(tuple(cur))
            return
        for v in values:
            if counts[v]:
                counts[v] -= 1
                cur.append(v)
                rec()
                cur.pop()
                counts[v] += 1

    rec()
    return out


@lru_cache(maxsize=None)
def monomial_product(lam: tuple, mu: tuple) -> dict:
    """Expansion of ``m_lam * m_mu`` in the monomial basis (integer coefficients)."""
    if not lam:
        return {mu: 1}
    if not mu:
        return {lam: 1}
    n = sum(lam) + sum(mu)
    lo, hi = max(len(lam), len(mu)), len(lam) + len(mu)
    out = {}
    for nu in partitions_of(n):
        length = len(nu)
        if not lo <= length <= hi:
            continue
        count = 0
        for alpha in _distinct_arrangements(lam + (0,) * (length - len(lam))):
            beta = [a - b for a, b in zip(nu, alpha)]
            if min(beta) < 0:
                continue
            if tuple(sorted((b for b in beta if b), reverse=True)) == mu:
                count += 1
        if count:
            out[nu] = count
    return out


def _mul_m_dicts(a: dict, b: dict) -> dict:
    out = {}
    for lam, c in a.items():
        for mu, d in b.items():
            cd = _scale(c, d)
            for nu, k in monomial_product(lam, mu).items():
                out[nu] = out.get(nu, 0) + _scale(cd, k)
    return out


def _generator(basis: str, k: int) -> dict:
    if basis == "e":
        return {(1,) * k: 1}
    if basis == "h":
        return {mu: 1 for mu in partitions_of(k)}
    return {(k,): 1}  # p


def _row_to_m(basis: str, lam: tuple) -> dict:
    if basis == "m":
        return {lam: 1}
    if basis == "s":
        from .tableaux import kostka_number

        return {
            mu: k for mu in partitions_of(sum(lam)) if (k := kostka_number(lam, mu))
        }
    if not lam:
        return {(): 1}
    return _mul_m_dicts(_cached_row(basis, lam[:-1]), _generator(basis, lam[-1]))


@lru_cache(maxsize=None)
def _cached_row(basis: str, lam: tuple) -> dict:
    return _row_to_m(basis, lam)


def _check_degree(n: int):
    if n > DEGREE_CAP:
        raise ValueError(f"degree {n} exceeds the configured cap {DEGREE_CAP}")


@lru_cache(maxsize=None)
def _to_m_matrix_cached(basis: str, n: int) -> dict:
    return {lam: _cached_row(basis, lam) for lam in partitions_of(n)}


def transition_to_m(basis: str, n: int) -> dict:
    """``{lam: {mu: coeff}}`` with ``b_lam = sum coeff * m_mu``."""
    _check_basis(basis)
    _check_degree(n)
    with _lock:
        return _to_m_matrix_cached(basis, n)


def _invert(rows: dict, index) -> dict:
    """Exact inverse over Q of the square matrix ``rows`` (dict of dicts)."""
    size = len(index)
    pos = {lam: i for i, lam in enumerate(index)}
    mat = [[Fraction(0)] * size + [Fraction(int(i == j)) for j in range(size)] for i in range(size)]
    for lam, row in rows.items():
        for mu, c in row.items():
            mat[pos[lam]][pos[mu]] = Fraction(c)
    for col in range(size):
        piv = next((r for r in range(col, size) if mat[r][col] != 0), None)
        if piv is None:
            raise ArithmeticError("singular transition matrix")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = 1 / mat[col][col]
        mat[col] = [x * inv for x in mat[col]]
        for r in range(size):
            if r != col and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[col])]
    # mat[:, size:] is inverse of A where rows of A index basis elements.
    out = {}
    for i, lam in enumerate(index):
        out[lam] = {
            mu: normalize_number(mat[i][size + j])
            for j, mu in enumerate(index)
            if mat[i][size + j] != 0
        }
    return out


@lru_cache(maxsize=None)
def _from_m_matrix_cached(basis: str, n: int) -> dict:
    index = partitions_of(n)
    inv = _invert(_to_m_matrix_cached(basis, n), index)
    # A[lam][mu]: b_lam = sum_mu A m_mu, so m = A^{-1} b, i.e. m_mu = sum_lam inv[mu][lam] b_lam
    return inv


def transition_from_m(basis: str, n: int) -> dict:
    """``{mu: {lam: coeff}}`` with ``m_mu = sum coeff * b_lam``."""
    _check_basis(basis)
    _check_degree(n)
    with _lock:
        if basis == "m":
            return {lam: {lam: 1} for lam in partitions_of(n)}
        _to_m_matrix_cached(basis, n)
        return _from_m_matrix_cached(basis, n)


def _apply(f_terms: dict, matrix: dict) -> dict:
    out = {}
    for lam, c in f_terms.items():
        for mu, a in matrix[lam].items():
            out[mu] = out.get(mu, 0) + _scale(c, a)
    return out


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def to_monomial(f: SymFunc) -> SymFunc:
    if f.basis == "m":
        return f
    return SymFunc(f.degree, "m", _apply(f._terms, transition_to_m(f.basis, f.degree)))


def from_monomial(f: SymFunc, target: str) -> SymFunc:
    if f.basis != "m":
        raise ValueError("from_monomial expects a monomial-basis input")
    _check_basis(target)
    if target == "m":
        return f
    return SymFunc(f.degree, target, _apply(f._terms, transition_from_m(target, f.degree)))


def convert(f: SymFunc, target: str) -> SymFunc:
    if f.basis == target:
        return f
    return from_monomial(to_monomial(f), target)


def hall_inner(f: SymFunc, g: SymFunc):
    """Hall scalar product, using ``<m_lam, h_mu> = delta``."""
    if f.degree != g.degree:
        raise ValueError(f"degree mismatch: {f.degree} vs {g.degree}")
    fm = to_monomial(f)
    gh = convert(g, "h")
    total = 0
    for lam, c in fm._terms.items():
        d = gh._terms.get(lam)
        if d is not None:
            total = total + _scale(c, d)
    if isinstance(total, Fraction):
        total = normalize_number(total)
    return total


def omega(f: SymFunc) -> SymFunc:
    """The involution swapping ``e_lam`` and ``h_lam``; result in ``f``'s basis."""
    fe = convert(f, "e")
    swapped = SymFunc(f.degree, "h", fe._terms)
    return convert(swapped, f.basis)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Ring product.  Multiplicative bases (e, h, p) concatenate partitions;
    everything else is multiplied in the monomial basis."""
    n = f.degree + g.degree
    if f.basis == g.basis and f.basis in ("e", "h", "p"):
        out = {}
        for lam, c in f._terms.items():
            for mu, d in g._terms.items():
                nu = tuple(sorted(lam + mu, reverse=True))
                out[nu] = out.get(nu, 0) + _scale(c, d)
        return SymFunc(n, f.basis, out)
    return SymFunc(n, "m", _mul_m_dicts(to_monomial(f)._terms, to_monomial(g)._terms))


def multiply_via_monomial(f: SymFunc, g: SymFunc) -> SymFunc:
    return SymFunc(
        f.degree + g.degree, "m", _mul_m_dicts(to_monomial(f)._terms, to_monomial(g)._terms)
    )


def _substitute_power(c, d: int):
    if isinstance(c, Poly):
        return c.substitute_power(d)
    if isinstance(c, RatFunc):
        return RatFunc(c.num.substitute_power(d), c.den.substitute_power(d))
    return c


def plethysm_pd(f: SymFunc, d: int) -> SymFunc:
    """``p_d[f]``: x_j -> x_j**d together with t -> t**d."""
    if d < 1:
        raise ValueError("plethysm_pd needs d >= 1")
    fm = to_monomial(f)
    out = {
        tuple(d * part for part in lam): _substitute_power(c, d) for lam, c in fm._terms.items()
    }
    return SymFunc(d * f.degree, "m", out)


def specialize_t(f: SymFunc, q) -> SymFunc:
    """Evaluate every coefficient at ``t = q`` exactly."""
    if isinstance(q, float):
        raise TypeError("q must be exact (int or Fraction)")
    return f.map_coeffs(lambda c: evaluate(c, q))


# shorthand constructors ------------------------------------------------------

def m(*parts) -> SymFunc:
    return SymFunc.basis_element("m", parts)


def e(*parts) -> SymFunc:
    return SymFunc.basis_element("e", parts)


def h(*parts) -> SymFunc:
    return SymFunc.basis_element("h", parts)


def p(*parts) -> SymFunc:
    return SymFunc.basis_element("p", parts)


def s(*parts) -> SymFunc:
    return SymFunc.basis_element("s", parts)
