"""Hessenberg functions, their Dyck paths and indifference graphs, chromatic
quasisymmetric functions, and modular-law triples."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels
from .algebra import Poly, evaluate, exact_div, partitions_of, q_factorial_partition
from .symfunc import SymFunc, from_monomial


class HessFn(tuple):
    """Weakly increasing ``m: [n] -> [n]`` with ``m(i) >= i``; ``m[i-1] == m(i)``."""

    def __new__(cls, values):
        vals = tuple(int(v) for v in values)
        n = len(vals)
        if n == 0:
            raise ValueError("a Hessenberg function needs n >= 1")
        for i, v in enumerate(vals, start=1):
            if v < i:
                raise ValueError(f"m({i}) = {v} < {i}")
            if v > n:
                raise ValueError(f"m({i}) = {v} > n = {n}")
            if i > 1 and v < vals[i - 2]:
                raise ValueError(f"not weakly increasing at {i}: {vals}")
        return super().__new__(cls, vals)

    @property
    def n(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return self[i - 1]

    def edges(self) -> list:
        return [(i, j) for i in range(1, self.n + 1) for j in range(i + 1, self[i - 1] + 1)]

    def to_dyck(self) -> str:
        """``m(i)`` north steps precede the i-th east step."""
        out, north = [], 0
        for v in self:
            out.append("N" * (v - north) + "E")
            north = v
        return "".join(out)

    @classmethod
    def from_dyck(cls, path: str) -> "HessFn":
        path = path.strip().upper()
        if set(path) - {"N", "E"}:
            raise ValueError(f"Dyck path may only contain N and E: {path!r}")
        vals, north = [], 0
        for step in path:
            if step == "N":
                north += 1
            else:
                vals.append(north)
        if north != len(vals):
            raise ValueError(f"unbalanced Dyck path {path!r}")
        return cls(vals)

    def concat(self, other: "HessFn") -> "HessFn":
        return HessFn(tuple(self) + tuple(v + self.n for v in other))

    def __str__(self):
        return ",".join(str(v) for v in self)

    def __repr__(self):
        return f"HessFn({tuple(self)})"


def hess_from_tuple(values) -> HessFn:
    return HessFn(values)


def parse_hess(text: str) -> HessFn:
    """Accept ``"2,3,3"`` or a Dyck word such as ``"NNENEE"``."""
    text = text.strip()
    if text and set(text.upper()) <= {"N", "E"}:
        return HessFn.from_dyck(text)
    try:
        vals = [int(x) for x in text.strip("()[]").split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"bad Hessenberg function {text!r}") from exc
    return HessFn(vals)


@lru_cache(maxsize=None)
def enumerate_hess(n: int) -> tuple:
    if n < 1:
        raise ValueError("n must be >= 1")
    out = []

    def rec(prefix):
        i = len(prefix) + 1
        if i > n:
            out.append(HessFn(prefix))
            return
        lo = max(i, prefix[-1] if prefix else 1)
        for v in range(lo, n + 1):
            rec(prefix + [v])

    rec([])
    return tuple(out)


def irreducible_components(m: HessFn) -> list:
    """Unique factorization into irreducible Dyck paths."""
    out, start = [], 0
    for i in range(1, m.n + 1):
        if m[i - 1] == i:
            out.append(HessFn(v - start for v in m[start:i]))
            start = i
    return out


def is_irreducible(m: HessFn) -> bool:
    return len(irreducible_components(m)) == 1


def complete_hess(lam) -> HessFn:
    """``k_lam``: blocks of sizes ``lam_1, lam_2, ...`` each mapped to its top."""
    vals, top = [], 0
    for part in lam:
        top += part
        vals.extend([top] * part)
    return HessFn(vals)


# ---------------------------------------------------------------------------
# Chromatic quasisymmetric function
# ---------------------------------------------------------------------------

def _neighbour_floor(m: HessFn) -> np.ndarray:
    """``lo[v]`` = first (0-based) vertex adjacent to ``v`` among earlier ones."""
    lo = np.zeros(m.n, dtype=np.int64)
    for v in range(m.n):
        u = 0
        while u < v and m[u] < v + 1:
            u += 1
        lo[v] = u
    return lo


def monomial_coefficient(m: HessFn, lam) -> Poly:
    """Coefficient of ``m_lam``: colorings using color ``j`` exactly ``lam_j``
    times, weighted by ``t**asc``."""
    counts = _kernels.ascent_counts(
        _neighbour_floor(m), np.asarray(lam, dtype=np.int64), len(m.edges())
    )
    return Poly(int(c) for c in counts)


@lru_cache(maxsize=None)
def _csqf_monomial(m: HessFn) -> SymFunc:
    return SymFunc(m.n, "m", {lam: monomial_coefficient(m, lam) for lam in partitions_of(m.n)})


def csqf_monomial(m: HessFn) -> SymFunc:
    return _csqf_monomial(HessFn(m))


@lru_cache(maxsize=None)
def _csqf(m: HessFn) -> SymFunc:
    return from_monomial(_csqf_monomial(m), "e")


def csqf(m) -> SymFunc:
    """Chromatic quasisymmetric function of ``G(m)`` in the e-basis."""
    return _csqf(HessFn(m))


def e_coefficients(m) -> dict:
    """``{lam: a_lam(t)}`` for every partition, zeros included."""
    X = csqf(m)
    return {lam: X.coeff(lam) for lam in partitions_of(len(m))}


# ---------------------------------------------------------------------------
# Modular law
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ModularTriple:
    m0: HessFn
    m1: HessFn
    m2: HessFn
    condition: int
    i: int


def _triples_for(m1: HessFn):
    n = m1.n

    def val(j):
        return 0 if j == 0 else m1[j - 1]

    for i in range(1, n):
        if val(i - 1) < val(i) < val(i + 1) and val(val(i)) == val(val(i) + 1):
            lo = list(m1)
            hi = list(m1)
            lo[i - 1] -= 1
            hi[i - 1] += 1
            yield ModularTriple(HessFn(lo), m1, HessFn(hi), 1, i)
        if val(i + 1) == val(i) + 1 and i not in m1:
            lo = list(m1)
            hi = list(m1)
            lo[i] = val(i)
            hi[i - 1] = val(i + 1)
            yield ModularTriple(HessFn(lo), m1, HessFn(hi), 2, i)


def modular_triples(n: int) -> list:
    """Every triple on ``[n]`` under either modular-law condition (``m(0) = 0``)."""
    if n < 1:
        return []
    return [tr for m1 in enumerate_hess(n) for tr in _triples_for(m1)]


# ---------------------------------------------------------------------------
# Expansion over complete Hessenberg functions
# ---------------------------------------------------------------------------

def prop_base_eval(m, base: dict, q=None):
    """``sum_lam a_lam(m) / [lam]! * base[lam]``, at ``t = q`` or symbolically
    in ``t`` when ``q`` is None.  Exact rational arithmetic throughout."""
    m = HessFn(m)
    total = 0
    for lam, a in e_coefficients(m).items():
        if a == 0:
            continue
        denom = q_factorial_partition(lam)
        if q is not None:
            a, denom = evaluate(a, q), evaluate(denom, q)
            if denom == 0:
                raise ZeroDivisionError(f"[{lam}]_q! vanishes at q = {q}")
        b = base[lam]
        total = total + exact_div(a * b, denom)
    return total


__all__ = [
    "HessFn",
    "ModularTriple",
    "complete_hess",
    "csqf",
    "csqf_monomial",
    "e_coefficients",
    "enumerate_hess",
    "hess_from_tuple",
    "irreducible_components",
    "is_irreducible",
    "modular_triples",
    "monomial_coefficient",
    "parse_hess",
    "prop_base_eval",
]
