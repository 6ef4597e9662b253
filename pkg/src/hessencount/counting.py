"""Point counts of Hessenberg varieties over finite fields and Poincare
polynomials of their complex counterparts, computed as Hall scalar products
of invariant-flag and chromatic quasisymmetric functions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .algebra import (
    Poly,
    as_partition,
    evaluate,
    normalize_number,
    parse_partition,
    partitions_of,
    q_factorial_partition,
)
from .gfq import (
    SimilarityClassType,
    Unrealizable,
    count_hessenberg_bruteforce,
    count_irreducible,
    f_tau,
    field as gf,
    operator_from_type,
)
from .hessenberg import HessFn, csqf, prop_base_eval
from .symfunc import SymFunc, h, hall_inner, multiply, omega, p, specialize_t
from .tableaux import hall_littlewood


class NotAnInteger(ArithmeticError):
    """A quantity that must count points came out non-integral or negative."""


def _as_count(x, what: str) -> int:
    x = normalize_number(x) if isinstance(x, Fraction) else x
    if isinstance(x, Poly) and x.degree in (None, 0):
        x = x(0)
    if not isinstance(x, int) or x < 0:
        raise NotAnInteger(f"{what} evaluated to {x!r}")
    return x


@dataclass
class CountReport:
    m: HessFn
    tau: SimilarityClassType
    q: int
    formula_count: int
    bruteforce_count: Optional[int] = None

    @property
    def agreement(self) -> Optional[bool]:
        if self.bruteforce_count is None:
            return None
        return self.formula_count == self.bruteforce_count

    def to_json(self) -> dict:
        out = {"m": list(self.m), "type": str(self.tau), "q": self.q, "formula": self.formula_count}
        if self.bruteforce_count is not None:
            out["bruteforce"] = self.bruteforce_count
            out["agree"] = self.agreement
        return out


@dataclass
class PoincareReport:
    m: HessFn
    jordan: tuple
    poly: Poly
    palindromic: Optional[bool] = field(default=None)

    @property
    def degree(self):
        return self.poly.degree

    @property
    def betti(self) -> list:
        return list(self.poly.coeffs)

    def to_json(self) -> dict:
        out = {
            "m": list(self.m),
            "jordan": [list(lam) for lam in self.jordan],
            "poly": self.betti,
            "text": str(self.poly),
            "degree": self.degree,
        }
        if self.palindromic is not None:
            out["palindromic"] = self.palindromic
        return out


def _check_type(m: HessFn, tau: SimilarityClassType, q: int):
    if tau.size != m.n:
        raise ValueError(f"type {tau} has size {tau.size}, Hessenberg function has n = {m.n}")
    gf(q)  # validates q
    if not tau.is_realizable(q):
        raise Unrealizable(f"type {tau} is not realizable over F_{q}")


@lru_cache(maxsize=None)
def omega_csqf(m: HessFn) -> SymFunc:
    return omega(csqf(m))


def count_points(m, tau: SimilarityClassType, q: int) -> int:
    """``<F_tau(x; q), omega X_m(x; q)>``"""
    m = HessFn(m)
    _check_type(m, tau, q)
    value = hall_inner(specialize_t(f_tau(tau), q), specialize_t(omega_csqf(m), q))
    return _as_count(value, f"point count for m={m}, type {tau}, q={q}")


def _qint(k: int, q):
    return sum(q**j for j in range(k))


def _qfact(k: int, q):
    out = 1
    for j in range(1, k + 1):
        out *= _qint(j, q)
    return out


def invariant_lines(tau: SimilarityClassType, q: int) -> int:
    """Number of 1-dimensional invariant subspaces of an operator of type ``tau``."""
    return sum(_qint(len(lam), q) for d, lam in tau.pairs if d == 1)


def count_simple(m, tau: SimilarityClassType, q: int) -> int:
    """Closed form valid when ``m(2) = n``."""
    m = HessFn(m)
    n = m.n
    if n < 2 or m(2) != n:
        raise ValueError(f"closed form needs n >= 2 and m(2) = n, got m = {m}")
    _check_type(m, tau, q)
    a = m(1)
    s = invariant_lines(tau, q)
    return _qfact(n - 2, q) * (_qint(n, q) * _qint(a - 1, q) + q ** (a - 1) * _qint(n - a, q) * s)


def _check_semisimple(alpha, q):
    mult = {}
    for d in alpha:
        mult[d] = mult.get(d, 0) + 1
    for d, k in mult.items():
        if k > count_irreducible(q, d):
            raise Unrealizable(
                f"regular semisimple type {alpha} needs {k} irreducibles of degree {d}; "
                f"F_{q} has {count_irreducible(q, d)}"
            )


def count_regular_semisimple(m, alpha, q: int) -> int:
    """``<p_alpha, omega X_m(x; q)>``"""
    m = HessFn(m)
    alpha = as_partition(sorted(alpha, reverse=True))
    if sum(alpha) != m.n:
        raise ValueError(f"|{alpha}| != {m.n}")
    gf(q)
    _check_semisimple(alpha, q)
    value = hall_inner(p(*alpha), specialize_t(omega_csqf(m), q))
    return _as_count(value, f"regular semisimple count for m={m}, alpha={alpha}, q={q}")


def _require_nonneg_poly(value, what: str) -> Poly:
    if isinstance(value, int):
        value = Poly((value,))
    if not isinstance(value, Poly) or not value.is_integral() or any(c < 0 for c in value.coeffs):
        raise NotAnInteger(f"{what} = {value!r} is not a nonnegative integer polynomial")
    return value


def _jordan_product(jordan) -> SymFunc:
    out = SymFunc.one()
    for lam in jordan:
        out = multiply(out, hall_littlewood(lam))
    return out


def parse_jordan(text: str) -> tuple:
    """``"2,1;1"`` -> ``((2, 1), (1,))``: one partition per eigenvalue."""
    parts = [chunk for chunk in text.split(";") if chunk.strip()]
    if not parts:
        raise ValueError(f"empty Jordan type {text!r}")
    return tuple(sorted((parse_partition(chunk) for chunk in parts), reverse=True))


def poincare(m, jordan) -> PoincareReport:
    """Poincare polynomial for a complex operator of Jordan type ``jordan``
    (a multiset of partitions, one per eigenvalue)."""
    m = HessFn(m)
    jordan = tuple(sorted((as_partition(sorted(lam, reverse=True)) for lam in jordan), reverse=True))
    if sum(sum(lam) for lam in jordan) != m.n:
        raise ValueError(f"Jordan type {jordan} does not have total size {m.n}")
    value = hall_inner(_jordan_product(jordan), omega_csqf(m))
    poly = _require_nonneg_poly(value, f"Poincare polynomial of m={m}, type {jordan}")
    return PoincareReport(m, jordan, poly, poly.is_palindromic())


def poincare_regular(m, mu) -> PoincareReport:
    """``<h_mu, omega X_m(x; t)>`` for a regular operator with Jordan blocks ``mu``."""
    m = HessFn(m)
    mu = as_partition(sorted(mu, reverse=True))
    if sum(mu) != m.n:
        raise ValueError(f"|{mu}| != {m.n}")
    poly = _require_nonneg_poly(hall_inner(h(*mu), omega_csqf(m)), f"regular Poincare of m={m}")
    return PoincareReport(m, tuple((part,) for part in mu), poly, poly.is_palindromic())


def complete_base(tau: SimilarityClassType, q: int) -> dict:
    """``{lam: [lam]_q! * <F_tau(x; q), h_lam>}``: the counts at ``k_lam``."""
    F = specialize_t(f_tau(tau), q)
    return {
        lam: evaluate(q_factorial_partition(lam), q) * hall_inner(F, h(*lam))
        for lam in partitions_of(tau.size)
    }


def count_via_recursion(m, tau: SimilarityClassType, q: int) -> int:
    """Expansion over complete Hessenberg functions, evaluated with exact
    rationals (divides by ``[lam]_q!``)."""
    m = HessFn(m)
    _check_type(m, tau, q)
    value = prop_base_eval(m, complete_base(tau, q), q)
    return _as_count(value, f"recursive count for m={m}, type {tau}, q={q}")


def bruteforce_count(m, tau: SimilarityClassType, q: int, budget: Optional[int] = None) -> int:
    m = HessFn(m)
    _check_type(m, tau, q)
    return count_hessenberg_bruteforce(m, operator_from_type(tau, gf(q)), budget)


def count_report(m, tau: SimilarityClassType, q: int, bruteforce: bool = False,
                 budget: Optional[int] = None) -> CountReport:
    m = HessFn(m)
    rep = CountReport(m, tau, q, count_points(m, tau, q))
    if bruteforce:
        rep.bruteforce_count = bruteforce_count(m, tau, q, budget)
    return rep


def interpolate(points) -> Poly:
    """Lagrange interpolation through ``[(x, y), ...]`` with exact rationals."""
    result = Poly()
    for i, (xi, yi) in enumerate(points):
        term = Poly((Fraction(yi),))
        for j, (xj, _) in enumerate(points):
            if j != i:
                term = term * Poly((Fraction(-xj), Fraction(1))) / Fraction(xi - xj)
        result = result + term
    return result


__all__ = [
    "CountReport",
    "NotAnInteger",
    "PoincareReport",
    "bruteforce_count",
    "complete_base",
    "count_points",
    "count_regular_semisimple",
    "count_report",
    "count_simple",
    "count_via_recursion",
    "interpolate",
    "invariant_lines",
    "omega_csqf",
    "parse_jordan",
    "poincare",
    "poincare_regular",
]
