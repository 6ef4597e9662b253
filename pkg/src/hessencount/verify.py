"""Cross-checks tying the formula side to the enumeration oracles.

Every check returns a :class:`CheckResult`; failures are data carrying the
offending cell, never exceptions.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .algebra import T, dominates, n_statistic, partitions_of, q_factorial_partition
from .counting import (
    bruteforce_count,
    count_points,
    count_simple,
    count_via_recursion,
    interpolate,
    poincare,
    poincare_regular,
)
from .gfq import (
    SimilarityClassType,
    count_hessenberg_bruteforce,
    enumerate_types,
    f_t_bruteforce,
    f_tau,
    field as gf,
    operator_from_type,
)
from .hessenberg import HessFn, complete_hess, csqf, enumerate_hess, modular_triples
from .symfunc import h, hall_inner, specialize_t
from .tableaux import (
    hall_littlewood,
    kostka_foulkes,
    monomial_coeff_a,
    monomial_coeff_val,
    nilpotent_poincare,
)
from .counting import omega_csqf

MAX_FAILURES = 20
PRIME_POWERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27)


@dataclass
class CheckResult:
    name: str
    cells: int = 0
    failures: list = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **payload):
        if len(self.failures) < MAX_FAILURES:
            self.failures.append({k: _jsonable(v) for k, v in payload.items()})

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "cells": self.cells,
            "failures": self.failures,
            "note": self.note,
        }

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f"  ({self.note})" if self.note else ""
        return f"{status}  {self.name:<28} cells={self.cells}{extra}"


def _jsonable(v):
    if isinstance(v, (int, bool, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return str(v)


def _run(result: CheckResult, cells: Iterable, fn: Callable, workers: int = 1) -> CheckResult:
    """Evaluate ``fn(cell) -> None | failure dict`` over ``cells`` in order."""
    cells = list(cells)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(fn, cells))
    else:
        outcomes = [fn(c) for c in cells]
    result.cells += len(cells)
    for out in outcomes:
        if out:
            result.fail(**out)
    return result


def _type_cells(ranges):
    for n_max, q in ranges:
        for n in range(1, n_max + 1):
            for tau in enumerate_types(n, q):
                for m in enumerate_hess(n):
                    yield m, tau, q


# ---------------------------------------------------------------------------
# Individual checks
# ---------------------------------------------------------------------------

def check_main_theorem(ranges, workers: int = 1) -> CheckResult:
    """Formula count equals the brute-force flag count; ``ranges`` is
    ``[(n_max, q), ...]``."""
    res = CheckResult("main_theorem", note=_ranges_note(ranges))

    def cell(c):
        m, tau, q = c
        a, b = count_points(m, tau, q), bruteforce_count(m, tau, q)
        if a != b:
            return {"m": m, "type": tau, "q": q, "formula": a, "bruteforce": b}

    return _run(res, _type_cells(ranges), cell, workers)


def check_recursion(ranges, workers: int = 1) -> CheckResult:
    res = CheckResult("recursion_agreement", note=_ranges_note(ranges))

    def cell(c):
        m, tau, q = c
        a, b = count_points(m, tau, q), count_via_recursion(m, tau, q)
        if a != b:
            return {"m": m, "type": tau, "q": q, "formula": a, "recursion": b}

    return _run(res, _type_cells(ranges), cell, workers)


def check_invariant_flags(n_max: int, qs) -> CheckResult:
    res = CheckResult("invariant_flag_function", note=_qs_note(qs))
    cells = [(tau, q) for q in qs for n in range(1, n_max + 1) for tau in enumerate_types(n, q)]

    def cell(c):
        tau, q = c
        brute = f_t_bruteforce(operator_from_type(tau, gf(q)))
        formula = specialize_t(f_tau(tau), q)
        if brute != formula:
            return {"type": tau, "q": q, "bruteforce": brute, "formula": formula}

    return _run(res, cells, cell)


def check_modular_symbolic(n_max: int) -> CheckResult:
    res = CheckResult("modular_law_symbolic")
    cells = [tr for n in range(1, n_max + 1) for tr in modular_triples(n)]

    def cell(tr):
        if (1 + T) * csqf(tr.m1) != T * csqf(tr.m0) + csqf(tr.m2):
            return {"m0": tr.m0, "m1": tr.m1, "m2": tr.m2, "condition": tr.condition}

    return _run(res, cells, cell)


def check_modular_counts(n_max: int, qs) -> CheckResult:
    res = CheckResult("modular_law_counts", note=_qs_note(qs))
    cells = [
        (tr, tau, q)
        for q in qs
        for n in range(1, n_max + 1)
        for tr in modular_triples(n)
        for tau in enumerate_types(n, q)
    ]

    def cell(c):
        tr, tau, q = c
        T_op = operator_from_type(tau, gf(q))
        f0, f1, f2 = (count_hessenberg_bruteforce(m, T_op) for m in (tr.m0, tr.m1, tr.m2))
        if (1 + q) * f1 != q * f0 + f2:
            return {"m1": tr.m1, "condition": tr.condition, "type": tau, "q": q, "f": [f0, f1, f2]}

    return _run(res, cells, cell)


def check_hall_littlewood(n_max: int) -> CheckResult:
    res = CheckResult("hall_littlewood_sanity")
    cells = [lam for n in range(1, n_max + 1) for lam in partitions_of(n)]

    def cell(lam):
        if specialize_t(hall_littlewood(lam), 1) != h(*lam):
            return {"lam": lam, "issue": "H(x;1) != h_lam"}
        for mu in partitions_of(sum(lam)):
            kf = kostka_foulkes(mu, lam)
            if not kf.is_integral() or any(c < 0 for c in kf.coeffs):
                return {"mu": mu, "lam": lam, "issue": "negative or non-integral", "K": kf}
            if not kf.is_zero() and not dominates(mu, lam):
                return {"mu": mu, "lam": lam, "issue": "nonzero off dominance", "K": kf}
        if kostka_foulkes(lam, lam) != T ** n_statistic(lam):
            return {"lam": lam, "issue": "K_lam_lam != t^n(lam)"}

    return _run(res, cells, cell)


def check_tabloid_statistics(n_max: int) -> CheckResult:
    res = CheckResult("tabloid_statistics")
    cells = [(lam, mu) for n in range(1, n_max + 1) for lam in partitions_of(n) for mu in partitions_of(n)]

    def cell(c):
        lam, mu = c
        pairing = hall_inner(hall_littlewood(lam), h(*mu))
        w, val = monomial_coeff_a(lam, mu), monomial_coeff_val(lam, mu)
        if not pairing == w == val:
            return {"lam": lam, "mu": mu, "pairing": pairing, "w": w, "val": val}

    return _run(res, cells, cell)


def check_compatible_fillings(n_max: int) -> CheckResult:
    res = CheckResult("compatible_fillings")
    cells = [(lam, m) for n in range(1, n_max + 1) for lam in partitions_of(n) for m in enumerate_hess(n)]
    cells += [(lam, ("k", mu)) for n in range(1, n_max + 1) for lam in partitions_of(n) for mu in partitions_of(n)]

    def cell(c):
        lam, m = c
        if isinstance(m, tuple) and m and m[0] == "k":
            mu = m[1]
            km = complete_hess(mu)
            lhs = hall_inner(hall_littlewood(lam), h(*mu)) * q_factorial_partition(mu)
            rhs = nilpotent_poincare(lam, km)
            if lhs != rhs:
                return {"lam": lam, "k_mu": mu, "pairing_times_fact": lhs, "fillings": rhs}
            return None
        lhs = nilpotent_poincare(lam, m)
        rhs = hall_inner(hall_littlewood(lam), omega_csqf(m))
        if lhs != rhs:
            return {"lam": lam, "m": m, "fillings": lhs, "pairing": rhs}

    return _run(res, cells, cell)


def _simple_functions(n):
    return [HessFn((a,) + (n,) * (n - 1)) for a in range(1, n + 1)] if n >= 2 else []


def check_closed_form(n_max: int, qs) -> CheckResult:
    res = CheckResult("closed_form_m2_eq_n", note=_qs_note(qs))
    cells = [
        (m, tau, q)
        for q in qs
        for n in range(2, n_max + 1)
        for tau in enumerate_types(n, q)
        for m in _simple_functions(n)
    ]

    def cell(c):
        m, tau, q = c
        a, b = count_simple(m, tau, q), count_points(m, tau, q)
        if a != b:
            return {"m": m, "type": tau, "q": q, "closed_form": a, "formula": b}

    return _run(res, cells, cell)


def split_jordan_types(n: int) -> list:
    """Multisets of partitions with total size ``n``."""
    return [t.jordan_type() for t in enumerate_types(n, max(n, 2)) if t.is_split()]


def interpolation_points(r: int, count: int) -> list:
    """The first ``count`` prime powers with at least ``r`` elements."""
    qs = [q for q in PRIME_POWERS if q >= r][:count]
    if len(qs) < count:
        raise ValueError(f"need {count} prime powers >= {r}")
    return qs


def interpolated_poincare(m, jordan, budget: Optional[int] = None):
    """Fit brute-force counts at ``n(n-1)/2 + 1`` prime powers (a degree
    bound valid for every Hessenberg variety); returns ``(poly, samples)``."""
    m = HessFn(m)
    degree_bound = m.n * (m.n - 1) // 2
    tau = SimilarityClassType.split(jordan)
    samples = []
    for q in interpolation_points(len(jordan), degree_bound + 1):
        samples.append((q, bruteforce_count(m, tau, q, budget)))
    return interpolate(samples), samples


def check_poincare(n_palindromic: int, n_interp: int) -> CheckResult:
    res = CheckResult("poincare_properties")
    cells = [("pal", m, mu) for n in range(1, n_palindromic + 1) for m in enumerate_hess(n) for mu in partitions_of(n)]
    cells += [("interp", m, jordan) for n in range(1, n_interp + 1) for m in enumerate_hess(n) for jordan in split_jordan_types(n)]

    def cell(c):
        kind, m, data = c
        if kind == "pal":
            rep = poincare_regular(m, data)
            if not rep.palindromic:
                return {"m": m, "mu": data, "poly": rep.poly, "issue": "not palindromic"}
            return None
        rep = poincare(m, data)
        fitted, samples = interpolated_poincare(m, data)
        if fitted != rep.poly:
            return {"m": m, "jordan": data, "poly": rep.poly, "interpolated": fitted, "samples": samples}

    return _run(res, cells, cell)


def check_named_values() -> CheckResult:
    res = CheckResult("named_values")
    m = HessFn((2, 3, 3))
    cells = [
        ("poincare", ((1,), (1,), (1,)), [1, 4, 1]),
        ("poincare", ((3,),), [1, 2, 1]),
        ("count", "(3,[1])", 7),
    ]

    def cell(c):
        kind, data, expected = c
        if kind == "poincare":
            poly = poincare(m, data).poly
            fitted, samples = interpolated_poincare(m, data)
            if list(poly.coeffs) != expected or fitted != poly:
                return {"jordan": data, "poly": poly, "interpolated": fitted, "expected": expected}
            return None
        tau = SimilarityClassType.parse(data)
        a, b = count_points(m, tau, 2), bruteforce_count(m, tau, 2)
        if not a == b == expected:
            return {"type": data, "formula": a, "bruteforce": b, "expected": expected}

    return _run(res, cells, cell)


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------

def _ranges_note(ranges):
    return ", ".join(f"n<={n} q={q}" for n, q in ranges) or "no fields tested"


def _qs_note(qs):
    return "q in " + ",".join(map(str, qs)) if qs else "no fields tested"


@dataclass
class SuiteReport:
    n_max: int
    q_list: list
    checks: list
    notice: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "n_max": self.n_max,
            "q": list(self.q_list),
            "passed": self.passed,
            "notice": self.notice,
            "checks": [c.to_json() for c in self.checks],
        }

    def table(self) -> str:
        lines = [c.line() for c in self.checks]
        if self.notice:
            lines.insert(0, self.notice)
        lines.append("ALL PASS" if self.passed else "FAILURES PRESENT")
        return "\n".join(lines)


def verify_suite(n_max: int, q_list, workers: int = 1) -> SuiteReport:
    """Run every cross-check with sizes up to ``n_max`` over each ``q``."""
    q_list = [int(q) for q in q_list]
    if n_max < 1:
        return SuiteReport(n_max, q_list, [], notice="n_max < 1: nothing to check (vacuous pass)")
    notice = "" if q_list else "no fields tested: field-dependent checks are vacuous"
    ranges = [(n_max, q) for q in q_list]
    checks = [
        check_main_theorem(ranges, workers),
        check_invariant_flags(n_max, q_list),
        check_modular_symbolic(n_max),
        check_modular_counts(n_max, q_list),
        check_recursion(ranges, workers),
        check_hall_littlewood(n_max),
        check_tabloid_statistics(n_max),
        check_compatible_fillings(n_max),
        check_closed_form(n_max, q_list),
        check_poincare(n_max, min(n_max, 3)),
        check_named_values(),
    ]
    return SuiteReport(n_max, q_list, checks, notice)
