import json
from fractions import Fraction

import pytest

from hessencount.algebra import T, evaluate, partitions_of, q_factorial, q_factorial_partition
from hessencount.counting import (
    NotAnInteger,
    bruteforce_count,
    count_points,
    count_regular_semisimple,
    count_report,
    count_simple,
    count_via_recursion,
    interpolate,
    invariant_lines,
    omega_csqf,
    parse_jordan,
    poincare,
    poincare_regular,
)
from hessencount.gfq import Unrealizable, enumerate_types, f_tau, parse_type
from hessencount.hessenberg import HessFn, complete_hess, enumerate_hess
from hessencount.symfunc import h, hall_inner, multiply, specialize_t
from hessencount.tableaux import hall_littlewood

M233 = HessFn((2, 3, 3))
SPLIT3 = parse_type("(1,[1]);(1,[1]);(1,[1])")
IRR3 = parse_type("(3,[1])")


def test_named_counts():
    assert count_points(M233, IRR3, 2) == 7 == bruteforce_count(M233, IRR3, 2)
    assert count_points(M233, SPLIT3, 3) == 22 == bruteforce_count(M233, SPLIT3, 3)
    assert (1 + 4 * T + T**2)(3) == 22


def test_three_distinct_eigenvalues_need_three_field_elements():
    with pytest.raises(Unrealizable):
        count_points(M233, SPLIT3, 2)
    with pytest.raises(Unrealizable):
        count_regular_semisimple(M233, (1, 1, 1), 2)


def test_errors():
    with pytest.raises(ValueError):
        count_points(M233, parse_type("(1,[1,1])"), 2)
    with pytest.raises(ValueError):
        count_points(M233, IRR3, 6)
    with pytest.raises(ValueError):
        count_simple(HessFn((2, 2, 3)), IRR3, 2)
    with pytest.raises(ValueError):
        poincare(M233, ((1, 1),))
    with pytest.raises(ValueError):
        poincare_regular(M233, (2,))


@pytest.mark.parametrize("q", (2, 3, 4))
@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_complete_flag_variety(q, n):
    kn = complete_hess((n,))
    for tau in enumerate_types(n, q):
        assert count_points(kn, tau, q) == evaluate(q_factorial(n), q)


def test_closed_form_examples():
    assert count_simple(M233, SPLIT3, 3) == 22
    assert count_simple(HessFn((1, 3, 3)), IRR3, 2) == 0 == bruteforce_count((1, 3, 3), IRR3, 2)
    assert invariant_lines(parse_type("(1,[2,1]);(1,[1]);(2,[1])"), 3) == (1 + 3) + 1


@pytest.mark.parametrize("q", (2, 3, 5))
@pytest.mark.parametrize("n", (2, 3, 4, 5))
def test_closed_form_reduction_at_m1_eq_n_minus_1(q, n):
    m = HessFn((n - 1,) + (n,) * (n - 1))
    qi = lambda k: sum(q**j for j in range(k))
    for tau in enumerate_types(n, q):
        s = sum(qi(len(lam)) for d, lam in tau.pairs if d == 1)
        qf = evaluate(q_factorial(n - 2), q)
        assert count_simple(m, tau, q) == qf * (qi(n - 2) * qi(n) + q ** (n - 2) * s) == count_points(m, tau, q)


def test_regular_semisimple_examples():
    assert count_regular_semisimple(M233, (3,), 2) == 7
    assert count_regular_semisimple(M233, (1, 1, 1), 3) == 22
    assert count_regular_semisimple((1, 2, 3), (2, 1), 2) == 0
    assert bruteforce_count((1, 2, 3), parse_type("(2,[1]);(1,[1])"), 2) == 0
    with pytest.raises(Unrealizable):
        count_regular_semisimple(HessFn((4, 4, 4, 4)), (1, 1, 1, 1), 2)
    assert count_regular_semisimple(HessFn((4, 4, 4, 4)), (1, 1, 1, 1), 4) == evaluate(q_factorial(4), 4)


@pytest.mark.parametrize("q", (2, 3))
def test_regular_semisimple_matches_type_count(q):
    for n in range(1, 5):
        for tau in enumerate_types(n, q):
            if all(lam == (1,) for _, lam in tau.pairs):
                alpha = tuple(sorted((d for d, _ in tau.pairs), reverse=True))
                for m in enumerate_hess(n):
                    assert count_regular_semisimple(m, alpha, q) == count_points(m, tau, q)


def test_poincare_examples():
    assert poincare(M233, ((1, 1, 1),)).poly == q_factorial(3)
    assert poincare(M233, ((3,),)).poly == 1 + 2 * T + T**2
    rep = poincare(M233, ((1,), (1,), (1,)))
    assert rep.poly == 1 + 4 * T + T**2 and rep.betti == [1, 4, 1] and rep.degree == 2
    assert poincare(M233, parse_jordan("1;1;1")).poly == rep.poly


def test_poincare_regular_examples():
    assert poincare_regular((1, 2, 3), (3,)).poly == 1
    assert poincare_regular((3, 3, 3), (2, 1)).poly == q_factorial(3)
    for n in range(1, 6):
        for m in enumerate_hess(n):
            assert poincare_regular(m, (1,) * n).palindromic


@pytest.mark.parametrize("n", range(1, 7))
def test_regular_poincare_palindromic(n):
    for m in enumerate_hess(n):
        for mu in partitions_of(n):
            rep = poincare_regular(m, mu)
            assert rep.palindromic and rep.poly.is_integral()
            assert all(c >= 0 for c in rep.poly.coeffs)


@pytest.mark.parametrize("q", (2, 3, 4))
def test_split_types_count_by_hall_littlewood_product(q):
    for n in range(1, 5):
        for tau in enumerate_types(n, q):
            if not tau.is_split():
                continue
            prod = h()
            for lam in tau.jordan_type():
                prod = multiply(prod, hall_littlewood(lam))
            for m in enumerate_hess(n):
                expected = hall_inner(specialize_t(prod, q), specialize_t(omega_csqf(m), q))
                assert count_points(m, tau, q) == expected
                assert poincare(m, tau.jordan_type()).poly(q) == expected


@pytest.mark.parametrize("q", (2, 3))
def test_clique_case(q):
    for n in range(1, 5):
        for mu in partitions_of(n):
            km = complete_hess(mu)
            for tau in enumerate_types(n, q):
                F = specialize_t(f_tau(tau), q)
                expected = evaluate(q_factorial_partition(mu), q) * hall_inner(F, h(*mu))
                assert count_points(km, tau, q) == expected == count_via_recursion(km, tau, q)


def test_recursion_examples():
    zero = parse_type("(1,[1,1,1])")
    a, b, c = count_via_recursion(M233, zero, 2), count_points(M233, zero, 2), bruteforce_count(M233, zero, 2)
    assert a == b == c == 21
    for tau in enumerate_types(3, 2):
        F = specialize_t(f_tau(tau), 2)
        assert count_via_recursion((1, 2, 3), tau, 2) == hall_inner(F, h(1, 1, 1))


def test_report_json():
    rep = count_report(M233, IRR3, 2, bruteforce=True)
    assert rep.agreement is True
    assert rep.to_json() == {"m": [2, 3, 3], "type": "(3,[1])", "q": 2, "formula": 7, "bruteforce": 7, "agree": True}
    assert count_report(M233, IRR3, 2).agreement is None
    assert "bruteforce" not in count_report(M233, IRR3, 2).to_json()
    j = poincare(M233, ((1,), (1,), (1,))).to_json()
    assert j["poly"] == [1, 4, 1] and j["palindromic"] is True
    json.dumps(j)


def test_interpolate():
    f = 1 + 4 * T + T**2
    assert interpolate([(q, f(q)) for q in (2, 3, 5)]) == f
    g = interpolate([(0, 1), (2, 0)])
    assert g == 1 - T / 2 and g.coeffs[1] == Fraction(-1, 2)


def test_not_an_integer_guard():
    from hessencount.counting import _as_count

    with pytest.raises(NotAnInteger):
        _as_count(Fraction(1, 2), "x")
    with pytest.raises(NotAnInteger):
        _as_count(-1, "x")
    assert _as_count(Fraction(4, 2), "x") == 2
