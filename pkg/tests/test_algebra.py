from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hessencount.algebra import (
    Poly,
    RatFunc,
    T,
    as_partition,
    conjugate,
    dominates,
    evaluate,
    format_partition,
    n_statistic,
    parse_partition,
    partitions_of,
    poly_gcd,
    q_factorial,
    q_factorial_partition,
    q_int,
    z_lambda,
)


def _euler_partition_count(n):
    # pentagonal-number recurrence, independent of the enumerator
    p = [1] + [0] * n
    for k in range(1, n + 1):
        j, total = 1, 0
        while True:
            g1, g2 = j * (3 * j - 1) // 2, j * (3 * j + 1) // 2
            if g1 > k:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[k - g1]
            if g2 <= k:
                total += sign * p[k - g2]
            j += 1
        p[k] = total
    return p[n]


def test_q_int():
    assert q_int(1) == 1
    assert q_int(3) == Poly((1, 1, 1))
    assert q_int(3)(2) == 7
    with pytest.raises(ValueError):
        q_int(0)


def test_q_factorial():
    assert q_factorial(0) == 1
    assert q_factorial(2) == 1 + T
    assert q_factorial(4)(2) == 1 * 3 * 7 * 15 == 315


def test_q_factorial_partition():
    assert q_factorial_partition((1, 1)) == 1
    assert q_factorial_partition((2, 1)) == 1 + T
    assert q_factorial_partition((3,))(2) == 21


@pytest.mark.parametrize("n", range(0, 13))
def test_partition_counts(n):
    parts = partitions_of(n)
    assert len(parts) == _euler_partition_count(n)
    assert len(set(parts)) == len(parts)
    assert all(sum(lam) == n for lam in parts)
    assert list(parts) == sorted(parts, reverse=True)


def test_partition_small_cases():
    assert partitions_of(0) == ((),)
    assert len(partitions_of(4)) == 5
    assert len(partitions_of(8)) == 22


def test_conjugate_examples():
    assert conjugate((4,)) == (1, 1, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((3, 1)) == (2, 1, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_conjugate_involution_and_dominance_reversal(n):
    for lam in partitions_of(n):
        assert conjugate(conjugate(lam)) == lam
        for mu in partitions_of(n):
            assert dominates(lam, mu) == dominates(conjugate(mu), conjugate(lam))


def test_partition_parsing():
    assert parse_partition("3,1,1") == (3, 1, 1)
    assert parse_partition("") == ()
    assert format_partition((3, 1, 1)) == "3,1,1"
    with pytest.raises(ValueError):
        parse_partition("1,3")
    with pytest.raises(ValueError):
        parse_partition("a")
    with pytest.raises(ValueError):
        as_partition((2, 0))


def test_z_lambda_and_n_statistic():
    assert z_lambda((3,)) == 3
    assert z_lambda((1, 1, 1)) == 6
    assert z_lambda((2, 1, 1)) == 4
    assert n_statistic((2, 1)) == 1
    assert n_statistic((1, 1, 1)) == 3


def test_poly_arithmetic_and_text():
    f = 1 + 2 * T + T**3
    assert str(f) == "1 + 2*t + t^3"
    assert f.to_str(compact=True) == "1+2*t+t^3"
    assert Poly.parse("1 + 2*t + t^3") == f
    assert Poly.parse("1+2*t+t^3") == f
    assert f(2) == 13
    assert (f - f).is_zero()
    assert Poly().degree is None
    q, r = f.divmod(1 + T)
    assert q * (1 + T) + r == f
    assert (f / 2).coeffs == (Fraction(1, 2), 1, 0, Fraction(1, 2))
    assert not (f / 2).is_integral()
    assert (1 + T).substitute_power(3) == 1 + T**3
    assert Poly((1, 4, 1)).is_palindromic()
    assert not Poly((1, 2)).is_palindromic()
    assert hash(Poly((5,))) == hash(5) and Poly((5,)) == 5


def test_ratfunc():
    r = RatFunc(1 - T**2, 2 - 2 * T)
    assert r == (1 + T) / 2
    assert (q_int(3) / (1 + T))(1) == Fraction(3, 2)
    with pytest.raises(ZeroDivisionError):
        (1 / (1 - T))(1)
    assert poly_gcd(1 - T**2, 1 + 2 * T + T**2).monic() == 1 + T


def test_evaluate():
    assert evaluate(5, 3) == 5
    assert evaluate(q_int(3), 3) == 13
    assert evaluate(Fraction(1, 2), 7) == Fraction(1, 2)


small_polys = st.lists(st.integers(-5, 5), min_size=0, max_size=5).map(Poly)


@given(small_polys, small_polys, small_polys, st.integers(-4, 4))
def test_poly_ring_laws(a, b, c, x):
    assert (a + b) * c == a * c + b * c
    assert (a * b)(x) == a(x) * b(x)
    assert Poly.parse(str(a)) == a


@given(small_polys, small_polys.filter(lambda p: not p.is_zero()))
def test_poly_division(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree
