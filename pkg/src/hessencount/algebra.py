"""Exact arithmetic substrate: partitions, univariate polynomials in ``t``,
rational functions and q-analogs.

Partitions are plain tuples of positive ints in weakly decreasing order.
Polynomials carry ``int`` coefficients; ``Fraction`` coefficients appear only
when a division forced them (power-sum conversions, rational functions).
"""
from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Sequence, Union

Partition = tuple

__all__ = [
    "Partition",
    "Poly",
    "RatFunc",
    "T",
    "as_partition",
    "conjugate",
    "dominates",
    "exact_div",
    "evaluate",
    "format_partition",
    "n_statistic",
    "normalize_number",
    "parse_partition",
    "partitions_of",
    "q_factorial",
    "q_factorial_partition",
    "q_int",
    "z_lambda",
]


# ---------------------------------------------------------------------------
# Partitions
# ---------------------------------------------------------------------------

def as_partition(parts: Iterable[int]) -> Partition:
    """Validate and return ``parts`` as a partition tuple."""
    p = tuple(int(x) for x in parts)
    for a, b in zip(p, p[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 1:
        raise ValueError(f"parts must be positive: {p}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1,1"`` (empty string is the empty partition)."""
    text = text.strip().strip("()[]")
    if not text:
        return ()
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise ValueError(f"bad partition {text!r}") from exc
    return as_partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = []

    def rec(remaining, cap, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > j) for j in range(lam[0]))


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when ``lam >= mu`` in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def z_lambda(lam: Sequence[int]) -> int:
    out = 1
    for part in set(lam):
        k = lam.count(part)
        out *= part**k * factorial(k)
    return out


def n_statistic(lam: Sequence[int]) -> int:
    """sum_i (i-1) * lam_i"""
    return sum(i * part for i, part in enumerate(lam))


# ---------------------------------------------------------------------------
# Polynomials in t
# ---------------------------------------------------------------------------

Number = Union[int, Fraction]


def normalize_number(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def _trim(coeffs):
    coeffs = [normalize_number(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Immutable univariate polynomial; ``coeffs[k]`` multiplies ``t**k``.

    The zero polynomial has ``degree is None``.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Number = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def leading(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        if self._hash is None:
            h = hash(self.coeffs[0]) if len(self.coeffs) == 1 else hash(("Poly", self.coeffs))
            if not self.coeffs:
                h = hash(0)
            object.__setattr__(self, "_hash", h)
        return self._hash

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim((other,))
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def _lift(x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, (int, Fraction)):
            return Poly((x,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out, base = Poly((1,)), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Poly([Fraction(c) / other for c in self.coeffs])
        if isinstance(other, (Poly, RatFunc)):
            return RatFunc(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatFunc(Poly((other,))) / self
        return NotImplemented

    def divmod(self, other: "Poly"):
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq]
            if c == 0:
                continue
            c = Fraction(c) / lead if not isinstance(lead, int) or c % lead else c // lead
            quot[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] -= c * oc
        return Poly(quot), Poly(rem)

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a number or any ring element."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return normalize_number(acc) if isinstance(acc, (int, Fraction)) else acc

    def substitute_power(self, d: int) -> "Poly":
        """t -> t**d"""
        out = [0] * (d * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, c in enumerate(self.coeffs):
            out[k * d] = c
        return Poly(out)

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]

    def monic(self) -> "Poly":
        lead = self.leading()
        return self if lead == 1 else self / lead

    # text -----------------------------------------------------------------
    def to_str(self, compact: bool = False) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            pieces.append((c < 0, body))
        plus, minus = ("+", "-") if compact else (" + ", " - ")
        neg0, first = pieces[0]
        out = ("-" if neg0 else "") + first
        for neg, body in pieces[1:]:
            out += (minus if neg else plus) + body
        return out

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Parse ``"1 + 2*t + t^3"`` or its compact form ``"1+2*t+t^3"``."""
        s = text.replace(" ", "").strip("()")
        if not s:
            raise ValueError("empty polynomial")
        terms = re.findall(r"[+-]?[^+-]+", s)
        if "".join(terms) != s:
            raise ValueError(f"bad polynomial {text!r}")
        out = Poly()
        for term in terms:
            m = re.fullmatch(r"([+-]?)(?:(\d+(?:/\d+)?)\*?)?(t(?:\^(\d+))?)?", term)
            if not m or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"bad polynomial term {term!r} in {text!r}")
            sign, num, var, power = m.groups()
            c = Fraction(num) if num is not None else Fraction(1)
            if sign == "-":
                c = -c
            k = 0 if var is None else (int(power) if power else 1)
            out = out + Poly.monomial(k, c)
        return out


T = Poly((0, 1))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic() if not a.is_zero() else a


class RatFunc:
    """Reduced quotient ``num / den`` of polynomials with monic ``den``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = Poly._lift(num)
        den = Poly((1,)) if den is None else Poly._lift(den)
        if num is None or den is None:
            raise TypeError("RatFunc needs polynomial arguments")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree:
                num, den = num.divmod(g)[0], den.divmod(g)[0]
            lead = den.leading()
            num, den = num / lead, den / lead
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, Fraction, Poly)):
            return RatFunc(x)
        return None

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(self.num) if self.is_polynomial() else hash((self.num, self.den))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at {x}")
        return normalize_number(Fraction(self.num(x)) / d)

    def __str__(self):
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num.to_str(True)})/({self.den.to_str(True)})"

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"


def evaluate(c, q):
    """Evaluate an exact scalar at ``t = q``; plain numbers pass through."""
    if isinstance(c, (Poly, RatFunc)):
        return c(q)
    return c


def exact_div(a, b):
    """Exact quotient in the smallest scalar type that holds it."""
    if isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return normalize_number(Fraction(a) / b)
    if isinstance(b, (int, Fraction)) and isinstance(a, Poly):
        return a / b
    r = RatFunc._lift(a) / RatFunc._lift(b)
    return r.num if r.is_polynomial() else r


# ---------------------------------------------------------------------------
# q-analogs
# ---------------------------------------------------------------------------

def q_int(m: int) -> Poly:
    """1 + t + ... + t^(m-1)"""
    if m < 1:
        raise ValueError("q_int needs m >= 1")
    return Poly([1] * m)


@lru_cache(maxsize=None)
def q_factorial(m: int) -> Poly:
    if m < 0:
        raise ValueError("q_factorial needs m >= 0")
    out = Poly((1,))
    for j in range(1, m + 1):
        out = out * q_int(j)
    return out


def q_factorial_partition(lam: Sequence[int]) -> Poly:
    out = Poly((1,))
    for part in lam:
        out = out * q_factorial(part)
    return out
