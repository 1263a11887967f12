"""Exact scalars and rational-endpoint interval arithmetic.

Rationals are :class:`fractions.Fraction`, which is already canonical
(positive denominator, lowest terms, zero as 0/1).  No floats are used.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DomainError

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected so that inexact values never leak in.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def rational_str(q: Number) -> str:
    """Canonical text form: ``"-9/2"``, or plain ``"7"`` for integers."""
    return str(Fraction(q))


def binomial_coefficient(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"binomial arguments must be non-negative, got ({n}, {k})")
    if k > n:
        raise DomainError(f"binomial requires k <= n, got ({n}, {k})")
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        # exact at every step: result * (n - k + i) is divisible by i
        result = result * (n - k + i) // i
    return result


def integer_nth_root(n: int, p: int) -> int:
    """Largest integer r with r**p <= n (n >= 0, p >= 1)."""
    if n < 0:
        raise DomainError("integer_nth_root needs n >= 0")
    if p < 1:
        raise DomainError("root index must be >= 1")
    if n < 2 or p == 1:
        return n
    # Newton iteration from an over-estimate decreases monotonically to the floor.
    r = 1 << -(-n.bit_length() // p)
    while True:
        nxt = ((p - 1) * r + n // r ** (p - 1)) // p
        if nxt >= r:
            break
        r = nxt
    while r ** p > n:
        r -= 1
    while (r + 1) ** p <= n:
        r += 1
    return r


def exact_nth_root(r: Fraction, p: int) -> Fraction | None:
    """Return ``r**(1/p)`` if it is rational, otherwise None."""
    num = integer_nth_root(r.numerator, p)
    if num ** p != r.numerator:
        return None
    den = integer_nth_root(r.denominator, p)
    if den ** p != r.denominator:
        return None
    return Fraction(num, den)


@dataclass(frozen=True)
class Interval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: Number) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def is_degenerate(self) -> bool:
        return self.lo == self.hi

    def contains(self, x) -> bool:
        if isinstance(x, Interval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= x <= self.hi

    __contains__ = contains

    def overlaps(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def intersection(self, other: "Interval") -> "Interval | None":
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def __add__(self, other):
        b = _lift(other)
        return Interval(self.lo + b.lo, self.hi + b.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        b = _lift(other)
        return Interval(self.lo - b.hi, self.hi - b.lo)

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        b = _lift(other)
        products = (self.lo * b.lo, self.lo * b.hi, self.hi * b.lo, self.hi * b.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = _lift(other)
        if b.lo <= 0 <= b.hi:
            raise DomainError(f"division by interval containing zero: {b}")
        return self * Interval(1 / b.hi, 1 / b.lo)

    def __rtruediv__(self, other):
        return _lift(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise DomainError("interval powers take non-negative integer exponents")
        if k == 0:
            return Interval(1, 1)
        a, b = self.lo ** k, self.hi ** k
        if k % 2 == 1 or self.lo >= 0:
            return Interval(a, b)
        if self.hi <= 0:
            return Interval(b, a)
        return Interval(0, max(a, b))

    def __str__(self):
        return f"[{rational_str(self.lo)}, {rational_str(self.hi)}]"


def _lift(x) -> Interval:
    if isinstance(x, Interval):
        return x
    return Interval.point(as_rational(x))


_OPS = {
    "add": lambda a, b: a + b,
    "sub": lambda a, b: a - b,
    "mul": lambda a, b: a * b,
    "div": lambda a, b: a / b,
}


def interval_arith(a: Interval, b: Interval | None, op: str) -> Interval:
    """Apply ``op`` in {add, sub, mul, div, neg}; ``b`` is ignored for neg."""
    if op == "neg":
        return -a
    try:
        fn = _OPS[op]
    except KeyError:
        raise DomainError(f"unknown interval op {op!r}") from None
    return fn(a, b)


def nth_root_interval(r: Number, p: int, eps: Number) -> Interval:
    """Enclose ``r**(1/p)`` in an interval of width at most ``eps``.

    Exact rational roots come back as degenerate intervals.  Otherwise
    bisection on ``[0, max(1, r)]`` keeps ``lo**p <= r <= hi**p``.
    """
    r, eps = as_rational(r), as_rational(eps)
    if r < 0:
        raise DomainError(f"nth_root_interval needs r >= 0, got {r}")
    if p < 1:
        raise DomainError(f"root index must be >= 1, got {p}")
    if eps <= 0:
        raise DomainError("eps must be positive")
    exact = exact_nth_root(r, p)
    if exact is not None:
        return Interval.point(exact)
    lo, hi = Fraction(0), max(Fraction(1), r)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        if mid ** p <= r:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)
