"""Dense univariate polynomials with exact rational coefficients."""
from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DomainError
from .numerics import Interval, as_rational, rational_str


class Polynomial:
    """Polynomial ``a_0 + a_1 t + ... + a_n t**n``; coefficients stored low degree first.

    Trailing zeros are stripped, so the zero polynomial has an empty
    coefficient tuple and ``degree`` None.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable = ()):
        coeffs = [as_rational(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        """Monic polynomial with the given roots (repeat a root for multiplicity)."""
        result = cls([1])
        for r in roots:
            result = result * cls([-as_rational(r), 1])
        return result

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int | None:
        return len(self._coeffs) - 1 if self._coeffs else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return "Polynomial([" + ", ".join(rational_str(c) for c in self._coeffs) + "])"

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self._coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = Polynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if divisor.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = divisor.degree
        lead = divisor.leading_coefficient
        if len(rem) - 1 < dd:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        for shift in range(len(rem) - 1 - dd, -1, -1):
            c = rem[shift + dd] / lead
            quot[shift] = c
            if c:
                for j, b in enumerate(divisor._coeffs):
                    rem[shift + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dd])

    def __floordiv__(self, other):
        return self.divmod(_coerce(other))[0]

    def __mod__(self, other):
        return self.divmod(_coerce(other))[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise DomainError("the zero polynomial has no monic form")
        lead = self.leading_coefficient
        return Polynomial(c / lead for c in self._coeffs)

    def reflect(self) -> "Polynomial":
        """``f(-t)``."""
        return Polynomial(c if k % 2 == 0 else -c for k, c in enumerate(self._coeffs))

    def __call__(self, t):
        return evaluate(self, t)


def _coerce(x) -> Polynomial:
    return x if isinstance(x, Polynomial) else Polynomial([x])


def evaluate(f: Polynomial, t):
    """Horner evaluation at a rational point or over an interval.

    Interval input gives an enclosure of ``{f(s) : s in t}`` (not always tight).
    """
    if isinstance(t, Interval):
        acc = Interval.point(0)
        for c in reversed(f.coefficients):
            acc = acc * t + c
        return acc
    t = as_rational(t)
    acc = Fraction(0)
    for c in reversed(f.coefficients):
        acc = acc * t + c
    return acc


def derivative(f: Polynomial) -> Polynomial:
    return Polynomial(k * c for k, c in enumerate(f.coefficients) if k)


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm over the rationals."""
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def square_free_part(f: Polynomial) -> Polynomial:
    """``f / gcd(f, f')`` made monic: same distinct roots, each simple."""
    if f.is_zero():
        raise DomainError("square-free part of the zero polynomial is undefined")
    if f.degree == 0:
        return Polynomial([1])
    g = poly_gcd(f, derivative(f))
    return (f // g).monic()


def scale_to_integer(f: Polynomial) -> tuple[Polynomial, Fraction]:
    """Return ``(g, s)`` with ``g = s*f`` primitive with integer coefficients.

    The sign of ``s`` is positive, so ``g`` keeps the sign pattern of ``f``.
    """
    if f.is_zero():
        raise DomainError("cannot scale the zero polynomial")
    denom = reduce(lcm, (c.denominator for c in f.coefficients), 1)
    ints = [int(c * denom) for c in f.coefficients]
    content = reduce(gcd, (abs(c) for c in ints), 0)
    g = Polynomial(c // content for c in ints)
    return g, Fraction(denom, content)


def is_integer_polynomial(f: Polynomial) -> bool:
    return all(c.denominator == 1 for c in f.coefficients)


def to_strings(f: Polynomial) -> list[str]:
    return [rational_str(c) for c in f.coefficients]


def from_strings(items: Sequence[str]) -> Polynomial:
    return Polynomial(Fraction(s) for s in items)
