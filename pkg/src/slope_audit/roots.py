"""Real-root analysis over exact rationals.

Sturm counts are taken on the square-free part, so they count distinct
roots.  For a square-free ``f`` with Sturm chain evaluated (zeros skipped)
``V(a) - V(b)`` is the number of roots in ``(a, b]``; the closed count adds
one if ``f(a) == 0``.  That avoids nudging endpoints altogether.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PreconditionError
from .numerics import Interval, as_rational
from .polynomial import Polynomial, derivative, evaluate, poly_gcd, square_free_part


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _require_nonzero(f: Polynomial, what: str):
    if f.is_zero():
        raise DomainError(f"{what} of the zero polynomial is undefined")


# Descartes

@dataclass(frozen=True)
class DescartesResult:
    variations: int
    possible_root_counts: tuple[int, ...]

    @classmethod
    def from_variations(cls, v: int) -> "DescartesResult":
        return cls(v, tuple(range(v, -1, -2)))


def sign_variations(f: Polynomial) -> int:
    """Sign changes in the coefficient sequence, zeros skipped."""
    _require_nonzero(f, "sign variation count")
    return _count_changes(f.coefficients)


def _count_changes(values) -> int:
    changes, last = 0, 0
    for v in values:
        s = _sign(v)
        if s == 0:
            continue
        if last and s != last:
            changes += 1
        last = s
    return changes


def descartes_positive(f: Polynomial) -> DescartesResult:
    return DescartesResult.from_variations(sign_variations(f))


def descartes_negative(f: Polynomial) -> DescartesResult:
    _require_nonzero(f, "Descartes bound")
    return DescartesResult.from_variations(sign_variations(f.reflect()))


# Newton / Du Gua coefficient test

@dataclass(frozen=True)
class NewtonTerm:
    k: int
    lhs: Fraction
    rhs: Fraction
    holds: bool


@dataclass(frozen=True)
class NewtonCheckResult:
    per_index: tuple[NewtonTerm, ...]

    @property
    def all_hold(self) -> bool:
        return all(t.holds for t in self.per_index)


def newton_dugua_check(f: Polynomial) -> NewtonCheckResult:
    """Check ``a_k**2 > a_{k-1} * a_{k+1}`` (strict, signed) for 0 < k < deg.

    A passing result is only a test outcome: the inequality is necessary
    for real-rootedness, not sufficient.
    """
    if f.is_zero() or f.degree < 2:
        raise DomainError("Newton coefficient test needs degree >= 2")
    terms = []
    for k in range(1, f.degree):
        lhs = f[k] ** 2
        rhs = f[k - 1] * f[k + 1]
        terms.append(NewtonTerm(k, lhs, rhs, lhs > rhs))
    return NewtonCheckResult(tuple(terms))


# Sturm machinery

def sturm_sequence(f: Polynomial) -> list[Polynomial]:
    """Signed remainder chain of the square-free part of ``f``."""
    _require_nonzero(f, "Sturm sequence")
    g = square_free_part(f)
    chain = [g, derivative(g)]
    while not chain[-1].is_zero():
        chain.append(-(chain[-2] % chain[-1]))
    chain.pop()
    return chain


def _variations_at(chain, t) -> int:
    return _count_changes(evaluate(p, t) for p in chain)


def _variations_at_infinity(chain, positive: bool) -> int:
    signs = []
    for p in chain:
        s = _sign(p.leading_coefficient)
        if not positive and p.degree % 2 == 1:
            s = -s
        signs.append(s)
    return _count_changes(signs)


def _count_closed(chain, lo: Fraction, hi: Fraction) -> int:
    # chain[0] is square-free, so V(lo) - V(hi) counts roots in (lo, hi]
    count = _variations_at(chain, lo) - _variations_at(chain, hi)
    if evaluate(chain[0], lo) == 0:
        count += 1
    return count


def sturm_real_root_count(f: Polynomial, range_: Interval | None = None) -> int:
    """Distinct real roots of ``f`` in the closed ``range_`` (None = whole line)."""
    _require_nonzero(f, "Sturm count")
    if f.degree == 0:
        return 0
    chain = sturm_sequence(f)
    if range_ is None:
        return _variations_at_infinity(chain, False) - _variations_at_infinity(chain, True)
    return _count_closed(chain, range_.lo, range_.hi)


def cauchy_bound(f: Polynomial) -> Fraction:
    """All roots satisfy ``|t| < 1 + max_{k<n} |a_k| / |a_n|``."""
    lead = abs(f.leading_coefficient)
    return 1 + max((abs(c) / lead for c in f.coefficients[:-1]), default=Fraction(0))


@dataclass(frozen=True)
class RootIsolation:
    intervals: tuple[Interval, ...]

    @property
    def distinct_count(self) -> int:
        return len(self.intervals)


def _split_point(g: Polynomial, lo: Fraction, hi: Fraction) -> Fraction:
    """A point strictly inside (lo, hi) that is not a root of ``g``."""
    mid = (lo + hi) / 2
    step = (hi - lo) / 4
    candidate = mid
    i = 0
    while evaluate(g, candidate) == 0:
        i += 1
        step /= 2
        candidate = mid + step if i % 2 else mid - step
    return candidate


def isolate_real_roots(f: Polynomial) -> RootIsolation:
    """Disjoint, ascending, rational-endpoint intervals, one per distinct real root.

    Endpoints are never roots.  Starts from the Cauchy bound and bisects
    on Sturm counts; each interval is then narrowed to width <= 1/2 and,
    unless the root is an integer, to lie strictly between two consecutive
    integers.
    """
    _require_nonzero(f, "root isolation")
    if f.degree < 1:
        raise DomainError("root isolation needs degree >= 1")
    chain = sturm_sequence(f)
    g = chain[0]
    bound = cauchy_bound(g)
    found: list[Interval] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = _count_closed(chain, lo, hi)
        if n == 0:
            continue
        if n == 1:
            found.append(Interval(lo, hi))
            continue
        m = _split_point(g, lo, hi)
        stack.append((m, hi))
        stack.append((lo, m))
    found.sort(key=lambda iv: iv.lo)
    return RootIsolation(tuple(_tidy(g, iv) for iv in _separate(g, found)))


def _tidy(g: Polynomial, iv: Interval) -> Interval:
    while iv.width > Fraction(1, 2) or _straddles_nonroot_integer(g, iv):
        iv = _shrink(g, iv)
    return iv


def _straddles_nonroot_integer(g: Polynomial, iv: Interval) -> bool:
    k = -((-iv.lo.numerator) // iv.lo.denominator)  # ceil(lo)
    while k <= iv.hi:
        if evaluate(g, k) != 0:
            return True
        k += 1
    return False


def _shrink(g: Polynomial, iv: Interval) -> Interval:
    """Halve an isolating interval of a simple root, keeping the sign change."""
    m = _split_point(g, iv.lo, iv.hi)
    if _sign(evaluate(g, iv.lo)) * _sign(evaluate(g, m)) < 0:
        return Interval(iv.lo, m)
    return Interval(m, iv.hi)


def _separate(g: Polynomial, intervals: list[Interval]) -> list[Interval]:
    # neighbours produced by a bisection share an endpoint; shrink until disjoint
    out = list(intervals)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i].hi >= out[i + 1].lo:
                out[i] = _shrink(g, out[i])
                out[i + 1] = _shrink(g, out[i + 1])
                changed = True
    return out


def refine_root(f: Polynomial, bracket: Interval, eps) -> Interval:
    """Bisect ``bracket`` (holding exactly one distinct root) down to width <= eps.

    Sign tests run on the square-free part, so even-multiplicity roots
    still show a sign change.  An exact hit returns a degenerate interval.
    """
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    _require_nonzero(f, "root refinement")
    n = sturm_real_root_count(f, bracket)
    if n != 1:
        raise PreconditionError(f"bracket {bracket} holds {n} distinct roots, expected 1")
    g = square_free_part(f)
    lo, hi = bracket.lo, bracket.hi
    s_lo, s_hi = _sign(evaluate(g, lo)), _sign(evaluate(g, hi))
    if s_lo == 0:
        return Interval.point(lo)
    if s_hi == 0:
        return Interval.point(hi)
    while hi - lo > eps:
        mid = (lo + hi) / 2
        s_mid = _sign(evaluate(g, mid))
        if s_mid == 0:
            return Interval.point(mid)
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return Interval(lo, hi)


def vieta_product(f: Polynomial) -> Fraction:
    """Product of all complex roots with multiplicity: ``(-1)**n * a_0 / a_n``."""
    if f.is_zero() or f.degree < 1:
        raise DomainError("Vieta product needs degree >= 1")
    return (-1) ** f.degree * f[0] / f.leading_coefficient


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_root_test(g: Polynomial) -> list[Fraction]:
    """All rational roots of an integer-coefficient polynomial, ascending, distinct."""
    _require_nonzero(g, "rational root test")
    if any(c.denominator != 1 for c in g.coefficients):
        raise DomainError("rational root test needs integer coefficients")
    roots: set[Fraction] = set()
    coeffs = list(g.coefficients)
    # strip factors of t
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    h = Polynomial(coeffs)
    if h.degree and h.degree > 0:
        for num in _divisors(int(h[0])):
            for den in _divisors(int(h.leading_coefficient)):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if cand not in roots and evaluate(h, cand) == 0:
                        roots.add(cand)
    return sorted(roots)


def real_roots_with_multiplicity(f: Polynomial) -> int:
    """Real roots of ``f`` counted with multiplicity (via repeated gcd peeling)."""
    _require_nonzero(f, "root count")
    total, current = 0, f
    while current.degree and current.degree > 0:
        total += sturm_real_root_count(current)
        current = poly_gcd(current, derivative(current))
    return total
