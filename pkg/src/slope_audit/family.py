"""The slope polynomial family and its geometry.

For the curve ``u**p + v**p = 1`` and the line ``v = 1 - d*u`` through
(0, 1), substituting gives a degree-``p`` equation in ``d``.  Normalised to
be monic it is

    F_{p,u}(d) = sum_{k=1..p} (-1)**(k+1) C(p,k) u**(k-p) d**k  -  1.

Its positive real root ``d_star = (1 - alpha) / u`` with
``alpha = (1 - u**p)**(1/p)`` is the magnitude of the secant slope.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import ParameterError
from .numerics import Interval, as_rational, binomial_coefficient, nth_root_interval
from .polynomial import Polynomial, evaluate


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def is_odd_prime(n) -> bool:
    return isinstance(n, int) and not isinstance(n, bool) and n > 2 and is_prime(n)


@dataclass(frozen=True)
class FamilyParams:
    p: int
    u: Fraction

    def __post_init__(self):
        if not is_odd_prime(self.p):
            raise ParameterError(f"p must be an odd prime, got {self.p!r}")
        try:
            u = as_rational(self.u)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"u must be an exact rational: {exc}") from None
        if not 0 < u < 1:
            raise ParameterError(f"u must lie strictly inside (0, 1), got {u}")
        object.__setattr__(self, "u", u)


@dataclass(frozen=True)
class FermatTriple:
    x: int
    y: int
    z: int
    p: int

    def __post_init__(self):
        for name in ("x", "y", "z"):
            v = getattr(self, name)
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise ParameterError(f"{name} must be a positive integer, got {v!r}")
        if not is_odd_prime(self.p):
            raise ParameterError(f"p must be an odd prime, got {self.p!r}")

    @property
    def residual(self) -> int:
        """``z**p - x**p - y**p``; zero exactly for a Fermat solution."""
        return self.z ** self.p - self.x ** self.p - self.y ** self.p

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class SlopePolynomial:
    params: FamilyParams
    poly: Polynomial


SIGN_NOTE = "beta = -d_star; the secant line through (0, 1) has slope -d_star"


@dataclass(frozen=True)
class GeometricSlope:
    alpha: Interval
    d_star: Interval
    sign_note: str = SIGN_NOTE


def build_family_closed_form(params: FamilyParams) -> SlopePolynomial:
    p, u = params.p, params.u
    coeffs = [Fraction(-1)]
    for k in range(1, p + 1):
        sign = 1 if k % 2 == 1 else -1
        coeffs.append(sign * binomial_coefficient(p, k) * u ** (k - p))
    return SlopePolynomial(params, Polynomial(coeffs))


def build_family_by_expansion(params: FamilyParams) -> SlopePolynomial:
    """Expand ``u**p + (1 - d*u)**p - 1`` by the binomial theorem, then scale by ``-u**-p``."""
    p, u = params.p, params.u
    binomial_terms = [binomial_coefficient(p, k) * (-u) ** k for k in range(p + 1)]
    expanded = Polynomial(binomial_terms) + Polynomial([u ** p - 1])
    return SlopePolynomial(params, expanded * Polynomial([-(u ** -p)]))


def integer_family_poly(p: int, x: int, z: int) -> Polynomial:
    """``x**(p-1) * F_{p,x/z}``, which has integer coefficients."""
    if not is_odd_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")
    if not (0 < x < z):
        raise ParameterError(f"need 0 < x < z, got x={x}, z={z}")
    if gcd(x, z) != 1:
        raise ParameterError(f"x and z must be coprime, got gcd({x}, {z}) = {gcd(x, z)}")
    coeffs = [-(x ** (p - 1))]
    for k in range(1, p + 1):
        sign = 1 if k % 2 == 1 else -1
        coeffs.append(sign * binomial_coefficient(p, k) * x ** (k - 1) * z ** (p - k))
    return Polynomial(coeffs)


def alpha(params: FamilyParams, eps) -> Interval:
    """Enclosure of ``(1 - u**p)**(1/p)``, width at most ``eps``."""
    eps = as_rational(eps)
    return nth_root_interval(1 - params.u ** params.p, params.p, eps)


def geometric_slope_d(params: FamilyParams, eps) -> GeometricSlope:
    eps = as_rational(eps)
    u = params.u
    # d_star width is alpha width / u, so tighten alpha accordingly
    a = alpha(params, eps * u)
    d_star = Interval((1 - a.hi) / u, (1 - a.lo) / u)
    return GeometricSlope(alpha=a, d_star=d_star)


def secant_value(params: FamilyParams, d) -> Fraction:
    """``u**p + v**p - 1`` for ``v = 1 - d*u``; zero iff (u, v) lies on the curve."""
    d = as_rational(d)
    v = 1 - d * params.u
    return params.u ** params.p + v ** params.p - 1


def fermat_residual(t: FermatTriple) -> Fraction:
    """``F_{p,x/z}((z - y)/x)``, which equals ``(z**p - x**p - y**p) / x**p``."""
    if not t.x < t.z:
        raise ParameterError(f"need x < z, got x={t.x}, z={t.z}")
    params = FamilyParams(t.p, Fraction(t.x, t.z))
    return evaluate(build_family_closed_form(params).poly, Fraction(t.z - t.y, t.x))


@dataclass(frozen=True)
class BoundaryCondition:
    """Reduced Du Gua inequality at the coefficient of ``d``: ``p*u**-p > (p-1)/2``."""

    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs > self.rhs


def dugua_boundary(params: FamilyParams) -> BoundaryCondition:
    p, u = params.p, params.u
    return BoundaryCondition(lhs=p * u ** -p, rhs=Fraction(p - 1, 2))


def log_concavity_interior(p: int, k: int) -> tuple[int, int]:
    """Both sides of ``(p-k)*k < (p-k+1)*(k+1)``, the binomial log-concavity step."""
    return (p - k) * k, (p - k + 1) * (k + 1)
