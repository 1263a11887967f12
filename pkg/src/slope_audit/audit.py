"""Claim-by-claim audit of the slope polynomial family, plus integer-side checks."""
from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import AuditError, DomainError, ParameterError, ToleranceError
from .family import (
    FamilyParams,
    FermatTriple,
    build_family_by_expansion,
    build_family_closed_form,
    dugua_boundary,
    fermat_residual,
    geometric_slope_d,
    integer_family_poly,
    is_odd_prime,
    is_prime,
)
from .numerics import Interval, as_rational, integer_nth_root, rational_str
from .polynomial import evaluate, square_free_part
from .report import AuditReport, ClaimVerdict
from .roots import (
    descartes_negative,
    descartes_positive,
    isolate_real_roots,
    newton_dugua_check,
    rational_root_test,
    real_roots_with_multiplicity,
    refine_root,
    sturm_real_root_count,
    vieta_product,
)

log = logging.getLogger(__name__)

DEFAULT_EPSILON = Fraction(1, 10 ** 30)
SCHEMA_VERSION = 1

# (id, statement, anchor) for each audited assertion
CLAIMS = {
    "C1": ("coefficient sign variations equal p", "Descartes count on the slope polynomial"),
    "C2": ("no negative real roots (reflected polynomial has no sign variations)",
           "Descartes bound after d -> -d"),
    "C3": ("d = 0 is not a root", "constant term of the slope polynomial"),
    "C4": ("a_k^2 > a_(k-1) a_(k+1) for every interior k", "Du Gua-Huat-Euler coefficient inequality"),
    "C5": ("all p roots are real", "conclusion drawn from the coefficient inequality"),
    "C6": ("exactly one slope in (0, 1) meets the curve", "uniqueness of the intercepting secant"),
    "C7": ("the geometric slope (1 - alpha)/u is a root", "secant through (0, 1) and (u, alpha)"),
    "C8": ("all roots are equal", "single slope implies a single repeated root"),
    "C9": ("product of all complex roots equals 1", "product-of-roots identity"),
}


def _claim(cid: str, holds: bool, **evidence) -> ClaimVerdict:
    statement, anchor = CLAIMS[cid]
    text = ", ".join(f"{k}={_fmt(v)}" for k, v in evidence.items())
    return ClaimVerdict(cid, statement, anchor, "holds" if holds else "fails", text)


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return rational_str(v) if isinstance(v, (int, Fraction)) else str(v)


# exponent reduction and integer checks

@dataclass(frozen=True)
class ReductionResult:
    n: int
    p: int
    q: int


def reduce_exponent(n: int) -> ReductionResult:
    """Split ``n = p*q`` with ``p`` the smallest odd prime factor, or ``p = 4`` for powers of 2."""
    if n <= 2:
        raise DomainError(f"exponent must exceed 2, got {n}")
    m = n
    while m % 2 == 0:
        m //= 2
    if m == 1:
        return ReductionResult(n, 4, n // 4)
    f = 3
    while f * f <= m:
        if m % f == 0:
            return ReductionResult(n, f, n // f)
        f += 2
    return ReductionResult(n, m, n // m)


def diagonal_check(n: int, xmax: int) -> list[tuple[int, int]]:
    """Pairs ``(x, z)`` with ``2*x**n == z**n`` for ``1 <= x <= xmax``."""
    if n <= 2:
        raise DomainError(f"exponent must exceed 2, got {n}")
    if xmax < 1:
        raise DomainError("xmax must be >= 1")
    hits = []
    for x in range(1, xmax + 1):
        target = 2 * x ** n
        z = integer_nth_root(target, n)
        if z ** n == target:
            hits.append((x, z))
    return hits


@dataclass(frozen=True)
class SearchResult:
    p: int
    bound: int
    solutions: tuple[FermatTriple, ...]
    near_misses: tuple[tuple[FermatTriple, int], ...]
    triples_tested: int


def brute_force_search(p: int, bound: int) -> SearchResult:
    """Test every ``1 <= x <= y < z <= bound`` against ``x**p + y**p = z**p``.

    ``near_misses`` holds every triple attaining the smallest nonzero
    ``|z**p - x**p - y**p|``.
    """
    if not is_odd_prime(p):
        raise ParameterError(f"p must be an odd prime, got {p!r}")
    if bound < 3:
        raise ParameterError(f"bound must be >= 3, got {bound}")
    powers = [k ** p for k in range(bound + 1)]
    solutions = []
    best = None
    near: list[tuple[int, int, int, int]] = []
    tested = 0
    for x in range(1, bound + 1):
        for y in range(x, bound):
            s = powers[x] + powers[y]
            for z in range(y + 1, bound + 1):
                tested += 1
                r = powers[z] - s
                if r == 0:
                    solutions.append((x, y, z))
                    continue
                a = abs(r)
                if best is None or a < best:
                    best, near = a, [(x, y, z, r)]
                elif a == best:
                    near.append((x, y, z, r))
    return SearchResult(
        p=p,
        bound=bound,
        solutions=tuple(FermatTriple(x, y, z, p) for x, y, z in solutions),
        near_misses=tuple((FermatTriple(x, y, z, p), r) for x, y, z, r in near),
        triples_tested=tested,
    )


# per-instance audit

def audit_instance(params: FamilyParams, eps=DEFAULT_EPSILON) -> AuditReport:
    eps = as_rational(eps)
    if eps <= 0:
        raise ParameterError("epsilon must be positive")
    p, u = params.p, params.u
    f = build_family_closed_form(params).poly
    agree = f == build_family_by_expansion(params).poly

    pos = descartes_positive(f)
    neg = descartes_negative(f)
    newton = newton_dugua_check(f)
    boundary = dugua_boundary(params)

    isolation = isolate_real_roots(f)
    refined = tuple(refine_root(f, iv, eps) for iv in isolation.intervals)
    with_mult = real_roots_with_multiplicity(f)
    in_unit = sturm_real_root_count(f, Interval(0, 1))
    in_unit -= (evaluate(f, 0) == 0) + (evaluate(f, 1) == 0)

    geo = geometric_slope_d(params, eps)
    overlapping = [iv for iv in refined if iv.overlaps(geo.d_star)]
    overlap = bool(overlapping)
    if overlap:
        lo_val, hi_val = evaluate(f, geo.d_star.lo), evaluate(f, geo.d_star.hi)
        if lo_val * hi_val > 0:
            raise ToleranceError(
                f"cannot certify the geometric slope as a root at epsilon={eps}; retry with a smaller epsilon"
            )

    vieta = vieta_product(f)
    sqf_degree = square_free_part(f).degree
    constant = f[0]

    claims = (
        _claim("C1", pos.variations == p, variations=pos.variations, p=p),
        _claim("C2", neg.variations == 0, negative_variations=neg.variations),
        _claim("C3", constant != 0, constant_term=constant),
        _claim("C4", newton.all_hold, all_hold=newton.all_hold,
               boundary_lhs=boundary.lhs, boundary_rhs=boundary.rhs),
        _claim("C5", with_mult == p, real_roots_with_multiplicity=with_mult,
               distinct_count=isolation.distinct_count, degree=f.degree),
        _claim("C6", in_unit == 1, distinct_in_unit_interval=in_unit),
        _claim("C7", overlap, root_overlap=overlap,
               d_star_lo=geo.d_star.lo, d_star_hi=geo.d_star.hi),
        _claim("C8", sqf_degree == 1, square_free_degree=sqf_degree),
        _claim("C9", vieta == 1, vieta_product=vieta),
    )
    log.debug("audited p=%d u=%s", p, u)
    return AuditReport(
        schema_version=SCHEMA_VERSION,
        p=p,
        u=u,
        epsilon=eps,
        polynomial=f,
        constructions_agree=agree,
        variations=pos.variations,
        possible_positive_counts=pos.possible_root_counts,
        negative_variations=neg.variations,
        newton=newton,
        boundary=boundary,
        distinct_count=isolation.distinct_count,
        real_roots_with_multiplicity=with_mult,
        distinct_in_unit_interval=in_unit,
        isolating_intervals=isolation.intervals,
        refined_intervals=refined,
        alpha=geo.alpha,
        d_star=geo.d_star,
        sign_note=geo.sign_note,
        root_overlap=overlap,
        vieta_product=vieta,
        square_free_degree=sqf_degree,
        claims=claims,
    )


def audit_triple(t: FermatTriple) -> dict:
    """Evaluate the slope polynomial at the rational slope a triple would induce."""
    if not t.x < t.z:
        raise ParameterError(f"need x < z, got x={t.x}, z={t.z}")
    u = Fraction(t.x, t.z)
    d = Fraction(t.z - t.y, t.x)
    residual = fermat_residual(t)
    g = integer_family_poly(t.p, u.numerator, u.denominator)
    roots = rational_root_test(g)
    return {
        "x": t.x,
        "y": t.y,
        "z": t.z,
        "p": t.p,
        "u": rational_str(u),
        "d": rational_str(d),
        "residual": rational_str(residual),
        "integer_residual": t.residual,
        "d_is_root": residual == 0,
        "integer_family_poly": [rational_str(c) for c in g.coefficients],
        "rational_roots": [rational_str(r) for r in roots],
        "fermat_counterexample": residual == 0,
    }


# grids

@dataclass
class GridResult:
    reports: list[AuditReport] = field(default_factory=list)
    errors: list[dict] = field(default_factory=list)


def _grid_job(job):
    p, u, eps = job
    try:
        return ("ok", audit_instance(FamilyParams(p, u), eps))
    except AuditError as exc:
        return ("error", {"p": p, "u": rational_str(u), "error": type(exc).__name__, "message": str(exc)})


def audit_grid(ps: Sequence[int], u_count: int, eps=DEFAULT_EPSILON, workers: int = 1) -> GridResult:
    """Audit ``u = i/(u_count+1)`` for ``i = 1..u_count`` and each ``p``.

    Per-instance failures are recorded in ``errors``.  Output order is by
    ``(p, u)`` whatever the execution schedule.
    """
    if u_count < 1:
        raise ParameterError("u_count must be >= 1")
    eps = as_rational(eps)
    jobs = [(p, Fraction(i, u_count + 1), eps) for p in ps for i in range(1, u_count + 1)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(_grid_job, jobs))
    else:
        outcomes = [_grid_job(j) for j in jobs]
    result = GridResult()
    for kind, payload in outcomes:
        (result.reports if kind == "ok" else result.errors).append(payload)
    result.reports.sort(key=lambda r: (r.p, r.u))
    result.errors.sort(key=lambda e: (str(e["p"]), Fraction(e["u"])))
    return result


__all__ = [
    "DEFAULT_EPSILON",
    "ReductionResult",
    "SearchResult",
    "GridResult",
    "reduce_exponent",
    "diagonal_check",
    "brute_force_search",
    "audit_instance",
    "audit_triple",
    "audit_grid",
    "is_prime",
]
