"""Audit report types and their canonical JSON / text renderings.

Every rational is written as a ``"num/den"`` string (plain ``"n"`` for
integers) and every interval as a two-element string list, so a report
file never contains a floating-point literal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .family import BoundaryCondition
from .numerics import Interval, rational_str
from .polynomial import Polynomial, from_strings, to_strings
from .roots import NewtonCheckResult, NewtonTerm

TOP_LEVEL_KEYS = (
    "schema_version",
    "params",
    "polynomial",
    "descartes",
    "newton",
    "real_roots",
    "geometry",
    "vieta_product",
    "square_free_degree",
    "claims",
)


@dataclass(frozen=True)
class ClaimVerdict:
    id: str
    statement: str
    paper_anchor: str
    verdict: str
    evidence: str

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "paper_anchor": self.paper_anchor,
            "verdict": self.verdict,
            "evidence": self.evidence,
        }


@dataclass(frozen=True)
class AuditReport:
    schema_version: int
    p: int
    u: Fraction
    epsilon: Fraction
    polynomial: Polynomial
    constructions_agree: bool
    variations: int
    possible_positive_counts: tuple[int, ...]
    negative_variations: int
    newton: NewtonCheckResult
    boundary: BoundaryCondition
    distinct_count: int
    real_roots_with_multiplicity: int
    distinct_in_unit_interval: int
    isolating_intervals: tuple[Interval, ...]
    refined_intervals: tuple[Interval, ...]
    alpha: Interval
    d_star: Interval
    sign_note: str
    root_overlap: bool
    vieta_product: Fraction
    square_free_degree: int
    claims: tuple[ClaimVerdict, ...]

    def claim(self, cid: str) -> ClaimVerdict:
        for c in self.claims:
            if c.id == cid:
                return c
        raise KeyError(cid)

    def verdicts(self) -> dict[str, str]:
        return {c.id: c.verdict for c in self.claims}

    def __eq__(self, other):
        if not isinstance(other, AuditReport):
            return NotImplemented
        return to_dict(self) == to_dict(other)

    __hash__ = None


def _iv(iv: Interval) -> list[str]:
    return [rational_str(iv.lo), rational_str(iv.hi)]


def _parse_iv(pair) -> Interval:
    lo, hi = pair
    return Interval(Fraction(lo), Fraction(hi))


def to_dict(r: AuditReport) -> dict:
    """Plain-JSON view with the fixed key order used on disk."""
    return {
        "schema_version": r.schema_version,
        "params": {"p": r.p, "u": rational_str(r.u), "epsilon": rational_str(r.epsilon)},
        "polynomial": {
            "degree": r.polynomial.degree,
            "coefficients": to_strings(r.polynomial),
            "constructions_agree": r.constructions_agree,
        },
        "descartes": {
            "variations": r.variations,
            "possible_positive_counts": list(r.possible_positive_counts),
            "negative_variations": r.negative_variations,
        },
        "newton": {
            "per_index": [
                {"k": t.k, "lhs": rational_str(t.lhs), "rhs": rational_str(t.rhs), "holds": t.holds}
                for t in r.newton.per_index
            ],
            "all_hold": r.newton.all_hold,
            "boundary": {
                "lhs": rational_str(r.boundary.lhs),
                "rhs": rational_str(r.boundary.rhs),
                "holds": r.boundary.holds,
            },
        },
        "real_roots": {
            "distinct_count": r.distinct_count,
            "with_multiplicity": r.real_roots_with_multiplicity,
            "distinct_in_unit_interval": r.distinct_in_unit_interval,
            "isolating_intervals": [_iv(iv) for iv in r.isolating_intervals],
            "refined_intervals": [_iv(iv) for iv in r.refined_intervals],
        },
        "geometry": {
            "alpha": _iv(r.alpha),
            "d_star": _iv(r.d_star),
            "sign_note": r.sign_note,
            "root_overlap": r.root_overlap,
        },
        "vieta_product": rational_str(r.vieta_product),
        "square_free_degree": r.square_free_degree,
        "claims": [c.to_dict() for c in r.claims],
    }


def from_dict(data: dict) -> AuditReport:
    if tuple(data) != TOP_LEVEL_KEYS:
        raise ValueError(f"unexpected top-level keys: {list(data)}")
    params, poly, desc = data["params"], data["polynomial"], data["descartes"]
    newton, roots, geo = data["newton"], data["real_roots"], data["geometry"]
    return AuditReport(
        schema_version=data["schema_version"],
        p=params["p"],
        u=Fraction(params["u"]),
        epsilon=Fraction(params["epsilon"]),
        polynomial=from_strings(poly["coefficients"]),
        constructions_agree=poly["constructions_agree"],
        variations=desc["variations"],
        possible_positive_counts=tuple(desc["possible_positive_counts"]),
        negative_variations=desc["negative_variations"],
        newton=NewtonCheckResult(tuple(
            NewtonTerm(t["k"], Fraction(t["lhs"]), Fraction(t["rhs"]), t["holds"])
            for t in newton["per_index"]
        )),
        boundary=BoundaryCondition(Fraction(newton["boundary"]["lhs"]), Fraction(newton["boundary"]["rhs"])),
        distinct_count=roots["distinct_count"],
        real_roots_with_multiplicity=roots["with_multiplicity"],
        distinct_in_unit_interval=roots["distinct_in_unit_interval"],
        isolating_intervals=tuple(_parse_iv(x) for x in roots["isolating_intervals"]),
        refined_intervals=tuple(_parse_iv(x) for x in roots["refined_intervals"]),
        alpha=_parse_iv(geo["alpha"]),
        d_star=_parse_iv(geo["d_star"]),
        sign_note=geo["sign_note"],
        root_overlap=geo["root_overlap"],
        vieta_product=Fraction(data["vieta_product"]),
        square_free_degree=data["square_free_degree"],
        claims=tuple(ClaimVerdict(**c) for c in data["claims"]),
    )


def render_json_obj(obj) -> bytes:
    return (json.dumps(obj, indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def render_text(r: AuditReport) -> str:
    lines = [
        f"slope polynomial audit: p={r.p} u={rational_str(r.u)} epsilon={rational_str(r.epsilon)}",
        "coefficients (ascending degree): " + " ".join(to_strings(r.polynomial)),
        f"distinct real roots: {r.distinct_count}; square-free degree: {r.square_free_degree}",
        f"d_star: [{rational_str(r.d_star.lo)}, {rational_str(r.d_star.hi)}]",
    ]
    lines += [f"{c.id} {c.verdict} — {c.evidence}" for c in r.claims]
    return "\n".join(lines) + "\n"


def render_report(r: AuditReport, fmt: str = "json") -> bytes:
    """Deterministic bytes for ``fmt`` in {"json", "text"}; UTF-8, LF line ends."""
    if fmt == "json":
        return render_json_obj(to_dict(r))
    if fmt == "text":
        return render_text(r).encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}")


def parse_report(data: bytes | str) -> AuditReport:
    if isinstance(data, bytes):
        data = data.decode("utf-8")
    return from_dict(json.loads(data))
