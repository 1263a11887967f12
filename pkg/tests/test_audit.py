import json
from fractions import Fraction

import pytest

from slope_audit.audit import (
    DEFAULT_EPSILON,
    audit_grid,
    audit_instance,
    audit_triple,
    brute_force_search,
    diagonal_check,
    reduce_exponent,
)
from slope_audit.errors import DomainError, ParameterError
from slope_audit.family import FamilyParams, FermatTriple, fermat_residual
from slope_audit.report import TOP_LEVEL_KEYS, parse_report, render_report, to_dict

HALF = Fraction(1, 2)

# evidence key -> where the same value lives in the report
EVIDENCE_PATHS = {
    "variations": ("descartes", "variations"),
    "p": ("params", "p"),
    "negative_variations": ("descartes", "negative_variations"),
    "constant_term": ("polynomial", "coefficients", 0),
    "all_hold": ("newton", "all_hold"),
    "boundary_lhs": ("newton", "boundary", "lhs"),
    "boundary_rhs": ("newton", "boundary", "rhs"),
    "real_roots_with_multiplicity": ("real_roots", "with_multiplicity"),
    "distinct_count": ("real_roots", "distinct_count"),
    "degree": ("polynomial", "degree"),
    "distinct_in_unit_interval": ("real_roots", "distinct_in_unit_interval"),
    "root_overlap": ("geometry", "root_overlap"),
    "d_star_lo": ("geometry", "d_star", 0),
    "d_star_hi": ("geometry", "d_star", 1),
    "square_free_degree": ("square_free_degree",),
    "vieta_product": ("vieta_product",),
}


def _lookup(data, path):
    for key in path:
        data = data[key]
    return data


def _as_text(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


@pytest.fixture(scope="module")
def report_3_half():
    return audit_instance(FamilyParams(3, HALF))


def test_reduce_exponent_examples():
    cases = {12: (3, 4), 8: (4, 2), 35: (5, 7), 100: (5, 20), 3: (3, 1), 4: (4, 1), 16: (4, 4), 98: (7, 14)}
    for n, (p, q) in cases.items():
        r = reduce_exponent(n)
        assert (r.p, r.q) == (p, q)
    with pytest.raises(DomainError):
        reduce_exponent(2)


def test_reduce_exponent_properties():
    for n in range(3, 3000):
        r = reduce_exponent(n)
        assert r.p * r.q == n
        is_pow2 = n & (n - 1) == 0
        assert (r.p == 4) == is_pow2
        if r.p != 4:
            assert r.p % 2 == 1
            assert all(r.p % f for f in range(2, int(r.p ** 0.5) + 1))
            # smallest odd prime factor
            assert all(n % f for f in range(3, r.p, 2))


def test_diagonal_check():
    assert diagonal_check(3, 100) == []
    assert diagonal_check(5, 50) == []
    assert diagonal_check(3, 1) == []
    with pytest.raises(DomainError):
        diagonal_check(2, 10)


def test_brute_force_examples():
    assert brute_force_search(3, 20).solutions == ()
    assert brute_force_search(5, 10).solutions == ()
    res = brute_force_search(3, 12)
    assert {(t.as_tuple(), r) for t, r in res.near_misses} == {((6, 8, 9), 1), ((9, 10, 12), -1)}
    with pytest.raises(ParameterError):
        brute_force_search(4, 10)


def test_brute_force_agrees_with_residual():
    p, bound = 3, 25
    res = brute_force_search(p, bound)
    solutions = {t.as_tuple() for t in res.solutions}
    count = 0
    for x in range(1, bound + 1):
        for y in range(x, bound):
            for z in range(y + 1, bound + 1):
                count += 1
                zero = fermat_residual(FermatTriple(x, y, z, p)) == 0
                assert zero == ((x, y, z) in solutions)
    assert count == res.triples_tested


def test_audit_example_verdicts(report_3_half):
    v = report_3_half.verdicts()
    assert v == {"C1": "holds", "C2": "holds", "C3": "holds", "C4": "holds", "C5": "fails",
                 "C6": "holds", "C7": "holds", "C8": "fails", "C9": "holds"}
    assert report_3_half.distinct_count == 1
    assert report_3_half.square_free_degree == 3
    assert report_3_half.epsilon == DEFAULT_EPSILON
    for iv in report_3_half.refined_intervals + (report_3_half.d_star, report_3_half.alpha):
        assert iv.width <= DEFAULT_EPSILON


def test_audit_p5():
    r = audit_instance(FamilyParams(5, HALF))
    assert r.claim("C5").verdict == "fails" and r.distinct_count == 1
    assert r.claim("C1").verdict == "holds" and r.variations == 5


def test_audit_rejects_bad_u():
    with pytest.raises(ParameterError):
        audit_instance(FamilyParams(3, Fraction(3, 2)))


def test_verdict_honesty(report_3_half):
    data = to_dict(report_3_half)
    for claim in data["claims"]:
        assert claim["evidence"]
        for item in claim["evidence"].split(", "):
            key, value = item.split("=")
            assert _as_text(_lookup(data, EVIDENCE_PATHS[key])) == value, (claim["id"], key)


def test_report_schema(report_3_half):
    data = json.loads(render_report(report_3_half))
    assert tuple(data) == TOP_LEVEL_KEYS
    assert data["params"] == {"p": 3, "u": "1/2", "epsilon": "1/" + "1" + "0" * 30}
    assert data["polynomial"]["coefficients"] == ["-1", "12", "-6", "1"]
    assert data["newton"]["boundary"] == {"lhs": "24", "rhs": "1", "holds": True}
    for c in data["claims"]:
        assert set(c) == {"id", "statement", "paper_anchor", "verdict", "evidence"}

    def walk(node):
        assert not isinstance(node, float)
        if isinstance(node, dict):
            for v in node.values():
                walk(v)
        elif isinstance(node, list):
            for v in node:
                walk(v)

    walk(data)


def test_round_trip_and_determinism(report_3_half):
    raw = render_report(report_3_half)
    assert parse_report(raw) == report_3_half
    assert render_report(parse_report(raw)) == raw
    assert render_report(audit_instance(FamilyParams(3, HALF))) == raw
    assert b"\r" not in raw and raw.endswith(b"\n")


def test_text_render(report_3_half):
    text = render_report(report_3_half, "text").decode("utf-8")
    claim_lines = [line for line in text.splitlines() if line[:1] == "C"]
    assert len(claim_lines) == 9
    assert any(line.startswith("C5 fails") for line in claim_lines)
    assert any(line.startswith("C1 holds") for line in claim_lines)


def test_audit_triple_examples():
    out = audit_triple(FermatTriple(6, 8, 9, 3))
    assert out["d"] == "1/6" and out["residual"] == "1/216" and not out["d_is_root"]
    assert out["u"] == "2/3"
    assert out["integer_family_poly"] == ["-4", "27", "-18", "4"]
    assert out["rational_roots"] == []
    out = audit_triple(FermatTriple(3, 4, 5, 3))
    assert out["residual"] == "34/27" and not out["fermat_counterexample"]
    with pytest.raises(ParameterError):
        audit_triple(FermatTriple(9, 8, 6, 3))


def test_residual_zero_is_flagged(monkeypatch):
    import slope_audit.audit as audit_mod

    monkeypatch.setattr(audit_mod, "fermat_residual", lambda t: Fraction(0))
    out = audit_mod.audit_triple(FermatTriple(6, 8, 9, 3))
    assert out["d_is_root"] and out["fermat_counterexample"]


def test_grid_examples():
    g = audit_grid([3], 1)
    assert [(r.p, r.u) for r in g.reports] == [(3, HALF)]
    g = audit_grid([3, 5], 3)
    assert [(r.p, r.u) for r in g.reports] == [
        (p, Fraction(i, 4)) for p in (3, 5) for i in (1, 2, 3)
    ]
    g = audit_grid([3], 9)
    assert len(g.reports) == 9
    assert all(r.claim("C5").verdict == "fails" for r in g.reports)


def test_grid_records_errors():
    g = audit_grid([3, 4], 2)
    assert len(g.reports) == 2
    assert [(e["p"], e["u"], e["error"]) for e in g.errors] == [
        (4, "1/3", "ParameterError"), (4, "2/3", "ParameterError")]


def test_grid_schedule_independent():
    serial = audit_grid([5, 3], 4, Fraction(1, 10 ** 12), workers=1)
    parallel = audit_grid([3, 5], 4, Fraction(1, 10 ** 12), workers=4)
    assert [render_report(r) for r in serial.reports] == [render_report(r) for r in parallel.reports]
