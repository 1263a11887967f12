import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import expand_roots
from slope_audit.errors import DomainError, PreconditionError
from slope_audit.numerics import Interval
from slope_audit.polynomial import Polynomial, evaluate, square_free_part
from slope_audit.roots import (
    cauchy_bound,
    descartes_negative,
    descartes_positive,
    isolate_real_roots,
    newton_dugua_check,
    rational_root_test,
    real_roots_with_multiplicity,
    refine_root,
    sign_variations,
    sturm_real_root_count,
    vieta_product,
)

F3 = Polynomial([-1, 12, -6, 1])
F5 = Polynomial([-1, 80, -80, 40, -10, 1])
T2_PLUS_1 = Polynomial([1, 0, 1])


def from_roots(roots):
    return Polynomial(expand_roots(roots))


def _sign(x):
    return (x > 0) - (x < 0)


def test_sign_variation_examples():
    assert sign_variations(F3) == 3
    assert sign_variations(T2_PLUS_1) == 0
    assert sign_variations(F5) == 5
    assert sign_variations(Polynomial([1, 0, 0, -1])) == 1
    with pytest.raises(DomainError):
        sign_variations(Polynomial())


def test_descartes_examples():
    d = descartes_positive(F3)
    assert (d.variations, d.possible_root_counts) == (3, (3, 1))
    assert descartes_positive(T2_PLUS_1).possible_root_counts == (0,)
    assert descartes_positive(F5).possible_root_counts == (5, 3, 1)
    assert F3.reflect() == Polynomial([-1, -12, -6, -1])
    assert descartes_negative(F3).variations == 0
    assert descartes_negative(T2_PLUS_1).variations == 0
    assert descartes_negative(Polynomial([1, 1])).variations == 1


root_lists = st.lists(
    st.fractions(min_value=-6, max_value=6, max_denominator=5), min_size=1, max_size=7
)


@settings(max_examples=500)
@given(root_lists, st.integers(0, 2))
def test_descartes_soundness(roots, quadratic_factors):
    f = from_roots(roots)
    # optional positive-definite factors add complex roots only
    for _ in range(quadratic_factors):
        f = f * T2_PLUS_1
    true_positive = sum(1 for r in roots if r > 0)
    true_negative = sum(1 for r in roots if r < 0)
    assert true_positive in descartes_positive(f).possible_root_counts
    assert true_negative in descartes_negative(f).possible_root_counts


def test_newton_examples():
    res = newton_dugua_check(F3)
    assert [(t.k, t.lhs, t.rhs, t.holds) for t in res.per_index] == [(1, 144, 6, True), (2, 36, 12, True)]
    assert res.all_hold
    res = newton_dugua_check(Polynomial([1, 1, 1]))
    assert [(t.lhs, t.rhs, t.holds) for t in res.per_index] == [(1, 1, False)]
    assert not res.all_hold
    assert newton_dugua_check(Polynomial([2, -3, 1])).per_index[0].holds
    with pytest.raises(DomainError):
        newton_dugua_check(Polynomial([1, 1]))


def test_newton_is_only_necessary():
    f = Polynomial([2, 2, 1])  # t^2 + 2t + 2, roots -1 +- i
    assert newton_dugua_check(f).all_hold
    assert sturm_real_root_count(f) == 0


def test_sturm_examples():
    assert sturm_real_root_count(F3) == 1
    assert sturm_real_root_count(from_roots([1, 2, 3])) == 3
    assert sturm_real_root_count(T2_PLUS_1) == 0
    assert sturm_real_root_count(Polynomial([5])) == 0
    with pytest.raises(DomainError):
        sturm_real_root_count(Polynomial())


def test_sturm_closed_interval_endpoints():
    f = from_roots([1, 2, 3])
    assert sturm_real_root_count(f, Interval(1, 3)) == 3
    assert sturm_real_root_count(f, Interval(1, 2)) == 2
    assert sturm_real_root_count(f, Interval(Fraction(3, 2), Fraction(5, 2))) == 1
    assert sturm_real_root_count(f, Interval(2, 2)) == 1
    assert sturm_real_root_count(f, Interval(4, 9)) == 0
    # adjacent roots closer than any fixed nudge step
    g = from_roots([0, Fraction(1, 10 ** 9)])
    assert sturm_real_root_count(g, Interval(-1, 0)) == 1


def test_isolation_examples():
    iso = isolate_real_roots(F3)
    assert iso.distinct_count == 1
    (iv,) = iso.intervals
    assert 0 < iv.lo and iv.hi < 1
    iso = isolate_real_roots(from_roots([1, 2]))
    assert iso.distinct_count == 2
    a, b = iso.intervals
    assert 1 in a and 2 in b and a.hi < b.lo
    assert isolate_real_roots(T2_PLUS_1).intervals == ()


def _check_isolation(f, roots):
    iso = isolate_real_roots(f)
    distinct = sorted(set(roots))
    assert iso.distinct_count == len(distinct)
    for iv, r in zip(iso.intervals, distinct):
        assert iv.lo < r < iv.hi
        assert evaluate(f, iv.lo) != 0 and evaluate(f, iv.hi) != 0
    for a, b in zip(iso.intervals, iso.intervals[1:]):
        assert a.hi < b.lo


@settings(max_examples=200, deadline=None)
@given(root_lists)
def test_sturm_matches_construction(roots):
    f = from_roots(roots)
    assert sturm_real_root_count(f) == len(set(roots))
    assert real_roots_with_multiplicity(f) == len(roots)
    _check_isolation(f, roots)


def test_refine_examples():
    eps = Fraction(1, 10 ** 8)
    iv = refine_root(F3, Interval(0, 1), eps)
    assert iv.width <= eps
    assert iv.contains(Fraction(8706882, 10 ** 8)) or abs(iv.lo - Fraction(8706882, 10 ** 8)) < eps
    assert refine_root(Polynomial([-2, 1]), Interval(0, 4), Fraction(1, 3)) == Interval(2, 2)
    iv = refine_root(Polynomial([-2, 0, 1]), Interval(1, 2), Fraction(1, 10 ** 6))
    assert iv.lo ** 2 < 2 < iv.hi ** 2 and iv.width <= Fraction(1, 10 ** 6)
    with pytest.raises(PreconditionError):
        refine_root(from_roots([1, 2]), Interval(0, 3), eps)


def test_refine_even_multiplicity_root():
    f = from_roots([Fraction(1, 3), Fraction(1, 3), 5])
    iv = refine_root(f, Interval(0, 1), Fraction(1, 10 ** 5))
    assert Fraction(1, 3) in iv


@settings(max_examples=100, deadline=None)
@given(root_lists)
def test_refined_brackets_keep_sign_change(roots):
    f = from_roots(roots)
    g = square_free_part(f)
    for iv in isolate_real_roots(f).intervals:
        r = refine_root(f, iv, Fraction(1, 2 ** 20))
        assert _sign(evaluate(g, r.lo)) * _sign(evaluate(g, r.hi)) <= 0
        if g == f.monic():
            assert _sign(evaluate(f, r.lo)) * _sign(evaluate(f, r.hi)) <= 0


def test_cauchy_bound_encloses_roots():
    rng = random.Random(7)
    for _ in range(50):
        roots = [Fraction(rng.randint(-50, 50), rng.randint(1, 9)) for _ in range(rng.randint(1, 6))]
        f = from_roots(roots)
        b = cauchy_bound(f)
        assert all(abs(r) < b for r in roots)


def test_vieta_examples():
    assert vieta_product(F3) == 1
    assert vieta_product(Polynomial([6, -5, 1])) == 6
    with pytest.raises(DomainError):
        vieta_product(Polynomial([3]))


def test_rational_root_examples():
    assert rational_root_test(Polynomial([-4, 27, -18, 4])) == []
    assert rational_root_test(Polynomial([1, -3, 2])) == [Fraction(1, 2), 1]
    assert rational_root_test(Polynomial([-1, 0, 0, 1])) == [1]
    assert rational_root_test(Polynomial([0, 0, -1, 1])) == [0, 1]
    with pytest.raises(DomainError):
        rational_root_test(Polynomial([Fraction(1, 2), 1]))


def test_no_rational_root_brute_force_oracle():
    # every candidate num/den with |num| <= 4, den | 4 checked directly
    g = Polynomial([-4, 27, -18, 4])
    for num in range(-4, 5):
        for den in (1, 2, 4):
            assert evaluate(g, Fraction(num, den)) != 0


@settings(max_examples=100, deadline=None)
@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=5))
def test_rational_roots_recovered(roots):
    from slope_audit.polynomial import scale_to_integer

    g, _ = scale_to_integer(from_roots(roots) * T2_PLUS_1)
    assert rational_root_test(g) == sorted(set(roots))
