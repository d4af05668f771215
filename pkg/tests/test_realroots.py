import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobitau.jacobi import phi
from jacobitau.poly import RatPoly
from jacobitau.realroots import (
    NEG_INF,
    RootVerdict,
    all_negative_simple,
    compare,
    isolate,
    point_root,
    same_root,
    sorted_by_value,
    strictly_less,
    vieta_sum,
    zr,
)

# (-45 +- sqrt(1605)) / 210, evaluated once with math.sqrt
PHI4_NEAR = -0.02351213691418924
PHI4_FAR = -0.40505929165723936


def test_isolate_phi4():
    rl = isolate(RatPoly([1, 45, 105]), precision=F(1, 10**7))
    assert rl.all_real and len(rl) == 2
    assert abs(float(rl[0].mid) - PHI4_NEAR) < 1e-6
    assert abs(float(rl[1].mid) - PHI4_FAR) < 1e-6
    assert all(r.width < F(1, 10**6) for r in rl)
    assert rl.negative_count == 2


def test_isolate_no_real_roots():
    rl = isolate(RatPoly([1, 0, 1]))
    assert len(rl) == 0 and not rl.all_real


def test_isolate_multiplicities():
    rl = isolate(RatPoly.from_roots([-1, -1, -2]))
    assert [(r.mid, r.multiplicity) for r in rl] == [(F(-1), 2), (F(-2), 1)]
    assert rl.all_real


def test_isolate_errors():
    with pytest.raises(ValueError):
        isolate(RatPoly())
    with pytest.raises(ValueError):
        isolate(RatPoly([1, 1]), precision=0)


def test_zr_conventions():
    rl = isolate(RatPoly([1, 45, 105]))
    assert zr(rl, 0) == 0
    assert abs(float(zr(rl, 1)) - PHI4_NEAR) < 1e-6
    assert zr(rl, 3) == NEG_INF
    assert zr(isolate(RatPoly([7])), 1) == NEG_INF
    with pytest.raises(ValueError):
        zr(rl, -1)


def test_distance_order_mixes_signs():
    rl = isolate(RatPoly.from_roots([3, F(-1, 2), -2, F(5, 4)]))
    assert [r.mid for r in rl] == [F(-1, 2), F(5, 4), F(-2), F(3)]
    assert rl.negative_count == 2


def test_distance_tie_puts_negative_first():
    rl = isolate(RatPoly([-2, 0, 1]))  # +-sqrt(2)
    assert rl[0].hi <= 0 and rl[1].lo >= 0


def test_all_negative_simple_verdicts():
    assert all_negative_simple(phi(4, 0, 0)) is RootVerdict.NEGATIVE_SIMPLE
    assert all_negative_simple(RatPoly.from_roots([-1, -1])) is RootVerdict.NEGATIVE_WITH_MULTIPLICITY
    assert all_negative_simple(RatPoly([-1, 1])) is RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
    assert all_negative_simple(RatPoly([0, 1])) is RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
    assert all_negative_simple(RatPoly([1, 0, 1])) is RootVerdict.HAS_NONNEGATIVE_OR_COMPLEX
    assert all_negative_simple(RatPoly([5])) is RootVerdict.NEGATIVE_SIMPLE


def test_same_root_and_compare():
    a = isolate(RatPoly([-2, 0, 1]))  # sqrt 2
    b = isolate(RatPoly([-2, 0, 1]) * RatPoly([1, 1]))
    ra = [r for r in a if r.lo >= 0][0]
    rb = [r for r in b if r.lo >= 0][0]
    assert same_root(ra, rb)
    assert compare(ra, rb)[0] == 0
    c = isolate(RatPoly([-3, 0, 1]))
    rc = [r for r in c if r.lo >= 0][0]
    assert compare(ra, rc)[0] == -1
    assert strictly_less(ra, rc)
    assert strictly_less(NEG_INF, ra)
    assert not strictly_less(NEG_INF, NEG_INF)
    assert strictly_less(F(-1), point_root(0))


roots_strategy = st.lists(
    st.fractions(min_value=-20, max_value=F(-1, 40), max_denominator=40), min_size=1, max_size=6, unique=True
)


@given(roots_strategy, st.fractions(min_value=F(1, 9), max_value=10, max_denominator=9))
@settings(max_examples=60, deadline=None)
def test_recovers_negative_linear_factors(roots, lead):
    prec = F(1, 10**6)
    rl = isolate(RatPoly.from_roots(roots, lead=lead), precision=prec)
    assert rl.all_real and len(rl) == len(roots)
    found = sorted(r.mid for r in rl)
    for got, want in zip(found, sorted(roots)):
        assert abs(got - want) < prec
    # distance order is the value order reversed for negative roots
    assert [r.mid for r in rl] == sorted(found, reverse=True)


@given(roots_strategy, st.lists(st.integers(1, 3), min_size=6, max_size=6))
@settings(max_examples=40, deadline=None)
def test_vieta_cross_check(roots, mults):
    prec = F(1, 10**8)
    p = RatPoly.from_roots([r for r, m in zip(roots, mults) for _ in range(m)])
    rl = isolate(p, precision=prec)
    total = sum(r.mid * r.multiplicity for r in rl)
    d = int(p.degree)
    assert abs(total - vieta_sum(p)) <= 2 * d * prec


@given(roots_strategy, st.fractions(min_value=F(1, 50), max_value=100, max_denominator=50))
@settings(max_examples=40, deadline=None)
def test_scaling_invariance(roots, c):
    p = RatPoly.from_roots(roots)
    a, b = isolate(p), isolate(p * c)
    assert [(r.lo, r.hi) for r in a] == [(r.lo, r.hi) for r in b]


def test_sorted_by_value_is_certified():
    rl = isolate(RatPoly.from_roots([F(1, 3), F(-1, 3), 0, F(1, 2)]))
    vals = [r.mid for r in sorted_by_value(list(rl))]
    assert vals == sorted(vals)


def test_root_to_dict_strings():
    d = isolate(RatPoly([1, 1])).roots[0].as_dict()
    assert d == {"lo": "-1", "hi": "-1", "mid": "-1", "mult": 1}
    assert math.isclose(float(isolate(RatPoly([1, 3])).roots[0]), -1 / 3, abs_tol=1e-8)
