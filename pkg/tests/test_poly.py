from fractions import Fraction as F

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from jacobitau.poly import (
    ONE,
    X,
    ZERO,
    RatPoly,
    cauchy_bound,
    content,
    count_real_roots,
    exact_div,
    gcd,
    is_real_rooted,
    shift_mul_x,
    sign_at,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

small = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(small, min_size=1, max_size=6).map(RatPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())

x = sympy.symbols("x")


def _sym(p: RatPoly):
    return sum(sympy.Rational(c.numerator, c.denominator) * x**k for k, c in enumerate(p.coeffs))


def test_canonical_form_strips_trailing_zeros():
    p = RatPoly([1, 2, 0, 0])
    assert p.coeffs == (F(1), F(2))
    assert p.degree == 1
    assert RatPoly([0, 0]).is_zero()
    assert ZERO.degree == float("-inf")


def test_arithmetic_and_evaluation():
    p = RatPoly([1, 1])  # 1 + x
    assert p * p == RatPoly([1, 2, 1])
    assert p - p == ZERO
    assert (p * X)(F(1, 2)) == F(3, 4)
    assert 3 - p == RatPoly([2, -1])
    assert str(RatPoly([F(1, 2), 0, -3])) == "1/2 - 3*x^2"


def test_division_identity():
    a = RatPoly([5, 0, 3, 1])
    b = RatPoly([1, 2])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree
    with pytest.raises(ZeroDivisionError):
        divmod(a, ZERO)


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_divmod_property(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


def test_compose_square_and_reflect():
    p = RatPoly([1, 2, 3])
    assert p.compose_square() == RatPoly([1, 0, 2, 0, 3])
    assert p.reflect() == RatPoly([1, -2, 3])
    assert shift_mul_x(p, 2) == RatPoly([0, 0, 1, 2, 3])
    with pytest.raises(ValueError):
        shift_mul_x(p, -1)


def test_content_and_primitive():
    p = RatPoly([F(2, 3), F(4, 9)])
    assert content(p) == F(2, 9)
    assert p.primitive() == RatPoly([3, 2])


@given(nonzero_polys, nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_gcd_matches_sympy(a, b):
    g = gcd(a, b)
    assert g.lc == 1
    expected = sympy.Poly(sympy.gcd(_sym(a), _sym(b)), x).monic()
    assert _sym(g).expand() == expected.as_expr().expand()


def test_gcd_of_zero_pair_is_undefined():
    with pytest.raises(ValueError):
        gcd(ZERO, ZERO)
    assert gcd(ZERO, RatPoly([2, 4])) == RatPoly([F(1, 2), 1])


def test_squarefree_decomposition():
    p = RatPoly.from_roots([-1, -1, -2, 3, 3, 3], lead=5)
    parts = {m: f.monic() for f, m in squarefree_decomposition(p)}
    assert parts[1] == RatPoly.from_roots([-2])
    assert parts[2] == RatPoly.from_roots([-1])
    assert parts[3] == RatPoly.from_roots([3])
    assert squarefree_part(p).monic() == RatPoly.from_roots([-1, -2, 3])
    assert exact_div(p, RatPoly.from_roots([3, 3, 3])) == RatPoly.from_roots([-1, -1, -2], lead=5)


def test_sturm_counts():
    p = RatPoly.from_roots([-3, -1, 2])
    assert count_real_roots(p) == 3
    assert count_real_roots(p, -3, 2) == 2  # half open: (-3, 2]
    assert count_real_roots(p, None, 0) == 2
    assert count_real_roots(RatPoly([1, 0, 1])) == 0
    assert not is_real_rooted(RatPoly([1, 0, 1]))
    assert is_real_rooted(RatPoly.from_roots([1, 1, 1]))
    assert is_real_rooted(ONE)
    chain = sturm_chain(p)
    assert chain[0].degree == 3 and chain[-1].is_constant()


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=5), st.integers(0, 3))
@settings(max_examples=60, deadline=None)
def test_count_matches_sympy(roots, extra_quadratics):
    p = RatPoly.from_roots(roots)
    for k in range(extra_quadratics):
        p = p * RatPoly([k + 1, 0, 1])
    assert count_real_roots(p) == len(set(roots))
    assert count_real_roots(p) == len(set(sympy.real_roots(sympy.Poly(_sym(p), x))))


def test_sign_at_infinity():
    p = RatPoly([1, 0, -1])  # 1 - x^2
    assert sign_at(p, float("inf")) == -1
    assert sign_at(p, float("-inf")) == -1
    assert sign_at(p, 0) == 1


@given(nonzero_polys)
@settings(max_examples=60, deadline=None)
def test_cauchy_bound_encloses_roots(p):
    if p.is_constant():
        return
    b = cauchy_bound(p)
    assert count_real_roots(p, -b, b) == count_real_roots(p)
    assert b.numerator & (b.numerator - 1) == 0 and b.denominator == 1
