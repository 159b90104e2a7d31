from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schubert_smooth.rational import Poly, RationalExpr, normalize_form

forms = st.lists(st.integers(-3, 3), min_size=2, max_size=2).filter(any).map(tuple)
points = st.tuples(st.fractions(-5, 5, max_denominator=7), st.fractions(-5, 5, max_denominator=7))


def evaluate(expr: RationalExpr, x) -> Fraction:
    num = sum((c * _mono(e, x) for e, c in expr.num.terms.items()), Fraction(0))
    den = Fraction(1)
    for f, k in expr.den.items():
        den *= sum(a * b for a, b in zip(f, x)) ** k
    return num / den


def _mono(e, x):
    out = Fraction(1)
    for xi, ei in zip(x, e):
        out *= xi ** ei
    return out


def safe(x, vecs):
    return all(sum(a * b for a, b in zip(v, x)) != 0 for v in vecs)


def test_normalize_form():
    assert normalize_form((2, 4)) == ((1, 2), 2)
    assert normalize_form((-3, 6)) == ((1, -2), -3)
    with pytest.raises(ZeroDivisionError):
        normalize_form((0, 0))


def test_partial_fraction_identity():
    a, b = RationalExpr.inverse_of((1, 0)), RationalExpr.inverse_of((0, 1))
    ab = RationalExpr.inverse_of((1, 1))
    assert a * ab + b * ab == a * b
    assert (a - a).is_zero()


def test_reduction_cancels_common_forms():
    p = Poly.linear((1, 1))
    e = RationalExpr(p, Counter({(1, 1): 2}))
    assert e == RationalExpr.inverse_of((1, 1))
    assert e.den == Counter({(1, 1): 1})


def test_constant_ratio():
    a = RationalExpr.inverse_product([(1, 0), (0, 1)], 2)
    assert (a * 4).constant_ratio(a) == 4
    assert RationalExpr.inverse_of((1, 0)).constant_ratio(RationalExpr.inverse_of((0, 1))) is None


def test_unhashable():
    with pytest.raises(TypeError):
        hash(RationalExpr.one(2))


@given(st.lists(forms, min_size=1, max_size=4), st.lists(forms, min_size=1, max_size=4), points,
       st.integers(-3, 3))
def test_arithmetic_agrees_with_evaluation(u, v, x, k):
    if not safe(x, u + v):
        return
    e, f = RationalExpr.inverse_product(u, 2), RationalExpr.inverse_product(v, 2, sign=-1)
    assert evaluate(e + f, x) == evaluate(e, x) + evaluate(f, x)
    assert evaluate(e * f, x) == evaluate(e, x) * evaluate(f, x)
    assert evaluate(e - f, x) == evaluate(e, x) - evaluate(f, x)
    assert evaluate(e * k, x) == evaluate(e, x) * k


@given(st.lists(forms, min_size=1, max_size=3), st.lists(forms, min_size=1, max_size=3))
def test_addition_commutative_and_equality_consistent(u, v):
    e, f = RationalExpr.inverse_product(u, 2), RationalExpr.inverse_product(v, 2)
    assert e + f == f + e
    assert (e + f) - f == e
