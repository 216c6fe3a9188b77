import pytest
from hypothesis import given, strategies as st

from rankmatch import FieldMismatchError, FieldSpec
from rankmatch.theorem import Polynomial

F3, F5 = FieldSpec(3), FieldSpec(5)


def x(spec, nvars, i):
    return Polynomial.variable(spec, nvars, i)


def test_arithmetic_and_printing():
    X, Y = x(F3, 2, 0), x(F3, 2, 1)
    f = 2 * X * X * Y + 2 * X * Y * Y
    assert str(f) == "2*x1^2*x2 + 2*x1*x2^2"
    assert f.coefficient((2, 1)) == 2 and f.coefficient((1, 1)) == 0
    assert f.total_degree == 3
    assert f.evaluate((1, 1)) == 1 and f((2, 2)) == 2
    assert (X + 1) ** 3 == X ** 3 + 1  # Frobenius in characteristic 3


def test_zero_terms_are_dropped():
    X = x(F5, 1, 0)
    assert (X - X).is_zero() and (X - X) == 0
    assert Polynomial(F5, 1, {(1,): 5}).is_zero()
    assert Polynomial(F5, 1).total_degree == -1


def test_linear_constructor():
    f = Polynomial.linear(F5, 3, [1, 0, 4])
    assert f.evaluate((1, 9, 1)) == (3 + 1 + 4) % 5
    assert set(f.terms) == {(0, 0, 0), (1, 0, 0), (0, 0, 1)}


def test_mismatches_rejected():
    with pytest.raises(FieldMismatchError):
        x(F3, 1, 0) + x(F5, 1, 0)
    with pytest.raises(ValueError):
        x(F3, 1, 0) + x(F3, 2, 0)
    with pytest.raises(ValueError):
        x(F3, 1, 0).coefficient((1, 0))
    with pytest.raises(ValueError):
        x(F3, 1, 0) ** -1


coeff = st.integers(0, 4)
mono = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(mono, coeff, max_size=6).map(lambda t: Polynomial(F5, 2, t))


@given(polys, polys, polys, st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_ring_laws_and_evaluation_homomorphism(f, g, h, pt):
    assert f + g == g + f and f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f - g) + g == f
    if not f.is_zero() and not g.is_zero():
        assert (f * g).total_degree <= f.total_degree + g.total_degree
