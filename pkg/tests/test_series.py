import math
from fractions import Fraction

import pytest

from magmaexp import (
    ClassicalSeries,
    TreeSeries,
    UNIT,
    X,
    generator,
    graft,
    one,
    parse,
    zero,
)


def test_constructor_normalizes():
    s = TreeSeries(3, [(X, Fraction(1, 2)), (X, Fraction(-1, 2)), (UNIT, 2)])
    assert s.coefficient(X) == 0
    assert s.coefficient(UNIT) == 2
    assert s.support() == [UNIT]
    with pytest.raises(ValueError):
        TreeSeries(1, {graft(X, X): 1})
    with pytest.raises(ValueError):
        TreeSeries(-1)


def test_zero_coefficients_never_stored():
    f = TreeSeries(2, {X: 1, graft(X, X): Fraction(3, 4)})
    g = TreeSeries(2, {X: -1, graft(X, X): Fraction(1, 4)})
    total = f + g
    assert total.support() == [graft(X, X)]
    assert all(c != 0 for _, c in total.terms())


def test_addition_and_scaling():
    f = TreeSeries(2, {UNIT: 1, X: 2})
    g = TreeSeries(2, {X: Fraction(1, 2)})
    assert (f + g).coefficient(X) == Fraction(5, 2)
    assert (f - f).is_zero()
    assert (3 * g).coefficient(X) == Fraction(3, 2)
    assert (g * Fraction(2, 5)).coefficient(X) == Fraction(1, 5)
    assert (-f).coefficient(UNIT) == -1


def test_multiplication_enumerates_all_factorizations():
    # (1 + x)^2 = 1 + 2x + xx
    f = one(3) + generator(3)
    square = f * f
    assert square.coefficient(UNIT) == 1
    assert square.coefficient(X) == 2
    assert square.coefficient(graft(X, X)) == 1
    # unit acts as identity
    assert f * one(3) == f
    assert one(3) * f == f


def test_multiplication_truncates():
    x = generator(2)
    xx = x * x
    assert xx.support() == [graft(X, X)]
    assert (xx * x).is_zero()  # degree 3 exceeds truncation 2


def test_multiplication_not_associative():
    x = generator(3)
    left = (x * x) * x
    right = x * (x * x)
    assert left != right
    assert left.support() == [parse("((x*x)*x)")]
    assert right.support() == [parse("(x*(x*x))")]


def test_equality_requires_same_truncation():
    with pytest.raises(ValueError):
        zero(2) == zero(3)
    with pytest.raises(ValueError):
        generator(2) + generator(3)
    with pytest.raises(ValueError):
        generator(2) * generator(3)


def test_immutability():
    f = generator(2)
    with pytest.raises(AttributeError):
        f.truncation = 5


def test_order():
    assert zero(4).order() == math.inf
    assert one(4).order() == 0
    assert generator(4).order() == 1
    assert (generator(4) * generator(4)).order() == 2


def test_derivative_leibniz_examples():
    x = generator(3)
    xx = x * x
    assert xx.derivative() == 2 * x
    # d((x*x)*x) = 3 (x*x): two from the left factor, one from the right
    t = TreeSeries(3, {parse("((x*x)*x)"): 1})
    assert t.derivative() == 2 * xx + xx
    assert one(3).derivative().is_zero()
    assert x.derivative() == one(3)


def test_substitute_is_homomorphic_on_monomials():
    g = TreeSeries(4, {graft(X, X): 1})
    f = TreeSeries(4, {graft(X, X): 1})
    image = f.substitute(g)
    assert image.support() == [parse("((x*x)*(x*x))")]
    # substituting x for x is the identity
    assert f.substitute(generator(4)) == f


def test_substitute_rejects_order_zero():
    with pytest.raises(ValueError):
        generator(3).substitute(one(3))
    # the zero series has infinite order and is allowed
    assert generator(3).substitute(zero(3)).is_zero()


def test_dilate():
    x = generator(3)
    f = one(3) + x + (x * x).scale(Fraction(1, 2))
    d = f.dilate(2)
    assert d.coefficient(UNIT) == 1
    assert d.coefficient(X) == 2
    assert d.coefficient(graft(X, X)) == 2
    assert f.dilate(1) == f
    assert f.dilate(0) == one(3)
    # dilation agrees with substituting c*x for x
    assert f.dilate(Fraction(2, 3)) == f.substitute(generator(3).scale(Fraction(2, 3)))


def test_truncate():
    x = generator(3)
    f = one(3) + x + x * x
    g = f.truncate(1)
    assert g.truncation == 1
    assert g.support() == [UNIT, X]
    with pytest.raises(ValueError):
        f.truncate(4)


def test_classical_projection():
    x = generator(3)
    f = x * x + TreeSeries(3, {parse("((x*x)*x)"): Fraction(1, 3), parse("(x*(x*x))"): Fraction(2, 3)})
    c = f.classical_projection()
    assert c == ClassicalSeries(3, (Fraction(0), Fraction(0), Fraction(1), Fraction(1)))
    assert c.coefficient(2) == 1
    with pytest.raises(ValueError):
        c.coefficient(4)


def test_serialization_golden_and_round_trip():
    f = TreeSeries(
        3,
        {
            UNIT: 1,
            X: 1,
            graft(X, X): Fraction(1, 2),
            parse("(x*(x*x))"): Fraction(1, 12),
            parse("((x*x)*x)"): Fraction(1, 12),
        },
    )
    text = f.to_text()
    assert text == (
        "truncation\t3\n"
        "1\t1/1\n"
        "x\t1/1\n"
        "(x*x)\t1/2\n"
        "(x*(x*x))\t1/12\n"
        "((x*x)*x)\t1/12\n"
    )
    assert TreeSeries.from_text(text) == f
    assert TreeSeries.from_text(zero(5).to_text()) == zero(5)


def test_serialization_rejects_garbage():
    with pytest.raises(ValueError):
        TreeSeries.from_text("")
    with pytest.raises(ValueError):
        TreeSeries.from_text("truncated\t3\n")
    with pytest.raises(ValueError):
        TreeSeries.from_text("truncation\t3\nx\t0.5\n")
