from fractions import Fraction

import pytest

from cherednik.poly import (
    ArityMismatch,
    NotDivisible,
    Poly,
    Series,
    complete_homogeneous,
    elementary_symmetric,
    exact_divide,
    power_sum,
    series_fractional_power,
    substitute,
)


def gens(n):
    return Poly.gens(n)


def test_arithmetic_and_cancellation():
    x, y = gens(2)
    f = (x + y) ** 2 - x * x - y * y
    assert f == 2 * x * y
    assert (x - x).is_zero()
    assert f.degree() == 2 and f.is_homogeneous()


def test_coefficients_are_exact_fractions():
    x, = gens(1)
    f = x.scale(Fraction(1, 3)) + x.scale(Fraction(2, 3))
    assert f == x
    assert f.coeff((1,)) == 1
    assert isinstance(f.coeff((1,)), Fraction)


def test_arity_is_checked():
    with pytest.raises(ArityMismatch):
        Poly(2, {(1, 0, 0): 1})
    with pytest.raises(ArityMismatch):
        gens(2)[0] + gens(3)[0]


def test_exact_division():
    x, y = gens(2)
    assert exact_divide(x ** 3 - y ** 3, x - y) == x * x + x * y + y * y
    with pytest.raises(NotDivisible):
        exact_divide(x * x + y, x - y)


def test_derivative_swap_evaluate():
    x, y, z = gens(3)
    f = x * x * y + 3 * z
    assert f.derivative(0) == 2 * x * y
    assert f.swap(0, 2) == z * z * y + 3 * x
    assert f.evaluate([1, 2, Fraction(1, 3)]) == 3


def test_homogeneous_parts():
    x, y = gens(2)
    f = 1 + x + x * y
    parts = f.homogeneous_parts()
    assert parts[0] == Poly.const(1, 2) and parts[1] == x and parts[2] == x * y


def test_substitute():
    x, y = gens(2)
    assert substitute(x * y, [x + y, x - y]) == x * x - y * y


def test_symmetric_functions_newton():
    # p2 = e1^2 - 2 e2 in three variables
    e1 = elementary_symmetric(1, 3)
    e2 = elementary_symmetric(2, 3)
    assert power_sum(2, 3) == e1 * e1 - 2 * e2
    # h2 = e1^2 - e2
    assert complete_homogeneous(2, 3) == e1 * e1 - e2


def test_fractional_power_of_series():
    # (1 - z)^(1/2) squared is 1 - z up to the truncation order
    x, = gens(1)
    one = Poly.const(1, 1)
    u = Series.from_polys([one, -one], 6)
    r = series_fractional_power(u, Fraction(1, 2), 6)
    coeffs = [r.coefficient(k).constant_term() for k in range(4)]
    assert coeffs == [1, Fraction(-1, 2), Fraction(-1, 8), Fraction(-1, 16)]
