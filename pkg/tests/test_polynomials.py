from fractions import Fraction

import pytest

from coronapoly.polynomials import IntPolynomial, evaluate_exact


def test_ring_ops():
    p = IntPolynomial((1, 2))
    q = IntPolynomial((1, 1))
    assert (p * q).coeffs == (1, 3, 2)
    assert (p + q).coeffs == (2, 3)
    assert (p - q).coeffs == (0, 1)
    assert (p * IntPolynomial.one()) == p
    assert (p * IntPolynomial.zero()).coeffs == ()
    assert (-p).coeffs == (-1, -2)
    assert (3 * p).coeffs == (3, 6)


def test_trailing_zeros_stripped():
    assert IntPolynomial((1, 0, 0)).coeffs == (1,)
    assert IntPolynomial((0, 0)).degree == -1
    assert not IntPolynomial(())


def test_pow_and_shift():
    one_plus_x = IntPolynomial((1, 1))
    assert (one_plus_x ** 4).coeffs == (1, 4, 6, 4, 1)
    assert one_plus_x.shift(2).coeffs == (0, 0, 1, 1)
    with pytest.raises(ValueError):
        one_plus_x ** -1


def test_evaluation():
    p = IntPolynomial((1, 4, 3))
    assert p(0) == 1
    assert p(1) == 8
    assert p(-1) == 0
    assert p(Fraction(-1, 3)) == Fraction(0)
    assert evaluate_exact(p, Fraction(1, 2)) == Fraction(15, 4)
    assert isinstance(evaluate_exact(p, 2), Fraction)


def test_derivative_and_content():
    p = IntPolynomial((2, 4, 6))
    assert p.derivative().coeffs == (4, 12)
    assert p.content() == 2
    assert p.primitive_part().coeffs == (1, 2, 3)
    assert IntPolynomial((-2, -4)).primitive_part().coeffs == (-1, -2)


def test_str_forms():
    assert str(IntPolynomial((1, 4, 3))) == "1 + 4x + 3x^2"
    assert str(IntPolynomial((1, 3, 1))) == "1 + 3x + x^2"
    assert str(IntPolynomial((0, 1))) == "x"
    assert str(IntPolynomial(())) == "0"
    assert str(IntPolynomial((1, -2, 0, 5))) == "1 - 2x + 5x^3"


def test_json_round_trip():
    p = IntPolynomial((1, 10, 36, 58, 42, 12, 1))
    assert p.to_json_coeffs() == ["1", "10", "36", "58", "42", "12", "1"]
    assert IntPolynomial.from_json_coeffs(p.to_json_coeffs()) == p


def test_rejects_non_integers():
    with pytest.raises(TypeError):
        IntPolynomial((1.5, 2))


def test_coeff_beyond_degree_is_zero():
    p = IntPolynomial((1, 2))
    assert p.coeff(5) == 0
    assert p.coeff(1) == 2
