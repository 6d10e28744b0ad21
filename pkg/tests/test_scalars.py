import random
from fractions import Fraction

import pytest

from spectriple import scalars
from spectriple.scalars import QI, as_scalar, conj, is_zero, rational


def test_rational_backend_roundtrip():
    r = rational(2, 6)
    assert r == Fraction(1, 3)
    assert str(r) == "1/3"
    assert rational(Fraction(-5, 10)) == Fraction(-1, 2)


def test_qi_arithmetic_is_exact():
    a = QI(Fraction(1, 3), Fraction(2, 7))
    b = QI(Fraction(-4, 5), Fraction(1, 2))
    assert a + b - b == a
    assert (a * b) / b == a
    assert a * (b + b) == a * b + a * b
    # no drift: a third of a third, thrice
    x = QI(1)
    for _ in range(3):
        x = x * QI(Fraction(1, 3))
    assert x == QI(Fraction(1, 27))


def test_qi_multiplication_table():
    i = QI(0, 1)
    assert i * i == QI(-1)
    assert i.conjugate() == QI(0, -1)
    assert (QI(2, 3) * QI(2, -3)) == QI(13)


def test_qi_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QI(1) / QI(0)


def test_qi_rejects_floats():
    with pytest.raises(TypeError):
        as_scalar(0.5, exact=True)
    assert as_scalar(0.5, exact=False) == 0.5 + 0j
    assert as_scalar(QI(Fraction(1, 2)), exact=False) == 0.5 + 0j


def test_field_axioms_on_random_samples():
    rng = random.Random(7)

    def draw():
        return QI(Fraction(rng.randint(-9, 9), rng.randint(1, 9)),
                  Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    for _ in range(100):
        a, b, c = draw(), draw(), draw()
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert conj(a * b) == conj(a) * conj(b)
        if b:
            assert (a / b) * b == a


def test_tolerance_is_global_and_guarded():
    old = scalars.get_tolerance()
    try:
        scalars.set_tolerance(1e-6)
        assert is_zero(1e-7 + 0j)
        assert not is_zero(1e-5 + 0j)
        with pytest.raises(ValueError):
            scalars.set_tolerance(0.0)
    finally:
        scalars.set_tolerance(old)


def test_exact_zero_is_exact():
    assert is_zero(QI(0, 0))
    assert not is_zero(QI(Fraction(1, 10**40)))
