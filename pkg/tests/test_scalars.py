from fractions import Fraction

import pytest

from reflektor.scalars import rat_make, rat_str, rat_arith


def test_make_from_ints():
    assert rat_make(3, 6) == Fraction(1, 2)
    assert rat_make(5) == 5


def test_make_from_string():
    assert rat_make("-3/7") == Fraction(-3, 7)
    assert rat_make("4") == 4


def test_make_rejects_string_with_den():
    with pytest.raises(ValueError):
        rat_make("1/2", 3)


def test_str_roundtrip():
    assert rat_str(Fraction(-3, 7)) == "-3/7"
    assert rat_str(Fraction(8, 4)) == "2"
    assert rat_make(rat_str(Fraction(22, 7))) == Fraction(22, 7)


def test_arith_named_ops():
    assert rat_arith("add", Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rat_arith("sub", 1, Fraction(1, 4)) == Fraction(3, 4)
    assert rat_arith("mul", Fraction(2, 3), Fraction(3, 2)) == 1
    assert rat_arith("div", 1, 3) == Fraction(1, 3)


def test_arith_unknown_op():
    with pytest.raises(ValueError):
        rat_arith("pow", 2, 3)


def test_div_by_zero():
    with pytest.raises(ZeroDivisionError):
        rat_arith("div", 1, 0)
