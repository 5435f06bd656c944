"""Exact scalar arithmetic, ordering, floors, and the text grammar.

mpmath at 60 digits serves as the independent sign and floor oracle for
values mixing a rational and a sqrt term.
"""

import math
import random
from fractions import Fraction

import mpmath
import pytest

from atfkit.scalars import (
    ONE,
    ZERO,
    QField,
    floor,
    format_scalar,
    parse_scalar,
    qf,
)

mpmath.mp.dps = 60


def random_value(rng: random.Random, d: int | None = 2) -> QField:
    a = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
    if d is None:
        return QField(a)
    b = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
    return QField(a, b, d)


def to_mp(x: QField) -> mpmath.mpf:
    out = mpmath.mpf(x.a.numerator) / x.a.denominator
    if x.b != 0:
        out += mpmath.mpf(x.b.numerator) / x.b.denominator * mpmath.sqrt(x.d)
    return out


# -- construction and normal form -------------------------------------------


def test_zero_sqrt_coefficient_drops_radicand():
    v = QField(Fraction(3, 4), 0, 2)
    assert v.d is None
    assert v.is_rational()
    assert v.as_fraction() == Fraction(3, 4)


def test_radicand_validation():
    with pytest.raises(ValueError):
        QField(0, 1, 4)  # square
    with pytest.raises(ValueError):
        QField(0, 1, 12)  # divisible by a square
    with pytest.raises(ValueError):
        QField(0, 1, 1)
    with pytest.raises(ValueError):
        QField(0, 1, None)  # irrational part without a radicand
    with pytest.raises(ValueError):
        QField(0, 1, Fraction(5))  # not an int


def test_values_are_immutable():
    v = qf("1/2")
    with pytest.raises(AttributeError):
        v._a = Fraction(1)


def test_normal_form_accessors():
    v = QField(Fraction(-3, 4), Fraction(5, 6), 7)
    assert (v.p, v.q, v.r, v.s, v.d) == (-3, 4, 5, 6, 7)
    assert not v.is_rational()
    with pytest.raises(ValueError):
        v.as_fraction()


def test_sqrt_constructor():
    root = QField.sqrt(5)
    assert root * root == 5
    assert not root.is_rational()


def test_qf_coercions():
    assert qf(3) == QField(3)
    assert qf(Fraction(2, 6)) == QField(Fraction(1, 3))
    assert qf("5/8") == QField(Fraction(5, 8))
    existing = QField(1, 1, 2)
    assert qf(existing) is existing


# -- field arithmetic --------------------------------------------------------


def test_field_axioms_randomized():
    rng = random.Random(101)
    for _ in range(80):
        d = rng.choice([2, 3, 5, None])
        x, y, z = (random_value(rng, d) for _ in range(3))
        assert x + y == y + x
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + ZERO == x
        assert x * ONE == x
        assert x - x == ZERO
        if bool(y):
            assert (x / y) * y == x
            assert y / y == ONE


def test_arithmetic_matches_mpmath():
    rng = random.Random(102)
    for _ in range(60):
        d = rng.choice([2, 3, 5])
        x, y = random_value(rng, d), random_value(rng, d)
        for got, expect in [
            (x + y, to_mp(x) + to_mp(y)),
            (x - y, to_mp(x) - to_mp(y)),
            (x * y, to_mp(x) * to_mp(y)),
        ]:
            assert abs(to_mp(got) - expect) < mpmath.mpf(10) ** -40


def test_conjugate_norm_is_rational():
    rng = random.Random(103)
    for _ in range(40):
        x = random_value(rng, rng.choice([2, 3, 7]))
        norm = x * x.conjugate()
        assert norm.is_rational()
        trace = x + x.conjugate()
        assert trace.is_rational()
    assert qf("1/2").conjugate() == qf("1/2")


def test_frozen_products():
    root2 = QField.sqrt(2)
    assert (1 + root2) * (1 - root2) == -1
    assert str(1 / (1 + root2)) == "-1/1+1/1*sqrt(2)"
    assert (root2 / 2) * (root2 / 2) == qf("1/2")


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        QField.sqrt(2) + QField.sqrt(3)
    with pytest.raises(ValueError):
        QField.sqrt(2) * QField.sqrt(3)
    # a rational value mixes with anything
    assert qf(2) + QField.sqrt(3) == QField(2, 1, 3)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        QField.sqrt(2) / QField(0)


def test_int_and_fraction_operands():
    v = qf("3/4")
    assert 1 + v == qf("7/4")
    assert 2 * v == qf("3/2")
    assert 1 - v == qf("1/4")
    assert Fraction(1, 2) / v == qf("2/3")
    assert v / 3 == qf("1/4")


def test_unary_operators():
    x = QField(Fraction(-1, 2), Fraction(2, 3), 2)
    assert -(-x) == x
    assert +x == x
    assert abs(qf(-5)) == 5
    assert abs(x) == x  # -1/2 + (2/3) sqrt 2 > 0
    assert abs(-x) == x
    assert not bool(ZERO)
    assert bool(QField(0, 1, 2))


# -- ordering ----------------------------------------------------------------


def test_sign_matches_mpmath():
    rng = random.Random(104)
    for _ in range(200):
        x = random_value(rng, rng.choice([2, 3, 5, 6, None]))
        mp = to_mp(x)
        expected = 0 if mp == 0 else (1 if mp > 0 else -1)
        assert x.sign() == expected


def test_comparison_chain():
    values = [qf(-2), QField(0, -1, 2), ZERO, qf("1/3"), QField(1, 1, 2), qf(3)]
    for i, lo in enumerate(values):
        for hi in values[i + 1 :]:
            assert lo < hi
            assert hi > lo
            assert lo <= hi
            assert not (lo >= hi)
            assert lo != hi


def test_close_irrational_comparison():
    # 665857/470832 is a continued-fraction convergent just above sqrt(2)
    close = qf(Fraction(665857, 470832))
    assert QField.sqrt(2) < close
    assert (close - QField.sqrt(2)).sign() == 1


def test_hash_consistency():
    assert hash(qf(Fraction(5, 1))) == hash(5)
    assert qf(5) == 5
    seen = {qf("1/2"), qf(Fraction(2, 4)), QField(Fraction(1, 2))}
    assert len(seen) == 1
    assert len({QField(1, 1, 2), QField(1, 1, 3)}) == 2


# -- floor -------------------------------------------------------------------


@pytest.mark.parametrize(
    "value, expected",
    [
        (qf(Fraction(7, 2)), 3),
        (qf(Fraction(-7, 2)), -4),
        (qf(6), 6),
        (QField.sqrt(2), 1),
        (-QField.sqrt(2), -2),
        (100 * QField.sqrt(2), 141),
        (QField(3, 2, 2), 5),
        (QField(Fraction(1, 2), Fraction(-1, 3), 5), -1),
    ],
)
def test_floor_frozen_cases(value, expected):
    assert floor(value) == expected


def test_floor_bracketing_randomized():
    rng = random.Random(105)
    for _ in range(300):
        x = random_value(rng, rng.choice([2, 3, 5, None]))
        m = floor(x)
        assert (x - m).sign() >= 0
        assert (x - (m + 1)).sign() < 0


def test_floor_matches_mpmath():
    rng = random.Random(106)
    for _ in range(150):
        x = random_value(rng, rng.choice([2, 3, 5]))
        assert floor(x) == int(mpmath.floor(to_mp(x)))


def test_floor_accepts_plain_rationals():
    assert floor(Fraction(9, 4)) == 2
    assert floor(-3) == -3
    assert floor("7/3") == 2


# -- text grammar ------------------------------------------------------------


@pytest.mark.parametrize(
    "text",
    [
        "0/1",
        "5/6",
        "-3/4",
        "1/2+1/3*sqrt(2)",
        "0/1-1/8*sqrt(2)",
        "-2/1+7/1*sqrt(15)",
        "177/4183-32/4183*sqrt(2)",
    ],
)
def test_canonical_round_trip(text):
    assert format_scalar(parse_scalar(text)) == text


def test_parse_shorthand():
    assert parse_scalar("7") == 7
    assert parse_scalar("-4") == -4
    assert parse_scalar(" 1/2 ") == qf("1/2")
    assert parse_scalar("3/1+1/1*sqrt(2)") == QField(3, 1, 2)
    assert parse_scalar("2*sqrt(3)") == QField(0, 2, 3)
    assert parse_scalar("-1/2*sqrt(5)") == QField(0, Fraction(-1, 2), 5)


@pytest.mark.parametrize(
    "text",
    ["", "abc", "1.5", "sqrt(2)", "1/2+sqrt(2)", "1/2+1/3*sqrt(4)", "1//2", "1/2 + 1/3*sqrt(2)"],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


def test_format_round_trip_randomized():
    rng = random.Random(107)
    for _ in range(120):
        x = random_value(rng, rng.choice([2, 3, 5, None]))
        assert parse_scalar(format_scalar(x)) == x


def test_str_and_repr():
    v = QField(Fraction(1, 2), Fraction(-1, 3), 7)
    assert str(v) == "1/2-1/3*sqrt(7)"
    assert repr(v) == "QField('1/2-1/3*sqrt(7)')"
    assert str(ZERO) == "0/1"


def test_float_conversion_is_close():
    x = QField(Fraction(1, 3), Fraction(2, 7), 5)
    assert math.isclose(float(x), 1 / 3 + 2 / 7 * math.sqrt(5))
