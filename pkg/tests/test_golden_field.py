from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcjordan.golden_field import (
    KAPPA_FLOAT,
    KAPPA_SQ,
    GoldenInt,
    GoldenRat,
    KappaScaledRat,
    format_golden,
    golden_mul,
    kappa_compare,
    parse_golden,
    star,
)

PHI = (1 + math.sqrt(5)) / 2
ints = st.integers(-10**6, 10**6)
golden_ints = st.builds(GoldenInt, ints, ints)
small = st.integers(-50, 50)
rats = st.builds(
    lambda a, b, d: GoldenRat(Fraction(a, d), Fraction(b, d)), small, small, st.integers(1, 12)
)


def test_tau_relation():
    tau = GoldenInt(0, 1)
    assert tau * tau == tau + 1
    assert tau.star() == GoldenInt(1, -1)
    assert tau * tau.star() == -1


@given(golden_ints, golden_ints)
def test_mul_matches_float(x, y):
    assert math.isclose(float(x * y), float(x) * float(y), rel_tol=1e-9, abs_tol=1e-3)


@given(golden_ints, golden_ints)
def test_star_is_ring_hom(x, y):
    assert star(x * y) == star(x) * star(y)
    assert star(x + y) == star(x) + star(y)
    assert star(star(x)) == x


@given(golden_ints)
def test_norm_is_multiplicative_with_star(x):
    assert x.norm() == (x * x.star()).a
    assert (x * x.star()).b == 0


@given(golden_ints)
def test_sign_agrees_with_float(x):
    v = float(x)
    if abs(v) > 1e-6:
        assert x.sign() == (1 if v > 0 else -1)
    assert (x.sign() == 0) == (x == GoldenInt(0, 0))


@given(rats, rats)
def test_rat_field_ops(x, y):
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
        assert y * y.inverse() == 1


@given(rats)
def test_floor_ceil(x):
    f = x.floor()
    assert GoldenRat(f) <= x < GoldenRat(f + 1)
    assert x.ceil() - f in (0, 1)


def test_golden_mul_explicit():
    # (1 + 2tau)(3 - tau) = 3 + 5tau - 2tau^2 = 1 + 3tau
    assert golden_mul(GoldenInt(1, 2), GoldenInt(3, -1)) == GoldenInt(1, 3)


def test_kappa_value():
    # kappa = tau / sqrt(4 + 2 tau), so kappa^2 = 1/4 + sqrt5/20
    assert KAPPA_SQ == GoldenRat(Fraction(1, 4), Fraction(1, 20))
    assert math.isclose(KAPPA_FLOAT**2, float(KAPPA_SQ))
    assert math.isclose(KAPPA_FLOAT, PHI / math.sqrt(4 + 2 * PHI))


@pytest.mark.parametrize(
    "left, base, expected",
    [
        (GoldenRat(Fraction(1, 2)), GoldenRat(1), -1),  # 0.5 < 0.60
        (GoldenRat(Fraction(61, 100)), GoldenRat(1), 1),
        (GoldenRat(-1), GoldenRat(-1), -1),
        (GoldenRat(0), GoldenRat(0), 0),
    ],
)
def test_kappa_compare(left, base, expected):
    assert kappa_compare(left, KappaScaledRat(base)) == expected


@given(rats, rats)
def test_kappa_compare_matches_float(left, base):
    exact = kappa_compare(left, KappaScaledRat(base))
    diff = float(left) - float(base) * KAPPA_FLOAT
    if abs(diff) > 1e-9:
        assert exact == (1 if diff > 0 else -1)


@pytest.mark.parametrize(
    "text, value",
    [
        ("3-2*tau", GoldenInt(3, -2)),
        ("tau", GoldenInt(0, 1)),
        ("-tau", GoldenInt(0, -1)),
        ("2*tau", GoldenInt(0, 2)),
        ("1+2*tau", GoldenInt(1, 2)),
    ],
)
def test_parse_tau_literals(text, value):
    assert parse_golden(text) == value


@pytest.mark.parametrize(
    "text, value",
    [
        ("1/2+1/2*sqrt5", GoldenRat(Fraction(1, 2), Fraction(1, 2))),
        ("-1/2*sqrt5", GoldenRat(0, Fraction(-1, 2))),
        ("7/3", GoldenRat(Fraction(7, 3))),
    ],
)
def test_parse_sqrt5_literals(text, value):
    assert GoldenRat.coerce(parse_golden(text)) == value


@given(rats)
def test_format_roundtrip(x):
    assert GoldenRat.coerce(parse_golden(format_golden(x))) == x


@given(golden_ints)
def test_format_roundtrip_int(x):
    assert parse_golden(format_golden(x)) == x
