from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from opnkit.interval import (
    Dyadic,
    Interval,
    decimal_exponent,
    div_dir,
    fraction_to_dyadic,
    mul_dir,
    nth_root_enclosure,
    pow_dir,
    to_decimal,
)


def test_dyadic_normalization():
    assert Dyadic(8, 0) == Dyadic(1, 3)
    assert Dyadic(0, 17) == Dyadic(0, 0)
    assert Dyadic(12, -2) == Dyadic(3, 0)


def test_dyadic_arithmetic_exact():
    a, b = Dyadic(3, -1), Dyadic(5, -2)  # 1.5, 1.25
    assert (a + b).as_fraction() == Fraction(11, 4)
    assert (a - b).as_fraction() == Fraction(1, 4)
    assert (a * b).as_fraction() == Fraction(15, 8)
    assert (a * 4).as_fraction() == 6
    assert (-a).as_fraction() == Fraction(-3, 2)
    assert a.halved().as_fraction() == Fraction(3, 4)


def test_dyadic_ordering():
    assert Dyadic(1, 0) < Dyadic(3, -1) < Dyadic(2, 0)
    assert Dyadic(7, -3) <= Dyadic(7, -3)
    assert Dyadic(1, 10) > 1000
    assert Dyadic(3, -1).cmp_fraction(Fraction(3, 2)) == 0


@given(st.integers(-(2**80), 2**80), st.integers(-50, 50), st.integers(4, 64))
def test_directed_rounding_brackets(mant, exp, bits):
    d = Dyadic(mant, exp)
    one = Dyadic(1)
    down = mul_dir(d, one, bits, up=False)
    up = mul_dir(d, one, bits, up=True)
    assert down.as_fraction() <= d.as_fraction() <= up.as_fraction()
    assert abs(down.mant) < 1 << bits
    assert abs(up.mant) <= 1 << bits  # carry can land exactly on a power of two


@given(
    st.integers(1, 2**60),
    st.integers(1, 2**60),
    st.integers(8, 96),
)
def test_div_dir_brackets(a, b, bits):
    x, y = Dyadic(a), Dyadic(b)
    exact = Fraction(a, b)
    assert div_dir(x, y, bits, up=False).as_fraction() <= exact
    assert div_dir(x, y, bits, up=True).as_fraction() >= exact
    # relative error within 2 ulps
    lo = div_dir(x, y, bits, up=False).as_fraction()
    assert exact - lo <= exact * Fraction(1, 2 ** (bits - 2))


@given(st.integers(1, 2**40), st.integers(-20, 0), st.integers(0, 12), st.integers(16, 64))
def test_pow_dir_brackets(mant, exp, n, bits):
    d = Dyadic(mant, exp)
    exact = d.as_fraction() ** n
    assert pow_dir(d, n, bits, up=False).as_fraction() <= exact
    assert pow_dir(d, n, bits, up=True).as_fraction() >= exact


def test_interval_invariants():
    with pytest.raises(ValueError):
        Interval(Dyadic(2), Dyadic(1), 64)
    with pytest.raises(ValueError):
        Interval(Dyadic(1), Dyadic(2), 0)
    iv = Interval(Dyadic(1), Dyadic(2), 64)
    assert iv.contains(Fraction(3, 2))
    assert not iv.contains(3)
    assert iv.width() == Dyadic(1)
    assert iv.midpoint().as_fraction() == Fraction(3, 2)


def test_interval_ops_preserve_enclosure():
    iv = Interval(Dyadic(3, -1), Dyadic(7, -2), 64)  # [1.5, 1.75]
    sq = iv.pow_int(3)
    assert sq.lo.as_fraction() <= Fraction(3, 2) ** 3
    assert sq.hi.as_fraction() >= Fraction(7, 4) ** 3
    rec = iv.reciprocal()
    assert rec.contains(Fraction(2, 3))
    assert rec.contains(Fraction(4, 7))
    with pytest.raises(ValueError):
        Interval(Dyadic(0), Dyadic(1), 64).reciprocal()


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 10**6), st.integers(2, 30), st.sampled_from([32, 64, 128]))
def test_root_enclosure_contains_root(t, k, bits):
    iv = nth_root_enclosure(t, k, bits)
    # exact certificate: lo**k <= t <= hi**k as rationals
    assert iv.lo.as_fraction() ** k <= t
    assert iv.hi.as_fraction() ** k >= t
    assert iv.lo > Dyadic(0)


@settings(max_examples=100, deadline=None)
@given(
    st.fractions(
        min_value=Fraction(1, 10**6), max_value=Fraction(10**6), max_denominator=10**9
    ),
    st.integers(1, 20),
)
def test_root_enclosure_fractional_input(t, k):
    iv = nth_root_enclosure(t, k, 64)
    assert iv.lo.as_fraction() ** k <= t <= iv.hi.as_fraction() ** k


def test_root_enclosure_width_contract():
    for r in (2, 9, 97, 4096):
        iv = nth_root_enclosure(2, r, 128)
        assert iv.width().as_fraction() <= Fraction(1, 2**126)


def test_root_enclosure_validation():
    with pytest.raises(ValueError):
        nth_root_enclosure(0, 3, 64)
    with pytest.raises(ValueError):
        nth_root_enclosure(2, 0, 64)


def test_fraction_to_dyadic_directed():
    x = Fraction(1, 3)
    lo = fraction_to_dyadic(x, 40, up=False)
    hi = fraction_to_dyadic(x, 40, up=True)
    assert lo.as_fraction() < x < hi.as_fraction()
    exact = fraction_to_dyadic(Fraction(5, 8), 40, up=False)
    assert exact.as_fraction() == Fraction(5, 8)
    assert exact == fraction_to_dyadic(Fraction(5, 8), 40, up=True)


def test_decimal_exponent():
    assert decimal_exponent(Fraction(1)) == 0
    assert decimal_exponent(Fraction(999)) == 2
    assert decimal_exponent(Fraction(1000)) == 3
    assert decimal_exponent(Fraction(1, 1000)) == -3
    assert decimal_exponent(Fraction(9999, 10000)) == -1


def test_to_decimal_directed():
    d = Dyadic(1, -1)  # 0.5
    assert to_decimal(d, 3, up=False) == "5.00e-1"
    third_lo = fraction_to_dyadic(Fraction(1, 3), 80, up=False)
    s_lo = to_decimal(third_lo, 10, up=False)
    s_hi = to_decimal(third_lo, 10, up=True)
    assert s_lo == "3.333333333e-1"
    assert s_hi == "3.333333334e-1"
    assert to_decimal(Dyadic(0), 5, up=True) == "0"
    assert to_decimal(Dyadic(-1, -1), 3, up=True) == "-5.00e-1"


def test_to_decimal_carry():
    # 0.9999... rounded up to 2 digits must carry into the next decade
    d = fraction_to_dyadic(Fraction(9999, 10000), 60, up=False)
    assert to_decimal(d, 2, up=True) == "1.0e0"


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 2**70),
    st.integers(-80, 80),
    st.integers(1, 25),
)
def test_to_decimal_brackets_value(mant, exp, digits):
    d = Dyadic(mant, exp)
    x = d.as_fraction()
    lo = to_decimal(d, digits, up=False)
    hi = to_decimal(d, digits, up=True)
    def parse(s):
        m, e = s.split("e")
        return Fraction(m) * Fraction(10) ** int(e)
    assert parse(lo) <= x <= parse(hi)
