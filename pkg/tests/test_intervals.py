"""Interval arithmetic: outward rounding, containment, width contracts."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from transgroup.errors import DomainError
from transgroup.intervals import (
    Box,
    RealInterval,
    box_arith,
    cos_interval,
    exp_box,
    exp_interval,
    log_box,
    log_interval,
    pi_box,
    pi_interval,
    sin_interval,
)

from conftest import E_110, E_I_IM_60, E_I_RE_60, LOG2_60, PI_110

rationals = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=64
)


def test_pi_digits():
    box = pi_interval(120)
    assert box.contains_fraction(Fraction(PI_110))
    assert box.width_le(120)


def test_exp_point_digits_and_width():
    iv = exp_interval(RealInterval.point(1), 80)
    assert iv.contains_fraction(Fraction(E_110))
    assert iv.width_le(70)  # spec width contract 2^(-bits+guard)


def test_exp_zero_is_one():
    b = exp_box(Box.point(0, 0), 64)
    assert b.re.contains_fraction(1) and b.re.width_le(60)
    assert b.im.is_point() and b.im.lo_fraction() == 0


def test_log_one_contains_zero():
    iv = log_interval(RealInterval.point(1), 64)
    assert iv.contains_zero()


def test_log_two_digits():
    iv = log_interval(RealInterval.point(2), 100)
    assert iv.contains_fraction(Fraction(LOG2_60))


def test_log_domain_error():
    with pytest.raises(DomainError):
        log_interval(RealInterval.from_endpoints(Fraction(-1), Fraction(1), 64), 64)
    with pytest.raises(DomainError):
        log_box(Box.from_fractions(Fraction(1), Fraction(1), 64), 64)


def test_complex_exp_digits():
    b = exp_box(Box.point(0, 1), 80)
    assert b.re.contains_fraction(Fraction(E_I_RE_60))
    assert b.im.contains_fraction(Fraction(E_I_IM_60))


def test_known_zero_stress_log2_log3_log6():
    # log 2 + log 3 - log 6 must straddle 0 at every precision
    bits = 32
    while bits <= 1024:
        l2 = log_interval(RealInterval.point(2), bits)
        l3 = log_interval(RealInterval.point(3), bits)
        l6 = log_interval(RealInterval.point(6), bits)
        s = l2.add(l3, bits + 8).sub(l6, bits + 8)
        assert s.contains_zero(), bits
        assert s.width_le(bits - 10)
        bits *= 2


def test_monotone_refinement():
    prev_e = None
    prev_pi = None
    for bits in (32, 64, 128, 256, 512, 1024):
        e = exp_interval(RealInterval.point(1), bits)
        p = pi_interval(bits)
        if prev_e is not None:
            assert prev_e.contains_interval(e)
            assert prev_pi.contains_interval(p)
        prev_e, prev_pi = e, p


@settings(max_examples=60, deadline=None)
@given(a=rationals, b=rationals)
def test_containment_arith(a, b):
    # exact rational arithmetic lands inside every precision's enclosure
    for bits in (32, 128):
        ba = Box.from_fractions(a, b, bits)
        bb = Box.from_fractions(b, a, bits)
        s = ba.add(bb, bits)
        assert s.contains_gaussian(a + b, a + b)
        p = ba.mul(bb, bits)
        assert p.contains_gaussian(a * b - b * a, a * a + b * b)


@settings(max_examples=40, deadline=None)
@given(x=st.fractions(min_value=Fraction(1, 32), max_value=Fraction(50),
                      max_denominator=32))
def test_exp_log_inverses(x):
    bits = 96
    lx = log_interval(RealInterval.from_fraction(x, bits), bits)
    back = exp_interval(lx, bits)
    assert back.lo_fraction() <= x <= back.hi_fraction()
    ex = exp_interval(RealInterval.from_fraction(x, bits), bits)
    back2 = log_interval(ex, bits)
    assert back2.lo_fraction() <= x <= back2.hi_fraction()


def test_trig_extrema_widening():
    # an interval crossing pi must reach cos = -1
    x = RealInterval.from_endpoints(Fraction(31, 10), Fraction(32, 10), 64)
    c = cos_interval(x, 64)
    assert c.lo_fraction() <= -1 <= c.lo_fraction() + Fraction(1, 2**40)
    # crossing pi/2 must reach sin = 1
    y = RealInterval.from_endpoints(Fraction(15, 10), Fraction(16, 10), 64)
    s = sin_interval(y, 64)
    assert s.hi_fraction() >= 1


def test_division_excludes_zero():
    a = Box.from_fractions(1, 0, 64)
    b = Box.from_fractions(Fraction(0), Fraction(0), 64)
    with pytest.raises(DomainError):
        a.div(b, 64)


def test_box_arith_dispatch():
    a = Box.from_fractions(2, 1, 64)
    b = Box.from_fractions(1, -1, 64)
    assert box_arith("add", a, b, 64).contains_gaussian(3, 0)
    assert box_arith("mul", a, b, 64).contains_gaussian(3, -1)
    assert box_arith("conj", a, None, 64).contains_gaussian(2, -1)
    assert box_arith("neg", a, None, 64).contains_gaussian(-2, -1)


def test_dyadic_endpoint_exactness():
    iv = RealInterval.from_fraction(Fraction(1, 3), 64)
    lo, hi = iv.lo_fraction(), iv.hi_fraction()
    assert lo < Fraction(1, 3) < hi
    # endpoints are exact dyadics
    assert (lo.denominator & (lo.denominator - 1)) == 0
    assert (hi.denominator & (hi.denominator - 1)) == 0


def test_pi_box_real():
    b = pi_box(80)
    assert b.im.is_point() and b.im.lo_fraction() == 0
