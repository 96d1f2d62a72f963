import math

import pytest

from markov_gegenbauer.asymptotics import (
    TIGHT_LIMIT_BRACKETS,
    asymptotic_report,
    bessel_first_zero,
    limit_bracket,
    legendre_bracket,
)
from markov_gegenbauer.constant import sharp_constant

LAMBDA_GRID = [-0.49, -0.25, 0.0, 0.25, 0.5, 1.0, 2.5, 10.0]


def test_bessel_zero_reference_values():
    assert bessel_first_zero(-0.5) == pytest.approx(math.pi / 2.0, abs=1e-10)
    assert bessel_first_zero(0.5) == pytest.approx(math.pi, abs=1e-10)
    assert bessel_first_zero(0.0) == pytest.approx(2.404825557695773, abs=1e-9)
    assert bessel_first_zero(1.0) == pytest.approx(3.831705970207512, abs=1e-9)


def test_bessel_zero_monotone_in_order():
    zeros = [bessel_first_zero(nu) for nu in (-0.9, -0.5, 0.0, 1.0, 3.0, 10.0)]
    assert all(b > a for a, b in zip(zeros, zeros[1:]))


def test_bessel_zero_validation():
    with pytest.raises(ValueError):
        bessel_first_zero(-1.0)
    with pytest.raises(ValueError):
        bessel_first_zero(36.0)


def test_legendre_bracket_contains_legendre_constant():
    for n in (6, 10, 25, 40):
        b = legendre_bracket(n)
        assert b.lower < b.upper
        c = sharp_constant(n, 0.5).sharp_constant
        assert b.lower <= c <= b.upper
    with pytest.raises(ValueError):
        legendre_bracket(5)


def test_legendre_bracket_width_shrinks():
    def rel_width(n):
        b = legendre_bracket(n)
        return (b.upper - b.lower) / b.lower

    assert rel_width(40) < rel_width(10) < rel_width(6)
    assert rel_width(40) < 1e-4


def test_limit_bracket_legendre():
    lower, upper = limit_bracket(0.5)
    assert lower == pytest.approx(1.0 / math.sqrt(24.0), rel=1e-15)
    assert upper == pytest.approx(1.0 / (2.0 * math.sqrt(2.0)), rel=1e-15)


@pytest.mark.parametrize("lam", LAMBDA_GRID)
def test_limit_value_lies_in_limit_bracket(lam):
    r = asymptotic_report(lam, [10, 20])
    assert r.bracket_lower < r.limit_value < r.bracket_upper
    assert r.bessel_order == pytest.approx((2.0 * lam - 3.0) / 4.0, rel=1e-15)
    assert r.limit_value == pytest.approx(1.0 / (2.0 * r.bessel_first_zero), rel=1e-15)


def test_report_trajectory_matches_direct_computation():
    r = asymptotic_report(0.5, [10, 15, 30])
    assert [n for n, _ in r.trajectory] == [10, 15, 30]
    for n, v in r.trajectory:
        assert v == pytest.approx(sharp_constant(n, 0.5).normalized, rel=1e-15)
    assert r.tight_bracket is None


def test_report_attaches_known_tight_brackets():
    assert asymptotic_report(0.0, [10]).tight_bracket == TIGHT_LIMIT_BRACKETS[0.0]
    assert asymptotic_report(1.0, [10]).tight_bracket == TIGHT_LIMIT_BRACKETS[1.0]
    # the tight brackets sit inside the coarse closed-form one
    for lam, (lo, hi) in TIGHT_LIMIT_BRACKETS.items():
        wide_lo, wide_hi = limit_bracket(lam)
        assert wide_lo < lo < hi < wide_hi


def test_report_validation():
    with pytest.raises(ValueError):
        asymptotic_report(0.5, [])
    with pytest.raises(ValueError):
        asymptotic_report(0.5, [10, 10])
    with pytest.raises(ValueError):
        asymptotic_report(0.5, [20, 10])
