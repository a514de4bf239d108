from fractions import Fraction

import pytest

from cdgl import DomainError, bernoulli, interval_presentation, ls_interval_check
from cdgl.algebra import bracket


def test_bernoulli_numbers():
    expected = [
        Fraction(1),
        Fraction(-1, 2),
        Fraction(1, 6),
        Fraction(0),
        Fraction(-1, 30),
        Fraction(0),
        Fraction(1, 42),
        Fraction(0),
        Fraction(-1, 30),
    ]
    assert [bernoulli(k) for k in range(9)] == expected


def test_endpoints_are_maurer_cartan():
    from cdgl import is_maurer_cartan

    p, gens = interval_presentation(4)
    assert is_maurer_cartan(gens["a0"], p)
    assert is_maurer_cartan(gens["a1"], p)


def test_series_head_coefficients():
    # d a01 = (a1 - a0) + [a01, a1] - 1/2 [a01, a1 - a0]
    #         + 1/12 [a01, [a01, a1 - a0]] + O(length 4)
    p, gens = interval_presentation(3)
    a0, a1, a01 = gens["a0"], gens["a1"], gens["a01"]
    diff = a1 - a0
    expected = (
        diff
        + bracket(a01, a1, p)
        + bracket(a01, diff, p).scale(Fraction(-1, 2))
        + bracket(a01, bracket(a01, diff, p), p).scale(Fraction(1, 12))
    )
    assert p.differential(a01) == expected


def test_d_squared_zero_through_length_six():
    for order in (2, 3, 4, 5, 6):
        report, series = ls_interval_check(order)
        assert report.ok, (order, report.failures)
        assert not series.is_zero


def test_rejects_tiny_order():
    with pytest.raises(DomainError):
        ls_interval_check(1)
