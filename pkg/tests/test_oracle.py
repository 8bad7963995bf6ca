from fractions import Fraction

import pytest

from polynorm.errors import DimensionCapError, ZeroPolynomialError
from polynorm.oracle import ball_membership_sweep, norm_bruteforce_points, vertex_check_lp
from polynorm.poly.laurent import LaurentPolynomial
from polynorm.poly.parser import parse


def test_bruteforce_norm(borromean):
    assert norm_bruteforce_points(borromean, (1, 1, 1)) == 3
    assert norm_bruteforce_points(borromean, (Fraction(1, 2), 0, -1)) == Fraction(3, 2)
    with pytest.raises(ZeroPolynomialError):
        norm_bruteforce_points(LaurentPolynomial(1), (1,))


def test_vertex_check():
    points = [(0, 0), (2, 0), (0, 2), (1, 1), (1, 0), (Fraction(1, 2), Fraction(1, 2))]
    assert [vertex_check_lp(points, index) for index in range(len(points))] == [
        True, True, True, False, False, False
    ]


def test_vertex_check_on_a_repeated_point():
    assert not vertex_check_lp([(1, 1), (1, 1), (0, 0)], 0)


def test_sweep_on_borromean(borromean):
    results = ball_membership_sweep(borromean, Fraction(1, 4), 1)
    assert len(results) == 9 ** 3
    inside = {point for point, flag in results if flag}
    assert (Fraction(1, 4), Fraction(1, 2), Fraction(-1, 4)) in inside
    assert (Fraction(1, 2), Fraction(1, 2), Fraction(1, 4)) not in inside
    assert all(sum(abs(entry) for entry in point) <= 1 for point in inside)


def test_sweep_on_great_circle(great_circle):
    results = ball_membership_sweep(great_circle, Fraction(1, 8), Fraction(1, 2))
    assert len(results) == 9 ** 2
    inside = [point for point, flag in results if flag]
    assert len(inside) == 25
    assert all(max(abs(entry) for entry in point) <= Fraction(1, 4) for point in inside)


def test_sweep_arguments(borromean):
    with pytest.raises(ValueError):
        ball_membership_sweep(borromean, 0, 1)
    with pytest.raises(ValueError):
        ball_membership_sweep(borromean, Fraction(1, 2), 0)
    four = parse("(t1-1)*(t2-1)*(t3-1)*(t4-1)", ["t1", "t2", "t3", "t4"])
    with pytest.raises(DimensionCapError):
        ball_membership_sweep(four, 1, 1)
