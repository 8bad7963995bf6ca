from fractions import Fraction

import pytest

from polynorm.errors import DimensionMismatchError, NonIntegerDualError, ZeroPolynomialError
from polynorm.norm import (
    NORM_ROUTES, Indeterminate, NormRoute, active_pair, norm_def, norm_geometric, norm_specialized
)
from polynorm.oracle import norm_bruteforce_points
from polynorm.poly.laurent import LaurentPolynomial, specialize
from polynorm.poly.parser import parse
from polynorm.tools import instances


def test_registered_routes():
    assert list(NORM_ROUTES) == ["def", "width", "specialize"]
    assert all(isinstance(route, NormRoute) for route in NORM_ROUTES.values())
    assert [route.requires_integer_dual() for route in NORM_ROUTES.values()] == [False, False, True]


@pytest.mark.parametrize("phi, expected", [
    ((1, 0, 0), 1),
    ((1, 1, 1), 3),
    ((1, -1, 0), 2),
    ((Fraction(1, 2), Fraction(-1, 3), 2), Fraction(17, 6)),
    ((0, 0, 0), 0),
])
def test_borromean_norms(borromean, phi, expected):
    assert norm_def(borromean, phi) == expected
    assert norm_geometric(borromean, phi) == expected


@pytest.mark.parametrize("phi, expected, specialized", [
    ((1, 0, 0, 0, 0, 0), 4, 4),
    ((1, 1, 1, -1, -1, -1), 12, Indeterminate.INDETERMINATE),
    ((1, 1, 1, 1, 1, 1), 12, Indeterminate.INDETERMINATE),
    ((1, -1, 0, 0, 0, 0), 0, Indeterminate.INDETERMINATE),
    ((2, 0, 0, 1, 0, 0), 8, 8),
])
def test_great_circle_norms(great_circle, phi, expected, specialized):
    assert norm_def(great_circle, phi) == expected
    assert norm_geometric(great_circle, phi) == expected
    # A factor collapses to t^0 - 1 whenever phi annihilates its direction
    assert norm_specialized(great_circle, phi) == specialized


def test_specialization_can_vanish():
    f = parse("t1 - t2 + t1^2 - t2^2", ["t1", "t2"])
    assert norm_specialized(f, (1, 1)) is Indeterminate.INDETERMINATE
    assert str(Indeterminate.INDETERMINATE) == "indeterminate"
    assert norm_def(f, (1, 1)) == 1


def test_specialization_can_cancel_an_extreme_level():
    f = parse("t1 - t2 + 1", ["t1", "t2"])
    assert norm_specialized(f, (1, 1)) == 0
    assert norm_def(f, (1, 1)) == 1


def test_route_argument_checks(borromean):
    for route in NORM_ROUTES.values():
        with pytest.raises(ZeroPolynomialError):
            route(LaurentPolynomial(3), (1, 0, 0))
        with pytest.raises(DimensionMismatchError):
            route(borromean, (1, 0))
    with pytest.raises(NonIntegerDualError):
        norm_specialized(borromean, (Fraction(1, 2), 0, 0))


def test_monomial_has_zero_norm():
    f = parse("5*t1^3*t2^-2", ["t1", "t2"])
    assert norm_def(f, (7, -3)) == 0
    assert norm_geometric(f, (7, -3)) == 0
    assert norm_specialized(f, (7, -3)) == 0


def test_active_pair():
    f = parse("t1 + t2", ["t1", "t2"])
    assert active_pair(f, (1, 0)) == ((1, 0), (0, 1))
    assert active_pair(f, (0, 0)) == ((0, 1), (0, 1))
    assert active_pair(f, (2, 0)) == active_pair(f, (1, 0))


def test_active_pair_attains_the_norm(borromean):
    generator = instances.rng(51)
    for _ in range(20):
        phi = instances.random_dual_vector(generator, 3)
        alpha, beta = active_pair(borromean, phi)
        assert sum(p * (a - b) for p, a, b in zip(phi, alpha, beta)) == norm_def(borromean, phi)


def test_routes_agree_on_random_inputs():
    generator = instances.rng(52)
    for _ in range(60):
        num_vars = int(generator.integers(1, 5))
        f = instances.random_polynomial(generator, num_vars, max_terms=8, exponent_bound=3)
        phi = instances.random_dual_vector(generator, num_vars)
        expected = norm_bruteforce_points(f, phi)
        assert norm_def(f, phi) == expected
        assert norm_geometric(f, phi) == expected


def test_specialized_never_exceeds_the_norm():
    generator = instances.rng(53)
    for _ in range(60):
        num_vars = int(generator.integers(1, 4))
        f = instances.random_polynomial(generator, num_vars, max_terms=8, exponent_bound=3)
        phi = instances.random_dual_vector(generator, num_vars, bound=3, integer=True)
        value = norm_specialized(f, phi)
        norm = norm_def(f, phi)
        if value is Indeterminate.INDETERMINATE:
            assert specialize(f, phi).is_zero()
            continue
        assert value <= norm
        levels = {}
        for alpha, coefficient in f.items():
            level = sum(p * a for p, a in zip(phi, alpha))
            levels[level] = levels.get(level, 0) + coefficient
        if levels[max(levels)] != 0 and levels[min(levels)] != 0:
            assert value == norm


def test_norm_is_a_seminorm():
    generator = instances.rng(54)
    for _ in range(30):
        f = instances.random_polynomial(generator, 3, max_terms=6, exponent_bound=3)
        phi = instances.random_dual_vector(generator, 3)
        psi = instances.random_dual_vector(generator, 3)
        scale = Fraction(int(generator.integers(-5, 6)), int(generator.integers(1, 6)))
        assert norm_def(f, tuple(scale * entry for entry in phi)) == abs(scale) * norm_def(f, phi)
        combined = tuple(a + b for a, b in zip(phi, psi))
        assert norm_def(f, combined) <= norm_def(f, phi) + norm_def(f, psi)
