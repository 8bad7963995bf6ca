from fractions import Fraction

import pytest

from polynorm import lattice
from polynorm.errors import ConsistencyError, DimensionMismatchError, FactorizationError
from polynorm.norm import (
    Factorization, factor_ball_vertices, factor_norms, format_norm_formula, norm_decomposed,
    norm_def, reduced_ball, segment_forms
)
from polynorm.poly.laurent import LaurentPolynomial
from polynorm.poly.parser import parse
from polynorm.tools import instances

from conftest import rationals


def test_factorization_validation():
    t1 = parse("t1 - 1", ["t1", "t2"])
    with pytest.raises(FactorizationError):
        Factorization(())
    with pytest.raises(FactorizationError):
        Factorization.of([(t1, 0)])
    with pytest.raises(FactorizationError):
        Factorization.of([(LaurentPolynomial(2), 1)])
    with pytest.raises(DimensionMismatchError):
        Factorization.of([(t1, 1), (parse("t1 - 1", ["t1"]), 1)])
    with pytest.raises(FactorizationError):
        Factorization.of([(t1, 2)], target=t1)


def test_product(borromean, borromean_factorization, great_circle, great_circle_factorization):
    assert borromean_factorization.product() == borromean
    assert great_circle_factorization.product() == great_circle
    assert Factorization.of(great_circle_factorization.factors, target=great_circle).num_vars == 6


def test_decomposition_on_borromean(borromean_factorization):
    phi = (1, -2, Fraction(1, 2))
    assert factor_norms(borromean_factorization, phi) == [1, 2, Fraction(1, 2)]
    assert norm_decomposed(borromean_factorization, phi) == Fraction(7, 2)


def test_decomposition_on_great_circle(great_circle_factorization):
    assert norm_decomposed(great_circle_factorization, (1, 0, 0, 0, 0, 0)) == 4
    assert norm_decomposed(great_circle_factorization, (1, 1, 1, -1, -1, -1)) == 12


def test_decomposition_holds_on_random_products():
    generator = instances.rng(61)
    for _ in range(25):
        num_vars = int(generator.integers(1, 4))
        factors = [
            (instances.random_polynomial(generator, num_vars, max_terms=4, exponent_bound=2),
             int(generator.integers(1, 3)))
            for _ in range(int(generator.integers(1, 4)))
        ]
        fact = Factorization.of(factors)
        phi = instances.random_dual_vector(generator, num_vars)
        expected = sum(n * norm_def(factor, phi) for factor, n in factors)
        assert norm_decomposed(fact, phi) == expected
        assert norm_def(fact.product(), phi) == expected


def test_great_circle_segment_forms(great_circle_factorization):
    forms = segment_forms(great_circle_factorization)
    assert forms == [((1, 1), 2), ((1, -1), 2)]
    assert format_norm_formula(forms) == "2|p1 + p2| + 2|p1 - p2|"


def test_borromean_formula(borromean_factorization):
    assert format_norm_formula(segment_forms(borromean_factorization)) == "|p1| + |p2| + |p3|"


def test_formula_with_names_and_coefficients():
    assert format_norm_formula([((-2, 0, 1), 3)], names=["x", "y", "z"]) == "3|-2*x + z|"
    assert format_norm_formula([]) == "0"


def test_segment_forms_reject_wider_factors():
    fact = Factorization.of([(parse("t1 + t2 + 1", ["t1", "t2"]), 1)])
    with pytest.raises(FactorizationError):
        segment_forms(fact)


def test_great_circle_factor_ball(great_circle_factorization):
    quarter = Fraction(1, 4)
    assert factor_ball_vertices(great_circle_factorization) == [
        (-quarter, -quarter), (-quarter, quarter), (quarter, -quarter), (quarter, quarter)
    ]


def test_two_factor_ball():
    variables = ["t1", "t2"]
    fact = Factorization.of([(parse("t1 - 1", variables), 1), (parse("t1*t2 - 1", variables), 1)])
    assert factor_ball_vertices(fact) == [
        rationals(-1, 1), rationals(0, -1), rationals(0, 1), rationals(1, -1)
    ]


def test_factor_ball_needs_spanning_forms():
    variables = ["t1", "t2"]
    fact = Factorization.of([(parse("t1 - 1", variables), 1), (parse("t2^3", variables), 1)])
    with pytest.raises(FactorizationError):
        factor_ball_vertices(fact)


def test_factor_ball_matches_the_polar_construction():
    generator = instances.rng(62)
    checked = 0
    while checked < 10:
        num_vars = int(generator.integers(2, 4))
        fact = instances.random_segment_factorization(generator, num_vars)
        f = fact.product()
        reduction = lattice.reduce(f)
        if reduction.essential_dim == 0:
            continue
        assert factor_ball_vertices(fact, reduction) == list(reduced_ball(f).vertices)
        checked += 1


def test_verification_catches_a_mismatch(monkeypatch, borromean_factorization):
    monkeypatch.setattr(
        Factorization, "product", lambda self: parse("t1 - 1", ["t1", "t2", "t3"])
    )
    with pytest.raises(ConsistencyError):
        norm_decomposed(borromean_factorization, (1, 1, 1))
    assert norm_decomposed(borromean_factorization, (1, 1, 1), verify=False) == 3
