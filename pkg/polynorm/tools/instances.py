"""
Seeded random instances for the property suites. Every generator takes a
`numpy.random.Generator` so that a test only has to record its seed.
"""
import typing
from fractions import Fraction

import numpy as np

from polynorm.math import linalg
from polynorm.norm.decomposition import Factorization
from polynorm.poly.laurent import LaurentPolynomial, multiply, substitute_monomials


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_coefficient(generator: np.random.Generator, bound: int = 3) -> int:
    value = 0
    while value == 0:
        value = int(generator.integers(-bound, bound + 1))
    return value


def random_polynomial(
        generator: np.random.Generator,
        num_vars: int,
        max_terms: int = 12,
        min_terms: int = 1,
        exponent_bound: int = 5,
        coefficient_bound: int = 3
    ) -> LaurentPolynomial:
    """
    Between `min_terms` and `max_terms` distinct exponents drawn uniformly
    from [-exponent_bound, exponent_bound]^num_vars.
    """
    target = int(generator.integers(min_terms, max_terms + 1))
    target = min(target, (2 * exponent_bound + 1) ** num_vars)
    terms = {}
    while len(terms) < target:
        exponent = tuple(
            int(entry) for entry in generator.integers(-exponent_bound, exponent_bound + 1, size=num_vars)
        )
        terms[exponent] = random_coefficient(generator, coefficient_bound)
        if num_vars == 0:
            break
    return LaurentPolynomial(num_vars, terms)


def random_dual_vector(
        generator: np.random.Generator,
        num_vars: int,
        bound: int = 7,
        integer: bool = False
    ) -> typing.Tuple[Fraction, ...]:
    numerators = generator.integers(-bound, bound + 1, size=num_vars)
    if integer:
        return tuple(Fraction(int(entry)) for entry in numerators)
    denominators = generator.integers(1, bound + 1, size=num_vars)
    return tuple(Fraction(int(p), int(q)) for p, q in zip(numerators, denominators))


def random_nonzero_vector(generator: np.random.Generator, dim: int, bound: int = 7) -> typing.Tuple[Fraction, ...]:
    vector = (Fraction(0),) * dim
    while linalg.is_zero(vector):
        vector = random_dual_vector(generator, dim, bound=bound)
    return vector


def random_polynomial_of_essential_dim(
        generator: np.random.Generator,
        num_vars: int,
        essential_dim: int,
        max_terms: int = 10,
        step_bound: int = 2,
        direction_bound: int = 2
    ) -> LaurentPolynomial:
    """
    Support points base + sum_j u_j d_j for m random independent directions
    d_j, redrawn until the support spans an m-dimensional affine space.
    """
    while True:
        directions = [
            tuple(int(entry) for entry in generator.integers(-direction_bound, direction_bound + 1, size=num_vars))
            for _ in range(essential_dim)
        ]
        if linalg.rank(directions) < essential_dim:
            continue
        base = tuple(int(entry) for entry in generator.integers(-2, 3, size=num_vars))
        count = int(generator.integers(essential_dim + 1, max(max_terms, essential_dim + 1) + 1))
        terms = {base: random_coefficient(generator)}
        for _ in range(count - 1):
            steps = generator.integers(-step_bound, step_bound + 1, size=essential_dim)
            point = list(base)
            for step, direction in zip(steps, directions):
                point = linalg.add(point, linalg.scale(direction, int(step)))
            terms[tuple(point)] = random_coefficient(generator)
        f = LaurentPolynomial(num_vars, terms)
        if linalg.affine_rank([alpha for alpha, _ in f.items()]) == essential_dim:
            return f


def random_symmetric_polynomial(
        generator: np.random.Generator,
        num_vars: int,
        max_terms: int = 4,
        exponent_bound: int = 2
    ) -> LaurentPolynomial:
    """
    g(t) * g(1/t) * t^gamma, symmetric about gamma / 2, with at least two
    terms in g so that the result is not a monomial.
    """
    g = random_polynomial(
        generator, num_vars, max_terms=max_terms, min_terms=2, exponent_bound=exponent_bound
    )
    inversion = [tuple(-int(i == j) for j in range(num_vars)) for i in range(num_vars)]
    reflected = substitute_monomials(g, inversion)
    gamma = tuple(int(entry) for entry in generator.integers(-2, 3, size=num_vars))
    return multiply(g, reflected).shift(gamma)


def random_segment_factorization(
        generator: np.random.Generator,
        num_vars: int,
        max_factors: int = 4,
        max_multiplicity: int = 2,
        direction_bound: int = 2
    ) -> Factorization:
    """
    Products of two-term factors c1 t^a + c2 t^b, whose Newton polytopes are
    segments.
    """
    count = int(generator.integers(1, max_factors + 1))
    factors = []
    for _ in range(count):
        direction = (0,) * num_vars
        while linalg.is_zero(direction):
            direction = tuple(
                int(entry) for entry in generator.integers(-direction_bound, direction_bound + 1, size=num_vars)
            )
        start = tuple(int(entry) for entry in generator.integers(-1, 2, size=num_vars))
        factor = LaurentPolynomial(num_vars, {
            start: random_coefficient(generator, 2),
            linalg.add(start, direction): random_coefficient(generator, 2),
        })
        factors.append((factor, int(generator.integers(1, max_multiplicity + 1))))
    return Factorization.of(factors)
