"""
Brute-force reference computations for the test suite. Nothing in the main
code path calls into this module. The norm and vertex checks avoid the
engine's hull, simplex and double description code.
"""
import logging
import typing
import itertools
from fractions import Fraction

import numpy as np
import sympy

from polynorm import lattice
from polynorm.constants import MAX_DIM, SWEEP_MAX_DIM
from polynorm.errors import ConsistencyError, DimensionCapError, ZeroPolynomialError
from polynorm.norm.ball import reduced_ball
from polynorm.norm.definition import norm_def
from polynorm.poly.laurent import LaurentPolynomial

logger = logging.getLogger(__name__)


def norm_bruteforce_points(f: LaurentPolynomial, phi: typing.Sequence) -> Fraction:
    """
    The literal supremum of phi(alpha - beta) over all ordered support pairs.
    """
    if f.is_zero():
        raise ZeroPolynomialError("norm_bruteforce_points")
    phi = [Fraction(entry) for entry in phi]
    exponents = [alpha for alpha, _ in f.items()]
    best = None
    for alpha in exponents:
        for beta in exponents:
            value = sum((p * (a - b) for p, a, b in zip(phi, alpha, beta)), Fraction(0))
            if best is None or value > best:
                best = value
    return best


def vertex_check_lp(points: typing.Sequence[typing.Sequence], candidate: int) -> bool:
    """
    True iff points[candidate] is not a convex combination of the other
    points. By Caratheodory it suffices to try affinely independent subsets
    of the others, each of which has at most one solution.
    """
    target = sympy.Matrix([sympy.Rational(Fraction(entry).numerator, Fraction(entry).denominator)
                           for entry in points[candidate]])
    others = [
        sympy.Matrix([sympy.Rational(Fraction(entry).numerator, Fraction(entry).denominator)
                      for entry in point])
        for index, point in enumerate(points) if index != candidate
    ]
    dimension = len(target)
    for size in range(1, min(dimension + 1, len(others)) + 1):
        for subset in itertools.combinations(others, size):
            if size > 1:
                differences = sympy.Matrix.hstack(*[point - subset[0] for point in subset[1:]])
                if differences.rank() < size - 1:
                    continue
            system = sympy.Matrix.vstack(
                sympy.Matrix.hstack(*subset), sympy.ones(1, size)
            )
            rhs = sympy.Matrix.vstack(target, sympy.ones(1, 1))
            try:
                solution, parameters = system.gauss_jordan_solve(rhs)
            except ValueError:
                continue
            if parameters.shape[0] == 0 and all(weight >= 0 for weight in solution):
                return False
    return True


def ball_membership_sweep(
        f: LaurentPolynomial,
        grid_step,
        radius,
        max_dim: int = MAX_DIM
    ) -> typing.List[typing.Tuple[typing.Tuple[Fraction, ...], bool]]:
    """
    Classifies every point of the grid step * Z^m inside [-radius, radius]^m
    twice, by the norm (max minus min of phi~ over the support in lattice
    coordinates) and by the facets of the reduced ball, and raises
    ConsistencyError on the first disagreement.

    Both tests run on integer grid indices: with step = p / q, the point
    k * step has norm at most one iff p * width(k) <= q.
    """
    step, radius = Fraction(grid_step), Fraction(radius)
    if step <= 0 or radius <= 0:
        raise ValueError(f"grid step and radius must be positive, got {step} and {radius}")
    dimension = lattice.reduce(f).essential_dim
    if dimension > SWEEP_MAX_DIM:
        raise DimensionCapError(
            f"membership sweep in essential dimension {dimension} exceeds {SWEEP_MAX_DIM}"
        )
    ball = reduced_ball(f, max_dim=max_dim)
    reduction = ball.reduction
    count = int(radius // step)
    facets = ball.reduced_ball.facets
    coordinate_rows = [lattice.exponent_coordinates(reduction, alpha) for alpha, _ in f.items()]
    dtype = _exact_dtype(
        count, dimension, step.numerator, step.denominator,
        max(abs(entry) for row in coordinate_rows for entry in row),
        max(abs(entry) for facet in facets for entry in facet.normal),
        max(max(abs(facet.offset.numerator), facet.offset.denominator) for facet in facets)
    )
    indices = np.array(
        list(itertools.product(range(-count, count + 1), repeat=dimension)), dtype=dtype
    ).reshape(-1, dimension)
    coordinates = np.array(coordinate_rows, dtype=dtype).reshape(-1, dimension)
    values = indices.dot(coordinates.T)
    by_norm = step.numerator * (values.max(axis=1) - values.min(axis=1)) <= step.denominator

    normals = np.array([facet.normal for facet in facets], dtype=dtype).reshape(-1, dimension)
    pairings = indices.dot(normals.T)
    # normal . (k p / q) <= a / b  <=>  normal . k * p * b <= a * q
    numerators = np.array([facet.offset.numerator for facet in facets], dtype=dtype)
    denominators = np.array([facet.offset.denominator for facet in facets], dtype=dtype)
    by_facets = (
        pairings * step.numerator * denominators <= numerators * step.denominator
    ).all(axis=1)

    disagreements = np.nonzero(by_norm != by_facets)[0]
    if len(disagreements) > 0:
        point = tuple(step * int(k) for k in indices[disagreements[0]])
        raise ConsistencyError(
            f"grid point {point}: norm test says {bool(by_norm[disagreements[0]])},"
            f" facet test says {bool(by_facets[disagreements[0]])}"
        )
    # Tie the vectorized norm back to the definitional route on the ball vertices
    for vertex in ball.vertices:
        if norm_def(f, lattice.lift_functional(reduction, vertex)) != 1:
            raise ConsistencyError(f"ball vertex {vertex} does not have norm 1")
    logger.debug(f"membership sweep checked {len(indices)} grid points in dimension {dimension}")
    return [
        (tuple(step * int(k) for k in index), bool(inside))
        for index, inside in zip(indices, by_norm)
    ]


def _exact_dtype(*magnitudes: int):
    # int64 is exact while every product in the sweep stays below 2**62
    bound = 1
    for magnitude in magnitudes:
        bound *= max(int(magnitude), 1)
    return np.int64 if bound < 2 ** 62 else object
