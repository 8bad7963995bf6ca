"""
Fast path for polynomials symmetric about a center c. The centered Newton
polytope N - c is origin-symmetric, so N - N = 2(N - c) and the norm ball is
half the polar dual of N - c.
"""
import logging
import typing
from fractions import Fraction

from polynorm import lattice
from polynorm.constants import MAX_DIM
from polynorm.errors import ConsistencyError, DegenerateGeometryError, NotSymmetricError
from polynorm.math import linalg
from polynorm.norm.ball import NormBall, check_ball_input, reduced_ball
from polynorm.norm.definition import active_pair
from polynorm.poly.laurent import LaurentPolynomial, support, symmetry_center
from polynorm.polytope import HalfSpace, Polytope, dilate, hull_vertices, polar_dual

logger = logging.getLogger(__name__)


def _center(f: LaurentPolynomial) -> typing.Tuple[Fraction, ...]:
    center = symmetry_center(f)
    if center is None:
        raise NotSymmetricError(
            "the polynomial is not symmetric about any center, the fast path does not apply"
        )
    return center


def centered_newton_polytope(
        f: LaurentPolynomial,
        reduction: typing.Optional[lattice.LatticeReduction] = None
    ) -> Polytope:
    """
    Newton polytope of a symmetric f in essential coordinates, translated so
    that the center of symmetry sits at the origin.
    """
    center = _center(f)
    if reduction is None:
        reduction = lattice.reduce(f)
    origin = lattice.point_coordinates(reduction, center)
    return hull_vertices([
        linalg.subtract(lattice.point_coordinates(reduction, alpha), origin)
        for alpha in support(f)
    ])


def reduced_dual_newton_polytope(f: LaurentPolynomial, max_dim: int = MAX_DIM) -> Polytope:
    """
    Polar dual of the centered Newton polytope; twice the norm ball.
    """
    _center(f)
    reduction = check_ball_input(f, max_dim)
    return polar_dual(centered_newton_polytope(f, reduction), max_dim=max_dim)


def symmetric_ball(f: LaurentPolynomial, max_dim: int = MAX_DIM, cross_check: bool = False) -> NormBall:
    _center(f)
    reduction = check_ball_input(f, max_dim)
    dual = polar_dual(centered_newton_polytope(f, reduction), max_dim=max_dim)
    ball = NormBall(reduction=reduction, reduced_ball=dilate(dual, Fraction(1, 2)))
    logger.debug(f"symmetric ball has {len(ball.vertices)} vertices")
    if cross_check:
        general = reduced_ball(f, max_dim=max_dim)
        if general.vertices != ball.vertices or general.reduced_ball.facets != ball.reduced_ball.facets:
            raise ConsistencyError("symmetric fast path and difference-body ball disagree")
    return ball


def symmetric_facet_formula(
        f: LaurentPolynomial,
        phi: typing.Sequence
    ) -> typing.Tuple[Fraction, linalg.RationalVector]:
    """
    ||phi||_f = |2 phi~(alpha)| where alpha is the centered vertex maximizing
    phi~; phi~ then lies in the cone over the ball facet dual to alpha.
    Returns the value and alpha in centered essential coordinates.
    """
    center = _center(f)
    reduction = lattice.reduce(f)
    phi_tilde = lattice.project_functional(reduction, phi)
    if linalg.is_zero(phi_tilde):
        raise DegenerateGeometryError(
            "the dual vector vanishes on the essential lattice and lies in no facet cone"
        )
    alpha, _ = active_pair(f, phi)
    vertex = linalg.subtract(
        lattice.point_coordinates(reduction, alpha),
        lattice.point_coordinates(reduction, center)
    )
    return abs(2 * Fraction(linalg.dot(phi_tilde, vertex))), vertex


def half_space_presentation_symmetric(
        f: LaurentPolynomial,
        max_dim: int = MAX_DIM
    ) -> typing.List[HalfSpace]:
    """
    The half-spaces +-phi~(alpha) <= 1/2 over the centered vertices alpha,
    with the duplicate of each +- pair removed.
    """
    _center(f)
    newton = centered_newton_polytope(f, check_ball_input(f, max_dim))
    half_spaces = set()
    for vertex in newton.vertices:
        half_spaces.add(HalfSpace.from_inequality(vertex, Fraction(1, 2)))
        half_spaces.add(HalfSpace.from_inequality(linalg.scale(vertex, -1), Fraction(1, 2)))
    return sorted(half_spaces)
