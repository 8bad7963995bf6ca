import logging
import typing
import dataclasses

from polynorm import lattice
from polynorm.constants import MAX_DIM
from polynorm.errors import (
    ConsistencyError, DimensionCapError, WholeDualSpaceError, ZeroPolynomialError
)
from polynorm.math import linalg
from polynorm.poly.laurent import LaurentPolynomial, support
from polynorm.polytope import (
    Polytope, contains, difference_body, hull_vertices, polar_dual, width_function
)

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class NormBall:
    """
    The unit ball of the norm of f. Inessential directions are free, so the
    ball is reduced_ball x R^(n - m) and is stored through its bounded factor
    in essential coordinates.
    """
    reduction: lattice.LatticeReduction
    reduced_ball: Polytope

    @property
    def essential_dim(self) -> int:
        return self.reduction.essential_dim

    @property
    def inessential_dim(self) -> int:
        return self.reduction.inessential_dim

    @property
    def vertices(self) -> typing.Tuple[linalg.RationalVector, ...]:
        return self.reduced_ball.vertices

    def contains_reduced(self, phi_tilde: typing.Sequence) -> bool:
        return contains(self.reduced_ball, phi_tilde)

    def contains(self, phi: typing.Sequence) -> bool:
        return self.contains_reduced(lattice.project_functional(self.reduction, phi))

    def to_dict(self) -> typing.Dict:
        return {
            "essential_dim": self.essential_dim,
            "inessential_dim": self.inessential_dim,
            "lattice_basis": [list(row) for row in self.reduction.basis],
            "reduced_ball": self.reduced_ball.to_dict(),
        }


def check_ball_input(f: LaurentPolynomial, max_dim: int) -> lattice.LatticeReduction:
    if f.is_zero():
        raise ZeroPolynomialError("reduced_ball")
    if f.is_monomial():
        raise WholeDualSpaceError()
    reduction = lattice.reduce(f)
    if reduction.essential_dim > max_dim:
        raise DimensionCapError(
            f"essential dimension {reduction.essential_dim} exceeds the cap of {max_dim}"
        )
    return reduction


def reduced_newton_polytope(f: LaurentPolynomial, reduction: lattice.LatticeReduction) -> Polytope:
    """
    Newton polytope of f in the lattice coordinates of `reduction`.
    """
    return hull_vertices([lattice.exponent_coordinates(reduction, alpha) for alpha in support(f)])


def reduced_ball(f: LaurentPolynomial, max_dim: int = MAX_DIM) -> NormBall:
    """
    The width of N in direction phi is the support function of the
    difference body D = N - N, so the reduced unit ball is the polar of D.
    Its facets are {phi~ : phi~ . w <= 1} for the vertices w of D.
    """
    reduction = check_ball_input(f, max_dim)
    newton = reduced_newton_polytope(f, reduction)
    body = difference_body(newton)
    ball = polar_dual(body, max_dim=max_dim)
    logger.debug(
        f"reduced ball in dimension {reduction.essential_dim}: difference body has"
        f" {len(body.vertices)} vertices, ball has {len(ball.vertices)} vertices"
        f" and {len(ball.facets)} facets"
    )
    _cross_validate(newton, ball)
    return NormBall(reduction=reduction, reduced_ball=ball)


def _cross_validate(newton: Polytope, ball: Polytope):
    for vertex in ball.vertices:
        value = width_function(newton, vertex)
        if value != 1:
            raise ConsistencyError(f"ball vertex {vertex} has norm {value}, expected 1")
        if not all(facet.contains(vertex) for facet in ball.facets):
            raise ConsistencyError(f"ball vertex {vertex} violates a facet inequality")
    vertex_set = set(ball.vertices)
    for vertex in ball.vertices:
        if tuple(-entry for entry in vertex) not in vertex_set:
            raise ConsistencyError(f"ball is not centrally symmetric at {vertex}")
