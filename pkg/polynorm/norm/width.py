import typing
from fractions import Fraction

from polynorm.norm.route_parent import NormRoute
from polynorm.poly.laurent import LaurentPolynomial
from polynorm.polytope import newton_polytope, width_function


class GeometricNorm(NormRoute):
    """
    Width of the Newton polytope in direction phi.
    """
    def __init__(self, name: str = "width"):
        super().__init__(name=name)

    def requires_integer_dual(self) -> bool:
        return False

    def compute_norm(self, f: LaurentPolynomial, phi: typing.Tuple[Fraction, ...]) -> Fraction:
        return width_function(newton_polytope(f), phi)


GEOMETRIC_ROUTE = GeometricNorm()


def norm_geometric(f: LaurentPolynomial, phi: typing.Sequence) -> Fraction:
    return GEOMETRIC_ROUTE(f, phi)
