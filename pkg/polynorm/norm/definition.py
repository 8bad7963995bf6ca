import typing
from fractions import Fraction

from polynorm.math import linalg
from polynorm.norm.route_parent import NormRoute
from polynorm.poly.laurent import ExponentVector, LaurentPolynomial, support


class DefinitionNorm(NormRoute):
    """
    sup over ordered support pairs of phi(alpha - beta), evaluated as
    max phi(alpha) - min phi(beta).
    """
    def __init__(self, name: str = "def"):
        super().__init__(name=name)

    def requires_integer_dual(self) -> bool:
        return False

    def compute_norm(self, f: LaurentPolynomial, phi: typing.Tuple[Fraction, ...]) -> Fraction:
        values = [Fraction(linalg.dot(phi, alpha)) for alpha in support(f)]
        return max(values) - min(values)


DEFINITION_ROUTE = DefinitionNorm()


def norm_def(f: LaurentPolynomial, phi: typing.Sequence) -> Fraction:
    return DEFINITION_ROUTE(f, phi)


def active_pair(
        f: LaurentPolynomial,
        phi: typing.Sequence
    ) -> typing.Tuple[ExponentVector, ExponentVector]:
    """
    The support pair (alpha, beta) attaining the norm: alpha is the least
    maximizer of phi in lexicographic order, beta the least minimizer. Scaling
    phi by a positive number keeps the pair.
    """
    norm_def(f, phi)
    points = support(f)
    values = [Fraction(linalg.dot(phi, alpha)) for alpha in points]
    highest, lowest = max(values), min(values)
    # support() is in lexicographic order already
    alpha = next(point for point, value in zip(points, values) if value == highest)
    beta = next(point for point, value in zip(points, values) if value == lowest)
    return alpha, beta
