import enum
import typing
from fractions import Fraction

from polynorm.constants import INDETERMINATE_LABEL
from polynorm.norm.route_parent import NormRoute
from polynorm.poly.laurent import LaurentPolynomial, degree_span, specialize


class Indeterminate(enum.Enum):
    """
    Result of the single-variable route when f^phi vanishes: the degree span
    of the zero polynomial says nothing about the norm.
    """
    INDETERMINATE = INDETERMINATE_LABEL

    def __str__(self):
        return self.value


class SpecializedNorm(NormRoute):
    """
    Degree span of the one-variable polynomial f(t^phi_1, ..., t^phi_n).
    Cancellation can make this smaller than the norm, or make f^phi zero.
    """
    def __init__(self, name: str = "specialize"):
        super().__init__(name=name)

    def requires_integer_dual(self) -> bool:
        return True

    def compute_norm(
            self,
            f: LaurentPolynomial,
            phi: typing.Tuple[Fraction, ...]
        ) -> typing.Union[int, Indeterminate]:
        specialized = specialize(f, phi)
        if specialized.is_zero():
            return Indeterminate.INDETERMINATE
        return degree_span(specialized)


SPECIALIZED_ROUTE = SpecializedNorm()


def norm_specialized(f: LaurentPolynomial, phi: typing.Sequence) -> typing.Union[int, Indeterminate]:
    return SPECIALIZED_ROUTE(f, phi)
