import abc
import typing
from fractions import Fraction

from polynorm.errors import DimensionMismatchError, NonIntegerDualError, ZeroPolynomialError
from polynorm.poly.laurent import LaurentPolynomial


class NormRoute(abc.ABC):
    def __init__(self, name: str):
        """
        Each route is one way of evaluating the Laurent norm of a dual vector;
        `name` is the key it is registered and reported under.
        """
        self.name = name

    @abc.abstractmethod
    def compute_norm(self, f: LaurentPolynomial, phi: typing.Tuple[Fraction, ...]):
        """
        Each route needs to implement the evaluation itself. `f` is nonzero
        and `phi` already has the right length.
        """
        raise NotImplementedError(
            "Implement `compute_norm()` in your `NormRoute` subclass."
            )

    @abc.abstractmethod
    def requires_integer_dual(self) -> bool:
        """
        Each route needs to state whether it is only defined for dual vectors
        with integer entries.
        """
        raise NotImplementedError(
            "Implement `requires_integer_dual()` in your `NormRoute` subclass."
            )

    def __call__(self, f: LaurentPolynomial, phi: typing.Sequence):
        """
        Checks that `f` is nonzero and that `phi` matches its variable count,
        then evaluates the route.
        """
        if f.is_zero():
            raise ZeroPolynomialError(f"norm ({self.name})")
        if len(phi) != f.num_vars:
            raise DimensionMismatchError(
                f"dual vector of length {len(phi)} for a polynomial in"
                f" {f.num_vars} variables, route `{self.name}` cannot be evaluated"
            )
        phi = tuple(Fraction(entry) for entry in phi)
        if self.requires_integer_dual() and any(entry.denominator != 1 for entry in phi):
            raise NonIntegerDualError(
                f"route `{self.name}` needs integer entries, got {[str(entry) for entry in phi]}"
            )
        return self.compute_norm(f, phi)
