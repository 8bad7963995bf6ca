import typing

from polynorm.constants import WHOLE_SPACE_MESSAGE


class PolynormError(ValueError):
    """
    Base class of every error raised by polynorm. Subclasses `ValueError` so
    that plain `except ValueError` callers keep working.
    """


class ParseError(PolynormError):
    def __init__(self, message: str, position: typing.Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at offset {position})"
        super().__init__(message)


class DimensionMismatchError(PolynormError):
    pass


class DimensionCapError(PolynormError):
    pass


class ZeroPolynomialError(PolynormError):
    def __init__(self, operation: str):
        super().__init__(
            f"`{operation}` is undefined for the zero polynomial."
        )


class NonIntegerDualError(PolynormError):
    pass


class NotSymmetricError(PolynormError):
    pass


class WholeDualSpaceError(PolynormError):
    """
    Raised for monomials: the norm vanishes everywhere and the unit ball is
    the whole dual space, which no polytope can represent.
    """
    def __init__(self, message: str = WHOLE_SPACE_MESSAGE):
        super().__init__(message)


class DegenerateGeometryError(PolynormError):
    pass


class LatticeMembershipError(PolynormError):
    pass


class FactorizationError(PolynormError):
    pass


class ConsistencyError(PolynormError):
    """
    Two computations that must agree did not. Always a bug.
    """
