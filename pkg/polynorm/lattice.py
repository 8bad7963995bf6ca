"""
Essential-variable structure of the exponent set of a Laurent polynomial.

The differences alpha - base of the support points span a rank m sublattice
of Z^n. Writing every exponent in an integer basis of that lattice turns f
into a polynomial in m essential variables (times the unit t^base), and
every dual vector phi into its image (phi(b_1), ..., phi(b_m)).
"""
import logging
import typing
import dataclasses
from fractions import Fraction

from polynorm.errors import (
    ConsistencyError, DimensionMismatchError, LatticeMembershipError, ZeroPolynomialError
)
from polynorm.math import linalg
from polynorm.poly.laurent import LaurentPolynomial, support, substitute_monomials

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class LatticeReduction:
    base: linalg.IntVector
    basis: typing.Tuple[linalg.IntVector, ...]
    num_vars: int

    @property
    def essential_dim(self) -> int:
        return len(self.basis)

    @property
    def inessential_dim(self) -> int:
        return self.num_vars - len(self.basis)

    def to_dict(self) -> typing.Dict:
        return {
            "base": list(self.base),
            "lattice_basis": [list(row) for row in self.basis],
            "essential_dim": self.essential_dim,
            "inessential_dim": self.inessential_dim,
        }


def reduce(f: LaurentPolynomial) -> LatticeReduction:
    """
    Base point is the lexicographically least support point; the basis is
    the row Hermite normal form of the saturation of the lattice generated by
    the support differences, i.e. span_Q{alpha - base} intersected with Z^n.

    The saturation contains every difference, so exponents keep integer
    coordinates, and for the 6-variable great circle link it gives the basis
    t1*t2*t3, t4*t5*t6 of the usual reduced form.
    """
    if f.is_zero():
        raise ZeroPolynomialError("reduce")
    points = support(f)
    base = points[0]
    differences = [linalg.subtract(alpha, base) for alpha in points[1:]]
    basis = linalg.saturated_lattice_basis(differences, f.num_vars)
    logger.debug(
        f"lattice reduction of {len(points)} support points in {f.num_vars}"
        f" variables has rank {len(basis)}"
    )
    return LatticeReduction(base=base, basis=tuple(basis), num_vars=f.num_vars)


def _check_length(r: LatticeReduction, vector: typing.Sequence):
    if len(vector) != r.num_vars:
        raise DimensionMismatchError(
            f"vector of length {len(vector)} used with a reduction in {r.num_vars} variables"
        )


def point_coordinates(r: LatticeReduction, x: typing.Sequence) -> linalg.RationalVector:
    """
    Rational coordinates u with x == base + sum_i u_i * basis_i, for any point
    x of the affine span.
    """
    _check_length(r, x)
    offset = linalg.subtract(linalg.as_rational_vector(x), r.base)
    if r.essential_dim == 0:
        if not linalg.is_zero(offset):
            raise LatticeMembershipError(f"{tuple(x)} is not the base point {r.base}")
        return ()
    # One equation per ambient coordinate, one unknown per basis vector
    rows = [[vector[i] for vector in r.basis] for i in range(r.num_vars)]
    solution = linalg.solve_unique(rows, offset)
    if solution is None:
        raise LatticeMembershipError(
            f"{tuple(x)} does not lie in the affine span of the support"
        )
    return solution


def exponent_coordinates(r: LatticeReduction, alpha: typing.Sequence[int]) -> linalg.IntVector:
    coordinates = point_coordinates(r, alpha)
    if any(entry.denominator != 1 for entry in coordinates):
        raise LatticeMembershipError(
            f"{tuple(alpha)} lies in the affine span but not in the lattice"
        )
    return tuple(entry.numerator for entry in coordinates)


def project_functional(r: LatticeReduction, phi: typing.Sequence) -> linalg.RationalVector:
    _check_length(r, phi)
    phi = linalg.as_rational_vector(phi)
    return tuple(Fraction(linalg.dot(phi, vector)) for vector in r.basis)


def degenerate_directions(r: LatticeReduction) -> typing.List[linalg.IntVector]:
    """
    Basis of the dual vectors that annihilate the lattice. The norm is
    constant along these directions.
    """
    return linalg.nullspace(list(r.basis), r.num_vars)


def lift_functional(r: LatticeReduction, phi_tilde: typing.Sequence) -> linalg.RationalVector:
    """
    A dual vector on Z^n projecting to phi_tilde, supported on the pivot
    columns of the basis.
    """
    if len(phi_tilde) != r.essential_dim:
        raise DimensionMismatchError(
            f"essential functional of length {len(phi_tilde)}, expected {r.essential_dim}"
        )
    lifted = [Fraction(0)] * r.num_vars
    if r.essential_dim == 0:
        return tuple(lifted)
    # The basis is in Hermite normal form, so each row opens a new pivot column
    pivots = [next(i for i, entry in enumerate(row) if entry != 0) for row in r.basis]
    square = [[row[j] for j in pivots] for row in r.basis]
    solution = linalg.solve_unique(square, linalg.as_rational_vector(phi_tilde))
    for j, value in zip(pivots, solution):
        lifted[j] = value
    return tuple(lifted)


def reduced_polynomial(f: LaurentPolynomial, r: typing.Optional[LatticeReduction] = None) -> LaurentPolynomial:
    """
    f written in the essential variables s_1..s_m: c_alpha t^alpha becomes
    c_alpha s^u with u the lattice coordinates of alpha. Substituting
    s_i -> t^basis_i and multiplying by t^base gives f back.
    """
    if r is None:
        r = reduce(f)
    reduced = LaurentPolynomial(r.essential_dim, {
        exponent_coordinates(r, alpha): coefficient for alpha, coefficient in f.items()
    })
    images = [list(vector) for vector in r.basis]
    if r.essential_dim == 0:
        restored = LaurentPolynomial(r.num_vars, {r.base: reduced.coefficient(())})
    else:
        restored = substitute_monomials(reduced, images).shift(r.base)
    if restored != f:
        raise ConsistencyError("reduced polynomial does not expand back to the input")
    return reduced
