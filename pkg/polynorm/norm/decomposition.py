"""
The decomposition formula ||phi||_f = sum_i n_i ||phi||_{f_i} for
f = f_1^n_1 ... f_k^n_k, and the closed form of the norm ball when every
factor has a segment as Newton polytope.
"""
import logging
import typing
import itertools
import dataclasses
from fractions import Fraction

from polynorm import lattice
from polynorm.errors import ConsistencyError, DimensionMismatchError, FactorizationError
from polynorm.math import linalg
from polynorm.norm.definition import norm_def
from polynorm.poly.laurent import LaurentPolynomial, multiply, power
from polynorm.polytope import newton_polytope

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Factorization:
    factors: typing.Tuple[typing.Tuple[LaurentPolynomial, int], ...]

    def __post_init__(self):
        if len(self.factors) == 0:
            raise FactorizationError("a factorization needs at least one factor")
        num_vars = self.factors[0][0].num_vars
        for factor, multiplicity in self.factors:
            if factor.num_vars != num_vars:
                raise DimensionMismatchError(
                    f"factors in {num_vars} and {factor.num_vars} variables"
                )
            if factor.is_zero():
                raise FactorizationError("the zero polynomial cannot be a factor")
            if int(multiplicity) != multiplicity or multiplicity < 1:
                raise FactorizationError(
                    f"multiplicities must be positive integers, got {multiplicity}"
                )

    @classmethod
    def of(
            cls,
            factors: typing.Iterable[typing.Tuple[LaurentPolynomial, int]],
            target: typing.Optional[LaurentPolynomial] = None
        ) -> "Factorization":
        """
        Builds a factorization and, when `target` is given, checks that the
        factors multiply out to it.
        """
        factorization = cls(tuple((factor, int(multiplicity)) for factor, multiplicity in factors))
        if target is not None and factorization.product() != target:
            raise FactorizationError("the factors do not multiply out to the target polynomial")
        return factorization

    @property
    def num_vars(self) -> int:
        return self.factors[0][0].num_vars

    def product(self) -> LaurentPolynomial:
        result = LaurentPolynomial.constant(self.num_vars, 1)
        for factor, multiplicity in self.factors:
            result = multiply(result, power(factor, multiplicity))
        return result


def factor_norms(fact: Factorization, phi: typing.Sequence) -> typing.List[Fraction]:
    return [norm_def(factor, phi) for factor, _ in fact.factors]


def norm_decomposed(fact: Factorization, phi: typing.Sequence, verify: bool = True) -> Fraction:
    """
    sum_i n_i * ||phi||_{f_i}. With `verify`, the sum is compared against
    the norm of the expanded product.
    """
    total = sum(
        (multiplicity * value for (_, multiplicity), value in zip(fact.factors, factor_norms(fact, phi))),
        Fraction(0)
    )
    if verify:
        direct = norm_def(fact.product(), phi)
        if direct != total:
            raise ConsistencyError(
                f"decomposition formula gave {total} but the product has norm {direct}"
            )
    return total


def segment_forms(
        fact: Factorization,
        reduction: typing.Optional[lattice.LatticeReduction] = None
    ) -> typing.List[typing.Tuple[linalg.IntVector, int]]:
    """
    For factors whose Newton polytope is a segment with direction d, the
    factor norm is |phi(d)|. Returns each d in the lattice coordinates of the
    product together with its multiplicity, so that
    ||phi||_f = sum_i n_i |l_i . phi~|.
    """
    if reduction is None:
        reduction = lattice.reduce(fact.product())
    forms = []
    for factor, multiplicity in fact.factors:
        vertices = newton_polytope(factor).vertices
        if len(vertices) != 2:
            raise FactorizationError(
                f"factor with {len(vertices)} Newton polytope vertices is not of segment type"
            )
        direction = linalg.subtract(vertices[1], vertices[0])
        shifted = linalg.add(reduction.base, direction)
        form = lattice.exponent_coordinates(reduction, tuple(int(entry) for entry in shifted))
        forms.append((form, multiplicity))
    return forms


def format_norm_formula(
        forms: typing.Sequence[typing.Tuple[typing.Sequence[int], int]],
        names: typing.Optional[typing.Sequence[str]] = None
    ) -> str:
    """
    Text such as "2|p1 + p2| + 2|-p1 + p2|".
    """
    if not forms:
        return "0"
    if names is None:
        names = [f"p{i + 1}" for i in range(len(forms[0][0]))]
    terms = []
    for form, multiplicity in forms:
        pieces = []
        for coefficient, name in zip(form, names):
            if coefficient == 0:
                continue
            magnitude = "" if abs(coefficient) == 1 else f"{abs(coefficient)}*"
            if not pieces:
                pieces.append(f"{'-' if coefficient < 0 else ''}{magnitude}{name}")
            else:
                pieces.append(f"{'-' if coefficient < 0 else '+'} {magnitude}{name}")
        prefix = "" if multiplicity == 1 else str(multiplicity)
        terms.append(f"{prefix}|{' '.join(pieces) or '0'}|")
    return " + ".join(terms)


def factor_ball_vertices(
        fact: Factorization,
        reduction: typing.Optional[lattice.LatticeReduction] = None
    ) -> typing.List[linalg.RationalVector]:
    """
    Vertices of {phi~ : sum_j n_j |l_j . phi~| <= 1} for segment factors.

    Every vertex lies on a line where m - 1 independent forms vanish. On the
    kernel line k of such a subset the norm is s = sum_j n_j |l_j . k|, which
    gives the two vertices +-k / s.
    """
    if reduction is None:
        reduction = lattice.reduce(fact.product())
    dimension = reduction.essential_dim
    forms = segment_forms(fact, reduction)
    if linalg.rank([form for form, _ in forms]) < dimension:
        raise FactorizationError(
            f"the segment forms do not span the {dimension}-dimensional essential dual space"
        )
    distinct = sorted({linalg.primitive(form) for form, _ in forms})
    vertices = set()
    for subset in itertools.combinations(distinct, dimension - 1):
        if linalg.rank(list(subset)) < dimension - 1:
            continue
        kernel = linalg.nullspace(list(subset), dimension)
        if len(kernel) != 1:
            continue
        line = kernel[0]
        value = sum(
            (multiplicity * abs(linalg.dot(form, line)) for form, multiplicity in forms), 0
        )
        vertex = tuple(Fraction(entry, value) for entry in line)
        vertices.add(vertex)
        vertices.add(tuple(-entry for entry in vertex))
    logger.debug(
        f"{len(forms)} segment forms in dimension {dimension} give {len(vertices)} ball vertices"
    )
    return sorted(vertices)
