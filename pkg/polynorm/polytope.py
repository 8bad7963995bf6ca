"""
Exact rational polytopes: vertex filtering, Minkowski sums, support and
width functions, facet enumeration and polar duals.
"""
import math
import logging
import typing
import dataclasses
from fractions import Fraction

import cdd

from polynorm.constants import MAX_DIM
from polynorm.errors import (
    DegenerateGeometryError, DimensionCapError, DimensionMismatchError, ZeroPolynomialError
)
from polynorm.math import linalg
from polynorm.poly.laurent import LaurentPolynomial, support
from polynorm.serialization import format_rational, format_vector, parse_rational

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, order=True)
class HalfSpace:
    """
    The set {x : normal . x <= offset} with a primitive integer normal.
    """
    normal: linalg.IntVector
    offset: Fraction

    @classmethod
    def from_inequality(cls, normal: typing.Sequence, offset) -> "HalfSpace":
        normal = linalg.as_rational_vector(normal)
        if linalg.is_zero(normal):
            raise DegenerateGeometryError("a half-space needs a nonzero normal")
        denominator = math.lcm(*(entry.denominator for entry in normal))
        integral = [int(entry * denominator) for entry in normal]
        divisor = math.gcd(*integral)
        return cls(
            normal=tuple(entry // divisor for entry in integral),
            offset=Fraction(offset) * denominator / divisor
        )

    def contains(self, x: typing.Sequence) -> bool:
        return linalg.dot(self.normal, x) <= self.offset

    def is_tight(self, x: typing.Sequence) -> bool:
        return linalg.dot(self.normal, x) == self.offset

    def to_dict(self) -> typing.Dict:
        return {"normal": list(self.normal), "offset": format_rational(self.offset)}


@dataclasses.dataclass(frozen=True)
class Polytope:
    dim_ambient: int
    vertices: typing.Tuple[linalg.RationalVector, ...]
    facets: typing.Optional[typing.Tuple[HalfSpace, ...]] = None

    def to_dict(self) -> typing.Dict:
        return {
            "dim": self.dim_ambient,
            "vertices": [format_vector(vertex) for vertex in self.vertices],
            "facets": None if self.facets is None else [facet.to_dict() for facet in self.facets],
        }

    @classmethod
    def from_dict(cls, document: typing.Mapping) -> "Polytope":
        vertices = tuple(
            tuple(parse_rational(str(entry)) for entry in vertex)
            for vertex in document["vertices"]
        )
        facets = document.get("facets")
        if facets is not None:
            facets = tuple(
                HalfSpace(
                    normal=tuple(int(entry) for entry in facet["normal"]),
                    offset=parse_rational(str(facet["offset"]))
                )
                for facet in facets
            )
        return cls(dim_ambient=int(document["dim"]), vertices=vertices, facets=facets)


def _check_length(p: Polytope, vector: typing.Sequence):
    if len(vector) != p.dim_ambient:
        raise DimensionMismatchError(
            f"vector of length {len(vector)} used with a polytope in dimension {p.dim_ambient}"
        )


def _generator_matrix(points: typing.Sequence[typing.Sequence]) -> "cdd.Matrix":
    # cdd's V-representation [t V]: a leading 1 marks a point, 0 a ray
    generators = cdd.Matrix(
        [[Fraction(1)] + list(linalg.as_rational_vector(point)) for point in points],
        number_type="fraction"
    )
    generators.rep_type = cdd.RepType.GENERATOR
    return generators


def _rows(matrix: "cdd.Matrix") -> typing.Iterator[typing.Tuple[Fraction, ...]]:
    for i in range(matrix.row_size):
        yield tuple(Fraction(entry) for entry in matrix[i])


def hull_vertices(points: typing.Sequence[typing.Sequence]) -> Polytope:
    """
    Minimal V-representation of the convex hull of a finite point set.

    cdd's canonicalize drops every point that is a convex combination of the
    others, in exact rational arithmetic and also for point sets that are not
    full-dimensional.
    """
    if len(points) == 0:
        raise DegenerateGeometryError("convex hull of an empty point set")
    dimension = len(points[0])
    if any(len(point) != dimension for point in points):
        raise DimensionMismatchError("points of different lengths")
    candidates = sorted({linalg.as_rational_vector(point) for point in points})
    if len(candidates) <= 2:
        return Polytope(dimension, tuple(candidates))

    rank = linalg.affine_rank(candidates)
    if rank == 1:
        # Lexicographic order is monotone along a line
        return Polytope(dimension, (candidates[0], candidates[-1]))

    generators = _generator_matrix(candidates)
    generators.canonicalize()
    vertices = sorted({
        tuple(entry / row[0] for entry in row[1:]) for row in _rows(generators)
    })
    logger.debug(
        f"hull of {len(candidates)} points in dimension {dimension}: {len(vertices)} vertices"
    )
    return Polytope(dimension, tuple(vertices))


def affine_dim(p: Polytope) -> int:
    return linalg.affine_rank(p.vertices)


def is_full_dimensional(p: Polytope) -> bool:
    return affine_dim(p) == p.dim_ambient


def minkowski_sum(p: Polytope, q: Polytope) -> Polytope:
    if p.dim_ambient != q.dim_ambient:
        raise DimensionMismatchError(
            f"Minkowski sum of polytopes in dimensions {p.dim_ambient} and {q.dim_ambient}"
        )
    return hull_vertices([linalg.add(v, w) for v in p.vertices for w in q.vertices])


def dilate(p: Polytope, factor) -> Polytope:
    """
    The polytope factor * p for a positive rational factor; an H-rep, when
    present, is scaled along.
    """
    factor = Fraction(factor)
    if factor <= 0:
        raise ValueError(f"dilation factor must be positive, got {factor}")
    facets = None
    if p.facets is not None:
        facets = tuple(HalfSpace(h.normal, h.offset * factor) for h in p.facets)
    return Polytope(
        p.dim_ambient,
        tuple(sorted(linalg.scale(vertex, factor) for vertex in p.vertices)),
        facets
    )


def translate(p: Polytope, v: typing.Sequence) -> Polytope:
    _check_length(p, v)
    v = linalg.as_rational_vector(v)
    facets = None
    if p.facets is not None:
        facets = tuple(sorted(
            HalfSpace(h.normal, h.offset + linalg.dot(h.normal, v)) for h in p.facets
        ))
    return Polytope(
        p.dim_ambient,
        tuple(sorted(linalg.add(vertex, v) for vertex in p.vertices)),
        facets
    )


def support_function(p: Polytope, phi: typing.Sequence) -> Fraction:
    _check_length(p, phi)
    phi = linalg.as_rational_vector(phi)
    return max(Fraction(linalg.dot(phi, vertex)) for vertex in p.vertices)


def width_function(p: Polytope, phi: typing.Sequence) -> Fraction:
    _check_length(p, phi)
    phi = linalg.as_rational_vector(phi)
    values = [Fraction(linalg.dot(phi, vertex)) for vertex in p.vertices]
    return max(values) - min(values)


def facets_from_vertices(p: Polytope, max_dim: int = MAX_DIM) -> typing.List[HalfSpace]:
    """
    Irredundant H-representation of a full-dimensional polytope, by cdd's
    double description run in exact fraction arithmetic.
    """
    if p.dim_ambient > max_dim:
        raise DimensionCapError(
            f"facet enumeration in dimension {p.dim_ambient} exceeds the cap of {max_dim}"
        )
    if not is_full_dimensional(p):
        raise DegenerateGeometryError(
            f"polytope of dimension {affine_dim(p)} in ambient dimension {p.dim_ambient}"
            f" has no finite facet description; reduce to its affine span first"
        )
    inequalities = cdd.Polyhedron(_generator_matrix(p.vertices)).get_inequalities()
    inequalities.canonicalize()
    if inequalities.lin_set:
        raise DegenerateGeometryError(
            f"cdd found {len(inequalities.lin_set)} equations for a full-dimensional polytope"
        )
    # cdd's H-representation [b -A] stands for b - A x >= 0; the row with
    # A = 0 is the trivial inequality 1 >= 0
    facets = sorted({
        HalfSpace.from_inequality([-entry for entry in row[1:]], row[0])
        for row in _rows(inequalities)
        if any(row[1:])
    })
    logger.debug(
        f"{len(p.vertices)} vertices in dimension {p.dim_ambient} give {len(facets)} facets"
    )
    return facets


def with_facets(p: Polytope, max_dim: int = MAX_DIM) -> Polytope:
    if p.facets is not None:
        return p
    return Polytope(p.dim_ambient, p.vertices, tuple(facets_from_vertices(p, max_dim=max_dim)))


def polar_dual(p: Polytope, max_dim: int = MAX_DIM) -> Polytope:
    """
    P* = {phi : phi . x <= 1 for x in P} of a full-dimensional polytope with
    the origin in its interior. Each facet a . x <= b of P gives the vertex
    a / b of P*, each vertex v of P the facet v . phi <= 1.
    """
    facets = facets_from_vertices(p, max_dim=max_dim)
    if any(facet.offset <= 0 for facet in facets):
        raise DegenerateGeometryError("the origin is not an interior point of the polytope")
    vertices = tuple(sorted(
        tuple(Fraction(entry) / facet.offset for entry in facet.normal) for facet in facets
    ))
    dual_facets = tuple(sorted(HalfSpace.from_inequality(vertex, 1) for vertex in p.vertices))
    return Polytope(p.dim_ambient, vertices, dual_facets)


def contains(p: Polytope, x: typing.Sequence, max_dim: int = MAX_DIM) -> bool:
    _check_length(p, x)
    x = linalg.as_rational_vector(x)
    facets = with_facets(p, max_dim=max_dim).facets
    return all(facet.contains(x) for facet in facets)


def newton_polytope(f: LaurentPolynomial) -> Polytope:
    if f.is_zero():
        raise ZeroPolynomialError("newton_polytope")
    return hull_vertices(support(f))


def difference_body(p: Polytope) -> Polytope:
    """
    P - P, whose support function is the width function of P.
    """
    return hull_vertices([linalg.subtract(v, w) for v in p.vertices for w in p.vertices])
