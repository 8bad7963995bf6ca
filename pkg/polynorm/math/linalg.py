import math
import typing
from fractions import Fraction

import sympy

IntVector = typing.Tuple[int, ...]
RationalVector = typing.Tuple[Fraction, ...]


def as_rational_vector(vector: typing.Iterable) -> RationalVector:
    return tuple(Fraction(entry) for entry in vector)


def dot(u: typing.Sequence, v: typing.Sequence):
    return sum((a * b for a, b in zip(u, v)), 0)


def subtract(u: typing.Sequence, v: typing.Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def add(u: typing.Sequence, v: typing.Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def scale(vector: typing.Sequence, factor) -> tuple:
    return tuple(factor * entry for entry in vector)


def is_zero(vector: typing.Sequence) -> bool:
    return all(entry == 0 for entry in vector)


def primitive(vector: typing.Sequence[int]) -> IntVector:
    """
    Divides an integer vector by the (positive) gcd of its entries. The zero
    vector is returned unchanged.
    """
    g = math.gcd(*vector) if len(vector) else 0
    if g == 0:
        return tuple(vector)
    return tuple(entry // g for entry in vector)


def integerize(vector: typing.Sequence) -> IntVector:
    """
    Smallest integer vector that is a positive multiple of a rational vector.
    """
    vector = as_rational_vector(vector)
    denominator = math.lcm(*(entry.denominator for entry in vector)) if vector else 1
    return primitive([int(entry * denominator) for entry in vector])


def to_sympy(rows: typing.Sequence[typing.Sequence]) -> sympy.Matrix:
    return sympy.Matrix([
        [sympy.Rational(Fraction(entry).numerator, Fraction(entry).denominator) for entry in row]
        for row in rows
    ])


def from_sympy(entry) -> Fraction:
    entry = sympy.Rational(entry)
    return Fraction(int(entry.p), int(entry.q))


def rank(rows: typing.Sequence[typing.Sequence]) -> int:
    if len(rows) == 0 or len(rows[0]) == 0:
        return 0
    return int(to_sympy(rows).rank())


def affine_rank(points: typing.Sequence[typing.Sequence]) -> int:
    """
    Dimension of the affine hull of a nonempty point set.
    """
    origin = points[0]
    return rank([subtract(point, origin) for point in points[1:]])


def nullspace(rows: typing.Sequence[typing.Sequence], num_cols: int) -> typing.List[IntVector]:
    """
    Basis of {x : row . x = 0 for every row}, each vector scaled to a
    primitive integer vector. An empty row list has the standard basis as its
    nullspace.
    """
    if len(rows) == 0:
        return [tuple(int(i == j) for j in range(num_cols)) for i in range(num_cols)]
    return [
        integerize(from_sympy(entry) for entry in vector)
        for vector in to_sympy(rows).nullspace()
    ]


def solve_unique(rows: typing.Sequence[typing.Sequence], rhs: typing.Sequence) -> typing.Optional[RationalVector]:
    """
    Solves rows . x = rhs when the columns are linearly independent. Returns
    None if the system is inconsistent.
    """
    try:
        solution, free = to_sympy(rows).gauss_jordan_solve(to_sympy([[value] for value in rhs]))
    except ValueError:
        # sympy: "Linear system has no solution"
        return None
    if free.shape[0] > 0:
        raise ValueError("solve_unique needs linearly independent columns")
    return tuple(from_sympy(entry) for entry in solution)


def hermite_normal_form(
        rows: typing.Sequence[typing.Sequence[int]],
        with_transform: bool = False
    ):
    """
    Row-style Hermite normal form of an integer matrix: pivots positive,
    pivot columns strictly increasing left to right, entries above a pivot
    reduced into [0, pivot). Zero rows are dropped from the returned basis.

    With `with_transform`, also returns the unimodular matrix U with
    U @ rows == H (zero rows included), whose trailing rows span the left
    integer kernel.
    """
    matrix = [list(row) for row in rows]
    num_rows = len(matrix)
    num_cols = len(matrix[0]) if num_rows else 0
    transform = [[int(i == j) for j in range(num_rows)] for i in range(num_rows)]

    def combine(target: int, source: int, factor: int):
        matrix[target] = [a - factor * b for a, b in zip(matrix[target], matrix[source])]
        transform[target] = [a - factor * b for a, b in zip(transform[target], transform[source])]

    def swap(i: int, j: int):
        matrix[i], matrix[j] = matrix[j], matrix[i]
        transform[i], transform[j] = transform[j], transform[i]

    pivot_row = 0
    for col in range(num_cols):
        if pivot_row == num_rows:
            break
        while True:
            nonzero = [i for i in range(pivot_row, num_rows) if matrix[i][col] != 0]
            if not nonzero:
                break
            smallest = min(nonzero, key=lambda i: abs(matrix[i][col]))
            swap(pivot_row, smallest)
            done = True
            for i in range(pivot_row + 1, num_rows):
                if matrix[i][col] != 0:
                    combine(i, pivot_row, matrix[i][col] // matrix[pivot_row][col])
                    if matrix[i][col] != 0:
                        done = False
            if done:
                break
        if matrix[pivot_row][col] == 0:
            continue
        if matrix[pivot_row][col] < 0:
            matrix[pivot_row] = [-entry for entry in matrix[pivot_row]]
            transform[pivot_row] = [-entry for entry in transform[pivot_row]]
        pivot = matrix[pivot_row][col]
        for i in range(pivot_row):
            combine(i, pivot_row, matrix[i][col] // pivot)
        pivot_row += 1

    basis = [tuple(row) for row in matrix[:pivot_row]]
    if with_transform:
        return basis, [tuple(row) for row in transform], pivot_row
    return basis


def left_integer_kernel(rows: typing.Sequence[typing.Sequence[int]]) -> typing.List[IntVector]:
    """
    Basis of the lattice {y in Z^k : y @ rows == 0} for a k x n integer matrix.
    """
    if len(rows) == 0:
        return []
    _, transform, matrix_rank = hermite_normal_form(rows, with_transform=True)
    return transform[matrix_rank:]


def saturated_lattice_basis(
        generators: typing.Sequence[typing.Sequence[int]],
        num_cols: int
    ) -> typing.List[IntVector]:
    """
    HNF basis of span_Q(generators) intersected with Z^n: the integer vectors
    annihilated by every rational vector that annihilates the generators.
    """
    generators = [tuple(g) for g in generators if not is_zero(g)]
    if not generators:
        return []
    annihilator = nullspace(generators, num_cols)
    if not annihilator:
        return [tuple(int(i == j) for j in range(num_cols)) for i in range(num_cols)]
    # Columns of this n x (n - r) matrix are the annihilator vectors
    columns = [[vector[i] for vector in annihilator] for i in range(num_cols)]
    return hermite_normal_form(left_integer_kernel(columns))
