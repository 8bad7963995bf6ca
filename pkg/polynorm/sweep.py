import typing
import itertools
from fractions import Fraction

import pandas as pd
import tqdm as tqdm

from polynorm import lattice
from polynorm.errors import ConsistencyError, DimensionMismatchError, WholeDualSpaceError
from polynorm.norm import NORM_ROUTES, Indeterminate, active_pair, reduced_ball
from polynorm.poly.laurent import LaurentPolynomial
from polynorm.serialization import format_rational


class NormSweep:
    def __init__(
            self,
            f: LaurentPolynomial,
            routes: typing.Sequence[str] = ("def", "width", "specialize"),
            variables: typing.Optional[typing.Sequence[str]] = None
        ) -> None:
        """
        Batch evaluation of the norm of one polynomial over many dual
        vectors. Every evaluation is appended to `history` as one row.
        """
        unknown = [name for name in routes if name not in NORM_ROUTES]
        if len(unknown) != 0:
            raise ValueError(
                f"Unknown norm routes: {', '.join(unknown)}; available"
                f" routes are {', '.join(NORM_ROUTES)}"
            )
        self.polynomial = f
        self.routes = [NORM_ROUTES[name] for name in routes]
        self.variables = list(variables) if variables is not None else [
            f"t{i + 1}" for i in range(f.num_vars)
        ]
        self.reduction = lattice.reduce(f)
        try:
            self.ball = reduced_ball(f)
        except WholeDualSpaceError:
            self.ball = None
        self.history = []

    def evaluate(self, phi: typing.Sequence) -> typing.Dict[str, typing.Optional[str]]:
        """
        Evaluates every route at `phi` and checks that the defined values
        agree. Integer-only routes are skipped for rational `phi`.
        """
        if len(phi) != self.polynomial.num_vars:
            raise DimensionMismatchError(
                f"dual vector of length {len(phi)} for {self.polynomial.num_vars} variables"
            )
        phi = tuple(Fraction(entry) for entry in phi)
        integral = all(entry.denominator == 1 for entry in phi)
        row = {
            f"phi_{name}": format_rational(entry) for name, entry in zip(self.variables, phi)
        }
        values = {}
        for route in self.routes:
            if route.requires_integer_dual() and not integral:
                row[route.name] = None
                continue
            value = route(self.polynomial, phi)
            row[route.name] = str(value) if isinstance(value, Indeterminate) else format_rational(value)
            if not isinstance(value, Indeterminate):
                values[route.name] = value
        self._check_agreement(phi, values)
        alpha, beta = active_pair(self.polynomial, phi)
        row["active_alpha"] = " ".join(str(entry) for entry in alpha)
        row["active_beta"] = " ".join(str(entry) for entry in beta)
        row["in_ball"] = True if self.ball is None else self.ball.contains(phi)
        self.history.append(row)
        return row

    def _check_agreement(self, phi, values: typing.Dict[str, Fraction]):
        exact = {name: value for name, value in values.items() if name != "specialize"}
        if len(set(exact.values())) > 1:
            raise ConsistencyError(f"norm routes disagree at {phi}: {exact}")
        # Cancellation only ever lowers the degree span
        if "specialize" in values and exact:
            reference = next(iter(exact.values()))
            if values["specialize"] > reference:
                raise ConsistencyError(
                    f"specialized degree {values['specialize']} exceeds the norm {reference} at {phi}"
                )

    def run(self, phis: typing.Iterable[typing.Sequence], verbose: bool = False):
        """
        Evaluates every dual vector in `phis`, with a progress bar when
        `verbose`.
        """
        phis = list(phis)
        if verbose:
            for phi in tqdm.tqdm(phis):
                self.evaluate(phi)
        else:
            for phi in phis:
                self.evaluate(phi)
        return self.history

    def run_grid(self, step, radius, verbose: bool = False):
        """
        Sweeps a grid in essential coordinates, lifting every grid point to a
        dual vector on the full exponent space.
        """
        points = grid(step, radius, self.reduction.essential_dim)
        return self.run(
            (lattice.lift_functional(self.reduction, point) for point in points),
            verbose=verbose
        )

    def save_history(self, file_path: str):
        self.get_history_as_dataframe().to_csv(file_path, index=False)

    def get_history_as_dataframe(self):
        return pd.DataFrame.from_dict(self.history)


def grid(step, radius, dim: int) -> typing.Iterator[typing.Tuple[Fraction, ...]]:
    """
    Points of step * Z^dim inside [-radius, radius]^dim in lexicographic
    order.
    """
    step, radius = Fraction(step), Fraction(radius)
    if step <= 0 or radius < 0:
        raise ValueError(f"grid needs a positive step and a nonnegative radius, got {step}, {radius}")
    count = int(radius // step)
    for index in itertools.product(range(-count, count + 1), repeat=dim):
        yield tuple(step * k for k in index)
