import typing
from fractions import Fraction

from polynorm.errors import (
    DimensionMismatchError, NonIntegerDualError, ZeroPolynomialError
)

ExponentVector = typing.Tuple[int, ...]


class LaurentPolynomial:
    """
    Multivariate Laurent polynomial with integer coefficients, stored as a
    sparse map from exponent vectors to nonzero coefficients. Terms are kept
    in lexicographic order of their exponents, so equal polynomials have
    identical term maps and identical text.

    Instances are immutable values.
    """
    __slots__ = ("_num_vars", "_terms", "_hash")

    def __init__(
            self,
            num_vars: int,
            terms: typing.Optional[typing.Mapping[typing.Sequence[int], int]] = None
        ):
        if num_vars < 0:
            raise DimensionMismatchError(f"num_vars must be nonnegative, got {num_vars}")
        canonical = {}
        for exponent, coefficient in (terms or {}).items():
            exponent = tuple(int(entry) for entry in exponent)
            if len(exponent) != num_vars:
                raise DimensionMismatchError(
                    f"exponent {exponent} has length {len(exponent)},"
                    f" expected {num_vars}"
                )
            if coefficient != int(coefficient):
                raise ValueError(f"coefficient {coefficient} is not an integer")
            canonical[exponent] = canonical.get(exponent, 0) + int(coefficient)
        self._num_vars = num_vars
        self._terms = {
            exponent: canonical[exponent]
            for exponent in sorted(canonical) if canonical[exponent] != 0
        }
        self._hash = None

    @classmethod
    def constant(cls, num_vars: int, value: int) -> "LaurentPolynomial":
        return cls(num_vars, {(0,) * num_vars: value})

    @classmethod
    def monomial(cls, exponent: typing.Sequence[int], coefficient: int = 1) -> "LaurentPolynomial":
        return cls(len(exponent), {tuple(exponent): coefficient})

    @classmethod
    def variable(cls, num_vars: int, index: int) -> "LaurentPolynomial":
        return cls.monomial(tuple(int(i == index) for i in range(num_vars)))

    @property
    def num_vars(self) -> int:
        return self._num_vars

    @property
    def terms(self) -> typing.Dict[ExponentVector, int]:
        return dict(self._terms)

    def items(self) -> typing.List[typing.Tuple[ExponentVector, int]]:
        return list(self._terms.items())

    def coefficient(self, exponent: typing.Sequence[int]) -> int:
        return self._terms.get(tuple(exponent), 0)

    def num_terms(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def shift(self, gamma: typing.Sequence[int]) -> "LaurentPolynomial":
        """
        Multiplies by the unit monomial t^gamma.
        """
        self._check_length(gamma)
        return LaurentPolynomial(self._num_vars, {
            tuple(a + g for a, g in zip(exponent, gamma)): coefficient
            for exponent, coefficient in self._terms.items()
        })

    def invert_monomial(self) -> "LaurentPolynomial":
        """
        Inverse of a monomial with coefficient +1 or -1.
        """
        if not self.is_monomial():
            raise ValueError("only monomials are invertible in Z[t^{+-1}]")
        (exponent, coefficient), = self._terms.items()
        if coefficient not in (1, -1):
            raise ValueError(
                f"monomial with coefficient {coefficient} is not invertible over the integers"
            )
        return LaurentPolynomial(self._num_vars, {
            tuple(-entry for entry in exponent): coefficient
        })

    def to_text(self, variables: typing.Sequence[str]) -> str:
        """
        Canonical text in the parser's grammar, e.g. "-1 + t2 + t1 - t1*t2".
        """
        if len(variables) != self._num_vars:
            raise DimensionMismatchError(
                f"{len(variables)} variable names given for {self._num_vars} variables"
            )
        if self.is_zero():
            return "0"
        pieces = []
        for exponent, coefficient in self._terms.items():
            factors = []
            for name, power in zip(variables, exponent):
                if power == 1:
                    factors.append(name)
                elif power != 0:
                    factors.append(f"{name}^{power}")
            magnitude = abs(coefficient)
            if magnitude != 1 or not factors:
                factors.insert(0, str(magnitude))
            term = "*".join(factors)
            if not pieces:
                pieces.append(f"-{term}" if coefficient < 0 else term)
            else:
                pieces.append(f"- {term}" if coefficient < 0 else f"+ {term}")
        return " ".join(pieces)

    def _check_length(self, vector: typing.Sequence):
        if len(vector) != self._num_vars:
            raise DimensionMismatchError(
                f"vector of length {len(vector)} used with a polynomial in"
                f" {self._num_vars} variables"
            )

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.num_vars != self._num_vars:
                raise DimensionMismatchError(
                    f"polynomials in {self._num_vars} and {other.num_vars} variables"
                )
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(self._num_vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return LaurentPolynomial(self._num_vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self._num_vars, {
            exponent: -coefficient for exponent, coefficient in self._terms.items()
        })

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            return power(self.invert_monomial(), -exponent)
        return power(self, exponent)

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self._num_vars == other._num_vars and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._num_vars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        names = [f"t{i + 1}" for i in range(self._num_vars)]
        return f"LaurentPolynomial({self.to_text(names)!r}, num_vars={self._num_vars})"


class UnivariatePolynomial:
    """
    Single-variable Laurent polynomial f^phi(t); may be zero.
    """
    __slots__ = ("_terms",)

    def __init__(self, terms: typing.Optional[typing.Mapping[int, int]] = None):
        merged = {}
        for exponent, coefficient in (terms or {}).items():
            merged[int(exponent)] = merged.get(int(exponent), 0) + int(coefficient)
        self._terms = {
            exponent: merged[exponent] for exponent in sorted(merged) if merged[exponent] != 0
        }

    @property
    def terms(self) -> typing.Dict[int, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return len(self._terms) == 0

    def __mul__(self, other: "UnivariatePolynomial") -> "UnivariatePolynomial":
        product = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                product[a + b] = product.get(a + b, 0) + ca * cb
        return UnivariatePolynomial(product)

    def __eq__(self, other):
        if not isinstance(other, UnivariatePolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(tuple(self._terms.items()))

    def to_text(self, variable: str = "t") -> str:
        if self.is_zero():
            return "0"
        names = [variable]
        return LaurentPolynomial(1, {(e,): c for e, c in self._terms.items()}).to_text(names)

    def __repr__(self):
        return f"UnivariatePolynomial({self.to_text()!r})"


def multiply(a: LaurentPolynomial, b: LaurentPolynomial) -> LaurentPolynomial:
    if a.num_vars != b.num_vars:
        raise DimensionMismatchError(
            f"cannot multiply polynomials in {a.num_vars} and {b.num_vars} variables"
        )
    product = {}
    for alpha, ca in a.items():
        for beta, cb in b.items():
            exponent = tuple(x + y for x, y in zip(alpha, beta))
            product[exponent] = product.get(exponent, 0) + ca * cb
    return LaurentPolynomial(a.num_vars, product)


def power(f: LaurentPolynomial, k: int) -> LaurentPolynomial:
    if k < 0:
        raise ValueError(f"power needs a nonnegative exponent, got {k}")
    result = LaurentPolynomial.constant(f.num_vars, 1)
    for _ in range(k):
        result = multiply(result, f)
    return result


def support(f: LaurentPolynomial) -> typing.List[ExponentVector]:
    return [exponent for exponent, _ in f.items()]


def symmetry_sign(f: LaurentPolynomial) -> typing.Optional[int]:
    """
    The unit sign eps with c_{2c - alpha} == eps * c_alpha for every alpha,
    where c is the symmetry center, or None if f is not symmetric.
    """
    twice_center = _twice_barycenter(f)
    if twice_center is None:
        return None
    return _reflection_sign(f, twice_center)


def symmetry_center(f: LaurentPolynomial) -> typing.Optional[typing.Tuple[Fraction, ...]]:
    """
    Center c in (Z/2)^n such that alpha -> 2c - alpha permutes supp(f) and
    matches coefficients up to one global sign, or None.

    The reflection fixes the barycenter of the support, so the barycenter is
    the only candidate.
    """
    twice_center = _twice_barycenter(f)
    if twice_center is None or _reflection_sign(f, twice_center) is None:
        return None
    return tuple(Fraction(entry, 2) for entry in twice_center)


def _twice_barycenter(f: LaurentPolynomial) -> typing.Optional[ExponentVector]:
    if f.is_zero():
        raise ZeroPolynomialError("symmetry_center")
    count = f.num_terms()
    totals = [2 * sum(column) for column in zip(*support(f))] or [0] * f.num_vars
    if any(total % count for total in totals):
        return None
    return tuple(total // count for total in totals)


def _reflection_sign(f: LaurentPolynomial, twice_center: ExponentVector) -> typing.Optional[int]:
    sign = None
    for alpha, coefficient in f.items():
        reflected = f.coefficient(tuple(c - a for c, a in zip(twice_center, alpha)))
        if reflected == coefficient:
            current = 1
        elif reflected == -coefficient:
            current = -1
        else:
            return None
        if sign is None:
            sign = current
        elif sign != current:
            return None
    return sign


def specialize(f: LaurentPolynomial, phi: typing.Sequence) -> UnivariatePolynomial:
    """
    f^phi(t) = f(t^phi_1, ..., t^phi_n) for an integer dual vector phi.
    """
    if len(phi) != f.num_vars:
        raise DimensionMismatchError(
            f"dual vector of length {len(phi)} for a polynomial in {f.num_vars} variables"
        )
    integral = []
    for entry in phi:
        entry = Fraction(entry)
        if entry.denominator != 1:
            raise NonIntegerDualError(f"specialization needs integer entries, got {entry}")
        integral.append(entry.numerator)
    specialized = {}
    for alpha, coefficient in f.items():
        exponent = sum(p * a for p, a in zip(integral, alpha))
        specialized[exponent] = specialized.get(exponent, 0) + coefficient
    return UnivariatePolynomial(specialized)


def degree_span(g: UnivariatePolynomial) -> int:
    if g.is_zero():
        raise ZeroPolynomialError("degree_span")
    exponents = list(g.terms)
    return max(exponents) - min(exponents)


def substitute_monomials(
        f: LaurentPolynomial,
        images: typing.Sequence[typing.Sequence[int]]
    ) -> LaurentPolynomial:
    """
    Applies the monomial map t_i -> s^{images[i]}: the exponent alpha goes to
    sum_i alpha_i * images[i].
    """
    if len(images) != f.num_vars:
        raise DimensionMismatchError(
            f"{len(images)} monomial images for {f.num_vars} variables"
        )
    target_vars = len(images[0]) if images else 0
    substituted = {}
    for alpha, coefficient in f.items():
        exponent = tuple(
            sum(a * image[k] for a, image in zip(alpha, images))
            for k in range(target_vars)
        )
        substituted[exponent] = substituted.get(exponent, 0) + coefficient
    return LaurentPolynomial(target_vars, substituted)
