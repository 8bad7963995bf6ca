import re
import json
import typing
from fractions import Fraction

from polynorm.errors import ParseError

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def format_rational(value: typing.Union[int, Fraction]) -> str:
    """
    Exact text form of a rational: "p" for integers, "p/q" otherwise.
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    match = RATIONAL_PATTERN.match(text)
    if match is None:
        raise ParseError(f"'{text}' is not a rational of the form p or p/q")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ParseError(f"'{text}' has a zero denominator")
    return Fraction(int(numerator), int(denominator or 1))


def parse_dual_vector(text: str) -> typing.Tuple[Fraction, ...]:
    """
    Parses a comma separated list such as "1,-1/2,0".
    """
    if text.strip() == "":
        raise ParseError("empty dual vector")
    return tuple(parse_rational(entry) for entry in text.split(","))


def format_vector(vector: typing.Sequence) -> typing.List[str]:
    return [format_rational(entry) for entry in vector]


def dumps(document: typing.Dict) -> str:
    # Key order is fixed by construction
    return json.dumps(document, indent=2, ensure_ascii=False)
