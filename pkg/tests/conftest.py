from fractions import Fraction

import pytest

from polynorm.norm import Factorization
from polynorm.poly.parser import parse

BORROMEAN_TEXT = "(t1-1)*(t2-1)*(t3-1)"
GREAT_CIRCLE_TEXT = "(t1*t2*t3*t4*t5*t6-1)^2*(t1^-1*t2^-1*t3^-1*t4*t5*t6-1)^2"
BORROMEAN_VARS = ["t1", "t2", "t3"]
GREAT_CIRCLE_VARS = ["t1", "t2", "t3", "t4", "t5", "t6"]


def rationals(*entries):
    return tuple(Fraction(entry) for entry in entries)


@pytest.fixture
def borromean():
    return parse(BORROMEAN_TEXT, BORROMEAN_VARS)


@pytest.fixture
def great_circle():
    return parse(GREAT_CIRCLE_TEXT, GREAT_CIRCLE_VARS)


@pytest.fixture
def borromean_factorization():
    return Factorization.of(
        [(parse(f"t{i}-1", BORROMEAN_VARS), 1) for i in (1, 2, 3)]
    )


@pytest.fixture
def great_circle_factorization():
    return Factorization.of([
        (parse("t1*t2*t3*t4*t5*t6-1", GREAT_CIRCLE_VARS), 2),
        (parse("t1^-1*t2^-1*t3^-1*t4*t5*t6-1", GREAT_CIRCLE_VARS), 2),
    ])
