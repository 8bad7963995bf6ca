import pytest

from polynorm.constants import MAX_DEGREE_SPAN
from polynorm.errors import ParseError
from polynorm.poly.laurent import LaurentPolynomial, multiply
from polynorm.poly.parser import NodeKind, TokenKind, infer_variables, parse, parse_tree, tokenize
from polynorm.tools import instances

from conftest import BORROMEAN_TEXT, BORROMEAN_VARS


def test_tokenize_kinds_and_offsets():
    tokens = tokenize("t1^-2 + 3")
    assert [token.kind for token in tokens] == [
        TokenKind.VARIABLE, TokenKind.CARET, TokenKind.MINUS, TokenKind.INTEGER,
        TokenKind.PLUS, TokenKind.INTEGER, TokenKind.END
    ]
    assert [token.position for token in tokens] == [0, 2, 3, 4, 6, 8, 9]


def test_tokenize_reports_byte_offsets():
    with pytest.raises(ParseError) as error:
        tokenize("t1 + é")
    assert error.value.position == 5
    with pytest.raises(ParseError) as error:
        tokenize("éé $")
    assert error.value.position == 0


def test_tokenize_accepts_bytes():
    assert [token.lexeme for token in tokenize(b"t1*t2")] == ["t1", "*", "t2", ""]


def test_infer_variables_is_sorted():
    assert infer_variables("z + a*b^2 + a") == ["a", "b", "z"]


def test_parse_borromean(borromean):
    assert parse(BORROMEAN_TEXT) == borromean
    assert borromean.num_vars == 3


def test_explicit_variables_fix_the_universe():
    f = parse("t2 - 1", ["t1", "t2", "t3"])
    assert f == LaurentPolynomial(3, {(0, 1, 0): 1, (0, 0, 0): -1})


def test_caret_binds_tighter_than_unary_minus():
    assert parse("-t1^2", ["t1"]) == LaurentPolynomial(1, {(2,): -1})
    assert parse("(-t1)^2", ["t1"]) == LaurentPolynomial(1, {(2,): 1})


def test_juxtaposition_multiplies():
    assert parse("2t1(t1 - 1)", ["t1"]) == parse("2*t1*(t1-1)", ["t1"])
    assert parse("t1 t2", ["t1", "t2"]) == LaurentPolynomial(2, {(1, 1): 1})


def test_negative_exponents_on_monomials():
    assert parse("t1^-1*t2", ["t1", "t2"]) == LaurentPolynomial(2, {(-1, 1): 1})
    assert parse("(-t1*t2)^-3", ["t1", "t2"]) == LaurentPolynomial(2, {(-3, -3): -1})
    assert parse("(t1^2)^3", ["t1"]) == LaurentPolynomial(1, {(6,): 1})


def test_zero_polynomial_parses():
    assert parse("t1 - t1", ["t1"]).is_zero()
    assert parse("0", ["t1"]).is_zero()


def test_power_zero_is_one():
    assert parse("(t1 - 1)^0", ["t1"]) == LaurentPolynomial.constant(1, 1)


@pytest.mark.parametrize("source, position", [
    ("", 0),
    ("t1 +", 4),
    ("(t1 - 1", 7),
    ("t1 - 1)", 6),
    ("t1 ^ x", 5),
    ("2 3", 2),
    ("t1 # t2", 3),
])
def test_syntax_errors_carry_offsets(source, position):
    with pytest.raises(ParseError) as error:
        parse(source)
    assert error.value.position == position


def test_inverting_non_unit_monomial_fails():
    with pytest.raises(ParseError, match="cannot invert"):
        parse("(2*t1)^-1", ["t1"])


def test_inverting_polynomial_fails():
    with pytest.raises(ParseError, match="only allowed on monomials"):
        parse("(t1 + 1)^-1", ["t1"])


def test_undeclared_variable():
    with pytest.raises(ParseError) as error:
        parse("t1 + t4", BORROMEAN_VARS)
    assert error.value.position == 5


def test_bad_variable_lists():
    with pytest.raises(ParseError, match="duplicate"):
        parse("t1", ["t1", "t1"])
    with pytest.raises(ParseError, match="not a valid variable name"):
        parse("t1", ["t1", "2x"])


def test_power_caps_judge_the_expanded_size():
    with pytest.raises(ParseError, match="degrees") as error:
        parse(f"(t1 + 1)^{MAX_DEGREE_SPAN + 1}", ["t1"])
    assert error.value.position == 8
    # Each level is small, the nested result is not
    with pytest.raises(ParseError, match="degrees"):
        parse("((t1 + 1)^32)^64", ["t1"])
    with pytest.raises(ParseError, match="terms"):
        parse("(t1 + t2 + t3 + t4 + 1)^100")
    with pytest.raises(ParseError, match="bits"):
        parse("7^3000000")
    assert parse("(t1 + 1)^64", ["t1"]).num_terms() == 65
    assert parse("2^1000") == LaurentPolynomial.constant(0, 2 ** 1000)
    assert parse(f"-t1^{100 * MAX_DEGREE_SPAN}", ["t1"]).num_terms() == 1
    assert parse("(t1*t2^-1)^-100000", ["t1", "t2"]).num_terms() == 1


def test_deep_nesting_becomes_parse_error():
    with pytest.raises(ParseError, match="nested too deeply"):
        parse("(" * 5000 + "t1" + ")" * 5000)


def test_parse_tree_shape():
    tree = parse_tree("t1 - 2")
    assert tree.kind == NodeKind.ADD
    left, right = tree.children
    assert left.kind == NodeKind.VARIABLE and left.value == "t1"
    assert right.kind == NodeKind.NEGATE
    assert right.children[0].value == 2


def test_to_text_round_trips_through_the_parser():
    f = parse("3*t1^-2*t2 - t2^3 + 5 - t1*t2^-1", ["t1", "t2"])
    assert parse(f.to_text(["t1", "t2"]), ["t1", "t2"]) == f


FUZZ_ALPHABET = b"t12x +-*^()07"


def test_arbitrary_bytes_parse_or_fail_at_an_offset():
    generator = instances.rng(2001)
    for index in range(2000):
        length = int(generator.integers(0, 40))
        if index % 2 == 0:
            data = bytes(int(byte) for byte in generator.integers(0, 256, size=length))
        else:
            picks = generator.integers(0, len(FUZZ_ALPHABET), size=length)
            data = bytes(FUZZ_ALPHABET[int(pick)] for pick in picks)
        try:
            f = parse(data)
        except ParseError as error:
            assert error.position is not None
            assert 0 <= error.position <= len(data)
        else:
            assert isinstance(f, LaurentPolynomial)


def test_printed_polynomials_parse_back():
    generator = instances.rng(2002)
    for _ in range(200):
        num_vars = int(generator.integers(1, 4))
        variables = [f"t{i + 1}" for i in range(num_vars)]
        f = instances.random_polynomial(generator, num_vars, max_terms=6, coefficient_bound=9)
        assert parse(f.to_text(variables), variables) == f


def test_product_of_subexpressions_is_the_product():
    generator = instances.rng(2003)
    variables = ["t1", "t2", "t3"]
    for _ in range(200):
        a = instances.random_polynomial(generator, 3, max_terms=5, exponent_bound=3).to_text(variables)
        b = instances.random_polynomial(generator, 3, max_terms=5, exponent_bound=3).to_text(variables)
        expected = multiply(parse(a, variables), parse(b, variables))
        assert parse(f"({a})*({b})", variables) == expected
        assert parse(f"({a})({b})", variables) == expected
