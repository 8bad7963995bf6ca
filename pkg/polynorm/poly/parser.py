"""
Recursive descent parser for Laurent polynomial expressions.

Grammar:

    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary | factor)*     juxtaposition only before '(' or a variable
    unary  := ('+' | '-') unary | factor
    factor := atom ('^' signed_int)?
    atom   := integer | variable | '(' expr ')'

'^' binds tighter than unary minus, so "-t1^2" is -(t1^2). Negative
exponents are only accepted on bases that evaluate to a monomial with
coefficient +1 or -1.
"""
import re
import enum
import math
import typing
import dataclasses

from polynorm.constants import MAX_COEFFICIENT_BITS, MAX_DEGREE_SPAN, MAX_EXPANDED_TERMS
from polynorm.errors import ParseError
from polynorm.poly.laurent import LaurentPolynomial, power

IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
INTEGER = re.compile(r"[0-9]+")


class TokenKind(enum.Enum):
    INTEGER = "integer"
    VARIABLE = "variable"
    PLUS = "plus"
    MINUS = "minus"
    STAR = "star"
    CARET = "caret"
    LPAREN = "lparen"
    RPAREN = "rparen"
    END = "end"


PUNCTUATION = {
    "+": TokenKind.PLUS,
    "-": TokenKind.MINUS,
    "*": TokenKind.STAR,
    "^": TokenKind.CARET,
    "(": TokenKind.LPAREN,
    ")": TokenKind.RPAREN,
}


@dataclasses.dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int


class NodeKind(enum.Enum):
    CONSTANT = "constant"
    VARIABLE = "variable"
    NEGATE = "negate"
    ADD = "add"
    MULTIPLY = "multiply"
    POWER = "power"


@dataclasses.dataclass(frozen=True)
class ParseTree:
    kind: NodeKind
    value: typing.Union[int, str, None] = None
    children: typing.Tuple["ParseTree", ...] = ()
    position: int = 0


def tokenize(source: typing.Union[str, bytes]) -> typing.List[Token]:
    """
    Maximal-munch tokenizer. Positions are byte offsets into the UTF-8
    encoding of the source.
    """
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as error:
            raise ParseError("source is not valid UTF-8", error.start) from None
    tokens = []
    index = 0
    offset = 0
    while index < len(source):
        char = source[index]
        if char.isspace():
            index += 1
            offset += len(char.encode("utf-8"))
            continue
        if char in PUNCTUATION:
            tokens.append(Token(PUNCTUATION[char], char, offset))
            index += 1
            offset += 1
            continue
        match = INTEGER.match(source, index) or IDENTIFIER.match(source, index)
        if match is None:
            raise ParseError(f"unexpected character {char!r}", offset)
        lexeme = match.group(0)
        kind = TokenKind.INTEGER if lexeme[0].isdigit() else TokenKind.VARIABLE
        tokens.append(Token(kind, lexeme, offset))
        index = match.end()
        # Both patterns are pure ASCII, so characters and bytes coincide
        offset += len(lexeme)
    tokens.append(Token(TokenKind.END, "", offset))
    return tokens


def infer_variables(source: typing.Union[str, bytes]) -> typing.List[str]:
    """
    Sorted set of the identifiers appearing in the source.
    """
    return sorted({
        token.lexeme for token in tokenize(source) if token.kind == TokenKind.VARIABLE
    })


class _Parser:
    def __init__(self, tokens: typing.List[Token]):
        self.tokens = tokens
        self.index = 0

    @property
    def current(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        if token.kind != TokenKind.END:
            self.index += 1
        return token

    def expect(self, kind: TokenKind) -> Token:
        if self.current.kind != kind:
            raise ParseError(
                f"expected {kind.value}, found {self._describe(self.current)}",
                self.current.position
            )
        return self.advance()

    @staticmethod
    def _describe(token: Token) -> str:
        if token.kind == TokenKind.END:
            return "end of input"
        return f"{token.kind.value} {token.lexeme!r}"

    def parse(self) -> ParseTree:
        if self.current.kind == TokenKind.END:
            raise ParseError("empty input", self.current.position)
        tree = self.expr()
        if self.current.kind != TokenKind.END:
            raise ParseError(
                f"unexpected {self._describe(self.current)}", self.current.position
            )
        return tree

    def expr(self) -> ParseTree:
        tree = self.term()
        while self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            operator = self.advance()
            right = self.term()
            if operator.kind == TokenKind.MINUS:
                right = ParseTree(NodeKind.NEGATE, children=(right,), position=operator.position)
            tree = ParseTree(NodeKind.ADD, children=(tree, right), position=operator.position)
        return tree

    def term(self) -> ParseTree:
        tree = self.unary()
        while True:
            if self.current.kind == TokenKind.STAR:
                operator = self.advance()
                right = self.unary()
            elif self.current.kind in (TokenKind.LPAREN, TokenKind.VARIABLE):
                operator = self.current
                right = self.factor()
            else:
                return tree
            tree = ParseTree(NodeKind.MULTIPLY, children=(tree, right), position=operator.position)

    def unary(self) -> ParseTree:
        if self.current.kind in (TokenKind.PLUS, TokenKind.MINUS):
            operator = self.advance()
            operand = self.unary()
            if operator.kind == TokenKind.PLUS:
                return operand
            return ParseTree(NodeKind.NEGATE, children=(operand,), position=operator.position)
        return self.factor()

    def factor(self) -> ParseTree:
        base = self.atom()
        if self.current.kind != TokenKind.CARET:
            return base
        caret = self.advance()
        negative = False
        if self.current.kind == TokenKind.MINUS:
            self.advance()
            negative = True
        exponent = int(self.expect(TokenKind.INTEGER).lexeme)
        return ParseTree(
            NodeKind.POWER,
            value=-exponent if negative else exponent,
            children=(base,),
            position=caret.position
        )

    def atom(self) -> ParseTree:
        token = self.current
        if token.kind == TokenKind.INTEGER:
            self.advance()
            return ParseTree(NodeKind.CONSTANT, value=int(token.lexeme), position=token.position)
        if token.kind == TokenKind.VARIABLE:
            self.advance()
            return ParseTree(NodeKind.VARIABLE, value=token.lexeme, position=token.position)
        if token.kind == TokenKind.LPAREN:
            self.advance()
            tree = self.expr()
            self.expect(TokenKind.RPAREN)
            return tree
        raise ParseError(f"unexpected {self._describe(token)}", token.position)


def parse_tree(source: typing.Union[str, bytes]) -> ParseTree:
    try:
        return _Parser(tokenize(source)).parse()
    except RecursionError:
        raise ParseError("expression is nested too deeply") from None


def _check_power_size(base: LaurentPolynomial, exponent: int, position: int):
    """
    Refuses a power whose expansion would outgrow the caps, judged from the
    base before anything is expanded. Powers of +-t^alpha cost nothing and
    pass.
    """
    magnitude = sum(abs(coefficient) for _, coefficient in base.items())
    if magnitude > 1 and exponent * magnitude.bit_length() > MAX_COEFFICIENT_BITS:
        raise ParseError(
            f"power {exponent} has coefficients beyond {MAX_COEFFICIENT_BITS} bits", position
        )
    if base.num_terms() < 2:
        return
    spans = [
        max(alpha[i] for alpha, _ in base.items()) - min(alpha[i] for alpha, _ in base.items())
        for i in range(base.num_vars)
    ]
    if exponent * max(spans) > MAX_DEGREE_SPAN:
        raise ParseError(
            f"power {exponent} spans {exponent * max(spans)} degrees in one variable,"
            f" the limit is {MAX_DEGREE_SPAN}",
            position
        )
    # Monomials of degree `exponent` in the base terms, and the lattice box
    # of the result, both bound its number of terms
    bound = min(
        math.comb(base.num_terms() + exponent - 1, exponent),
        math.prod(exponent * span + 1 for span in spans)
    )
    if bound > MAX_EXPANDED_TERMS:
        raise ParseError(
            f"power {exponent} may expand to {bound} terms, the limit is {MAX_EXPANDED_TERMS}",
            position
        )


def evaluate(tree: ParseTree, variables: typing.Sequence[str]) -> LaurentPolynomial:
    """
    Evaluates a parse tree into a canonical polynomial over the given
    variable universe.
    """
    index = {name: i for i, name in enumerate(variables)}
    num_vars = len(variables)

    def visit(node: ParseTree) -> LaurentPolynomial:
        if node.kind == NodeKind.CONSTANT:
            return LaurentPolynomial.constant(num_vars, node.value)
        if node.kind == NodeKind.VARIABLE:
            if node.value not in index:
                raise ParseError(f"undeclared variable '{node.value}'", node.position)
            return LaurentPolynomial.variable(num_vars, index[node.value])
        if node.kind == NodeKind.NEGATE:
            return -visit(node.children[0])
        if node.kind == NodeKind.ADD:
            return visit(node.children[0]) + visit(node.children[1])
        if node.kind == NodeKind.MULTIPLY:
            return visit(node.children[0]) * visit(node.children[1])
        base = visit(node.children[0])
        exponent = node.value
        if base.is_monomial():
            (alpha, coefficient), = base.items()
            if exponent < 0 and coefficient not in (1, -1):
                raise ParseError(
                    f"cannot invert a monomial with coefficient {coefficient} over the integers",
                    node.position
                )
            _check_power_size(base, abs(exponent), node.position)
            return LaurentPolynomial(num_vars, {
                tuple(a * exponent for a in alpha): coefficient ** abs(exponent)
            })
        if exponent < 0:
            raise ParseError(
                "negative exponents are only allowed on monomials", node.position
            )
        _check_power_size(base, exponent, node.position)
        return power(base, exponent)

    try:
        return visit(tree)
    except RecursionError:
        raise ParseError("expression is nested too deeply") from None


def parse(
        source: typing.Union[str, bytes],
        variables: typing.Optional[typing.Sequence[str]] = None
    ) -> LaurentPolynomial:
    """
    Parses polynomial text. Without `variables`, the universe is the sorted
    set of identifiers in the source.
    """
    tree = parse_tree(source)
    if variables is None:
        variables = infer_variables(source)
    if len(set(variables)) != len(variables):
        raise ParseError(f"duplicate variable names in {list(variables)}")
    for name in variables:
        if not IDENTIFIER.fullmatch(name):
            raise ParseError(f"'{name}' is not a valid variable name")
    return evaluate(tree, variables)
