"""
Command line front end.

    polynorm norm "(t1-1)*(t2-1)*(t3-1)" --phi 1,1,1
    polynorm ball "(t1*t2*t3*t4*t5*t6-1)^2*(t1^-1*t2^-1*t3^-1*t4*t5*t6-1)^2"
    polynorm decompose "t1-1" "t2-1" "t3-1" --phi 1,1,1

Every command prints a document with the command, the canonical input, the
variable list and the result, as JSON (`--format json`) or as `key: value`
lines. Rationals are always printed exactly as "p" or "p/q".
"""
import sys
import typing
import logging
import argparse

from polynorm import lattice
from polynorm.constants import (
    EXIT_GENERIC, EXIT_INTERNAL, EXIT_OK, EXIT_USAGE, EXIT_WHOLE_SPACE,
    EXIT_ZERO_POLYNOMIAL, FORMAT_VERSION, MAX_DIM
)
from polynorm.errors import (
    ConsistencyError, DimensionCapError, DimensionMismatchError, FactorizationError, NonIntegerDualError,
    ParseError, PolynormError, WholeDualSpaceError, ZeroPolynomialError
)
from polynorm.norm import (
    NORM_ROUTES, Factorization, Indeterminate, active_pair, factor_norms, format_norm_formula,
    norm_decomposed, norm_def, reduced_ball, segment_forms, symmetric_ball
)
from polynorm.poly.laurent import LaurentPolynomial, degree_span, specialize, support
from polynorm.poly.parser import infer_variables, parse
from polynorm.serialization import dumps, format_rational, format_vector, parse_dual_vector
from polynorm.sweep import NormSweep

logger = logging.getLogger(__name__)

EXIT_CODES = (
    (ParseError, EXIT_USAGE),
    (DimensionMismatchError, EXIT_USAGE),
    (NonIntegerDualError, EXIT_USAGE),
    (DimensionCapError, EXIT_USAGE),
    (ZeroPolynomialError, EXIT_ZERO_POLYNOMIAL),
    (WholeDualSpaceError, EXIT_WHOLE_SPACE),
    (ConsistencyError, EXIT_INTERNAL),
)


def exit_code_for(error: PolynormError) -> int:
    for error_type, code in EXIT_CODES:
        if isinstance(error, error_type):
            return code
    return EXIT_GENERIC


def read_polynomial_argument(text: str) -> str:
    """
    "@path" stands for the contents of the file at path.
    """
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as file:
            return file.read().strip()
    return text


def _variables(args, sources: typing.Sequence[str]) -> typing.List[str]:
    if args.vars:
        return [name.strip() for name in args.vars.split(",")]
    names = set()
    for source in sources:
        names.update(infer_variables(source))
    return sorted(names)


def _load(args) -> typing.Tuple[LaurentPolynomial, typing.List[str]]:
    source = read_polynomial_argument(args.poly)
    variables = _variables(args, [source])
    return parse(source, variables), variables


def _phi(args, num_vars: int):
    phi = parse_dual_vector(args.phi)
    if len(phi) != num_vars:
        raise DimensionMismatchError(
            f"--phi has {len(phi)} entries but the polynomial has {num_vars} variables"
        )
    return phi


def _document(command: str, text: str, variables, result: typing.Dict) -> typing.Dict:
    return {
        "format": FORMAT_VERSION,
        "command": command,
        "input": text,
        "variables": list(variables),
        "result": result,
    }


def cmd_parse(args) -> typing.Dict:
    f, variables = _load(args)
    return _document("parse", f.to_text(variables), variables, {
        "canonical": f.to_text(variables),
        "num_terms": f.num_terms(),
        "support": [list(alpha) for alpha in support(f)],
    })


def cmd_norm(args) -> typing.Dict:
    f, variables = _load(args)
    phi = _phi(args, f.num_vars)
    value = NORM_ROUTES[args.method](f, phi)
    alpha, beta = active_pair(f, phi)
    return _document("norm", f.to_text(variables), variables, {
        "method": args.method,
        "phi": format_vector(phi),
        "norm": str(value) if isinstance(value, Indeterminate) else format_rational(value),
        "active_pair": [list(alpha), list(beta)],
    })


def cmd_ball(args) -> typing.Dict:
    f, variables = _load(args)
    if args.symmetric_fastpath:
        ball = symmetric_ball(f, max_dim=args.max_dim, cross_check=True)
    else:
        ball = reduced_ball(f, max_dim=args.max_dim)
    result = {"route": "symmetric" if args.symmetric_fastpath else "difference-body"}
    result.update(ball.to_dict())
    return _document("ball", f.to_text(variables), variables, result)


def cmd_reduce(args) -> typing.Dict:
    f, variables = _load(args)
    reduction = lattice.reduce(f)
    reduced = lattice.reduced_polynomial(f, reduction)
    essential = [f"s{i + 1}" for i in range(reduction.essential_dim)]
    result = reduction.to_dict()
    result["degenerate_directions"] = [
        list(vector) for vector in lattice.degenerate_directions(reduction)
    ]
    result["essential_variables"] = essential
    result["reduced_polynomial"] = reduced.to_text(essential)
    return _document("reduce", f.to_text(variables), variables, result)


def split_multiplicity(argument: str) -> typing.Tuple[str, int]:
    """
    "(poly)^k" is the factor poly with multiplicity k when the head is one
    balanced parenthesized group; anything else has multiplicity 1.
    """
    text = argument.strip()
    head, caret, tail = text.rpartition("^")
    if not caret or not tail.strip().isdigit():
        return text, 1
    head = head.strip()
    if not (head.startswith("(") and head.endswith(")")):
        return text, 1
    depth = 0
    for index, char in enumerate(head):
        depth += {"(": 1, ")": -1}.get(char, 0)
        if depth == 0 and index != len(head) - 1:
            return text, 1
    return head, int(tail)


def cmd_decompose(args) -> typing.Dict:
    pieces = [split_multiplicity(read_polynomial_argument(text)) for text in args.factors]
    variables = _variables(args, [source for source, _ in pieces])
    factorization = Factorization.of(
        (parse(source, variables), multiplicity) for source, multiplicity in pieces
    )
    phi = _phi(args, len(variables))
    product = factorization.product()
    norms = factor_norms(factorization, phi)
    total = norm_decomposed(factorization, phi, verify=False)
    direct = norm_def(product, phi)
    if total != direct:
        raise ConsistencyError(
            f"decomposition formula gave {format_rational(total)} but the product"
            f" has norm {format_rational(direct)}"
        )
    return _document("decompose", product.to_text(variables), variables, {
        "phi": format_vector(phi),
        "factors": [
            {
                "factor": factor.to_text(variables),
                "multiplicity": multiplicity,
                "norm": format_rational(value),
            }
            for (factor, multiplicity), value in zip(factorization.factors, norms)
        ],
        "total": format_rational(total),
        "direct": format_rational(direct),
        "formula": _closed_form(factorization),
    })


def _closed_form(factorization: Factorization) -> typing.Optional[str]:
    """
    sum_i n_i |l_i . p| in the essential coordinates p of the product, when
    every factor has a segment as Newton polytope.
    """
    try:
        return format_norm_formula(segment_forms(factorization))
    except FactorizationError:
        return None


def cmd_specialize(args) -> typing.Dict:
    f, variables = _load(args)
    phi = _phi(args, f.num_vars)
    specialized = specialize(f, phi)
    span = str(Indeterminate.INDETERMINATE) if specialized.is_zero() else degree_span(specialized)
    return _document("specialize", f.to_text(variables), variables, {
        "phi": format_vector(phi),
        "specialization": {str(exponent): coefficient for exponent, coefficient in specialized.terms.items()},
        "text": specialized.to_text("t"),
        "degree_span": span,
    })


def cmd_sweep(args) -> typing.Dict:
    f, variables = _load(args)
    sweep = NormSweep(f, routes=args.method or ("def", "width", "specialize"), variables=variables)
    if args.grid:
        step, radius = parse_dual_vector(args.grid)
        sweep.run_grid(step, radius, verbose=args.verbose)
    else:
        with open(args.phis_file, encoding="utf-8") as file:
            phis = [_phi_line(line, f.num_vars) for line in file if line.strip()]
        sweep.run(phis, verbose=args.verbose)
    return _document("sweep", f.to_text(variables), variables, {
        "rows": sweep.history,
        "table": sweep.get_history_as_dataframe(),
    })


def _phi_line(line: str, num_vars: int):
    phi = parse_dual_vector(line.strip())
    if len(phi) != num_vars:
        raise DimensionMismatchError(
            f"dual vector '{line.strip()}' has {len(phi)} entries, expected {num_vars}"
        )
    return phi


COMMANDS = {
    "parse": cmd_parse,
    "norm": cmd_norm,
    "ball": cmd_ball,
    "reduce": cmd_reduce,
    "decompose": cmd_decompose,
    "specialize": cmd_specialize,
    "sweep": cmd_sweep,
}


def _parse_args(argv: typing.Optional[typing.List[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--vars", help="comma separated variable names, in order")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-dim", dest="max_dim", type=int, default=MAX_DIM)
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="polynorm",
        description="Exact Laurent norms, norm balls and essential-variable reductions."
    )
    commands = parser.add_subparsers(dest="command", required=True)

    for name in ("parse", "ball", "reduce"):
        command = commands.add_parser(name, parents=[common])
        command.add_argument("poly", help="polynomial text, or @file")
        if name == "ball":
            command.add_argument("--symmetric-fastpath", dest="symmetric_fastpath", action="store_true")

    command = commands.add_parser("norm", parents=[common])
    command.add_argument("poly", help="polynomial text, or @file")
    command.add_argument("--phi", required=True, help="dual vector, e.g. 1,-1/2,0")
    command.add_argument("--method", choices=tuple(NORM_ROUTES), default="def")

    command = commands.add_parser("specialize", parents=[common])
    command.add_argument("poly", help="polynomial text, or @file")
    command.add_argument("--phi", required=True, help="integer dual vector")

    command = commands.add_parser("decompose", parents=[common])
    command.add_argument("factors", nargs="+", help='factors as "poly" or "(poly)^k"')
    command.add_argument("--phi", required=True)

    command = commands.add_parser("sweep", parents=[common])
    command.add_argument("poly", help="polynomial text, or @file")
    source = command.add_mutually_exclusive_group(required=True)
    source.add_argument("--phis-file", dest="phis_file", help="one dual vector per line")
    source.add_argument("--grid", help="STEP,RADIUS of a grid in essential coordinates")
    command.add_argument("--method", action="append", choices=tuple(NORM_ROUTES))

    return parser.parse_args(argv)


def render_text(document: typing.Dict) -> str:
    lines = [f"{key}: {document[key]}" for key in ("format", "command", "input")]
    lines.append(f"variables: {','.join(document['variables'])}")
    result = document["result"]
    if "table" in result:
        lines.append(result["table"].to_string(index=False))
        return "\n".join(lines)
    for key, value in result.items():
        if isinstance(value, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {inner}: {_render_value(entry)}" for inner, entry in value.items())
        else:
            lines.append(f"{key}: {_render_value(value)}")
    return "\n".join(lines)


def _render_value(value) -> str:
    if isinstance(value, list):
        return " ".join(_render_item(item) for item in value)
    if value is None:
        return "null"
    return str(value)


def _render_item(item) -> str:
    if isinstance(item, list):
        return f"({','.join(str(entry) for entry in item)})"
    if isinstance(item, dict):
        return "[" + ", ".join(f"{key}={_render_value(entry)}" for key, entry in item.items()) + "]"
    return str(item)


def main(argv: typing.Optional[typing.List[str]] = None) -> int:
    args = _parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        document = COMMANDS[args.command](args)
    except PolynormError as error:
        print(f"polynorm: error: {error}", file=sys.stderr)
        return exit_code_for(error)
    except (OSError, UnicodeDecodeError) as error:
        # Unreadable @file or --phis-file input
        print(f"polynorm: error: {error}", file=sys.stderr)
        return EXIT_USAGE

    if args.format == "json":
        result = document["result"]
        if "table" in result:
            result = dict(result)
            del result["table"]
            document = dict(document, result=result)
        print(dumps(document))
    else:
        print(render_text(document))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
