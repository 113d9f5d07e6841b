"""Command line front end: check proofs, export LaTeX, prove sequents, serve HTTP.

Exit status: 0 = conclusive (Valid or Countermodel), 1 = Incomplete/Invalid or
a failed --expect/--sequent grading requirement, 2 = parse error, 3 = usage
or I/O error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .checker import check, matches_sequent, parse_sequent
from .formula import ParseError
from .latex import build_tree, to_qtree
from .prover import Closed, NotPropositionalError, prove
from .render import (
    parse_error_to_dict,
    render_human,
    render_parse_error,
    report_to_dict,
    to_json,
    use_color,
    verdict_name,
)
from .script import parse_proof, serialize_proof

EXIT_OK = 0
EXIT_INCONCLUSIVE = 1
EXIT_PARSE_ERROR = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2; usage errors are 3 here
        raise _UsageError(message)


def _read_proof(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def cmd_check(args) -> int:
    try:
        text = _read_proof(args.file)
    except OSError as err:
        print(f"anita: cannot read {args.file}: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        script = parse_proof(text)
    except ParseError as err:
        if args.json:
            print(to_json(parse_error_to_dict(err)))
        else:
            print(render_parse_error(err, use_color()))
        return EXIT_PARSE_ERROR

    report = check(script)
    latex = None
    if args.latex:
        latex = to_qtree(build_tree(script, report))
    if args.json:
        print(to_json(report_to_dict(report, latex=latex)))
    else:
        print(render_human(report, use_color()))
        if latex is not None:
            print(latex)

    status = EXIT_OK if verdict_name(report) in ("valid", "countermodel") else EXIT_INCONCLUSIVE
    if args.expect is not None and verdict_name(report) != args.expect:
        if not args.json:
            print(f"Expected verdict {args.expect}, got {verdict_name(report)}.")
        status = max(status, EXIT_INCONCLUSIVE)
    if args.sequent is not None:
        try:
            expected = parse_sequent(args.sequent)
        except ParseError as err:
            print(f"anita: bad --sequent: {err}", file=sys.stderr)
            return EXIT_USAGE
        if not matches_sequent(script, expected):
            if not args.json:
                print(f"The proof does not state the expected sequent {expected}.")
            status = max(status, EXIT_INCONCLUSIVE)
    return status


def cmd_latex(args) -> int:
    try:
        text = _read_proof(args.file)
    except OSError as err:
        print(f"anita: cannot read {args.file}: {err}", file=sys.stderr)
        return EXIT_USAGE
    try:
        script = parse_proof(text)
    except ParseError as err:
        print(render_parse_error(err), file=sys.stderr)
        return EXIT_PARSE_ERROR
    report = check(script)
    print(to_qtree(build_tree(script, report)))
    return EXIT_OK


def cmd_prove(args) -> int:
    try:
        sequent = parse_sequent(args.sequent)
    except ParseError as err:
        print(render_parse_error(err), file=sys.stderr)
        return EXIT_PARSE_ERROR
    try:
        result = prove(sequent)
    except NotPropositionalError as err:
        print(f"anita: {err}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(result, Closed):
        print(serialize_proof(result.script))
    else:
        print(f"Countermodel: {result.model}")
    return EXIT_OK


def cmd_serve(args) -> int:
    import socket

    import uvicorn

    from .service import create_app

    probe = socket.socket(socket.AF_INET, socket.SOCK_STREAM)
    try:
        probe.bind((args.bind, args.port))
    except OSError as err:
        print(f"anita: cannot bind {args.bind}:{args.port}: {err}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        probe.close()
    uvicorn.run(create_app(), host=args.bind, port=args.port, log_level="warning")
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="anita", description="Proof assistant for signed analytic tableaux.")
    parser.add_argument("--version", action="version", version=f"anita {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="check a linear tableau proof")
    p_check.add_argument("file", nargs="?", default="-", help="proof file ('-' for stdin)")
    p_check.add_argument("--json", action="store_true", help="emit the report as JSON")
    p_check.add_argument("--latex", action="store_true", help="include the qtree export in the output")
    p_check.add_argument("--expect", choices=["valid", "countermodel"],
                         help="require this verdict (grading mode)")
    p_check.add_argument("--sequent", help="require the proof to state this sequent, e.g. 'A, A->B |- B'")
    p_check.set_defaults(func=cmd_check)

    p_latex = sub.add_parser("latex", help="print the qtree LaTeX export of a proof")
    p_latex.add_argument("file", nargs="?", default="-", help="proof file ('-' for stdin)")
    p_latex.set_defaults(func=cmd_latex)

    p_prove = sub.add_parser("prove", help="prove or refute a propositional sequent automatically")
    p_prove.add_argument("--sequent", required=True, help="sequent to prove, e.g. 'A->B, A |- B'")
    p_prove.set_defaults(func=cmd_prove)

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument("--port", type=int, default=8601)
    p_serve.add_argument("--bind", default="127.0.0.1")
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as err:
        print(f"anita: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
