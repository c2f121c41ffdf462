"""Command-line front end.

Subcommands: ``eval``, ``laws``, ``reduce``, ``predict``, ``closure``,
``measure``, ``pm``, ``consistency``, ``bench``.  Propositions use the
``<sign? letters>`` grammar with comma-separated conjunctions inside one
bracket pair (``"<ZI,IX>"`` parses to two propositions); indices in
transcripts and error messages are 1-based.  All subcommands render as text
or JSON (``--format``, or the CONJLOGIC_FORMAT environment variable).

Exit status: 0 on success, 1 on usage or domain errors, 2 when a logical
contradiction is found (so scripts can detect the inconsistent CZ choice).
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from . import backend
from .analysis import appendix_b_check, law_report, pm_square
from .bench import run_bench
from .clifford import CzChoice, TheoryVariant
from .errors import ConjugateLogicError, ContradictionError, PropParseError
from .kernel import TruthValue, evaluate, parse_formula, VALUE_ORDER
from .knowledge import KnowledgeState
from .pauli import Proposition, parse_prop
from .reduction import reduce_pair, reduce_set, reduce_single

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTRADICTION = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_prop_list(text: str) -> list[Proposition]:
    """Parse ``"<A,B,...>"`` into one proposition per comma-separated chunk."""
    if not text.startswith("<") or not text.endswith(">"):
        raise PropParseError(0, "malformed sign", "expected '<...>'")
    chunks = text[1:-1].split(",")
    props = [parse_prop(f"<{chunk}>") for chunk in chunks]
    n = props[0].n
    for p in props:
        if p.n != n:
            raise PropParseError(
                len(text) - 1, "length mismatch", "conjuncts have different lengths"
            )
    return props


def build_parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument(
        "--theory",
        choices=["quantum", "toy"],
        default="quantum",
        help="S/H sign rules: stabilizer quantum (default) or Spekkens toy",
    )
    common.add_argument(
        "--cz",
        choices=["standard", "tilde"],
        default="standard",
        help="CZ sign rule: standard XX->YY (default) or tilde XX->-YY",
    )
    common.add_argument(
        "--format",
        choices=["text", "json"],
        default=None,
        help="output format (default: CONJLOGIC_FORMAT or text)",
    )
    common.add_argument("--seed", type=int, default=None, help="random seed")

    parser = _Parser(prog="conjlogic", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", metavar="subcommand")

    p = sub.add_parser("eval", parents=[common], help="evaluate a formula")
    p.add_argument("formula", help="e.g. 'p & !p' or '(p -> q) & p'")
    p.add_argument(
        "--assign",
        default=None,
        help="comma list like 'p=1,q=?'; omit to print the full table",
    )

    sub.add_parser("laws", parents=[common], help="run the law suite")

    p = sub.add_parser("reduce", parents=[common], help="reduce propositions")
    p.add_argument("props", help="e.g. '<XYZIZY>' or '<ZX,XZ>'")

    p = sub.add_parser("predict", parents=[common], help="query a prediction")
    p.add_argument("generators", help="conjunction, e.g. '<XZ,ZX>'")
    p.add_argument("query", help="single proposition, e.g. '<YY>'")

    p = sub.add_parser("closure", parents=[common], help="list all predictions")
    p.add_argument("generators")

    p = sub.add_parser("measure", parents=[common], help="measure questions in order")
    p.add_argument("generators")
    p.add_argument("questions", nargs="+", help="sign-0 propositions")

    sub.add_parser("pm", parents=[common], help="contextuality square analysis")

    sub.add_parser("consistency", parents=[common], help="compare CZ choices")

    p = sub.add_parser("bench", parents=[common], help="time the hot paths")
    p.add_argument("--n", type=int, default=4096)
    p.add_argument("--k", type=int, default=64)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument(
        "--backend",
        choices=["auto", "py", "c", "both"],
        default="auto",
        help="kernel backend(s) to time",
    )
    return parser


def _output_format(args) -> str:
    if args.format is not None:
        return args.format
    env = os.environ.get("CONJLOGIC_FORMAT", "").strip().lower()
    if env in ("text", "json"):
        return env
    if env:
        raise UsageError(f"CONJLOGIC_FORMAT must be 'text' or 'json', not {env!r}")
    return "text"


def _variant(args) -> TheoryVariant:
    return TheoryVariant.QUANTUM if args.theory == "quantum" else TheoryVariant.SPEKKENS_TOY


def _cz(args) -> CzChoice:
    return CzChoice.STANDARD if args.cz == "standard" else CzChoice.TILDE


def _render_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _build_state(generators, variant, cz) -> KnowledgeState:
    """Assert the conjuncts one by one so contradictions surface as such."""
    state = KnowledgeState(generators[0].n, (), variant, cz)
    for g in generators:
        state = state.assert_prop(g)
    return state


def _sorted_props(props) -> list[Proposition]:
    return sorted(props, key=lambda p: (p.letters, p.sign))


# -- subcommand handlers; each returns (output text, exit code) -------------


def _cmd_eval(args, fmt):
    formula, names = parse_formula(args.formula)
    if args.assign is not None:
        assignment = {}
        given = {}
        for item in args.assign.split(","):
            item = item.strip()
            if not item:
                continue
            name, _, symbol = item.partition("=")
            name = name.strip()
            given[name] = TruthValue.from_symbol(symbol.strip())
        missing = [name for name in names if name not in given]
        if missing:
            raise UsageError(f"missing values for: {', '.join(missing)}")
        extra = [name for name in given if name not in names]
        if extra:
            raise UsageError(f"unknown atoms: {', '.join(extra)}")
        assignment = {i: given[name] for i, name in enumerate(names)}
        value = evaluate(formula, assignment)
        if fmt == "json":
            return _render_json(
                {
                    "formula": args.formula,
                    "assignment": {name: str(given[name]) for name in names},
                    "value": str(value),
                }
            ), EXIT_OK
        return f"{value}\n", EXIT_OK
    import itertools

    rows = []
    for values in itertools.product(VALUE_ORDER, repeat=len(names)):
        assignment = dict(enumerate(values))
        rows.append((values, evaluate(formula, assignment)))
    if fmt == "json":
        return _render_json(
            {
                "formula": args.formula,
                "atoms": list(names),
                "rows": [
                    {
                        "assignment": {
                            name: str(v) for name, v in zip(names, values)
                        },
                        "value": str(value),
                    }
                    for values, value in rows
                ],
            }
        ), EXIT_OK
    lines = [" ".join(names) + "  value"]
    for values, value in rows:
        lines.append(" ".join(str(v) for v in values) + "  " + str(value))
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_laws(args, fmt):
    report = law_report()
    if fmt == "json":
        return _render_json(report.suite.to_json_list()), EXIT_OK
    return report.to_text(), EXIT_OK


def _cmd_reduce(args, fmt):
    props = parse_prop_list(args.props)
    variant, cz = _variant(args), _cz(args)
    if len(props) == 1:
        result = reduce_single(props[0], variant, cz)
    elif len(props) == 2:
        result = reduce_pair(props[0], props[1], variant, cz)
    else:
        result = reduce_set(props, variant, cz)
    if fmt == "json":
        return _render_json(
            {
                "relation": result.relation,
                "transcript": result.transcript.to_json_list(),
                "reduced": [p.to_json_dict() for p in result.reduced],
            }
        ), EXIT_OK
    lines = [
        f"relation: {result.relation}",
        f"transcript: {result.transcript.to_text() or '(empty)'}",
        "reduced: " + " ".join(str(p) for p in result.reduced),
    ]
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_predict(args, fmt):
    generators = parse_prop_list(args.generators)
    query = parse_prop(args.query, expected_n=generators[0].n)
    state = _build_state(generators, _variant(args), _cz(args))
    value = state.predicts(query)
    if fmt == "json":
        return _render_json(
            {
                "generators": [g.to_json_dict() for g in generators],
                "query": query.to_json_dict(),
                "value": str(value),
            }
        ), EXIT_OK
    return f"{value}\n", EXIT_OK


def _cmd_closure(args, fmt):
    generators = parse_prop_list(args.generators)
    state = _build_state(generators, _variant(args), _cz(args))
    members = _sorted_props(state.closure())
    if fmt == "json":
        return _render_json(
            {
                "state": state.to_json_dict(),
                "closure": [p.to_json_dict() for p in members],
            }
        ), EXIT_OK
    return "\n".join(str(p) for p in members) + "\n", EXIT_OK


def _cmd_measure(args, fmt):
    if args.seed is None:
        raise UsageError("measure requires --seed for reproducible outcomes")
    generators = parse_prop_list(args.generators)
    n = generators[0].n
    state = _build_state(generators, _variant(args), _cz(args))
    rng = random.Random(args.seed)
    records = []
    for text in args.questions:
        question = parse_prop(text, expected_n=n)
        record, state = state.measure(question, rng)
        records.append(record)
    if fmt == "json":
        return _render_json(
            {
                "records": [
                    {
                        "question": r.measured.to_json_dict(),
                        "outcome": r.outcome,
                        "predicted": r.was_predicted,
                        "holds": r.resulting_prop.to_json_dict(),
                    }
                    for r in records
                ],
                "state": state.to_json_dict(),
            }
        ), EXIT_OK
    lines = [
        f"{r.measured} -> {r.outcome} "
        f"({'predicted' if r.was_predicted else 'random'}), holds {r.resulting_prop}"
        for r in records
    ]
    lines.append("state: " + " ".join(str(g) for g in state.generators))
    return "\n".join(lines) + "\n", EXIT_OK


def _cmd_pm(args, fmt):
    report = pm_square(_variant(args))
    if fmt == "json":
        return _render_json(report.to_json_dict()), EXIT_OK
    return report.to_text() + "\n", EXIT_OK


def _cmd_consistency(args, fmt):
    report = appendix_b_check(_cz(args))
    code = EXIT_CONTRADICTION if report.contradiction_found else EXIT_OK
    if fmt == "json":
        return _render_json(report.to_json_dict()), code
    return report.to_text() + "\n", code


def _cmd_bench(args, fmt):
    if args.backend == "both":
        backends = backend.available_backends()
    elif args.backend == "auto":
        backends = (backend.BACKEND_NAME,)
    else:
        backends = (args.backend,)
    seed = 0 if args.seed is None else args.seed
    results = run_bench(
        args.n, args.k, args.reps, seed, _variant(args), _cz(args), backends
    )
    if fmt == "json":
        return _render_json([r.to_json_dict() for r in results]), EXIT_OK
    return "\n".join(r.to_text() for r in results) + "\n", EXIT_OK


_HANDLERS = {
    "eval": _cmd_eval,
    "laws": _cmd_laws,
    "reduce": _cmd_reduce,
    "predict": _cmd_predict,
    "closure": _cmd_closure,
    "measure": _cmd_measure,
    "pm": _cmd_pm,
    "consistency": _cmd_consistency,
    "bench": _cmd_bench,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required (try --help)")
        fmt = _output_format(args)
        output, code = _HANDLERS[args.command](args, fmt)
    except UsageError as exc:
        print(f"conjlogic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ContradictionError as exc:
        print(f"conjlogic: contradiction: {exc}", file=sys.stderr)
        return EXIT_CONTRADICTION
    except (ConjugateLogicError, ValueError) as exc:
        print(f"conjlogic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(output)
    return code


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
