"""Command-line front end.

Exit status: 0 success, 1 verification failure or closed-form/oracle
disagreement, 2 input error, 3 search bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from domgame.cgt import GameStore, KernelError, Outcome
from domgame.closed_forms import NotCovered, evaluate
from domgame.engine import (
    DEFAULT_MAX_VERTICES,
    Player,
    Position,
    SearchBoundError,
    outcome_by_search,
    value_of_position,
    winner,
)
from domgame.families import FamilyError, build, parse_family
from domgame.graphs import GraphFormatError, parse_graph
from domgame.named import Other, classify
from domgame.notation import format_value
from domgame.verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


class InputError(Exception):
    pass


def load_input(text: str):
    """Resolve an input argument to ``(graph, family spec or None)``.

    The argument may be a file path, an inline edge list (newlines or ``;``
    separate records) or a family DSL string.
    """
    if os.path.isfile(text):
        with open(text) as f:
            text = f.read()
    body = text.replace(";", "\n")
    first = next((ln.split()[0] for ln in body.splitlines() if ln.split("#")[0].strip()), "")
    try:
        if first in ("v", "e"):
            return parse_graph(body), None
        spec = parse_family(text)
        return build(spec), spec
    except (GraphFormatError, FamilyError) as e:
        raise InputError(str(e)) from None


def _position(graph, predominate: str | None) -> Position:
    labels = [x for x in (predominate or "").split(",") if x]
    try:
        return Position.initial(graph, labels)
    except KeyError as e:
        raise InputError(e.args[0]) from None


def named_label(named) -> str:
    return "Other" if isinstance(named, Other) else repr(named)


def value_report(text, predominate=None, max_vertices=DEFAULT_MAX_VERTICES, store=None) -> dict:
    store = store or GameStore()
    graph, spec = load_input(text)
    pos = _position(graph, predominate)

    closed = None
    closed_game = None
    if spec is not None and pos.dominated == 0:
        r = evaluate(spec, store)
        if isinstance(r, NotCovered):
            closed = f"not covered: {r.reason}"
        else:
            closed_game = r.game
            closed = format_value(r.game)

    try:
        oracle = value_of_position(pos, store, max_vertices)
    except SearchBoundError:
        if closed_game is None:
            raise
        oracle = None

    value = oracle if oracle is not None else closed_game
    report = {
        "input": text,
        "value": format_value(value),
        "named": named_label(classify(value)),
        "outcome": str(store.outcome(value)),
        "winner_first_alice": None,
        "winner_first_bob": None,
        "closed_form": closed,
        "oracle_checked": oracle is not None and closed_game is not None,
        "agree": None if oracle is None or closed_game is None else oracle is closed_game,
    }
    if len(graph) <= max_vertices:
        report["winner_first_alice"] = str(winner(pos, Player.Alice, max_vertices))
        report["winner_first_bob"] = str(winner(pos, Player.Bob, max_vertices))
    else:
        o = store.outcome(value)
        report["winner_first_alice"] = str(_winner_from_outcome(o, Player.Alice))
        report["winner_first_bob"] = str(_winner_from_outcome(o, Player.Bob))
    return report


def _winner_from_outcome(o: Outcome, first: Player) -> Player:
    if o is Outcome.AliceAlways:
        return Player.Alice
    if o is Outcome.BobAlways:
        return Player.Bob
    return first if o is Outcome.FirstPlayerWins else first.opponent


def _emit(args, report: dict, lines: list[str]):
    if args.format == "json":
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(lines))


def cmd_value(args) -> int:
    rep = value_report(args.input, args.predominate, args.max_vertices)
    lines = [rep["value"]]
    for key in ("named", "outcome", "winner_first_alice", "winner_first_bob", "closed_form"):
        if rep[key] is not None:
            lines.append(f"{key}: {rep[key]}")
    if rep["closed_form"] is not None and not rep["closed_form"].startswith("not covered"):
        if rep["oracle_checked"]:
            lines.append(f"oracle_checked: yes, agree: {'yes' if rep['agree'] else 'NO'}")
        else:
            lines.append("oracle_checked: no (search bound exceeded)")
    _emit(args, rep, lines)
    return EXIT_FAIL if rep["agree"] is False else EXIT_OK


def cmd_winner(args) -> int:
    graph, _ = load_input(args.input)
    pos = _position(graph, args.predominate)
    first = Player.parse(args.first)
    w = winner(pos, first, args.max_vertices)
    _emit(args, {"input": args.input, "first": str(first), "winner": str(w)}, [str(w)])
    return EXIT_OK


def cmd_outcome(args) -> int:
    graph, _ = load_input(args.input)
    pos = _position(graph, args.predominate)
    o = outcome_by_search(pos, args.max_vertices)
    _emit(args, {"input": args.input, "outcome": str(o)}, [str(o)])
    return EXIT_OK


def cmd_sum(args) -> int:
    store = GameStore()
    parts = []
    total = store.zero
    for text in args.inputs:
        graph, spec = load_input(text)
        pos = _position(graph, args.predominate if len(args.inputs) == 1 else None)
        source = "oracle"
        g = None
        if spec is not None and pos.dominated == 0:
            r = evaluate(spec, store)
            if not isinstance(r, NotCovered):
                g, source = r.game, "closed_form"
        if g is None:
            g = value_of_position(pos, store, args.max_vertices)
        total = store.add(total, g)
        parts.append({"input": text, "value": format_value(g), "source": source})
    report = {
        "inputs": parts,
        "value": format_value(total),
        "named": named_label(classify(total)),
        "outcome": str(store.outcome(total)),
    }
    lines = [f"{p['input']}: {p['value']} ({p['source']})" for p in parts]
    lines += [f"sum: {report['value']}", f"named: {report['named']}", f"outcome: {report['outcome']}"]
    _emit(args, report, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = run_suites(names, seed=args.seed, jobs=args.jobs)
    lines = []
    for r in reports:
        status = "PASS" if r.ok else "FAIL"
        lines.append(
            f"{status} {r.name}: {r.passed} passed, {r.failed} failed, "
            f"{r.skipped} not covered ({r.seconds:.2f}s)"
        )
        lines.extend(f"    {f}" for f in r.failures)
    _emit(args, {"suites": [r.to_dict() for r in reports]}, lines)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--predominate", metavar="LABELS",
                        help="comma-separated vertex labels that start dominated")
    shared.add_argument("--max-vertices", type=int, default=DEFAULT_MAX_VERTICES,
                        help=f"search bound in vertices (default {DEFAULT_MAX_VERTICES})")
    shared.add_argument("--format", choices=("text", "json"), default="text")

    parser = argparse.ArgumentParser(
        prog="domgame", description="Normal partizan domination game solver"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", parents=[shared], help="canonical game value")
    p.add_argument("input")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("winner", parents=[shared], help="winner under optimal play")
    p.add_argument("--first", default="alice", help="alice or bob (default alice)")
    p.add_argument("input")
    p.set_defaults(func=cmd_winner)

    p = sub.add_parser("outcome", parents=[shared], help="outcome class")
    p.add_argument("input")
    p.set_defaults(func=cmd_outcome)

    p = sub.add_parser("sum", parents=[shared], help="value of a disjoint sum of inputs")
    p.add_argument("inputs", nargs="+")
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("verify", parents=[shared], help="run a verification suite")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except SearchBoundError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND
    except (KernelError, MemoryError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BOUND


if __name__ == "__main__":
    sys.exit(main())
