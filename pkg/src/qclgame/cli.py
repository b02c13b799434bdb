"""Command-line front-end.

Exit codes: 0 success (or entailed), 1 not entailed, 2 usage or parse
error, 3 enumeration cap exceeded, 130 interactive session aborted.
"""

from __future__ import annotations

import argparse
import sys

from .checks import run_checks
from .game import ME, YOU, solve, to_dot
from .game_ng import build_ng_tree, payoff_ng
from .game_qcl import build_qcl_tree, payoff_qcl
from .gcl import degree_g, preferred_models_g
from .qcl import INF, degree, entails, format_degree, pqcl_degree, preferred_models
from .syntax import (
    DEFAULT_CAP,
    CapExceeded,
    ParseError,
    all_interpretations,
    format_interpretation,
    is_classical,
    parse,
    parse_interpretation,
    to_text,
    variables,
)

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP, EXIT_ABORT = 0, 1, 2, 3, 130

SEMANTICS = {
    "qcl": (degree, format_degree),
    "pqcl": (pqcl_degree, format_degree),
    "gcl": (degree_g, str),
}


class UsageError(Exception):
    pass


def _formula(text):
    try:
        return parse(text)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}") from None


def _interp(text):
    try:
        return parse_interpretation(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _sort_key(i):
    return (len(i), sorted(i))


def cmd_eval(args):
    f, i = _formula(args.formula), _interp(args.interp)
    fn, fmt = SEMANTICS[args.sem]
    print(fmt(fn(f, i)))
    return EXIT_OK


def cmd_table(args):
    f = _formula(args.formula)
    sems = [s.strip() for s in args.sem.split(",") if s.strip()]
    for s in sems:
        if s not in SEMANTICS:
            raise UsageError(f"unknown semantics {s!r}")
    rows = [["I"] + sems]
    for i in all_interpretations(f, args.cap):
        rows.append([format_interpretation(i)] + [SEMANTICS[s][1](SEMANTICS[s][0](f, i)) for s in sems])
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    for r in rows:
        print(" | ".join(cell.ljust(w) for cell, w in zip(r, widths)).rstrip())
    return EXIT_OK


def cmd_preferred(args):
    f = _formula(args.formula)
    if args.sem == "qcl":
        best, models = preferred_models(f, args.cap)
        found = best != INF
        shown = format_degree(best)
    else:
        best, models = preferred_models_g(f, args.cap)
        found = best is not None
        shown = str(best)
    if not found:
        print("unsatisfiable")
        return EXIT_OK
    print(f"degree {shown}")
    for m in sorted(models, key=_sort_key):
        print(format_interpretation(m))
    return EXIT_OK


def _game(variant, f, i):
    if variant == "g":
        tree = build_qcl_tree("P", f)
        return tree, payoff_qcl(tree, i), format_degree
    tree = build_ng_tree("P", f)
    return tree, payoff_ng(tree, i), str


def cmd_game(args):
    f, i = _formula(args.formula), _interp(args.interp)
    tree, payoff, fmt = _game(args.variant, f, i)
    sol = solve(tree, payoff)
    if args.dot:
        text = to_dot(tree, payoff, fmt, name="NG" if args.variant == "ng" else "G")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    if args.strategy:
        for node in tree.nodes:
            if node.is_leaf:
                continue
            who = "Me" if node.label == ME else "You"
            nxt = tree[sol.best_move(tree, node.id)]
            print(f"n{node.id} [{node.caption}]^{node.label}: {who} -> n{nxt.id} {nxt.caption}"
                  f" (value {fmt(sol.node_values[nxt.id])})")
    if args.value or not (args.dot or args.strategy):
        print(fmt(sol.value))
    return EXIT_OK


def cmd_check(args):
    report = run_checks(seed=args.seed, count=args.count, max_connectives=args.max_connectives)
    for line in report.lines(verbose=args.verbose):
        print(line)
    return EXIT_OK if report.ok else EXIT_NO


def cmd_entail(args):
    premise, conclusion = _formula(args.premise), _formula(args.conclusion)
    if not is_classical(conclusion):
        raise UsageError("the conclusion must be classical (no ordered disjunction)")
    if entails(premise, conclusion, args.cap):
        print("entailed")
        return EXIT_OK
    print("not entailed")
    return EXIT_NO


def cmd_play(args, read=None):
    read = read or input
    f, i = _formula(args.formula), _interp(args.interp)
    tree, payoff, fmt = _game(args.variant, f, i)
    sol = solve(tree, payoff)
    human = None if args.auto else (ME if args.side == "me" else YOU)
    print(f"game {args.variant.upper()} on {to_text(f)} over {format_interpretation(i)}; "
          f"{'engine plays both sides' if human is None else 'you play ' + args.side}")
    node = tree.root
    while not node.is_leaf:
        who = "Me" if node.label == ME else "You"
        if node.label == human and len(node.children) > 1:
            print(f"[{node.caption}]^{node.label} ({who} to move)")
            for k, c in enumerate(node.children, 1):
                print(f"  {k}) {tree[c].caption}")
            while True:
                try:
                    answer = read("choice> ").strip()
                except EOFError:
                    print()
                    return EXIT_ABORT
                if answer.isdigit() and 1 <= int(answer) <= len(node.children):
                    child = node.children[int(answer) - 1]
                    break
                print(f"please enter a number between 1 and {len(node.children)}")
        else:
            child = sol.best_move(tree, node.id)
        print(f"[{node.caption}]^{node.label}: {who} -> {tree[child].caption}")
        node = tree[child]
    verdict = "win" if payoff.is_winning(node.id) else "loss"
    print(f"outcome {node.caption}: payoff {fmt(payoff[node.id])}, {verdict} for Me")
    return EXIT_OK


def build_parser():
    # global flags are accepted before or after the subcommand; the
    # subcommand copies use SUPPRESS so they never clobber an earlier value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"maximum number of variables to enumerate (default {DEFAULT_CAP})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed for check (default 7)")

    parser = argparse.ArgumentParser(prog="qclgame", parents=[common],
                                     description="Qualitative Choice Logic and its evaluation games.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="satisfaction degree of a formula")
    p.add_argument("formula")
    p.add_argument("--interp", default="", help="comma-separated true variables")
    p.add_argument("--sem", choices=sorted(SEMANTICS), default="qcl")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", parents=[common], help="degrees under every interpretation")
    p.add_argument("formula")
    p.add_argument("--sem", default="qcl", help="comma-separated list of qcl, pqcl, gcl")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("preferred", parents=[common], help="preferred models")
    p.add_argument("formula")
    p.add_argument("--sem", choices=["qcl", "gcl"], default="qcl")
    p.set_defaults(func=cmd_preferred)

    p = sub.add_parser("game", parents=[common], help="build and solve an evaluation game")
    p.add_argument("formula")
    p.add_argument("--interp", default="")
    p.add_argument("--variant", choices=["g", "ng"], default="g")
    p.add_argument("--value", action="store_true", help="print the game value")
    p.add_argument("--dot", action="store_true", help="write the annotated tree as DOT")
    p.add_argument("--strategy", action="store_true", help="print the optimal move at each node")
    p.add_argument("--out", help="write DOT here instead of stdout")
    p.set_defaults(func=cmd_game)

    p = sub.add_parser("check", parents=[common], help="verify theorems and lemmas on random formulas")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--max-connectives", type=int, default=8)
    p.add_argument("--verbose", "-v", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("entail", parents=[common], help="preferred-model entailment")
    p.add_argument("premise")
    p.add_argument("conclusion")
    p.set_defaults(func=cmd_entail)

    p = sub.add_parser("play", parents=[common], help="play a game against the optimal engine")
    p.add_argument("formula")
    p.add_argument("--interp", default="")
    p.add_argument("--variant", choices=["g", "ng"], default="g")
    p.add_argument("--side", choices=["me", "you"], default="me")
    p.add_argument("--auto", action="store_true", help="engine plays both sides")
    p.set_defaults(func=cmd_play)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.cap = getattr(args, "cap", DEFAULT_CAP)
    args.seed = getattr(args, "seed", 7)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
