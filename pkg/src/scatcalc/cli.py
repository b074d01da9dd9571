"""Command-line surface.

Subcommands: ``type``, ``normalize``, ``compare``, ``generators``,
``hasse``, ``oracle``.  Exit codes: compare maps LE/NOT_LE/UNKNOWN to
0/1/2, oracle maps YES/NO to 0/1, parse errors exit 64, feasibility
bounds and undecided Hasse pairs exit 65.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys

from . import generators as gen_mod
from . import oracle as oracle_mod
from . import rewrite
from .compare import Engine, EngineConfig, Outcome, default_engine
from .ordinal import OrdinalSyntaxError, parse_ordinal
from .rank import cb_type
from .term import TermSyntaxError, format_term, parse_term

EX_PARSE = 64
EX_INFEASIBLE = 65

_OUTCOME_TEXT = {Outcome.LE: "LE", Outcome.NOT_LE: "NOT_LE", Outcome.UNKNOWN: "UNKNOWN"}
_OUTCOME_EXIT = {Outcome.LE: 0, Outcome.NOT_LE: 1, Outcome.UNKNOWN: 2}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scatcalc",
        description="symbolic calculus for scattered continuous functions "
        "under continuous reducibility",
    )
    parser.add_argument("--depth", type=int, default=64, help="comparison depth bound")
    parser.add_argument(
        "--max-raw",
        type=int,
        default=gen_mod.DEFAULT_MAX_RAW,
        help="generator enumeration feasibility bound",
    )
    parser.add_argument("--seed", type=int, default=0, help="property sampling seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("type", help="print the CB-type of a term")
    p.add_argument("term")

    p = sub.add_parser("normalize", help="print the normalized term")
    p.add_argument("term")

    p = sub.add_parser("compare", help="decide continuous reducibility")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--trace", action="store_true", help="print the derivation")
    p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("generators", help="enumerate a generator set")
    p.add_argument("level")
    p.add_argument("--centered", action="store_true", help="centered set instead")
    p.add_argument("--raw", action="store_true", help="list raw terms")
    p.add_argument("--classes", action="store_true", help="list class representatives")

    p = sub.add_parser("hasse", help="covering relation of a generator set")
    p.add_argument("level")
    p.add_argument("--dot", action="store_true", help="emit a DOT digraph")

    p = sub.add_parser("oracle", help="brute-force reducibility of finite functions")
    p.add_argument("left")
    p.add_argument("right")
    return parser


def _engine(args) -> Engine:
    if args.depth == 64:
        return default_engine()
    return Engine(EngineConfig(depth=args.depth))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (TermSyntaxError, OrdinalSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_PARSE
    except (gen_mod.FeasibilityError, gen_mod.UndecidedPairError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_INFEASIBLE


def _dispatch(args) -> int:
    if args.command == "type":
        t = parse_term(args.term)
        print(cb_type(t))
        return 0

    if args.command == "normalize":
        t = parse_term(args.term)
        print(format_term(rewrite.normalize(t)))
        return 0

    if args.command == "compare":
        engine = _engine(args)
        verdict = engine.compare(parse_term(args.left), parse_term(args.right))
        if args.json:
            print(
                json.dumps(
                    {
                        "schema": 1,
                        "outcome": _OUTCOME_TEXT[verdict.outcome],
                        "trace": [
                            {"rule": rule, "query": query} for rule, query in verdict.trace
                        ],
                    }
                )
            )
        else:
            print(_OUTCOME_TEXT[verdict.outcome])
            if args.trace:
                for rule, query in verdict.trace:
                    print(f"  {rule}: {query}")
        return _OUTCOME_EXIT[verdict.outcome]

    if args.command == "generators":
        level = parse_ordinal(args.level)
        build = gen_mod.centered_set if args.centered else gen_mod.generator_set
        gens = build(level, max_raw=args.max_raw)
        terms = gens.raw if args.raw else [rep for rep, _ in gens.classes]
        for t in terms:
            print(format_term(t))
        return 0

    if args.command == "hasse":
        level = parse_ordinal(args.level)
        engine = _engine(args)
        gens = gen_mod.generator_set(level, max_raw=args.max_raw)
        reps = [rep for rep, _ in gens.classes]
        edges = gen_mod.hasse(reps, engine)
        if args.dot:
            print(render_dot(reps, edges))
        else:
            for a, b in edges:
                print(f"{format_term(a)} -> {format_term(b)}")
        return 0

    if args.command == "oracle":
        f = oracle_mod.parse_finite_fn(args.left)
        g = oracle_mod.parse_finite_fn(args.right)
        ok = oracle_mod.brute_force_le(f, g)
        print("YES" if ok else "NO")
        return 0 if ok else 1

    raise AssertionError(f"unhandled command {args.command}")


def _node_id(t) -> str:
    digest = hashlib.sha256(format_term(rewrite.normalize(t)).encode()).hexdigest()
    return "n" + digest[:12]


def render_dot(terms, edges) -> str:
    lines = ["digraph hasse {"]
    for t in terms:
        label = format_term(t).replace('"', '\\"')
        lines.append(f'  {_node_id(t)} [label="{label}"];')
    for a, b in edges:
        lines.append(f"  {_node_id(a)} -> {_node_id(b)};")
    lines.append("}")
    return "\n".join(lines)


if __name__ == "__main__":
    sys.exit(main())
