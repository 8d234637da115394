"""Command-line interface.

Exit codes: 0 success, 1 usage or parse error, 2 limit exceeded,
3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .basis import is_involutive_basis, minimal_involutive_basis
from .completion import (CompletionLimitExceeded, CompletionLimits, involutive_complete,
                         is_involutive_bruteforce)
from .corpus import monomial_corpus
from .divisions import Division, separation
from .monomials import Order
from .polynomials import buchberger, nf_conventional, nf_involutive
from .problem import Problem, ProblemParseError, parse_problem

OK, USAGE, LIMIT, FAILED = 0, 1, 2, 3

TABLE_COLUMNS = [Division.THOMAS, Division.JANET, Division.POMMARET, Division.DIV1, Division.DIV2,
                 Division.INDUCED_LEX, Division.INDUCED_DEGLEX, Division.INDUCED_DEGREVLEX]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE, f"{self.prog}: error: {message}\n")


def _division(text: str) -> Division:
    try:
        return Division.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _order(text: str) -> Order:
    try:
        return Order.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--division", type=_division, default=Division.JANET,
                        help="thomas, janet, pommaret, div1, div2, induced-lex, "
                             "induced-deglex, induced-degrevlex (default: janet)")
    shared.add_argument("--order", type=_order, help="main ordering; overrides the file")
    shared.add_argument("--completion-order", type=_order,
                        help="completion ordering; defaults to the file's, then the main ordering")
    shared.add_argument("--max-degree", type=_positive, default=50)
    shared.add_argument("--max-iterations", type=_positive, default=100_000)
    shared.add_argument("--stats", action="store_true", help="print a key=value stats block")
    shared.add_argument("--seed", type=int, default=0)
    shared.add_argument("--all-divisions", action="store_true")

    parser = _Parser(prog="involutive", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("separate", parents=[shared], help="multiplicative variables per element")
    p.add_argument("problem")

    p = sub.add_parser("complete-monomials", parents=[shared],
                       help="minimal involutive completion of a monomial set")
    p.add_argument("problem")
    p.add_argument("--monotone-fast-path", action="store_true",
                   help="skip re-checks below the completeness bound (monotone divisions only)")

    p = sub.add_parser("involutive-basis", parents=[shared],
                       help="minimal involutive basis of a polynomial ideal")
    p.add_argument("problem")
    p.add_argument("--no-autoreduce", action="store_true")
    p.add_argument("--no-criterion", action="store_true")
    p.add_argument("--verify", action="store_true",
                   help="re-check involutivity and compare with a Buchberger basis")

    p = sub.add_parser("groebner", parents=[shared], help="reduced Groebner basis")
    p.add_argument("problem")

    p = sub.add_parser("verify", parents=[shared],
                       help="check that the listed polynomials form an involutive basis")
    p.add_argument("problem")

    p = sub.add_parser("invariance", parents=[shared],
                       help="completion-ordering invariance over a seeded random corpus")
    p.add_argument("--count", type=_positive, default=200)
    return parser


def _load(path: str, args) -> Problem:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path) as fh:
            text = fh.read()
    problem = parse_problem(text)
    if args.order is not None:
        problem.order = args.order
    if args.completion_order is not None:
        problem.completion_order = args.completion_order
    return problem


def _limits(args) -> CompletionLimits:
    return CompletionLimits(max_degree=args.max_degree, max_iterations=args.max_iterations)


def cmd_separate(args, out) -> int:
    problem = _load(args.problem, args)
    U = problem.monomials()
    ctx = problem.variables
    divisions = TABLE_COLUMNS if args.all_divisions else [args.division]
    rows = [["monomial"] + [d.short_name for d in divisions]]
    for u in U:
        rows.append([ctx.render(u)] + [
            ctx.render_variables(separation(d, u, U).multiplicative) for d in divisions])
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip(), file=out)
    return OK


def cmd_complete_monomials(args, out) -> int:
    problem = _load(args.problem, args)
    U = problem.monomials()
    ctx = problem.variables
    order = problem.effective_completion_order()
    try:
        result, stats = involutive_complete(U, args.division, order, _limits(args),
                                            monotone=args.monotone_fast_path)
    except CompletionLimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=out)
        print("partial set:", file=out)
        for m in exc.partial:
            print(ctx.render(m), file=out)
        if args.stats:
            print(exc.stats.as_block(), file=out)
        return LIMIT
    for m in result:
        print(ctx.render(m), file=out)
    if args.stats:
        print(stats.as_block(), file=out)
    return OK


def cmd_involutive_basis(args, out) -> int:
    problem = _load(args.problem, args)
    F = problem.polynomials()
    if not F:
        print("error: no polynomials given", file=sys.stderr)
        return USAGE
    try:
        G, stats = minimal_involutive_basis(
            F, args.division, completion_order=problem.effective_completion_order(),
            limits=_limits(args), autoreduce_input=not args.no_autoreduce,
            use_criterion=not args.no_criterion)
    except CompletionLimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=out)
        for g in exc.partial:
            print(g, file=out)
        return LIMIT
    for g in G:
        print(g, file=out)
    if args.stats:
        print(stats.as_block(), file=out)
    if args.verify:
        gb = buchberger(F, _limits(args))
        passed = (is_involutive_basis(G, args.division)
                  and all(not nf_involutive(g, G, args.division) for g in gb)
                  and all(not nf_conventional(g, gb) for g in G))
        print(f"verification {'PASSED' if passed else 'FAILED'}", file=out)
        return OK if passed else FAILED
    return OK


def cmd_groebner(args, out) -> int:
    problem = _load(args.problem, args)
    F = problem.polynomials()
    if not F:
        print("error: no polynomials given", file=sys.stderr)
        return USAGE
    try:
        G = buchberger(F, _limits(args))
    except CompletionLimitExceeded as exc:
        print(f"limit exceeded: {exc}", file=out)
        return LIMIT
    for g in G:
        print(g, file=out)
    return OK


def cmd_verify(args, out) -> int:
    problem = _load(args.problem, args)
    G = problem.polynomials()
    if not G or any(not g for g in G):
        print("error: need nonzero polynomials", file=sys.stderr)
        return USAGE
    passed = is_involutive_basis([g.monic() for g in G], args.division)
    print(f"verification {'PASSED' if passed else 'FAILED'}", file=out)
    return OK if passed else FAILED


def cmd_invariance(args, out) -> int:
    divisions = [d for d in Division if d is not Division.POMMARET]
    if not args.all_divisions:
        divisions = [args.division]
    mismatches = 0
    corpus = monomial_corpus(args.seed, args.count)
    for index, U in enumerate(corpus):
        for d in divisions:
            runs = [involutive_complete(U, d, o, _limits(args)) for o in Order]
            sets = {tuple(sorted(r)) for r, _ in runs}
            counts = {s.prolongations_checked for _, s in runs}
            sound = is_involutive_bruteforce(runs[0][0], d, max(map(sum, runs[0][0])) + 4)
            if len(sets) != 1 or len(counts) != 1 or not sound:
                mismatches += 1
                print(f"mismatch: set {index} {U} division={d.value}", file=out)
    print(f"sets={len(corpus)} divisions={len(divisions)} mismatches={mismatches}", file=out)
    return OK if mismatches == 0 else FAILED


COMMANDS = {
    "separate": cmd_separate,
    "complete-monomials": cmd_complete_monomials,
    "involutive-basis": cmd_involutive_basis,
    "groebner": cmd_groebner,
    "verify": cmd_verify,
    "invariance": cmd_invariance,
}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (ProblemParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
