"""``gtriple`` command line.

Exit codes: 0 success / packs, 1 no packing or counterexample found,
2 usage error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .errors import BadParam, ConfigError, ExhaustiveTooLarge, GTripleError
from .explorer import HYPOTHESES, MODES, SearchConfig, load_grid, run_search
from .families import FAMILIES, generate
from .graph import triple_stats
from .io import format_packing, parse_packing, read_triple, serialize_triple
from .solver import brute_force_pack, extend_by_placements, solve_pack, verify_packing
from .theorems import THEOREMS

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_INPUT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_stats(args: argparse.Namespace) -> int:
    t = read_triple(args.file)
    print(json.dumps(triple_stats(t).as_dict()))
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    t = read_triple(args.file)
    f = brute_force_pack(t)[0] if args.brute else solve_pack(t)
    if f is None:
        print("NO PACKING")
        return EXIT_NO
    print("PACKING")
    if args.print_map:
        print(format_packing(f))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    t = read_triple(args.file)
    f = parse_packing(args.map, t.n)
    bad = verify_packing(t, f)
    if not bad:
        print("VALID")
        return EXIT_OK
    print("INVALID")
    for v in bad:
        print(f"{v.kind} {' '.join(map(str, v.witness))}")
    return EXIT_NO


def cmd_check(args: argparse.Namespace) -> int:
    t = read_triple(args.file)
    names = list(THEOREMS) if args.theorem == "all" else [args.theorem]
    if args.theorem == "all" and t.yellow:
        names = [name for name in names if not name.startswith("zak")]
    for name in names:
        print(THEOREMS[name](t).to_json())
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    try:
        t = generate(args.family, n=args.n, k=args.k)
    except BadParam as exc:
        raise UsageError(str(exc)) from exc
    _emit(serialize_triple(t), args.output)
    return EXIT_OK


def _placement(text: str) -> tuple[int, int]:
    try:
        u, w = text.split(":")
        return int(u), int(w)
    except ValueError:
        raise argparse.ArgumentTypeError(f"placement must be u:w, got {text!r}") from None


def cmd_contract(args: argparse.Namespace) -> int:
    t = read_triple(args.file)
    c = extend_by_placements(t, args.place)
    _emit(serialize_triple(c.triple), args.output)
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    cfg = SearchConfig(
        mode=args.mode,
        n=args.n,
        hypothesis=args.hypothesis,
        seed=args.seed,
        budget=args.budget,
        samples=args.samples,
        grid=load_grid(args.grid) if args.grid else {},
        jobs=args.jobs,
    )
    try:
        cfg.validate()
    except (ConfigError, ExhaustiveTooLarge) as exc:
        raise UsageError(str(exc)) from exc
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            summary = run_search(cfg, fh)
    else:
        summary = run_search(cfg, sys.stdout)
    return EXIT_NO if summary["counterexamples"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gtriple", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("stats", help="print degree statistics as JSON")
    s.add_argument("file")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("solve", help="decide list packability")
    s.add_argument("file")
    s.add_argument("--brute", action="store_true", help="use exhaustive enumeration (n <= 8)")
    s.add_argument("--print-map", action="store_true")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", help="check a packing certificate")
    s.add_argument("file")
    s.add_argument("--map", required=True, help="comma-separated images f(0),...,f(n-1)")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("check", help="evaluate theorem hypotheses")
    s.add_argument("file")
    s.add_argument("--theorem", default="all", choices=[*THEOREMS, "all"])
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("gen", help="generate a named instance")
    s.add_argument("family", choices=[*FAMILIES, "be-exception-k"])
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("contract", help="fix placements and reduce the triple")
    s.add_argument("file")
    s.add_argument("--place", type=_placement, action="append", required=True, metavar="u:w")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_contract)

    s = sub.add_parser("search", help="hunt for counterexamples")
    s.add_argument("--mode", required=True, choices=MODES)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--hypothesis", required=True, choices=HYPOTHESES)
    s.add_argument("--seed", type=int)
    s.add_argument("--budget", type=int, default=1_000_000)
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--grid", help="family grid file (key = values lines)")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"gtriple: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GTripleError, OSError) as exc:
        print(f"gtriple: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
