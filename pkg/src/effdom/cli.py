"""Command line front end: solve, oracle, recognize, generate, check.

Exit codes: 0 = solved (or successful informational command), 1 = no
efficient dominating set, 2 = not in the requested class, 3 = usage,
file, or format error.  All vertex ids on the command line interface are
1-based, matching the graph file format; JSON vertex lists are sorted
ascending except witness lists, which stay in pattern-role order so the
witness can be re-checked against the pattern catalog.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .framework import CLASS_TAGS, Outcome, Status, is_efficient_dominating, solve
from .graphs import WeightedGraph, parse_graph, render_graph
from .patterns import find_induced
from .oracle import BRUTE_LIMIT, brute_force_wed, exact_cover_ed
from .reduction import build_reduction, parse_monotone_cnf

__all__ = ["main", "run"]

EXIT_SOLVED = 0
EXIT_NO_ED = 1
EXIT_NOT_IN_CLASS = 2
EXIT_USAGE = 3

# class tag -> forbidden patterns probed by ``recognize``
RECOGNIZED_CLASSES: tuple[tuple[str, tuple[str, ...]], ...] = (
    ("2p2", ("2P2",)),
    ("p5", ("P5",)),
    ("p6s122", ("P6", "S122")),
    ("2p3s122", ("2P3", "S122")),
    ("p2p4", ("P2+P4",)),
)

_STATUS_EXIT = {
    Status.SOLVED: EXIT_SOLVED,
    Status.NO_ED: EXIT_NO_ED,
    Status.NOT_IN_CLASS: EXIT_NOT_IN_CLASS,
}


# ===== ARGUMENT PARSING =====


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with status 3."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    top = _Parser(
        prog="effdom",
        description="Minimum-weight efficient dominating sets: class "
                    "solvers, exact oracles, recognizers, and a hardness "
                    "instance generator.")
    top.add_argument("--version", action="version",
                     version=f"%(prog)s {__version__}")
    sub = top.add_subparsers(dest="command", required=True,
                             metavar="command", parser_class=_Parser)

    p = sub.add_parser("solve", help="solve with a class solver or oracle")
    p.add_argument("--class", dest="cls", choices=CLASS_TAGS, default="auto",
                   help="solver to use (default: auto)")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--k", type=int, default=2,
                   help="degree bound for --class 2bwed (default: 2)")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.add_argument("--parallel", action="store_true",
                   help="evaluate anchors on a thread pool")

    p = sub.add_parser("oracle", help="exact exponential solver")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--method", choices=("auto", "exact-cover", "brute"),
                   default="auto",
                   help="auto picks brute force up to 25 vertices and the "
                        "exact-cover search beyond (default: auto)")
    p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("recognize",
                       help="report class membership with witnesses")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--json", action="store_true", help="JSON output")

    p = sub.add_parser("generate",
                       help="build a hardness instance from a monotone 3-CNF")
    p.add_argument("--cnf", required=True, help="DIMACS CNF input file")
    p.add_argument("--girth", type=int, default=3,
                   help="connector length parameter (default: 3)")
    p.add_argument("--out", required=True, help="output graph file")

    p = sub.add_parser("check", help="validate an e.d. against a graph")
    p.add_argument("--input", required=True, help="graph file")
    p.add_argument("--ed", required=True,
                   help="file of whitespace-separated 1-based vertex ids")
    p.add_argument("--json", action="store_true", help="JSON output")
    return top


# ===== SHARED OUTPUT =====


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _read_graph(path: str) -> WeightedGraph:
    return parse_graph(_read_text(path))


def _emit(obj: dict) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _outcome_payload(out: Outcome, cls: str) -> dict:
    obj: dict = {"status": out.status.value}
    if out.status is Status.SOLVED:
        obj["vertices"] = [v + 1 for v in out.vertices]
        obj["weight"] = out.weight
    if out.witness is not None:
        obj["witness"] = {
            "pattern": out.witness.pattern,
            "vertices": [v + 1 for v in out.witness.vertices],
        }
    if out.status is Status.NO_ED and out.caveat:
        obj["caveat"] = True
    obj["class"] = cls
    return obj


def _print_outcome(out: Outcome, cls: str, as_json: bool) -> int:
    if as_json:
        _emit(_outcome_payload(out, cls))
    else:
        print(f"status: {out.status.value}")
        if out.status is Status.SOLVED:
            print("vertices:", " ".join(str(v + 1) for v in out.vertices))
            print(f"weight: {out.weight}")
        if out.witness is not None:
            ids = " ".join(str(v + 1) for v in out.witness.vertices)
            print(f"witness: {out.witness.pattern} {ids}")
        if out.status is Status.NO_ED and out.caveat:
            print("note: verdict is class-conditional")
    return _STATUS_EXIT[out.status]


# ===== SUBCOMMANDS =====


def _cmd_solve(args) -> int:
    g = _read_graph(args.input)
    out = solve(g, args.cls, k=args.k, parallel=args.parallel)
    return _print_outcome(out, args.cls, args.json)


def _cmd_oracle(args) -> int:
    g = _read_graph(args.input)
    method = args.method
    if method == "auto":
        method = "brute" if g.n <= BRUTE_LIMIT else "exact-cover"
    res = (exact_cover_ed(g) if method == "exact-cover"
           else brute_force_wed(g))
    out = (Outcome.solved(res.best_set, res.best_weight) if res.exists
           else Outcome.no_ed())
    return _print_outcome(out, method, args.json)


def _cmd_recognize(args) -> int:
    g = _read_graph(args.input)
    verdicts: dict = {}
    for tag, pats in RECOGNIZED_CLASSES:
        witness = None
        for pattern in pats:
            hit = find_induced(g, pattern)
            if hit is not None:
                witness = {"pattern": pattern,
                           "vertices": [v + 1 for v in hit]}
                break
        verdicts[tag] = ({"member": True} if witness is None
                         else {"member": False, "witness": witness})
    if args.json:
        _emit({"classes": verdicts})
    else:
        for tag, verdict in verdicts.items():
            if verdict["member"]:
                print(f"{tag}: member")
            else:
                w = verdict["witness"]
                ids = " ".join(str(v) for v in w["vertices"])
                print(f"{tag}: excluded ({w['pattern']}: {ids})")
    return EXIT_SOLVED


def _cmd_generate(args) -> int:
    formula = parse_monotone_cnf(_read_text(args.cnf))
    reduction = build_reduction(formula, args.girth)
    g = reduction.graph
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_graph(g))
    roles_path = args.out + ".roles"
    with open(roles_path, "w", encoding="utf-8") as fh:
        for v, role in enumerate(reduction.roles, start=1):
            fh.write(f"{v} {role}\n")
    print(f"wrote {g.n} vertices, {g.m} edges to {args.out}")
    print(f"wrote role table to {roles_path}")
    return EXIT_SOLVED


def _cmd_check(args) -> int:
    g = _read_graph(args.input)
    tokens = _read_text(args.ed).split()
    try:
        ids = [int(t) for t in tokens]
    except ValueError:
        raise ValueError(f"e.d. file {args.ed}: ids must be integers")
    for v in ids:
        if not 1 <= v <= g.n:
            raise ValueError(
                f"e.d. file {args.ed}: vertex id {v} out of range 1..{g.n}")
    zero_based = [v - 1 for v in ids]
    if is_efficient_dominating(g, zero_based):
        weight = g.weight_of(zero_based)
        if args.json:
            _emit({"valid": True, "weight": weight})
        else:
            print("valid efficient dominating set")
            print(f"weight: {weight}")
        return EXIT_SOLVED
    if args.json:
        _emit({"valid": False})
    else:
        print("not an efficient dominating set")
    return EXIT_NO_ED


_COMMANDS = {
    "solve": _cmd_solve,
    "oracle": _cmd_oracle,
    "recognize": _cmd_recognize,
    "generate": _cmd_generate,
    "check": _cmd_check,
}


# ===== ENTRY POINTS =====


def run(argv) -> int:
    """Execute one command line; return the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (OSError, ValueError) as exc:
        print(f"effdom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover - manual invocation
    sys.exit(main())
