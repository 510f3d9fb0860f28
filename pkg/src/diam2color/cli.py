"""Batch front end: parse instance files, dispatch solvers, emit decisions
with certificates, check class properties, and generate instances.

Instance files are DIMACS-style with 1-based vertex labels:

    c comment
    p edge <n> <m>
    e <u> <v>
    l <v> <colors>     optional; colors is a nonempty string over a, b, c

A missing list line means the full palette.  Exit codes: 0 for any decision,
1 for parse or I/O errors, 2 for precondition or class violations.
"""

from __future__ import annotations

import argparse
import math
import sys

from .errors import ParseError, SolverError
from .graph import Graph, build_graph, farthest_pair, find_induced_cycle
from .oracle import DEFAULT_BRUTE_FORCE_BOUND, GeneratorSpec, brute_force, generate
from .propagation import (
    FULL_LIST,
    COLOR_LETTERS,
    ListAssignment,
    mask_from_letters,
    mask_to_letters,
)
from .results import SolveResult, Telemetry
from .solver_c3c7 import solve_c3c7
from .solver_c4cs import solve_c4cs

AUTO_SCAN_BOUND = 12


def parse_instance(text: str) -> tuple[Graph, ListAssignment]:
    n = -1
    declared_edges = -1
    edges: list[tuple[int, int]] = []
    list_lines: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        kind = tokens[0]
        if kind == "p":
            if n >= 0:
                raise ParseError("second header line", lineno)
            if len(tokens) != 4 or tokens[1] != "edge":
                raise ParseError(f"malformed header {raw!r}", lineno)
            try:
                n, declared_edges = int(tokens[2]), int(tokens[3])
            except ValueError:
                raise ParseError(f"malformed header {raw!r}", lineno)
            if n < 0 or declared_edges < 0:
                raise ParseError("negative counts in header", lineno)
        elif kind == "e":
            if n < 0:
                raise ParseError("edge before header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed edge line {raw!r}", lineno)
            try:
                u, v = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(f"malformed edge line {raw!r}", lineno)
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(f"edge endpoint outside 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u}", lineno)
            edges.append((u - 1, v - 1))
        elif kind == "l":
            if n < 0:
                raise ParseError("list line before header", lineno)
            if len(tokens) != 3:
                raise ParseError(f"malformed list line {raw!r}", lineno)
            try:
                v = int(tokens[1])
            except ValueError:
                raise ParseError(f"malformed list line {raw!r}", lineno)
            if not 1 <= v <= n:
                raise ParseError(f"list vertex outside 1..{n}", lineno)
            if v - 1 in list_lines:
                raise ParseError(f"duplicate list line for vertex {v}", lineno)
            try:
                mask = mask_from_letters(tokens[2])
            except SolverError:
                raise ParseError(f"invalid colors {tokens[2]!r}", lineno)
            list_lines[v - 1] = mask
        else:
            raise ParseError(f"unknown line type {kind!r}", lineno)
    if n < 0:
        raise ParseError("missing header line")
    if len(edges) != declared_edges:
        raise ParseError(f"header declares {declared_edges} edges, file has {len(edges)}")
    graph = build_graph(n, edges)
    masks = [FULL_LIST] * n
    for v, mask in list_lines.items():
        masks[v] = mask
    return graph, ListAssignment(masks)


def render_instance(g: Graph, lists: ListAssignment | None = None) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    if lists is not None:
        for v, mask in enumerate(lists.masks):
            if mask != FULL_LIST:
                lines.append(f"l {v + 1} {mask_to_letters(mask)}")
    return "\n".join(lines) + "\n"


def _describe(err: SolverError) -> str:
    """Render an error with 1-based labels for the console."""
    from .errors import HasInducedCycle, NotDiameterTwo, StructureViolation

    if isinstance(err, HasInducedCycle):
        return f"HasInducedC{err.length}: vertices {tuple(v + 1 for v in err.vertices)}"
    if isinstance(err, NotDiameterTwo):
        return f"NotDiameterTwo: d({err.u + 1},{err.v + 1})={err.distance}"
    if isinstance(err, StructureViolation):
        v = err.violation
        return f"StructureViolation[{v.rule}]: witness {tuple(w + 1 for w in v.witness)}"
    return f"{type(err).__name__}: {err}"


def _pick_auto(g: Graph, out) -> tuple[str, int | None]:
    if farthest_pair(g)[2] <= 2:
        c3 = find_induced_cycle(g, 3) is None
        if c3 and find_induced_cycle(g, 7) is None:
            return ("c3c7", None)
        if find_induced_cycle(g, 4) is None:
            for s in range(5, AUTO_SCAN_BOUND + 1):
                if find_induced_cycle(g, s) is None:
                    return ("c4cs", s)
    print("auto: no matching class found, falling back to the oracle", file=out)
    return ("oracle", None)


def _cmd_solve(args) -> int:
    try:
        text = open(args.input, encoding="utf-8").read()
    except OSError as err:
        print(f"cannot read {args.input}: {err}", file=sys.stderr)
        return 1
    try:
        g, lists = parse_instance(text)
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1

    solver = args.solver
    s = args.s
    if solver == "c4cs" and s is None:
        print("solver c4cs requires --s", file=sys.stderr)
        return 2
    if solver == "auto":
        solver, s = _pick_auto(g, sys.stderr)
    try:
        if solver == "c4cs":
            result = solve_c4cs(g, lists, s,
                                check_input=False if args.skip_class_checks else None,
                                use_component_branch=args.component_branch,
                                component_budget=args.component_budget)
        elif solver == "c3c7":
            result = solve_c3c7(g, lists,
                                check_input=False if args.skip_class_checks else None)
        else:
            coloring = brute_force(g, lists, max_vertices=args.oracle_bound)
            result = SolveResult(coloring is not None, coloring,
                                 Telemetry(fallback=True))
    except SolverError as err:
        print(_describe(err), file=sys.stderr)
        return 2

    if result.colorable:
        print("YES")
        for v, color in enumerate(result.coloring):
            print(f"v {v + 1} {COLOR_LETTERS[color]}")
    else:
        print("NO")
    if args.telemetry:
        t = result.telemetry
        print(f"instances={t.two_list_instances} fallback={'true' if t.fallback else 'false'}")
    return 0


def _cmd_check(args) -> int:
    try:
        text = open(args.input, encoding="utf-8").read()
        g, _ = parse_instance(text)
    except OSError as err:
        print(f"cannot read {args.input}: {err}", file=sys.stderr)
        return 1
    except ParseError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1
    known = {"c3": 3, "c4": 4, "c5": 5, "c7": 7}
    for token in args.properties.split(","):
        token = token.strip()
        if token == "diam2":
            u, v, dist = farthest_pair(g)
            if dist <= 2:
                print("diam2: holds")
            else:
                shown = "inf" if dist is math.inf else dist
                print(f"diam2: fails: d({u + 1},{v + 1})={shown}")
        elif token in known or token.startswith("cs="):
            try:
                k = known[token] if token in known else int(token.split("=", 1)[1])
            except ValueError:
                print(f"unknown property {token!r}", file=sys.stderr)
                return 1
            cert = find_induced_cycle(g, k)
            if cert is None:
                print(f"{token}: holds")
            else:
                print(f"{token}: fails: {tuple(v + 1 for v in cert.vertices)}")
        else:
            print(f"unknown property {token!r}", file=sys.stderr)
            return 1
    return 0


def _cmd_gen(args) -> int:
    forbidden: list[int] = []
    if args.constraints:
        named = {"c3free": 3, "c4free": 4, "c7free": 7}
        for token in args.constraints.split(","):
            token = token.strip()
            if token in named:
                forbidden.append(named[token])
            elif token.startswith("csfree="):
                try:
                    forbidden.append(int(token.split("=", 1)[1]))
                except ValueError:
                    print(f"bad constraint {token!r}", file=sys.stderr)
                    return 1
            else:
                print(f"bad constraint {token!r}", file=sys.stderr)
                return 1
    try:
        spec = GeneratorSpec(family=args.family, n=args.n, p=args.p, seed=args.seed,
                             forbidden_cycles=tuple(sorted(set(forbidden))))
        g = generate(spec)
    except SolverError as err:
        print(_describe(err), file=sys.stderr)
        return 2
    text = render_instance(g)
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as err:
            print(f"cannot write {args.out}: {err}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diam2color",
        description="List 3-coloring on diameter-two graphs with forbidden induced cycles")
    sub = parser.add_subparsers(dest="command", required=True)

    solve = sub.add_parser("solve", help="decide one instance file")
    solve.add_argument("--solver", choices=["c4cs", "c3c7", "oracle", "auto"], default="auto")
    solve.add_argument("--s", type=int, default=None,
                       help="forbidden cycle length for c4cs (>= 5)")
    solve.add_argument("--input", required=True)
    solve.add_argument("--telemetry", action="store_true")
    solve.add_argument("--skip-class-checks", action="store_true",
                       help="trust the input class; violations surface lazily")
    solve.add_argument("--component-branch", action="store_true",
                       help="enable the shell-class component split fast path")
    solve.add_argument("--component-budget", type=int, default=10)
    solve.add_argument("--oracle-bound", type=int, default=DEFAULT_BRUTE_FORCE_BOUND)
    solve.set_defaults(func=_cmd_solve)

    check = sub.add_parser("check", help="evaluate class properties of a file")
    check.add_argument("--input", required=True)
    check.add_argument("--properties", required=True,
                       help="comma list from diam2,c3,c4,c5,c7,cs=<k>")
    check.set_defaults(func=_cmd_check)

    gen = sub.add_parser("gen", help="write a generated instance file")
    gen.add_argument("--family", required=True,
                     choices=["petersen", "grotzsch", "c5", "k4", "random_diam2"])
    gen.add_argument("--n", type=int, default=0)
    gen.add_argument("--p", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--constraints", default="",
                     help="comma list from c3free,c4free,c7free,csfree=<k>")
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


def run() -> None:
    sys.exit(main())
