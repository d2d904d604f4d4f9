"""Command line front end: generate, transform, solve, validate, sweep.

Operation scripts are line-oriented: one opcode plus arguments per line,
`#` starts a comment.  Vertex arguments are 1-based ranks into the sorted
vertex ids of the current graph, so scripts survive the renumbering that
binary operations perform; a single letter is accepted as an alias for its
alphabet position (a = 1).  Exit codes: 0 ok, 1 validation failure or
internal inconsistency, 2 usage, parse or script errors, 3 capability
guard exceeded.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import binary, unary
from .decomposition import (
    PathDecomposition,
    TreeDecomposition,
    validate,
    width,
)
from .errors import InconsistencyError, ParameterError, ScriptError, ToolError
from .exact import exact_pathwidth, exact_treewidth
from .fileformats import read_gr, read_td, write_gr, write_td
from .graphs import Graph, generate, generator_names
from .harness import SUITES, SweepConfig, render_tap, run_suite


# --- operation scripts ------------------------------------------------------


@dataclass(frozen=True)
class OpScript:
    lines: tuple[tuple[int, str, tuple], ...]  # (line number, opcode, args)
    source: str


# opcode -> (binary?, argument pattern); "v" = vertex rank, "n" = literal
# count, "w" = word
_OPCODES = {
    "delv": (False, "v"),
    "addv": (False, "v*"),
    "dele": (False, "vv"),
    "adde": (False, "vv"),
    "ident": (False, "vv"),
    "contract": (False, "vv"),
    "subdiv": (False, "vv"),
    "inci": (False, ""),
    "power": (False, "n"),
    "linegraph": (False, ""),
    "complement": (False, ""),
    "localcomp": (False, "v"),
    "seidelcomp": (False, "v"),
    "switch": (False, "v"),
    "dunion": (True, ""),
    "join": (True, ""),
    "union": (True, ""),
    "subst": (True, "v"),
    "prod": (True, "w"),
    "onesum": (True, "vv"),
    "corona": (True, ""),
}


def _parse_token(token: str, lineno: int) -> int:
    if len(token) == 1 and token.isalpha():
        return ord(token.lower()) - ord("a") + 1
    try:
        value = int(token)
    except ValueError:
        raise ScriptError(f"line {lineno}: bad argument {token!r}") from None
    return value


def parse_opscript(text: str, source: str = "<script>") -> OpScript:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        opcode, *args = line.split()
        if opcode not in _OPCODES:
            raise ScriptError(f"line {lineno}: unknown operation {opcode!r}")
        _, pattern = _OPCODES[opcode]
        if pattern == "v*":
            parsed = tuple(_parse_token(t, lineno) for t in args)
        elif pattern == "w":
            if len(args) != 1:
                raise ScriptError(f"line {lineno}: {opcode} takes one argument")
            parsed = (args[0],)
        else:
            if len(args) != len(pattern):
                raise ScriptError(
                    f"line {lineno}: {opcode} takes {len(pattern)} argument(s)"
                )
            parsed = tuple(_parse_token(t, lineno) for t in args)
        lines.append((lineno, opcode, parsed))
    return OpScript(tuple(lines), source)


def read_opscript(path) -> OpScript:
    with open(path, encoding="utf-8") as fh:
        return parse_opscript(fh.read(), source=str(path))


def _rank_to_vertex(g: Graph, rank: int, lineno: int) -> int:
    vs = g.vertices_sorted()
    if not 1 <= rank <= len(vs):
        raise ScriptError(
            f"line {lineno}: vertex rank {rank} out of range 1..{len(vs)}"
        )
    return vs[rank - 1]


@dataclass
class _PipeState:
    graph: Graph
    carried: TreeDecomposition | PathDecomposition | None
    claimed: int | None


def _need_carry_support(lineno: int, opcode: str):
    raise ScriptError(
        f"line {lineno}: {opcode} has no decomposition transformer; "
        "drop --carry or split the pipeline"
    )


def _certificate_for(g: Graph, kind: str):
    report = exact_treewidth(g) if kind == "tree" else exact_pathwidth(g)
    return report.certificate


def _apply_unary(state: _PipeState, lineno: int, opcode: str, args: tuple):
    g = state.graph
    rank = lambda k: _rank_to_vertex(g, k, lineno)
    try:
        if opcode == "delv":
            res, tf, targs = unary.delete_vertex(g, rank(args[0])), \
                unary.delete_vertex_decomposition, (rank(args[0]),)
        elif opcode == "addv":
            nbrs = [rank(k) for k in args]
            res, tf, targs = unary.add_vertex(g, nbrs), \
                unary.add_vertex_decomposition, (nbrs,)
        elif opcode == "dele":
            u, v = rank(args[0]), rank(args[1])
            res, tf, targs = unary.delete_edge(g, u, v), \
                unary.delete_edge_decomposition, (u, v)
        elif opcode == "adde":
            u, v = rank(args[0]), rank(args[1])
            res, tf, targs = unary.add_edge(g, u, v), \
                unary.add_edge_decomposition, (u, v)
        elif opcode == "ident":
            u, v = rank(args[0]), rank(args[1])
            res, tf, targs = unary.identify_vertices(g, u, v), \
                unary.identify_vertices_decomposition, (u, v)
        elif opcode == "contract":
            u, v = rank(args[0]), rank(args[1])
            res, tf, targs = unary.contract_edge(g, u, v), \
                unary.contract_edge_decomposition, (u, v)
        elif opcode == "subdiv":
            u, v = rank(args[0]), rank(args[1])
            res, tf, targs = unary.subdivide_edge(g, u, v), \
                unary.subdivide_edge_decomposition, (u, v)
        elif opcode == "inci":
            res, tf, targs = unary.incidence_graph(g), \
                unary.incidence_graph_decomposition, ()
        elif opcode == "power":
            res, tf, targs = unary.graph_power(g, args[0]), \
                unary.graph_power_decomposition, (args[0],)
        elif opcode == "linegraph":
            res, tf, targs = unary.line_graph(g), \
                unary.line_graph_decomposition, ()
        elif opcode == "complement":
            res, tf, targs = unary.edge_complement(g), None, ()
        elif opcode == "localcomp":
            res, tf, targs = unary.local_complement(g, rank(args[0])), None, ()
        elif opcode == "seidelcomp":
            res, tf, targs = unary.seidel_complement(g, rank(args[0])), None, ()
        else:  # switch
            v = rank(args[0])
            res, tf, targs = unary.seidel_switch(g, v), \
                unary.seidel_switch_decomposition, (v,)
    except ParameterError as exc:
        raise ScriptError(f"line {lineno}: {exc}") from exc
    if state.carried is not None:
        if tf is None:
            _need_carry_support(lineno, opcode)
        try:
            carried = tf(state.carried, *targs)
        except ParameterError as exc:
            raise ScriptError(f"line {lineno}: {exc}") from exc
        state.carried = carried.decomposition
        state.claimed = carried.claimed_bound
    state.graph = res.graph


def _apply_binary(state: _PipeState, lineno: int, opcode: str, args: tuple,
                  g2: Graph | None, kind: str):
    if g2 is None:
        raise ScriptError(f"line {lineno}: {opcode} needs --graph2")
    g = state.graph
    d1 = state.carried
    d2 = None
    if d1 is not None and opcode in ("dunion", "join", "subst", "onesum", "corona"):
        # the second input arrives without a decomposition; solve for one
        d2 = _certificate_for(g2, kind)
    try:
        if opcode == "dunion":
            res = binary.disjoint_union(g, g2, d1, d2)
        elif opcode == "join":
            res = binary.join(g, g2, d1, d2)
        elif opcode == "union":
            if d1 is not None:
                _need_carry_support(lineno, opcode)
            res = binary.union_same_vertices(g, g2)
        elif opcode == "subst":
            v = _rank_to_vertex(g, args[0], lineno)
            res = binary.substitute(g, v, g2, d1, d2)
        elif opcode == "prod":
            if d1 is not None and args[0] != "lexicographic":
                _need_carry_support(lineno, f"prod {args[0]}")
            res = binary.product(args[0], g, g2, d1)
        elif opcode == "onesum":
            v = _rank_to_vertex(g, args[0], lineno)
            w = _rank_to_vertex(g2, args[1], lineno)
            res = binary.one_sum(g, v, g2, w, d1, d2)
        else:  # corona
            res = binary.corona(g, g2, d1, d2)
    except ParameterError as exc:
        raise ScriptError(f"line {lineno}: {exc}") from exc
    if d1 is not None:
        state.carried = res.decomposition.decomposition
        state.claimed = res.decomposition.claimed_bound
    state.graph = res.graph


def apply_opscript(script: OpScript, g: Graph, g2: Graph | None = None,
                   carry=None, kind: str = "tree") -> _PipeState:
    state = _PipeState(g, carry, None if carry is None else width(carry))
    if state.claimed is None and carry is not None:
        state.claimed = -1
    for lineno, opcode, args in script.lines:
        if _OPCODES[opcode][0]:
            _apply_binary(state, lineno, opcode, args, g2, kind)
        else:
            _apply_unary(state, lineno, opcode, args)
    return state


# --- subcommands ------------------------------------------------------------


def cmd_gen(args) -> int:
    try:
        params = [int(p) for p in args.params[:-1]]
    except ValueError:
        raise ParameterError(
            "generator parameters must be integers, followed by the output path"
        ) from None
    out = args.params[-1]
    g = generate(args.kind, *params)
    write_gr(g, out)
    return 0


def cmd_width(args) -> int:
    g = read_gr(args.graph)
    report = exact_treewidth(g) if args.param == "tw" else exact_pathwidth(g)
    print("undefined" if report.value is None else report.value)
    if args.cert:
        write_td(report.certificate, args.cert)
    return 0


def cmd_apply(args) -> int:
    if args.carry_out and not args.carry:
        raise ParameterError("--carry-out needs --carry")
    g = read_gr(args.graph)
    g2 = read_gr(args.graph2) if args.graph2 else None
    script = read_opscript(args.script)
    carry = None
    if args.carry:
        carry = read_td(args.carry, g, kind=args.kind)
        report = validate(g, carry)
        if not report.valid:
            print(_render_violations(report), end="")
            return 1
    state = apply_opscript(script, g, g2, carry, args.kind)
    if carry is not None:
        report = validate(state.graph, state.carried)
        if not report.valid:
            raise InconsistencyError(
                "pipeline produced an invalid decomposition; refusing to write"
            )
    write_gr(state.graph, args.out)
    if carry is not None:
        if args.carry_out:
            write_td(state.carried, args.carry_out)
        print(f"claimed {state.claimed}")
    return 0


def _render_violations(report) -> str:
    out = []
    for v in report.violations:
        tag, witness = v.tag, v.witness
        shown = " ".join(str(x + 1) for x in witness)
        if tag in ("tw-2", "pw-2"):
            out.append(f"({tag}) edge {shown}")
        elif tag == "bag":
            node, vertex = witness
            out.append(f"({tag}) node {node + 1} vertex {vertex + 1}")
        else:
            out.append(f"({tag}) vertex {shown}")
    return "".join(line + "\n" for line in out)


def cmd_validate(args) -> int:
    g = read_gr(args.graph)
    d = read_td(args.td, g, kind=args.kind)
    report = validate(g, d)
    if report.valid:
        w = width(d)
        print("valid" if w is None else f"valid width {w}")
        return 0
    print(_render_violations(report), end="")
    return 1


def cmd_harness(args) -> int:
    cfg = SweepConfig(max_n=args.max_n, samples=args.samples, seed=args.seed)
    suites = SUITES if args.suite == "all" else (args.suite,)
    checks = []
    for name in suites:
        checks.extend(run_suite(name, cfg, args.witness_dir))
    sys.stdout.write(render_tap(checks))
    return 0 if all(c.passed for c in checks) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twpw",
        description="graph width toolkit: exact solvers, rewrites, sweeps",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a generated graph")
    p.add_argument("kind", choices=generator_names())
    p.add_argument("params", nargs="+",
                   help="generator parameters, then the output path")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("width", help="exact width of a graph")
    p.add_argument("graph")
    p.add_argument("--param", choices=("tw", "pw"), required=True)
    p.add_argument("--cert", help="write an optimal decomposition here")
    p.set_defaults(fn=cmd_width)

    p = sub.add_parser("apply", help="run an operation script over a graph")
    p.add_argument("graph")
    p.add_argument("script")
    p.add_argument("out")
    p.add_argument("--graph2", help="second input for binary operations")
    p.add_argument("--carry", help="decomposition to rewrite alongside")
    p.add_argument("--carry-out", help="where to write the rewritten decomposition")
    p.add_argument("--kind", choices=("tree", "path"), default="tree")
    p.set_defaults(fn=cmd_apply)

    p = sub.add_parser("validate", help="check a decomposition against a graph")
    p.add_argument("graph")
    p.add_argument("td")
    p.add_argument("--kind", choices=("tree", "path"), default="tree")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("harness", help="run the bound-checking sweeps")
    p.add_argument("action", choices=("run",))
    p.add_argument("--suite", choices=("all",) + SUITES, default="all")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--witness-dir", default="witnesses")
    p.set_defaults(fn=cmd_harness)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ToolError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
