"""Randomized sweeps that re-check every proven bound against the solvers.

Sampling is bit-reproducible: a splitmix64 generator drives every draw.
Graphs are Erdos-Renyi with n uniform in min_n..max_n, edge probability
uniform over {0.2, 0.5, 0.8} (an edge exists when the next 64-bit draw is
below floor(p * 2^64)), vertex pairs scanned in lexicographic order.  Each
table row draws from its own generator seeded with cfg.seed + its index in
the row tuple, so rows can be re-run independently of one another.

A failing check serializes its inputs and an operation transcript under the
witness directory; the TAP line points at the bundle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

from . import binary, unary
from .decomposition import tree_to_path, validate, width
from .errors import CapabilityError, ParameterError
from .exact import exact_pathwidth, exact_treewidth
from .fileformats import format_gr, format_td
from .graphs import Graph
from .invariants import graph_invariants
from .minors import MinorScript, apply_minor_script

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

# the sweep ties together the exact solvers (guard 16) and the invariant
# routines (guard 12); every derived graph below stays within 16 vertices
# as long as the base samples stay within 12
SWEEP_MAX_N = 12


class SplitMix64:
    """splitmix64; fixed here so seeds mean the same thing on every platform."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def next_below(self, n: int) -> int:
        """Uniform draw from 0..n-1 by rejection, so no modulo bias."""
        if n <= 0:
            raise ParameterError("next_below needs a positive bound")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % n


_EDGE_PROBS = (2, 5, 8)  # tenths


def random_graph(rng: SplitMix64, n: int, p_tenths: int) -> Graph:
    """Erdos-Renyi draw; pairs (i, j), i < j, scanned in lexicographic order."""
    threshold = (p_tenths << 64) // 10
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_u64() < threshold:
                edges.append((i, j))
    return Graph(range(n), edges)


def random_tree(rng: SplitMix64, n: int) -> Graph:
    """Uniform attachment: vertex i hangs off a uniform pick from 0..i-1."""
    if n < 1:
        raise ParameterError("a tree needs at least one vertex")
    edges = [(rng.next_below(i), i) for i in range(1, n)]
    return Graph(range(n), edges)


def sample_graph(rng, max_n, min_n=1, predicate=None) -> Graph:
    """One sweep sample: draw n, then a probability index, then the pairs.

    When a predicate is given, draws repeat until it holds; the retries
    consume generator state, which keeps the stream deterministic.
    """
    while True:
        n = min_n + rng.next_below(max_n - min_n + 1)
        p = _EDGE_PROBS[rng.next_below(3)]
        g = random_graph(rng, n, p)
        if predicate is None or predicate(g):
            return g


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 8
    samples: int = 200
    seed: int = 1
    ops: tuple[str, ...] | None = None  # None = every table row


@dataclass
class BoundCheck:
    name: str
    lhs: int
    rhs: int
    relation: str  # "<=", ">=", "=="
    passed: bool
    detail: str = ""
    witness: tuple[str, ...] = field(default_factory=tuple)


def _check_cfg(cfg: SweepConfig) -> None:
    if cfg.max_n < 1 or cfg.samples < 0:
        raise ParameterError("sweep needs max_n >= 1 and samples >= 0")
    if cfg.max_n > SWEEP_MAX_N:
        raise CapabilityError(
            f"sweep supports max_n <= {SWEEP_MAX_N}, got {cfg.max_n}"
        )


def _widths(g: Graph) -> tuple[int, int]:
    tw = exact_treewidth(g).value
    pw = exact_pathwidth(g).value
    return (-1 if tw is None else tw), (-1 if pw is None else pw)


def _write_witness(witness_dir, name, graphs, decs, transcript) -> tuple[str, ...]:
    if witness_dir is None:
        return ()
    bundle = Path(witness_dir) / name.replace("/", "-")
    bundle.mkdir(parents=True, exist_ok=True)
    for fname, g in graphs.items():
        (bundle / f"{fname}.gr").write_text(format_gr(g))
    for fname, dec in decs.items():
        (bundle / f"{fname}.td").write_text(format_td(dec))
    (bundle / "transcript.txt").write_text("".join(line + "\n" for line in transcript))
    return (str(bundle),)


# ---------------------------------------------------------------------------
# relations between width and the classical invariants


def run_relation_suite(cfg: SweepConfig, witness_dir=None) -> list[BoundCheck]:
    _check_cfg(cfg)
    rng = SplitMix64(cfg.seed)
    checks: list[BoundCheck] = []
    for s in range(cfg.samples):
        g = sample_graph(rng, cfg.max_n)
        tw, pw = _widths(g)
        inv = graph_invariants(g)
        n, m = g.n, g.m
        rows = [
            ("tw-le-pw", tw, pw, "<="),
            ("clique-tw", inv.clique_number - 1, tw, "<="),
            ("chrom-tw", inv.chromatic_number, tw + 1, "<="),
            ("chrom-pw", inv.chromatic_number, pw + 1, "<="),
            ("indep-tw", inv.independence_number + tw, n, "<="),
            ("indep-pw", inv.independence_number + pw, n, "<="),
            ("conn-tw", inv.vertex_connectivity, tw, "<="),
            ("conn-pw", inv.vertex_connectivity, pw, "<="),
            ("edges-tw", m, tw * n - tw * (tw + 1) // 2, "<="),
            ("edges-pw", m, pw * n - pw * (pw + 1) // 2, "<="),
        ]
        # edge-density width bound m/5.769 + O(log n): the additive term is
        # unspecified, so report it in the detail and never assert it
        advisory = f"advisory width <= m/5.769 = {m / 5.769:.2f} + O(log n)"
        for rule, lhs, rhs, rel in rows:
            passed = lhs <= rhs if rel == "<=" else lhs == rhs
            name = f"relations/{rule}/s{s:03d}"
            detail = advisory if rule.startswith("edges-") else ""
            witness = ()
            if not passed:
                witness = _write_witness(
                    witness_dir, name, {"input": g}, {},
                    [f"{rule}: {lhs} {rel} {rhs} failed",
                     f"tw={tw} pw={pw} {inv}", advisory],
                )
            checks.append(
                BoundCheck(name, lhs, rhs, rel, passed, detail=detail, witness=witness)
            )
    checks.sort(key=lambda c: c.name)
    return checks


# ---------------------------------------------------------------------------
# unary table


def _pick_vertex(rng, g: Graph) -> int:
    vs = g.vertices_sorted()
    return vs[rng.next_below(len(vs))]


def _pick_edge(rng, g: Graph) -> tuple[int, int]:
    es = g.edges_sorted()
    return es[rng.next_below(len(es))]


def _pick_distinct_pair(rng, g: Graph) -> tuple[int, int]:
    vs = g.vertices_sorted()
    i = rng.next_below(len(vs))
    j = rng.next_below(len(vs) - 1)
    if j >= i:
        j += 1
    return vs[i], vs[j]


def _pick_nonedge(rng, g: Graph) -> tuple[int, int]:
    vs = g.vertices_sorted()
    gaps = [
        (u, v)
        for i, u in enumerate(vs)
        for v in vs[i + 1:]
        if not g.has_edge(u, v)
    ]
    return gaps[rng.next_below(len(gaps))]


@dataclass
class _RowSample:
    """One evaluated table row: the claim, the table bound, and the truth."""

    graph: Graph
    result: Graph
    transcript: list[str]
    # per parameter: (carried result or None, table bound, lower bound, exact)
    tw: tuple
    pw: tuple
    relation_tw: str = "<="
    relation_pw: str = "<="


def _eval_param(res, carried, table, lower, exactw, relation, kind):
    """Sub-assertions behind one table cell; returns (passed, why)."""
    if carried is not None:
        report = validate(res, carried.decomposition)
        if not report.valid:
            return False, f"{kind} carried decomposition invalid: {report.violations[:3]}"
        w = width(carried.decomposition)
        got = -1 if w is None else w
        if got > carried.claimed_bound:
            return False, f"{kind} carried width {got} exceeds claim {carried.claimed_bound}"
        if carried.claimed_bound > table:
            return False, f"{kind} claim {carried.claimed_bound} exceeds table bound {table}"
    if relation == "==":
        if exactw != table:
            return False, f"{kind} exact {exactw} != {table}"
    elif exactw > table:
        return False, f"{kind} exact {exactw} exceeds table bound {table}"
    if exactw < lower:
        return False, f"{kind} exact {exactw} below lower bound {lower}"
    return True, ""


def _row_checks(row, idx, sample: _RowSample, witness_dir) -> list[BoundCheck]:
    out = []
    for kind, cell, rel in (("tw", sample.tw, sample.relation_tw),
                            ("pw", sample.pw, sample.relation_pw)):
        carried, table, lower, exactw = cell
        passed, why = _eval_param(
            sample.result, carried, table, lower, exactw, rel, kind
        )
        name = f"{row}/{kind}/s{idx:03d}"
        witness = ()
        if not passed:
            decs = {}
            if carried is not None:
                decs["carried"] = (sample.result, carried.decomposition)
            witness = _write_witness(
                witness_dir, name,
                {"input": sample.graph, "result": sample.result}, decs,
                sample.transcript + [why],
            )
        out.append(BoundCheck(name, exactw, table, rel, passed,
                              detail=why, witness=witness))
    return out


def _certificates(g: Graph):
    twr = exact_treewidth(g)
    pwr = exact_pathwidth(g)
    return twr.value, pwr.value, twr.certificate, pwr.certificate


def _unary_delete_vertex(rng, max_n):
    g = sample_graph(rng, max_n)
    ktw, kpw, dt, dp = _certificates(g)
    v = _pick_vertex(rng, g)
    res = unary.delete_vertex(g, v)
    ct = unary.delete_vertex_decomposition(dt, v)
    cp = unary.delete_vertex_decomposition(dp, v)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"delete vertex {v}"],
        (ct, ktw, ktw - 1, etw),
        (cp, kpw, kpw - 1, epw),
    )


def _unary_add_vertex(rng, max_n):
    g = sample_graph(rng, max_n)
    ktw, kpw, dt, dp = _certificates(g)
    nbrs = [v for v in g.vertices_sorted() if rng.next_below(2) == 1]
    res = unary.add_vertex(g, nbrs)
    ct = unary.add_vertex_decomposition(dt, nbrs)
    cp = unary.add_vertex_decomposition(dp, nbrs)
    etw, epw = _widths(res.graph)
    if len(nbrs) == 1:
        # pendant attachment keeps the treewidth at max(k, 1) exactly
        tw_cell = (ct, max(ktw, 1), max(ktw, 1), etw)
        rel_tw = "=="
    else:
        tw_cell = (ct, ktw + 1, ktw, etw)
        rel_tw = "<="
    return _RowSample(
        g, res.graph, [f"add vertex adjacent to {nbrs}"],
        tw_cell,
        (cp, kpw + 1, kpw, epw),
        relation_tw=rel_tw,
    )


def _unary_delete_edge(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2, predicate=lambda h: h.m >= 1)
    ktw, kpw, dt, dp = _certificates(g)
    u, v = _pick_edge(rng, g)
    res = unary.delete_edge(g, u, v)
    ct = unary.delete_edge_decomposition(dt, u, v)
    cp = unary.delete_edge_decomposition(dp, u, v)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"delete edge {u} {v}"],
        (ct, ktw, ktw - 1, etw),
        (cp, kpw, kpw - 1, epw),
    )


def _unary_add_edge(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2,
                     predicate=lambda h: h.m < h.n * (h.n - 1) // 2)
    ktw, kpw, dt, dp = _certificates(g)
    u, v = _pick_nonedge(rng, g)
    res = unary.add_edge(g, u, v)
    ct = unary.add_edge_decomposition(dt, u, v)
    cp = unary.add_edge_decomposition(dp, u, v)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"add edge {u} {v}"],
        (ct, ktw + 1, ktw, etw),
        (cp, kpw + 1, kpw, epw),
    )


def _unary_identify(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2)
    ktw, kpw, dt, dp = _certificates(g)
    v, w = _pick_distinct_pair(rng, g)
    res = unary.identify_vertices(g, v, w)
    ct = unary.identify_vertices_decomposition(dt, v, w)
    cp = unary.identify_vertices_decomposition(dp, v, w)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"identify {v} {w}"],
        (ct, ktw + 1, ktw - 2, etw),
        (cp, kpw + 1, kpw - 2, epw),
    )


def _unary_contract(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2, predicate=lambda h: h.m >= 1)
    ktw, kpw, dt, dp = _certificates(g)
    v, w = _pick_edge(rng, g)
    res = unary.contract_edge(g, v, w)
    ct = unary.contract_edge_decomposition(dt, v, w)
    cp = unary.contract_edge_decomposition(dp, v, w)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"contract {v} {w}"],
        (ct, ktw, ktw - 1, etw),
        (cp, kpw, kpw - 1, epw),
    )


def _unary_subdivide(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2, predicate=lambda h: h.m >= 1)
    ktw, kpw, dt, dp = _certificates(g)
    v, w = _pick_edge(rng, g)
    res = unary.subdivide_edge(g, v, w)
    ct = unary.subdivide_edge_decomposition(dt, v, w)
    cp = unary.subdivide_edge_decomposition(dp, v, w)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"subdivide {v} {w}"],
        (ct, max(ktw, 1), max(ktw, 1), etw),
        (cp, kpw + 1, kpw, epw),
        relation_tw="==",
    )


def _unary_incidence(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2,
                     predicate=lambda h: 1 <= h.m and h.n + h.m <= 16)
    ktw, kpw, dt, dp = _certificates(g)
    res = unary.incidence_graph(g)
    ct = unary.incidence_graph_decomposition(dt)
    cp = unary.incidence_graph_decomposition(dp)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, ["incidence graph"],
        (ct, max(ktw, 1), max(ktw, 1), etw),
        (cp, kpw + 1, kpw, epw),
        relation_tw="==",
    )


def _unary_power(rng, max_n):
    g = sample_graph(rng, max_n)
    ktw, kpw, dt, dp = _certificates(g)
    d = 2 + rng.next_below(2)
    res = unary.graph_power(g, d)
    ct = unary.graph_power_decomposition(dt, d)
    cp = unary.graph_power_decomposition(dp, d)
    etw, epw = _widths(res.graph)
    table_tw = (ktw + 1) * (1 + unary.power_degree_bound(g, d)) - 1
    table_pw = (kpw + 1) * (1 + unary.power_degree_bound(g, d)) - 1
    return _RowSample(
        g, res.graph, [f"power {d}"],
        (ct, table_tw, ktw, etw),
        (cp, table_pw, kpw, epw),
    )


def _unary_linegraph(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2,
                     predicate=lambda h: 1 <= h.m <= 16)
    ktw, kpw, dt, dp = _certificates(g)
    res = unary.line_graph(g)
    ct = unary.line_graph_decomposition(dt)
    cp = unary.line_graph_decomposition(dp)
    etw, epw = _widths(res.graph)
    dmax = max(g.degree(v) for v in g.vertices)
    # the line graph holds a clique per vertex of positive degree, and a
    # decomposition of it doubles back into one of the base graph, hence
    # the lower bounds max(deg)-1, tw-1 and floor(pw/2)
    low_tw = max(dmax - 1, ktw - 1)
    low_pw = max(dmax - 1, kpw // 2)
    return _RowSample(
        g, res.graph, ["line graph"],
        (ct, (ktw + 1) * dmax - 1, low_tw, etw),
        (cp, (kpw + 1) * dmax - 1, low_pw, epw),
    )


def _unary_switch(rng, max_n):
    g = sample_graph(rng, max_n)
    ktw, kpw, dt, dp = _certificates(g)
    v = _pick_vertex(rng, g)
    res = unary.seidel_switch(g, v)
    ct = unary.seidel_switch_decomposition(dt, v)
    cp = unary.seidel_switch_decomposition(dp, v)
    etw, epw = _widths(res.graph)
    return _RowSample(
        g, res.graph, [f"switch at {v}"],
        (ct, ktw + 1, ktw - 1, etw),
        (cp, kpw + 1, kpw - 1, epw),
    )


def _unary_minor(rng, max_n):
    g = sample_graph(rng, max_n, min_n=2)
    ktw, kpw, _, _ = _certificates(g)
    steps = []
    h = g
    for _ in range(1 + rng.next_below(3)):
        if h.n <= 1:
            break
        ops = ["dv"] + (["d", "c"] if h.m else [])
        op = ops[rng.next_below(len(ops))]
        if op == "dv":
            step = ("dv", _pick_vertex(rng, h))
        else:
            step = (op, *_pick_edge(rng, h))
        steps.append(step)
        h = apply_minor_script(h, MinorScript((step,)))
    result = apply_minor_script(g, MinorScript(tuple(steps)))
    etw, epw = _widths(result) if result.n else (-1, -1)
    return _RowSample(
        g, result, [f"minor script {steps!r}"],
        (None, ktw, -1, etw),
        (None, kpw, -1, epw),
    )


_UNARY_ROWS = (
    ("delete-vertex", _unary_delete_vertex),
    ("add-vertex", _unary_add_vertex),
    ("delete-edge", _unary_delete_edge),
    ("add-edge", _unary_add_edge),
    ("identify", _unary_identify),
    ("contract", _unary_contract),
    ("subdivide", _unary_subdivide),
    ("incidence", _unary_incidence),
    ("power", _unary_power),
    ("linegraph", _unary_linegraph),
    ("switch", _unary_switch),
    ("minor", _unary_minor),
)


def _select_rows(rows, ops):
    if ops is None:
        return list(rows)
    known = {name for name, _ in rows}
    missing = [op for op in ops if op not in known]
    if missing:
        raise ParameterError(f"unknown table rows: {', '.join(missing)}")
    return [(name, fn) for name, fn in rows if name in set(ops)]


def run_unary_table(cfg: SweepConfig, witness_dir=None) -> list[BoundCheck]:
    _check_cfg(cfg)
    wanted = {name for name, _ in _select_rows(_UNARY_ROWS, cfg.ops)}
    checks: list[BoundCheck] = []
    for index, (name, fn) in enumerate(_UNARY_ROWS):
        if name not in wanted:
            continue
        rng = SplitMix64(cfg.seed + index)
        for s in range(cfg.samples):
            sample = fn(rng, cfg.max_n)
            checks.extend(_row_checks(f"unary/{name}", s, sample, witness_dir))
    checks.sort(key=lambda c: c.name)
    return checks


# ---------------------------------------------------------------------------
# binary table


def _binary_disjoint_union(rng, max_n):
    cap = min(max_n, 8)
    g1 = sample_graph(rng, cap)
    g2 = sample_graph(rng, cap)
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    rt = binary.disjoint_union(g1, g2, d1t, d2t)
    rp = binary.disjoint_union(g1, g2, d1p, d2p)
    etw, epw = _widths(rt.graph)
    return _RowSample(
        g1, rt.graph, [f"disjoint union, second input:\n{format_gr(g2)}"],
        (rt.decomposition, max(k1t, k2t), max(k1t, k2t), etw),
        (rp.decomposition, max(k1p, k2p), max(k1p, k2p), epw),
        relation_tw="==", relation_pw="==",
    )


def _binary_join(rng, max_n):
    cap = min(max_n, 8)
    g1 = sample_graph(rng, cap)
    g2 = sample_graph(rng, cap)
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    rt = binary.join(g1, g2, d1t, d2t)
    rp = binary.join(g1, g2, d1p, d2p)
    etw, epw = _widths(rt.graph)
    bt = min(k1t + g2.n, k2t + g1.n)
    bp = min(k1p + g2.n, k2p + g1.n)
    return _RowSample(
        g1, rt.graph, [f"join, second input:\n{format_gr(g2)}"],
        (rt.decomposition, bt, bt, etw),
        (rp.decomposition, bp, bp, epw),
        relation_tw="==", relation_pw="==",
    )


def _binary_substitute(rng, max_n):
    cap = min(max_n, 8)
    g1 = sample_graph(rng, cap)
    g2 = sample_graph(rng, cap)
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    v = _pick_vertex(rng, g1)
    rt = binary.substitute(g1, v, g2, d1t, d2t)
    rp = binary.substitute(g1, v, g2, d1p, d2p)
    etw, epw = _widths(rt.graph)
    bt = min(k1t + g2.n, k2t + g1.n) - 1
    bp = min(k1p + g2.n, k2p + g1.n) - 1
    return _RowSample(
        g1, rt.graph, [f"substitute at {v}, second input:\n{format_gr(g2)}"],
        (rt.decomposition, bt, max(k1t - 1, k2t), etw),
        (rp.decomposition, bp, max(k1p - 1, k2p), epw),
    )


def _binary_substitute_neighbors(rng, max_n):
    cap = min(max_n, 8)
    g1 = sample_graph(rng, cap, min_n=2, predicate=lambda h: h.m >= 1)
    g2 = sample_graph(rng, cap)
    k1t, _, d1t, _ = _certificates(g1)
    k2t, _, d2t, _ = _certificates(g2)
    live = [v for v in g1.vertices_sorted() if g1.degree(v) > 0]
    v = live[rng.next_below(len(live))]
    rt = binary.substitute(g1, v, g2, d1t, d2t, combiner="neighbors")
    etw, epw = _widths(rt.graph)
    bound = max(k1t - 1, k2t) + g1.degree(v)
    return _RowSample(
        g1, rt.graph,
        [f"substitute (neighbor route) at {v}, second input:\n{format_gr(g2)}"],
        (rt.decomposition, bound, max(k1t - 1, k2t), etw),
        (None, epw, -1, epw),  # no path-decomposition route for this combiner
    )


def _binary_lexicographic(rng, max_n):
    cap = min(max_n, 4)
    g1 = sample_graph(rng, cap)
    g2 = sample_graph(rng, cap)
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    rt = binary.product("lexicographic", g1, g2, d1t)
    rp = binary.product("lexicographic", g1, g2, d1p)
    etw, epw = _widths(rt.graph)
    return _RowSample(
        g1, rt.graph, [f"lexicographic product, second input:\n{format_gr(g2)}"],
        (rt.decomposition, (k1t + 1) * g2.n - 1, max(k1t, k2t), etw),
        (rp.decomposition, (k1p + 1) * g2.n - 1, max(k1p, k2p), epw),
    )


def _binary_one_sum(rng, max_n):
    cap = min(max_n, 8)
    g1 = sample_graph(rng, cap)
    g2 = sample_graph(rng, cap)
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    v = _pick_vertex(rng, g1)
    w = _pick_vertex(rng, g2)
    rt = binary.one_sum(g1, v, g2, w, d1t, d2t)
    rp = binary.one_sum(g1, v, g2, w, d1p, d2p)
    etw, epw = _widths(rt.graph)
    return _RowSample(
        g1, rt.graph, [f"one-sum at {v}/{w}, second input:\n{format_gr(g2)}"],
        (rt.decomposition, max(k1t, k2t), max(k1t, k2t), etw),
        (rp.decomposition, max(k1p, k2p) + 1, max(k1p, k2p), epw),
        relation_tw="==",
    )


def _binary_corona(rng, max_n):
    g1 = sample_graph(rng, min(max_n, 3))
    g2 = sample_graph(rng, min(max_n, 4))
    k1t, k1p, d1t, d1p = _certificates(g1)
    k2t, k2p, d2t, d2p = _certificates(g2)
    rt = binary.corona(g1, g2, d1t, d2t)
    rp = binary.corona(g1, g2, d1p, d2p)
    etw, epw = _widths(rt.graph)
    return _RowSample(
        g1, rt.graph, [f"corona, second input:\n{format_gr(g2)}"],
        (rt.decomposition, max(k1t, k2t) + 1, max(k1t, k2t), etw),
        (rp.decomposition, max(k1p, k2p) + g1.n, max(k1p, k2p), epw),
    )


_BINARY_ROWS = (
    ("disjoint-union", _binary_disjoint_union),
    ("join", _binary_join),
    ("substitute", _binary_substitute),
    ("substitute-neighbors", _binary_substitute_neighbors),
    ("lexicographic", _binary_lexicographic),
    ("one-sum", _binary_one_sum),
    ("corona", _binary_corona),
)


def run_binary_table(cfg: SweepConfig, witness_dir=None) -> list[BoundCheck]:
    _check_cfg(cfg)
    wanted = {name for name, _ in _select_rows(_BINARY_ROWS, cfg.ops)}
    checks: list[BoundCheck] = []
    for index, (name, fn) in enumerate(_BINARY_ROWS):
        if name not in wanted:
            continue
        rng = SplitMix64(cfg.seed + index)
        for s in range(cfg.samples):
            sample = fn(rng, cfg.max_n)
            checks.extend(_row_checks(f"binary/{name}", s, sample, witness_dir))
    checks.sort(key=lambda c: c.name)
    return checks


# ---------------------------------------------------------------------------
# aggregated suites


def run_nordhaus_gaddum(cfg: SweepConfig, witness_dir=None) -> BoundCheck:
    """Width of a graph plus width of its complement is at least n - 2."""
    _check_cfg(cfg)
    rng = SplitMix64(cfg.seed)
    worst = None
    for s in range(cfg.samples):
        g = sample_graph(rng, cfg.max_n)
        co = unary.edge_complement(g).graph
        for kind, solve in (("tw", exact_treewidth), ("pw", exact_pathwidth)):
            total = solve(g).value + solve(co).value
            margin = total - (g.n - 2)
            if worst is None or margin < worst[0]:
                worst = (margin, total, g.n - 2, kind, g, s)
    if worst is None:
        return BoundCheck("nordhaus-gaddum", 0, 0, ">=", True, detail="no samples")
    margin, total, floor_, kind, g, s = worst
    passed = margin >= 0
    witness = ()
    if not passed:
        witness = _write_witness(
            witness_dir, "nordhaus-gaddum", {"input": g}, {},
            [f"sample {s}: {kind} sum {total} below n-2 = {floor_}"],
        )
    return BoundCheck("nordhaus-gaddum", total, floor_, ">=", passed,
                      detail=f"worst case: {kind} sum on sample {s}",
                      witness=witness)


_LOG_SLACK = 1e-9


def log_path_bound(tw: int, n: int) -> float:
    """(tw + 1) * (log3(2n + 1) + 1) - 1."""
    return (tw + 1) * (math.log(2 * n + 1, 3) + 1) - 1


def run_logbound(cfg: SweepConfig, witness_dir=None) -> BoundCheck:
    """Pathwidth stays within the logarithmic factor of treewidth, and the
    tree-to-path rewrite of an optimal certificate stays within it too."""
    _check_cfg(cfg)
    rng = SplitMix64(cfg.seed)
    worst = None
    failures = []
    for s in range(cfg.samples):
        g = sample_graph(rng, cfg.max_n)
        twr = exact_treewidth(g)
        pw = exact_pathwidth(g).value
        bound = log_path_bound(twr.value, g.n)
        rewritten = tree_to_path(g, twr.certificate)
        rw = width(rewritten)
        rw = -1 if rw is None else rw
        for kind, got in (("exact", pw), ("rewritten", rw)):
            margin = bound - got
            if worst is None or margin < worst[0]:
                worst = (margin, got, bound, kind, g, s)
            if got > bound + _LOG_SLACK:
                failures.append((kind, got, bound, g, s))
    if worst is None:
        return BoundCheck("logbound", 0, 0, "<=", True, detail="no samples")
    margin, got, bound, kind, g, s = worst
    passed = not failures
    witness = ()
    if failures:
        kind, got, bound, g, s = failures[0]
        witness = _write_witness(
            witness_dir, "logbound", {"input": g}, {},
            [f"sample {s}: {kind} pathwidth {got} above bound {bound!r}"],
        )
    return BoundCheck("logbound", got, math.floor(bound + _LOG_SLACK), "<=",
                      passed, detail=f"tightest: {kind} on sample {s}",
                      witness=witness)


SUITES = ("relations", "unary", "binary", "ng", "logbound")


def run_suite(name: str, cfg: SweepConfig, witness_dir=None) -> list[BoundCheck]:
    if name == "relations":
        return run_relation_suite(cfg, witness_dir)
    if name == "unary":
        return run_unary_table(cfg, witness_dir)
    if name == "binary":
        return run_binary_table(cfg, witness_dir)
    if name == "ng":
        return [run_nordhaus_gaddum(cfg, witness_dir)]
    if name == "logbound":
        return [run_logbound(cfg, witness_dir)]
    raise ParameterError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")


def render_tap(checks: list[BoundCheck]) -> str:
    lines = [f"1..{len(checks)}"]
    for c in checks:
        if c.passed:
            lines.append(f"ok {c.name}")
        else:
            suffix = f" witness={c.witness[0]}" if c.witness else ""
            lines.append(f"not ok {c.name}{suffix}")
    return "".join(line + "\n" for line in lines)
