"""List edge / total coloring of planar graphs with no triangle adjacent to a C4.

``solve`` peels configurations off until no edge is left, then replays the
extension steps in reverse.  ``verify`` is an independent checker.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence

from .configurations import PRIORITY, detect_configuration, format_configuration
from .plane_graph import PlaneGraph, TriangleC4Witness, edge_key, find_triangle_adjacent_c4
from .reductions import EDGE, TOTAL, ExtensionPlan, extend, reduce

ListAssignment = Mapping  # element -> collection of colors
Coloring = dict


class HypothesisViolated(ValueError):
    def __init__(self, message: str, witness: Optional[TriangleC4Witness] = None):
        super().__init__(message)
        self.witness = witness


class NoConfigurationFound(RuntimeError):
    """No reducible configuration in a graph that should have one."""

    def __init__(self, graph: PlaneGraph, k: int, report):
        super().__init__(f"no configuration found in {graph!r} with k={k}")
        self.graph = graph
        self.k = k
        self.report = report


@dataclass
class SolveContext:
    k: int
    mode: str
    lists: ListAssignment
    trace: Optional[list[str]] = field(default=None)

    @property
    def total(self) -> bool:
        return self.mode == TOTAL


def default_k(g: PlaneGraph) -> int:
    return max(7, g.max_degree)


def make_context(
    g: PlaneGraph,
    lists: ListAssignment,
    mode: str = EDGE,
    k: Optional[int] = None,
    trace: bool = False,
) -> SolveContext:
    if mode not in (EDGE, TOTAL):
        raise ValueError(f"unknown mode {mode!r}")
    base = default_k(g)
    if k is None:
        k = base
    elif k < base:
        raise HypothesisViolated(f"k={k} is below max(7, max degree)={base}")
    return SolveContext(k, mode, lists, [] if trace else None)


def uniform_lists(g: PlaneGraph, mode: str, k: int) -> dict:
    """Every element gets {1..k} (edge mode) or {1..k+1} (total mode)."""
    size = k + 1 if mode == TOTAL else k
    colors = frozenset(range(1, size + 1))
    out: dict = {e: colors for e in g.edges()}
    if mode == TOTAL:
        out.update({v: colors for v in g.vertices})
    return out


def check_hypotheses(g: PlaneGraph, ctx: SolveContext) -> None:
    witness = find_triangle_adjacent_c4(g)
    if witness is not None:
        raise HypothesisViolated(witness.describe(), witness)
    if g.max_degree > ctx.k:
        raise HypothesisViolated(f"max degree {g.max_degree} exceeds k={ctx.k}")
    need = ctx.k + 1 if ctx.total else ctx.k
    elements = list(g.edges()) + (list(g.vertices) if ctx.total else [])
    for x in elements:
        if x not in ctx.lists:
            raise HypothesisViolated(f"no list for {x!r}")
        if len(set(ctx.lists[x])) < need:
            raise HypothesisViolated(f"list of {x!r} has {len(set(ctx.lists[x]))} < {need} colors")


def solve(
    g: PlaneGraph,
    ctx: SolveContext,
    kinds: Sequence[str] = PRIORITY,
    check_invariants: bool = False,
) -> Coloring:
    """Proper list coloring of ``g`` (edges, plus vertices in total mode).

    ``kinds`` fixes the order in which configurations are looked for; any
    order is sound.  With ``check_invariants`` every intermediate graph is
    re-validated and re-checked against the hypotheses, and every extension
    is verified, which is slow.
    """
    check_hypotheses(g, ctx)
    plans: list[ExtensionPlan] = []
    cur = g
    while cur.num_edges:
        c = detect_configuration(cur, ctx.k, kinds)
        if c is None:
            from .discharging import audit

            raise NoConfigurationFound(cur, ctx.k, audit(cur, ctx.k))
        nxt, plan = reduce(cur, c, ctx.mode, ctx.k)
        assert nxt.num_edges < cur.num_edges
        if check_invariants:
            nxt.validate()
            assert find_triangle_adjacent_c4(nxt) is None
            assert nxt.max_degree <= cur.max_degree
        if ctx.trace is not None:
            ctx.trace.append(format_configuration(c))
        plans.append(plan)
        cur = nxt

    coloring: Coloring = {}
    if ctx.total:
        for v in cur.vertices:
            coloring[v] = min(ctx.lists[v])
    for plan in reversed(plans):
        extend(plan, coloring, ctx.lists)
        if check_invariants:
            sub_ctx = SolveContext(ctx.k, ctx.mode, ctx.lists)
            bad = verify(plan.graph, sub_ctx, coloring)
            assert not bad, (bad, plan.serialize())
    return coloring


def verify(g: PlaneGraph, ctx: SolveContext, coloring: Mapping) -> list[str]:
    """Every missing, off-list or conflicting assignment; empty means proper."""
    problems = []
    edges = g.edges()
    elements = list(edges) + (list(g.vertices) if ctx.total else [])
    for x in elements:
        if x not in coloring:
            problems.append(f"uncolored {x!r}")
        elif coloring[x] not in ctx.lists.get(x, ()):
            problems.append(f"off-list {x!r} color {coloring[x]}")

    def clash(x, y, why):
        if x in coloring and y in coloring and coloring[x] == coloring[y]:
            problems.append(f"{why} {x!r} {y!r} share color {coloring[x]}")

    for v in g.vertices:
        inc = sorted(edge_key(v, w) for w in g.neighbors(v))
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                clash(inc[i], inc[j], "adjacent edges")
        if ctx.total:
            for e in inc:
                clash(v, e, "incident")
    if ctx.total:
        for u, v in edges:
            clash(u, v, "adjacent vertices")
    return problems
