"""Delete a configuration, then extend a coloring of the rest back over it.

In total mode every configuration except C7 is handled by discoloring the
low-degree vertices around the removed part, running the edge procedure on
the total-mode working lists, and recoloring those vertices last: a vertex
of degree at most k/2 has at most k constraints against a list of k+1.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .configurations import C1, C4, C5, C6, C7, Configuration, format_configuration, verify_configuration
from .kernels import (
    K23Instance,
    KernelError,
    WorkingLists,
    color_even_cycle,
    color_k23,
)
from .plane_graph import Edge, PlaneGraph, edge_key

EDGE = "edge"
TOTAL = "total"


class InvalidWitness(ValueError):
    pass


class ExtensionFailure(AssertionError):
    """A step the proof guarantees could not be carried out; carries the plan."""

    def __init__(self, message: str, plan: "ExtensionPlan"):
        super().__init__(f"{message}\nplan: {plan.serialize()}")
        self.plan = plan


@dataclass
class ExtensionPlan:
    config: Configuration
    graph: PlaneGraph  # the graph before the deletion
    removed_edges: tuple[Edge, ...]
    removed_vertices: tuple[int, ...]
    discolored_vertices: tuple[int, ...]
    mode: str
    k: int
    notes: list[str] = field(default_factory=list)

    def serialize(self) -> str:
        return json.dumps(
            {
                "config": format_configuration(self.config),
                "mode": self.mode,
                "k": self.k,
                "removed_edges": [list(e) for e in self.removed_edges],
                "removed_vertices": list(self.removed_vertices),
                "discolored_vertices": list(self.discolored_vertices),
                "rotation": {str(v): list(r) for v, r in self.graph.rotation.items()},
                "notes": self.notes,
            },
            sort_keys=True,
        )


def reduce(g: PlaneGraph, c: Configuration, mode: str, k: int) -> tuple[PlaneGraph, ExtensionPlan]:
    if mode not in (EDGE, TOTAL):
        raise ValueError(f"unknown mode {mode!r}")
    if c.kind not in ("C1", "C4", "C5", "C6", "C7") or not verify_configuration(g, k, c):
        raise InvalidWitness(format_configuration(c))

    removed_vertices: tuple[int, ...] = ()
    if isinstance(c, C1):
        removed_edges = (edge_key(c.u, c.v),)
    elif isinstance(c, C7):
        removed_edges = (edge_key(c.u, c.u1),)
        if mode == TOTAL:
            removed_edges += (edge_key(c.u, c.u2),)
    else:
        removed_vertices = tuple(c.spokes) if isinstance(c, C4) else tuple(c.vs)
        removed_edges = tuple(
            sorted({edge_key(v, w) for v in removed_vertices for w in g.neighbors(v)})
        )

    discolored: tuple[int, ...] = ()
    if mode == TOTAL:
        if isinstance(c, C7):
            discolored = (c.u, c.u1, c.u2)
        else:
            gone = set(removed_vertices)
            near = {x for e in removed_edges for x in e}
            near |= {w for v in gone for w in g.neighbors(v)}
            discolored = tuple(sorted(x for x in near - gone if g.degree(x) <= k // 2))
            half = k // 2
            for e in removed_edges:
                assert min(g.degree(e[0]), g.degree(e[1])) <= half, (c, e)

    if removed_vertices:
        sub = g.delete_vertices(removed_vertices)
    else:
        sub = g.delete_edges(removed_edges)
    plan = ExtensionPlan(c, g, removed_edges, removed_vertices, discolored, mode, k)
    return sub, plan


# ----------------------------------------------------------------- extension


def extend(plan: ExtensionPlan, coloring: dict, lists: Mapping) -> dict:
    """Extend a proper coloring of the reduced graph to ``plan.graph``, in place."""
    total = plan.mode == TOTAL
    for x in plan.discolored_vertices:
        coloring.pop(x, None)
    wl = WorkingLists(plan.graph, lists, coloring, total, plan.removed_edges)
    c = plan.config
    try:
        if isinstance(c, C1):
            extend_c1(wl, c)
        elif isinstance(c, C4):
            extend_c4(wl, c)
        elif isinstance(c, C5):
            extend_c5(wl, c, plan)
        elif isinstance(c, C6):
            extend_c6(wl, c, plan)
        elif isinstance(c, C7):
            extend_c7(wl, c, total)
        if total and not isinstance(c, C7):
            recolor_low_degree_vertices(wl, plan.discolored_vertices + plan.removed_vertices)
    except (KernelError, AssertionError) as exc:
        if isinstance(exc, ExtensionFailure):
            raise
        raise ExtensionFailure(f"{type(exc).__name__}: {exc}", plan) from exc
    return coloring


def extend_c1(wl: WorkingLists, c: C1) -> None:
    wl.greedy(edge_key(c.u, c.v))


def c4_cycle(c: C4) -> list[Edge]:
    out = []
    p = c.p
    for i in range(p):
        out.append(edge_key(c.hubs[i], c.spokes[i]))
        out.append(edge_key(c.spokes[i], c.hubs[(i + 1) % p]))
    return out


def _color_as_cycle(wl: WorkingLists, ring: list[Edge]) -> None:
    colors = color_even_cycle([wl.available(e) for e in ring])
    for e, col in zip(ring, colors):
        wl.assign(e, col)


def extend_c4(wl: WorkingLists, c: C4) -> None:
    ring = c4_cycle(c)
    for e in ring:
        assert len(wl.available(e)) >= 2, (e, wl.available(e))
    _color_as_cycle(wl, ring)


def c5_path(c: C5) -> list[Edge]:
    out = []
    for i in range(c.p):
        out.append(edge_key(c.vs[i], c.xs[i]))
        out.append(edge_key(c.xs[i], c.vs[i + 1]))
    return out


def c5_spokes(c: C5) -> list[Edge]:
    return [edge_key(c.u, v) for v in c.vs]


def extend_c5(wl: WorkingLists, c: C5, plan: ExtensionPlan | None = None) -> str:
    """Returns the branch taken: ``"avoid"``, ``"rec5-distinct"`` or ``"rec5-cycle"``."""
    L = wl.available
    path, spokes = c5_path(c), c5_spokes(c)
    for e in spokes:
        assert len(L(e)) >= c.p + 1, (e, L(e))
    for e in path:
        assert len(L(e)) >= 2, (e, L(e))

    if not L(path[0]) <= L(spokes[0]) or not L(path[-1]) <= L(spokes[-1]):
        if L(path[0]) <= L(spokes[0]):
            c = c.reversed()
            path, spokes = c5_path(c), c5_spokes(c)
        wl.greedy(path[0], avoid=L(spokes[0]))
        for e in path[1:] + spokes[1:] + spokes[:1]:
            wl.greedy(e)
        branch = "avoid"
    else:
        first, last = spokes[0], spokes[-1]
        if L(first) != L(last):
            if not L(first) - L(last):
                c = c.reversed()
                path, spokes = c5_path(c), c5_spokes(c)
                first, last = spokes[0], spokes[-1]
            a = min(L(first) - L(last))
            wl.greedy(path[0], avoid={a})
            for e in path[1:] + spokes[1:-1]:
                wl.greedy(e)
            branch = "rec5-distinct"
        else:
            _color_as_cycle(wl, path)
            for e in spokes[1:-1]:
                wl.greedy(e)
            branch = "rec5-cycle"
        if len(L(first)) == 1 and len(L(last)) == 1:
            assert L(first) != L(last), ("rec5", L(first), L(last))
        # fewest available colors first
        for e in sorted((first, last), key=lambda e: len(L(e))):
            wl.greedy(e)
    if plan is not None:
        plan.notes.append(branch)
    return branch


def c6_ring(c: C6) -> list[Edge]:
    """Edges (v2,x2), (x2,v3), ..., (x(p-1),vp): the cycle minus x1."""
    out = []
    for i in range(1, c.p - 1):
        out.append(edge_key(c.vs[i], c.xs[i]))
        out.append(edge_key(c.xs[i], c.vs[i + 1]))
    return out


def c6_k23(c: C6) -> dict[str, Edge]:
    u, x1, v1, v2, vp = c.u, c.xs[0], c.vs[0], c.vs[1], c.vs[-1]
    return {
        "a": edge_key(x1, v2),
        "b": edge_key(x1, vp),
        "c": edge_key(x1, v1),
        "d": edge_key(u, v1),
        "e": edge_key(u, vp),
        "f": edge_key(u, v2),
    }


def extend_c6(wl: WorkingLists, c: C6, plan: ExtensionPlan | None = None) -> str:
    """Returns the rec6 branch taken: ``"rec6-distinct"`` or ``"rec6-cycle"``."""
    assert c.p >= 3
    L = wl.available
    roles = c6_k23(c)
    a, b = roles["a"], roles["b"]
    if L(a) != L(b):
        if not L(a) - L(b):
            c = c.reversed()
            roles = c6_k23(c)
            a, b = roles["a"], roles["b"]
        alpha = min(L(a) - L(b))
        ring = c6_ring(c)
        wl.greedy(ring[0], avoid={alpha})
        for e in ring[1:]:
            wl.greedy(e)
        branch = "rec6-distinct"
    else:
        ring = c6_ring(c)
        _color_as_cycle(wl, ring)
        branch = "rec6-cycle"
    for v in c.vs[2:-1]:
        wl.greedy(edge_key(c.u, v))
    if len(L(a)) == 2 and len(L(b)) == 2:
        assert L(a) != L(b), ("rec6", L(a), L(b))
    sizes = {r: len(L(e)) for r, e in roles.items()}
    assert min(sizes["a"], sizes["b"], sizes["e"], sizes["f"]) >= 2 and min(sizes["c"], sizes["d"]) >= 3, sizes
    inst = K23Instance(**{r: frozenset(L(e)) for r, e in roles.items()})
    col = color_k23(inst)
    for r, e in roles.items():
        wl.assign(e, col[r])
    if plan is not None:
        plan.notes.append(branch)
        plan.notes.append("k23-sizes " + " ".join(f"{r}={sizes[r]}" for r in "abcdef"))
    return branch


def extend_c7(wl: WorkingLists, c: C7, total: bool) -> str:
    uu1, uu2 = edge_key(c.u, c.u1), edge_key(c.u, c.u2)
    if not total:
        wl.greedy(uu1)
        return "edge"
    for x in (c.u1, c.u2, c.u):
        wl.add_pending(x)
    L = wl.available
    shared = L(c.u1) & L(uu2)
    if shared:
        a = min(shared)
        wl.assign(c.u1, a)
        wl.assign(uu2, a)
        order = [c.u2, uu1, c.u]
        branch = "shared"
    else:
        outside = (L(c.u1) | L(uu2)) - L(c.u)
        assert outside, ("C7", L(c.u1), L(uu2), L(c.u))
        a = min(outside)
        if a in L(c.u1):
            wl.assign(c.u1, a)
            order = [c.u2, uu1, uu2, c.u]
        else:
            wl.assign(uu2, a)
            order = [c.u2, uu1, c.u1, c.u]
        branch = "outside"
    for x in order:
        wl.greedy(x)
    return branch


def recolor_low_degree_vertices(wl: WorkingLists, vertices) -> None:
    """Greedily color vertices left uncolored; each has degree <= k/2."""
    todo = sorted(set(vertices))
    for v in todo:
        wl.add_pending(v)
    for v in todo:
        wl.greedy(v)
