"""Exhaustive backtracking list coloring, used as an independent oracle."""

from __future__ import annotations

import math
from typing import Mapping, Optional

from ..plane_graph import PlaneGraph

DEFAULT_CAP = 10**18


class SearchSpaceTooLarge(ValueError):
    pass


def _conflict_graph(g: PlaneGraph, total: bool) -> dict:
    """Element -> set of elements it must differ from, built from the edge list."""
    edges = [(u, v) for u, v in g.edges()]
    nbr: dict = {e: set() for e in edges}
    at: dict[int, list] = {v: [] for v in g.vertices}
    for e in edges:
        at[e[0]].append(e)
        at[e[1]].append(e)
    for v, inc in at.items():
        for i, e in enumerate(inc):
            for f in inc[i + 1 :]:
                nbr[e].add(f)
                nbr[f].add(e)
    if total:
        for v in g.vertices:
            nbr[v] = set(at[v])
            for e in at[v]:
                nbr[e].add(v)
        for u, v in edges:
            nbr[u].add(v)
            nbr[v].add(u)
    return nbr


def brute_force_color(
    g: PlaneGraph, lists: Mapping, mode: str = "edge", cap: int = DEFAULT_CAP
) -> Optional[dict]:
    """Some proper list coloring of ``g``, or ``None`` if none exists.

    Chooses the uncolored element with the fewest remaining options first.
    Refuses instances whose raw search space (product of list sizes)
    exceeds ``cap``.
    """
    total = mode == "total"
    nbr = _conflict_graph(g, total)
    elements = sorted(nbr, key=repr)
    space = math.prod(len(set(lists[x])) for x in elements) if elements else 1
    if space > cap:
        raise SearchSpaceTooLarge(f"search space {space} exceeds cap {cap}")
    domains = {x: set(lists[x]) for x in elements}
    coloring: dict = {}

    def options(x):
        return domains[x] - {coloring[y] for y in nbr[x] if y in coloring}

    def search() -> bool:
        todo = [x for x in elements if x not in coloring]
        if not todo:
            return True
        best = min(todo, key=lambda x: len(options(x)))
        for c in sorted(options(best)):
            coloring[best] = c
            if search():
                return True
            del coloring[best]
        return False

    return dict(coloring) if search() else None


def k23_graph() -> tuple[PlaneGraph, dict[str, tuple[int, int]]]:
    """K_{2,3} embedded, with the six edge roles of the K_{2,3} kernel.

    Hubs y=0 and w=1; z=2 is the degree-2 vertex on c=(y,z), d=(w,z);
    3 carries a=(y,3), f=(w,3); 4 carries b=(y,4), e=(w,4).
    """
    g = PlaneGraph({0: (2, 3, 4), 1: (4, 3, 2), 2: (0, 1), 3: (0, 1), 4: (0, 1)})
    roles = {"a": (0, 3), "b": (0, 4), "c": (0, 2), "d": (1, 2), "e": (1, 4), "f": (1, 3)}
    return g, roles
