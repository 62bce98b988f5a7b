"""All connected plane graphs on at most six vertices, one per embedding class.

Rotation systems are enumerated directly and kept when the face count
satisfies Euler's formula, so no planarity or embedding algorithm is needed.
Two rotation systems are identified when a graph automorphism, possibly
combined with reversing every rotation (a mirror image), maps one onto the
other.  The six-vertex bound is hard: the number of rotation systems grows
like a product of factorials of the degrees.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterator

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ..plane_graph import PlaneGraph

MAX_N = 6


def _cyclic_orders(first: int, rest: list[int]) -> list[tuple[int, ...]]:
    return [(first,) + p for p in permutations(rest)] if rest else [(first,)]


def _count_faces(rot: dict[int, tuple[int, ...]]) -> int:
    pos = {(v, w): i for v, r in rot.items() for i, w in enumerate(r)}
    seen: set[tuple[int, int]] = set()
    faces = 0
    for (u, v) in pos:
        if (u, v) in seen:
            continue
        faces += 1
        while (u, v) not in seen:
            seen.add((u, v))
            r = rot[v]
            u, v = v, r[(pos[(v, u)] + 1) % len(r)]
    return faces


def _normal(rot: dict[int, tuple[int, ...]]) -> tuple:
    out = []
    for v in sorted(rot):
        r = rot[v]
        i = r.index(min(r)) if r else 0
        out.append((v, r[i:] + r[:i]))
    return tuple(out)


def _canonical(rot: dict[int, tuple[int, ...]], autos: list[dict[int, int]]) -> tuple:
    best = None
    for sigma in autos:
        mapped = {sigma[v]: tuple(sigma[w] for w in r) for v, r in rot.items()}
        for cand in (mapped, {v: r[::-1] for v, r in mapped.items()}):
            key = _normal(cand)
            if best is None or key < best:
                best = key
    return best


def embeddings(graph: nx.Graph) -> list[PlaneGraph]:
    """Inequivalent genus-0 rotation systems of a connected graph."""
    nodes = sorted(graph)
    n, m = len(nodes), graph.number_of_edges()
    choices = []
    for v in nodes:
        nb = sorted(graph[v])
        choices.append(_cyclic_orders(nb[0], nb[1:]) if nb else [()])
    autos = list(GraphMatcher(graph, graph).isomorphisms_iter())
    seen = set()
    out = []
    want_faces = 2 - n + m
    for combo in product(*choices):
        rot = dict(zip(nodes, combo))
        if _count_faces(rot) != want_faces and m > 0:
            continue
        key = _canonical(rot, autos)
        if key in seen:
            continue
        seen.add(key)
        out.append(PlaneGraph(rot))
    return out


@lru_cache(maxsize=None)
def _enumerate(max_n: int) -> tuple[PlaneGraph, ...]:
    out = []
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(graph):
            continue
        if n >= 3 and graph.number_of_edges() > 3 * n - 6:
            continue
        out.extend(embeddings(graph))
    return tuple(out)


def enumerate_small_plane_graphs(max_n: int = MAX_N) -> Iterator[PlaneGraph]:
    """Every connected simple plane graph on 1..max_n vertices, up to
    automorphism and mirror image; results are cached per ``max_n``."""
    if not 1 <= max_n <= MAX_N:
        raise ValueError(f"max_n must be in 1..{MAX_N}")
    return iter(_enumerate(max_n))
