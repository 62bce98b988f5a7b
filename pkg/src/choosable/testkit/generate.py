"""Seeded generator of embedded graphs with no triangle adjacent to a 4-cycle.

Algorithm (numpy ``default_rng(seed)`` drives every choice, in this order):

1. Place hubs: each hub is a point with ``max_degree`` ring points close
   around it.  The remaining points are uniform in the unit square.
2. Take the Delaunay triangulation (scipy) and rotate by angle.
3. Clean up by family.  ``triangle-free`` kills every triangle,
   ``girth5`` every 3- and 4-cycle, ``mixed`` only triangles sharing an
   edge with a 4-cycle.  Hub spokes are never the edge deleted.
4. Delete edges at vertices above ``max_degree``, then drop a random
   fraction of the remaining edges.
5. Glue motifs: theta gadgets (two hubs joined by several paths of
   length two, attached by a bridge; not in ``girth5``), subdivisions of random edges, and in
   ``mixed`` mode pendant triangles on edges that lie on no 4-cycle.

Every step only deletes edges, subdivides edges, or adds structure that is
checked locally, and the final graph is re-checked in full.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np
from scipy.spatial import Delaunay

from ..plane_graph import PlaneGraph, edge_key, find_triangle_adjacent_c4, from_coordinates, triangle_c4_on_edge

FAMILIES = ("triangle-free", "girth5", "mixed")


class GenerationFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class GenParams:
    n: int = 60
    max_degree: int = 7
    family: str = "triangle-free"
    seed: int = 0
    mode: str = "edge"


def _base_points(p: GenParams, rng: np.random.Generator) -> tuple[np.ndarray, set[int]]:
    m = p.max_degree
    n_hubs = max(1, p.n // (4 * (m + 1)))
    r = 0.02
    pts: list[tuple[float, float]] = []
    hubs = []
    centers = []
    for _ in range(200 * n_hubs):
        if len(centers) == n_hubs:
            break
        c = rng.uniform(0.1, 0.9, size=2)
        if all(np.hypot(*(c - o)) > 0.2 for o in centers):
            centers.append(c)
    for c in centers:
        hubs.append(len(pts))
        pts.append(tuple(c))
        phase = rng.uniform(0, 2 * np.pi)
        for j in range(m):
            t = phase + 2 * np.pi * j / m
            pts.append((c[0] + r * np.cos(t), c[1] + r * np.sin(t)))
    while len(pts) < p.n:
        q = rng.uniform(0, 1, size=2)
        # keep hub neighbourhoods clean so the hub sees its whole ring
        if all(np.hypot(*(q - c)) > 3 * r for c in centers):
            pts.append(tuple(q))
    return np.array(pts), set(hubs)


def _delaunay_adj(pts: np.ndarray) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {i: set() for i in range(len(pts))}
    for simplex in Delaunay(pts).simplices:
        for a, b in combinations(simplex.tolist(), 2):
            adj[a].add(b)
            adj[b].add(a)
    return adj


def _delete(adj: dict[int, set[int]], u: int, v: int) -> None:
    adj[u].discard(v)
    adj[v].discard(u)


def _pick_unprotected(cands, protected, rng) -> tuple[int, int] | None:
    free = sorted(e for e in cands if e not in protected)
    if not free:
        return None
    return free[int(rng.integers(len(free)))]


def _kill_triangles(adj, protected, rng) -> None:
    for u in sorted(adj):
        for v in sorted(adj[u]):
            if v < u:
                continue
            while adj[u] & adj[v] and v in adj[u]:
                w = min(adj[u] & adj[v])
                e = _pick_unprotected([edge_key(u, v), edge_key(u, w), edge_key(v, w)], protected, rng)
                if e is None:
                    raise GenerationFailed(f"triangle {u},{v},{w} fully protected")
                _delete(adj, *e)


def _kill_four_cycles(adj, protected, rng) -> None:
    for u in sorted(adj):
        for a, b in combinations(sorted(adj[u]), 2):
            while b in adj[u] and a in adj[u]:
                common = (adj[a] & adj[b]) - {u}
                if not common:
                    break
                x = min(common)
                cyc = [edge_key(u, a), edge_key(a, x), edge_key(x, b), edge_key(b, u)]
                e = _pick_unprotected(cyc, protected, rng)
                if e is None:
                    raise GenerationFailed(f"4-cycle {u},{a},{x},{b} fully protected")
                _delete(adj, *e)


def _kill_triangle_c4(adj, protected, rng) -> None:
    changed = True
    while changed:
        changed = False
        for u in sorted(adj):
            for v in sorted(adj[u]):
                if v < u or v not in adj[u]:
                    continue
                wit = triangle_c4_on_edge(adj, u, v)
                if wit is None:
                    continue
                t, c = wit.triangle, wit.cycle
                cands = {edge_key(t[0], t[1]), edge_key(t[1], t[2]), edge_key(t[0], t[2])}
                cands |= {edge_key(c[i], c[(i + 1) % 4]) for i in range(4)}
                e = _pick_unprotected(cands, protected, rng)
                if e is None:
                    raise GenerationFailed(wit.describe())
                _delete(adj, *e)
                changed = True


def _cap_degrees(adj, protected, cap, rng) -> None:
    for v in sorted(adj):
        while len(adj[v]) > cap:
            e = _pick_unprotected([edge_key(v, w) for w in adj[v]], protected, rng)
            if e is None:
                raise GenerationFailed(f"vertex {v} over degree cap with only protected edges")
            _delete(adj, *e)


def _insert_after(rot: dict[int, list[int]], v: int, anchor: int, new: int) -> None:
    r = rot[v]
    r.insert(r.index(anchor) + 1, new)


def _subdivide(rot: dict[int, list[int]], u: int, v: int, new: int) -> None:
    rot[u][rot[u].index(v)] = new
    rot[v][rot[v].index(u)] = new
    rot[new] = [u, v]


def _pendant_triangle(rot: dict[int, list[int]], u: int, v: int, new: int) -> None:
    """Degree-2 vertex adjacent to u and v, inside the face left of dart u->v."""
    _insert_after(rot, v, u, new)
    r = rot[u]
    r.insert(r.index(v), new)
    rot[new] = [u, v]


def _theta(rot: dict[int, list[int]], start: int, hub_degree: int, paths: int) -> tuple[int, int]:
    """Two hubs joined by ``paths`` 2-paths; each hub also gets pendant leaves
    up to ``hub_degree`` so the middles see high-degree ends."""
    h1, h2 = start, start + 1
    nxt = start + 2
    rot[h1], rot[h2] = [], []
    mids = list(range(nxt, nxt + paths))
    nxt += paths
    for m in mids:
        rot[m] = [h1, h2]
    # h1 sees the middles clockwise, h2 counter-clockwise
    rot[h1] = list(mids)
    rot[h2] = list(reversed(mids))
    for h in (h1, h2):
        while len(rot[h]) < hub_degree:
            rot[nxt] = [h]
            # leaves go into the outer face, between the last and first middle
            rot[h].insert(len(mids), nxt)
            nxt += 1
    return h1, nxt


def _bridge(rot: dict[int, list[int]], a: int, b: int) -> None:
    rot[a].append(b)
    rot[b].append(a)


def _adj_of(rot) -> dict[int, set[int]]:
    return {v: set(r) for v, r in rot.items()}


def generate_graph(p: GenParams) -> PlaneGraph:
    if p.family not in FAMILIES:
        raise ValueError(f"unknown family {p.family!r}")
    if p.max_degree < 3:
        raise ValueError("max_degree must be at least 3")
    rng = np.random.default_rng(p.seed)
    pts, hubs = _base_points(p, rng)
    adj = _delaunay_adj(pts)
    protected = {edge_key(h, w) for h in hubs for w in adj[h] if w in range(h + 1, h + 1 + p.max_degree)}

    if p.family == "triangle-free":
        _kill_triangles(adj, protected, rng)
    elif p.family == "girth5":
        _kill_triangles(adj, protected, rng)
        _kill_four_cycles(adj, protected, rng)
    else:
        _kill_triangle_c4(adj, protected, rng)
    _cap_degrees(adj, protected, p.max_degree, rng)
    drop = rng.uniform(0.0, 0.25)
    for e in sorted({edge_key(u, v) for u in adj for v in adj[u]}):
        if e not in protected and rng.random() < drop:
            _delete(adj, *e)

    coords = {i: (float(x), float(y)) for i, (x, y) in enumerate(pts)}
    base = from_coordinates(coords, [(u, v) for u in adj for v in adj[u] if u < v])
    rot = {v: list(r) for v, r in base.rotation.items()}
    nxt = len(rot)

    # theta gadgets, bridged to a random low-degree vertex
    # their 2-paths close 4-cycles, so girth5 skips them
    n_theta = 0 if p.family == "girth5" else int(rng.integers(0, 3))
    for _ in range(n_theta):
        paths = int(rng.integers(2, p.max_degree + 1))
        hub_degree = int(rng.integers(paths, p.max_degree + 1))
        h1, after = _theta(rot, nxt, hub_degree, paths)
        low = sorted(v for v in range(nxt) if len(rot[v]) < p.max_degree)
        leaves = [v for v in range(nxt, after) if len(rot[v]) == 1]
        if low and leaves:
            _bridge(rot, low[int(rng.integers(len(low)))], leaves[0])
        nxt = after

    # subdivisions lengthen cycles, so they never create a forbidden pattern
    edges = sorted({edge_key(u, v) for u in rot for v in rot[u]})
    n_sub = int(rng.integers(0, len(edges) // 6 + 1)) if edges else 0
    for i in sorted(rng.choice(len(edges), size=n_sub, replace=False).tolist()) if n_sub else []:
        u, v = edges[i]
        if len(rot) >= 2 * p.n:
            break
        _subdivide(rot, u, v, nxt)
        nxt += 1
    if p.family == "mixed":
        edges = sorted({edge_key(u, v) for u in rot for v in rot[u]})
        for _ in range(int(rng.integers(0, 4))):
            u, v = edges[int(rng.integers(len(edges)))]
            if max(len(rot[u]), len(rot[v])) >= p.max_degree:
                continue
            trial = _adj_of(rot)
            trial[nxt] = {u, v}
            trial[u].add(nxt)
            trial[v].add(nxt)
            touched = [(u, v), (u, nxt), (v, nxt)] + [(u, w) for w in trial[u]] + [(v, w) for w in trial[v]]
            if any(triangle_c4_on_edge(trial, a, b) for a, b in touched):
                continue
            _pendant_triangle(rot, u, v, nxt)
            nxt += 1

    g = PlaneGraph(rot)
    wit = find_triangle_adjacent_c4(g)
    if wit is not None:
        raise GenerationFailed(wit.describe())
    if g.max_degree > p.max_degree:
        raise GenerationFailed(f"max degree {g.max_degree} above target {p.max_degree}")
    return g


def random_lists(g: PlaneGraph, mode: str, k: int, rng: np.random.Generator) -> dict:
    """Lists of exactly k (edge) or k+1 (total) colors drawn from 1..2k."""
    size = k + 1 if mode == "total" else k
    universe = np.arange(1, 2 * k + 1)
    out: dict = {}
    for e in g.edges():
        out[e] = frozenset(int(c) for c in rng.choice(universe, size=size, replace=False))
    if mode == "total":
        for v in g.vertices:
            out[v] = frozenset(int(c) for c in rng.choice(universe, size=size, replace=False))
    return out


def generate_instance(p: GenParams) -> tuple[PlaneGraph, dict]:
    """Deterministic in ``p``; lists use k = max(7, max degree)."""
    g = generate_graph(p)
    k = max(7, g.max_degree)
    rng = np.random.default_rng([p.seed, 1])
    return g, random_lists(g, p.mode, k, rng)
