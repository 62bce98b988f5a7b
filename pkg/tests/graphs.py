"""Hand-built plane graphs shared by the tests, drawn with coordinates."""

from __future__ import annotations

import math

from choosable.plane_graph import PlaneGraph, from_coordinates


def polar(r: float, deg: float) -> tuple[float, float]:
    t = math.radians(deg)
    return (r * math.cos(t), r * math.sin(t))


def cycle(n: int) -> PlaneGraph:
    pts = {i: polar(1, 360 * i / n) for i in range(n)}
    return from_coordinates(pts, [(i, (i + 1) % n) for i in range(n)])


def triangle() -> PlaneGraph:
    return cycle(3)


def chorded_c4() -> PlaneGraph:
    pts = {0: (0, 0), 1: (1, 0), 2: (1, 1), 3: (0, 1)}
    return from_coordinates(pts, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])


def cube() -> PlaneGraph:
    pts = {}
    for i in range(4):
        pts[i] = polar(2, 45 + 90 * i)
        pts[i + 4] = polar(1, 45 + 90 * i)
    edges = [(i, (i + 1) % 4) for i in range(4)]
    edges += [(i + 4, (i + 1) % 4 + 4) for i in range(4)]
    edges += [(i, i + 4) for i in range(4)]
    return from_coordinates(pts, edges)


def grid(w: int, h: int) -> PlaneGraph:
    pts = {x + w * y: (x, y) for x in range(w) for y in range(h)}
    edges = [(x + w * y, x + 1 + w * y) for x in range(w - 1) for y in range(h)]
    edges += [(x + w * y, x + w * (y + 1)) for x in range(w) for y in range(h - 1)]
    return from_coordinates(pts, edges)


def star(d: int) -> PlaneGraph:
    pts = {0: (0, 0)}
    pts.update({i: polar(1, 360 * i / d) for i in range(1, d + 1)})
    return from_coordinates(pts, [(0, i) for i in range(1, d + 1)])


# --------------------------------------------------------------- supports

CHAIN_NAMES = dict(u1=0, t=1, u2=2, v3=3, x3=4, v=5, x1=6, v1=7, v2=8, x2=9)


def support_chain() -> tuple[PlaneGraph, dict[str, int]]:
    """A chain t, v, v1, v2 of quads around u1, stopped at v2 by a quad
    whose vertex opposite v2 (namely v3) has degree 4."""
    n = CHAIN_NAMES
    pts = {
        n["x3"]: (2, -2),
        n["v3"]: (2, -1),
        n["u1"]: (2, 0),
        n["t"]: (2, 1),
        n["u2"]: (2, 2),
        n["v"]: (3, 1.732),
        n["x1"]: (3.732, 1),
        n["v1"]: (4, 0),
        n["v2"]: (3, -1.732),
        n["x2"]: (3.732, -1),
        10: (1.5, -0.8),
        11: (1.5, -1.2),
    }
    names = [
        ("x3", "v3"), ("v3", "u1"), ("u1", "t"), ("t", "u2"), ("u2", "v"), ("v", "x1"),
        ("x3", "v2"), ("v1", "x1"), ("v1", "u1"), ("v1", "x2"), ("v2", "x2"), ("u1", "v"), ("u1", "v2"),
    ]
    edges = [(n[a], n[b]) for a, b in names] + [(n["v3"], 10), (n["v3"], 11)]
    return from_coordinates(pts, edges), dict(n)


SELF_NAMES = dict(u1=0, t=1, u2=2, v=3, g=4, h=5, a=6, b=7)


def support_self() -> tuple[PlaneGraph, dict[str, int]]:
    """v closes both chains at once: a 5-face below (u1, v) and, above
    (u2, v), a quad whose vertex opposite v has degree 4."""
    n = SELF_NAMES
    pts = {
        n["u1"]: (0, 0),
        n["t"]: (0, 1),
        n["u2"]: (0, 2),
        n["v"]: (1, 1),
        n["g"]: (2, 1),
        n["h"]: (1.4, 2.3),
        n["a"]: (2, 0.3),
        n["b"]: (0.7, -0.3),
        8: (1.2, 3.2),
        9: (1.8, 3.1),
    }
    names = [("u1", "t"), ("t", "u2"), ("v", "g"), ("u1", "v"), ("u2", "v"), ("g", "h"), ("u2", "h"),
             ("g", "a"), ("u1", "b"), ("a", "b")]
    edges = [(n[x], n[y]) for x, y in names] + [(n["h"], 8), (n["h"], 9)]
    return from_coordinates(pts, edges), dict(n)


# ----------------------------------------------------- discharging pins


def degree2_in_triangle() -> tuple[PlaneGraph, int]:
    """Pentagon v w a b c with u on both v and w: u sees a 6-face and,
    across vw, a 5-face."""
    pts = {0: polar(1, 90), 1: polar(1, 162), 2: polar(1, 234), 3: polar(1, 306), 4: polar(1, 18), 5: polar(2, 126)}
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 1)]
    return from_coordinates(pts, edges), 5


def dented_face(pendants: int, closing_apex: bool) -> tuple[PlaneGraph, set[int]]:
    """A face whose boundary alternates hubs a_i and degree-2 vertices u_i,
    each u_i closing a triangle with a_i a_(i+1) outside the face.

    With ``closing_apex`` the face is closed by a plain edge a_last a_0 and a
    degree-2 vertex z sits on that edge outside the face; otherwise the last
    pendant closes the face.  Hubs get leaves so that they have degree 6.
    Returns the graph and the vertex set of the dented face.
    """
    hubs = pendants + 1 if closing_apex else pendants
    step = 180 / pendants if closing_apex else 360 / pendants
    pts: dict[int, tuple[float, float]] = {}
    edges = []
    A = list(range(hubs))
    U = list(range(hubs, hubs + pendants))
    for i in A:
        pts[i] = polar(2, i * step)
    for j, u in enumerate(U):
        pts[u] = polar(1, (j + 0.5) * step)
        a, b = A[j], A[(j + 1) % hubs]
        edges += [(u, a), (u, b), (a, b)]
    if closing_apex:
        z = hubs + pendants
        pts[z] = (0, -1)
        edges += [(A[-1], A[0]), (z, A[-1]), (z, A[0])]
    nxt = max(pts) + 1
    for i in A:
        deg = sum(1 for e in edges if i in e)
        for s in range(6 - deg):
            pts[nxt] = polar(3, i * step + 8 * (s - 0.5))
            edges.append((i, nxt))
            nxt += 1
    return from_coordinates(pts, edges), set(A) | set(U)


# ----------------------------------------------------- configuration gadgets


def c4_gadget(p: int, hub_leaves: int = 0) -> tuple[PlaneGraph, list[int], list[int]]:
    """Alternating cycle of p hubs and p degree-2 spokes."""
    pts, edges = {}, []
    hubs = list(range(0, 2 * p, 2))
    spokes = list(range(1, 2 * p, 2))
    for i in range(2 * p):
        pts[i] = polar(2, 180 * i / p)
        edges.append((i, (i + 1) % (2 * p)))
    nxt = 2 * p
    for h in hubs:
        for s in range(hub_leaves):
            pts[nxt] = polar(3, 180 * h / p + 10 * (s - hub_leaves / 2))
            edges.append((h, nxt))
            nxt += 1
    return from_coordinates(pts, edges), hubs, spokes


def c5_gadget(p: int, u_leaves: int = 0, x_leaves: int = 0) -> PlaneGraph:
    """u = 0 with v_1..v_(p+1) in a fan, x_i between v_i and v_(i+1)."""
    pts = {0: (0, 0)}
    edges = []
    span = 200
    vs = list(range(1, p + 2))
    xs = list(range(p + 2, 2 * p + 2))
    for i, v in enumerate(vs):
        pts[v] = polar(1, span * i / p)
        edges.append((0, v))
    for i, x in enumerate(xs):
        pts[x] = polar(2, span * (i + 0.5) / p)
        edges += [(vs[i], x), (x, vs[i + 1])]
    nxt = 2 * p + 2
    for s in range(u_leaves):
        pts[nxt] = polar(1, span + (360 - span) * (s + 1) / (u_leaves + 1))
        edges.append((0, nxt))
        nxt += 1
    for i, x in enumerate(xs):
        for s in range(x_leaves):
            pts[nxt] = polar(3, span * (i + 0.5) / p + 6 * (s - x_leaves / 2))
            edges.append((x, nxt))
            nxt += 1
    return from_coordinates(pts, edges)


def c6_gadget(p: int, u_leaves: int = 0, x_leaves: int = 0) -> PlaneGraph:
    """u = 0; v_1 = 1 on the ray to x_1; v_2..v_p and the cycle
    x_1 v_2 x_2 ... x_(p-1) v_p around u."""
    pts = {0: (0, 0), 1: polar(1, 0)}
    edges = [(0, 1)]
    vs = list(range(2, p + 1))  # v_2..v_p
    x1 = p + 1
    xs = list(range(p + 2, 2 * p))  # x_2..x_(p-1)
    pts[x1] = polar(2, 0)
    edges.append((1, x1))
    m = len(vs)
    for i, v in enumerate(vs):
        pts[v] = polar(1, 360 * (i + 0.5) / m)
        edges.append((0, v))
    ring = [x1] + xs
    for i, v in enumerate(vs):
        left = ring[i]
        right = ring[(i + 1) % len(ring)]
        edges += [(left, v), (v, right)]
    for i, x in enumerate(xs):
        pts[x] = polar(2, 360 * (i + 1) / m)
    nxt = 2 * p
    for s in range(u_leaves):
        # inside the face (u, v_2, x_2, v_3) or (u, v_p, x_1, v_1)
        pts[nxt] = polar(0.4, 360 * (s + 1) / (u_leaves + 1) / m)
        edges.append((0, nxt))
        nxt += 1
    for x in ring:
        for s in range(x_leaves):
            ang = math.degrees(math.atan2(pts[x][1], pts[x][0]))
            pts[nxt] = polar(3, ang + 5 * (s - x_leaves / 2))
            edges.append((x, nxt))
            nxt += 1
    return from_coordinates(pts, edges)
