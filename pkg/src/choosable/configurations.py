"""Reducible configurations C1 to C7 and the support relation.

C2 and C3 are only ever produced as diagnostics of the input hypothesis
(both contain a triangle sharing an edge with a 4-cycle); the detector
never returns them.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from typing import Iterator, Optional, Sequence, Union

from .plane_graph import PlaneGraph, edge_key, opposite_in_quad


class BadAnchor(ValueError):
    """``find_support`` was called without a face (t, u1, v, u2), d(t)=2, d(v)=3."""


@dataclass(frozen=True)
class C1:
    u: int
    v: int
    kind = "C1"


@dataclass(frozen=True)
class C2:
    u: int
    v: int
    w: int
    x: int
    kind = "C2"


@dataclass(frozen=True)
class C3:
    u: int
    v: int
    w: int
    x: int
    y: int
    kind = "C3"


@dataclass(frozen=True)
class C4:
    hubs: tuple[int, ...]
    spokes: tuple[int, ...]
    kind = "C4"

    @property
    def p(self) -> int:
        return len(self.hubs)


@dataclass(frozen=True)
class C5:
    """Path v1 x1 v2 ... vp xp v(p+1) around ``u``; ``vs`` has p+1 entries."""

    u: int
    xs: tuple[int, ...]
    vs: tuple[int, ...]
    kind = "C5"

    @property
    def p(self) -> int:
        return len(self.xs)

    def reversed(self) -> "C5":
        return C5(self.u, self.xs[::-1], self.vs[::-1])


@dataclass(frozen=True)
class C6:
    """Cycle x1 v2 x2 ... x(p-1) vp (closing vp-x1) around ``u``, plus v1 on u-x1.

    ``vs`` has p entries, ``xs`` has p-1.
    """

    u: int
    xs: tuple[int, ...]
    vs: tuple[int, ...]
    kind = "C6"

    @property
    def p(self) -> int:
        return len(self.vs)

    def reversed(self) -> "C6":
        """Same configuration with the cycle read the other way round."""
        return C6(self.u, (self.xs[0],) + self.xs[:0:-1], (self.vs[0],) + self.vs[:0:-1])


@dataclass(frozen=True)
class C7:
    u: int
    u1: int
    u2: int
    kind = "C7"


Configuration = Union[C1, C2, C3, C4, C5, C6, C7]

PRIORITY = ("C1", "C7", "C4", "C5", "C6")


def configuration_vertices(c: Configuration) -> set[int]:
    out: set[int] = set()
    for f in fields(c):
        val = getattr(c, f.name)
        if isinstance(val, tuple):
            out.update(val)
        else:
            out.add(val)
    return out


def format_configuration(c: Configuration) -> str:
    parts = []
    for f in fields(c):
        val = getattr(c, f.name)
        if isinstance(val, tuple):
            parts.append(f"{f.name}=" + ",".join(map(str, val)))
        else:
            parts.append(f"{f.name}={val}")
    return f"{c.kind} " + " ".join(parts)


# ---------------------------------------------------------------- detectors


def iter_c1(g: PlaneGraph, k: int) -> Iterator[C1]:
    half = k // 2
    for u in g.vertices:
        du = g.degree(u)
        if du > half:
            continue
        for v in sorted(g.neighbors(u)):
            if du + g.degree(v) <= k + 1:
                yield C1(u, v)


def iter_c7(g: PlaneGraph, k: int) -> Iterator[C7]:
    for u in g.vertices:
        if g.degree(u) != 4:
            continue
        fours = sorted(w for w in g.neighbors(u) if g.degree(w) == 4)
        if len(fours) >= 2:
            yield C7(u, fours[0], fours[1])


def iter_c4(g: PlaneGraph, k: int) -> Iterator[C4]:
    """Cycles alternating hubs and degree-2 spokes.

    A degree-2 vertex whose neighbours both have degree other than 2 is an
    edge between its neighbours in an auxiliary multigraph; cycles of that
    multigraph are exactly the C4 occurrences.  One cycle per union-find
    closure is reported.
    """
    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    forest: dict[int, list[tuple[int, int]]] = {}
    for s in g.vertices:
        if g.degree(s) != 2:
            continue
        a, b = sorted(g.neighbors(s))
        if g.degree(a) == 2 or g.degree(b) == 2:
            continue
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            forest.setdefault(a, []).append((b, s))
            forest.setdefault(b, []).append((a, s))
            continue
        # path b -> a in the forest, then close with s
        prev: dict[int, Optional[tuple[int, int]]] = {b: None}
        stack = [b]
        while stack:
            x = stack.pop()
            if x == a:
                break
            for y, lab in forest.get(x, ()):
                if y not in prev:
                    prev[y] = (x, lab)
                    stack.append(y)
        hubs, spokes = [a], []
        x = a
        while prev[x] is not None:
            y, lab = prev[x]
            spokes.append(lab)
            hubs.append(y)
            x = y
        spokes.append(s)  # closes b -> a
        yield C4(tuple(hubs), tuple(spokes))


def _c5_from(g: PlaneGraph, u: int, v1: int, x1: int) -> Optional[C5]:
    nu = g.neighbor_set(u)

    def walk(vs: list[int], xs: list[int], seen: set[int]) -> Optional[C5]:
        x = xs[-1]
        for c in sorted(g.neighbor_set(x) & nu):
            if c in seen:
                continue
            dc = g.degree(c)
            if dc == 2:
                return C5(u, tuple(xs), tuple(vs + [c]))
            if dc == 3:
                (nxt,) = g.neighbor_set(c) - {u, x}
                if nxt in seen or nxt == c:
                    continue
                found = walk(vs + [c], xs + [nxt], seen | {c, nxt})
                if found is not None:
                    return found
        return None

    return walk([v1], [x1], {u, v1, x1})


def iter_c5(g: PlaneGraph, k: int) -> Iterator[C5]:
    for v1 in g.vertices:
        if g.degree(v1) != 2:
            continue
        a, b = g.neighbors(v1)
        for u, x1 in sorted([(a, b), (b, a)]):
            found = _c5_from(g, u, v1, x1)
            if found is not None:
                yield found


def _c6_from(g: PlaneGraph, u: int, v1: int, x1: int) -> Optional[C6]:
    nu = g.neighbor_set(u)

    def walk(vs: list[int], xs: list[int], seen: set[int]) -> Optional[C6]:
        x = xs[-1]
        for c in sorted(g.neighbor_set(x) & nu):
            if c in seen or g.degree(c) != 3:
                continue
            (nxt,) = g.neighbor_set(c) - {u, x}
            if nxt == x1 and len(vs) >= 2:
                return C6(u, tuple(xs), tuple(vs + [c]))
            if nxt in seen:
                continue
            found = walk(vs + [c], xs + [nxt], seen | {c, nxt})
            if found is not None:
                return found
        return None

    return walk([v1], [x1], {u, v1, x1})


def iter_c6(g: PlaneGraph, k: int) -> Iterator[C6]:
    for v1 in g.vertices:
        if g.degree(v1) != 2:
            continue
        a, b = g.neighbors(v1)
        for u, x1 in sorted([(a, b), (b, a)]):
            found = _c6_from(g, u, v1, x1)
            if found is not None:
                yield found


_FINDERS = {"C1": iter_c1, "C4": iter_c4, "C5": iter_c5, "C6": iter_c6, "C7": iter_c7}


def detect_configuration(
    g: PlaneGraph, k: int, kinds: Sequence[str] = PRIORITY
) -> Optional[Configuration]:
    """First configuration found, trying the kinds in the given order."""
    for kind in kinds:
        for c in _FINDERS[kind](g, k):
            return c
    return None


def all_configurations(g: PlaneGraph, k: int, kinds: Sequence[str] = PRIORITY) -> list[Configuration]:
    return [c for kind in kinds for c in _FINDERS[kind](g, k)]


# ------------------------------------------------------------- verification


def _distinct(*groups) -> bool:
    flat = []
    for grp in groups:
        flat.extend(grp if isinstance(grp, (tuple, list)) else [grp])
    return len(flat) == len(set(flat))


def verify_configuration(g: PlaneGraph, k: int, c: Configuration) -> bool:
    """Check a witness against its definition, independently of the detector."""
    try:
        return _VERIFIERS[c.kind](g, k, c)
    except KeyError:
        # unknown vertex ids
        return False


def _verify_c1(g, k, c: C1) -> bool:
    du, dv = g.degree(c.u), g.degree(c.v)
    return g.has_edge(c.u, c.v) and du + dv <= k + 1 and du <= k // 2


def _verify_c2(g, k, c: C2) -> bool:
    cyc = (c.u, c.v, c.w, c.x)
    return (
        _distinct(cyc)
        and all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))
        and g.has_edge(c.u, c.w)
    )


def _verify_c3(g, k, c: C3) -> bool:
    cyc = (c.u, c.v, c.w, c.x, c.y)
    return (
        _distinct(cyc)
        and all(g.has_edge(cyc[i], cyc[(i + 1) % 5]) for i in range(5))
        and g.has_edge(c.w, c.y)
    )


def _verify_c4(g, k, c: C4) -> bool:
    p = len(c.hubs)
    if p < 2 or len(c.spokes) != p or not _distinct(c.hubs, c.spokes):
        return False
    for i in range(p):
        s = c.spokes[i]
        if g.degree(s) != 2:
            return False
        if not (g.has_edge(c.hubs[i], s) and g.has_edge(s, c.hubs[(i + 1) % p])):
            return False
    return True


def _verify_c5(g, k, c: C5) -> bool:
    p = len(c.xs)
    vs, xs, u = c.vs, c.xs, c.u
    if p < 1 or len(vs) != p + 1 or not _distinct(u, vs, xs):
        return False
    if g.degree(vs[0]) != 2 or set(g.neighbors(vs[0])) != {u, xs[0]}:
        return False
    if g.degree(vs[-1]) != 2:
        return False
    for i in range(1, p):
        if g.degree(vs[i]) != 3:
            return False
    for i in range(p):
        if not (g.has_edge(vs[i], xs[i]) and g.has_edge(xs[i], vs[i + 1])):
            return False
    return all(g.has_edge(u, v) for v in vs)


def _verify_c6(g, k, c: C6) -> bool:
    p = len(c.vs)
    vs, xs, u = c.vs, c.xs, c.u
    if p < 3 or len(xs) != p - 1 or not _distinct(u, vs, xs):
        return False
    if g.degree(vs[0]) != 2 or set(g.neighbors(vs[0])) != {u, xs[0]}:
        return False
    for i in range(1, p):
        if g.degree(vs[i]) != 3:
            return False
        # vs[i] sits between xs[i-1] and xs[i], with xs[p-1] read as xs[0]
        if not (g.has_edge(xs[i - 1], vs[i]) and g.has_edge(vs[i], xs[i % (p - 1)])):
            return False
    return all(g.has_edge(u, v) for v in vs)


def _verify_c7(g, k, c: C7) -> bool:
    return (
        _distinct(c.u, c.u1, c.u2)
        and g.degree(c.u) == 4
        and g.degree(c.u1) == 4
        and g.degree(c.u2) == 4
        and g.has_edge(c.u, c.u1)
        and g.has_edge(c.u, c.u2)
    )


_VERIFIERS = {
    "C1": _verify_c1,
    "C2": _verify_c2,
    "C3": _verify_c3,
    "C4": _verify_c4,
    "C5": _verify_c5,
    "C6": _verify_c6,
    "C7": _verify_c7,
}


# ------------------------------------------------------------------ support


@dataclass(frozen=True)
class SupportWitness:
    t: int
    v: int
    u1: int
    w: int
    chain: tuple[int, ...]


def _anchor_direction(g: PlaneGraph, t: int, v: int, u1: int) -> bool:
    """True if the chain runs clockwise around ``u1`` (``v`` right after ``t``)."""
    if g.degree(t) != 2 or g.degree(v) != 3:
        raise BadAnchor(f"need d(t)=2, d(v)=3, got {g.degree(t)}, {g.degree(v)}")
    if not (g.has_edge(t, u1) and g.has_edge(v, u1)):
        raise BadAnchor(f"{t} and {v} are not both neighbours of {u1}")
    (u2,) = g.neighbor_set(t) - {u1}
    if not g.has_edge(v, u2):
        raise BadAnchor(f"{v} is not adjacent to {u2}")
    quad = {t, u1, v, u2}
    if g.next_cw(u1, t) == v:
        f = g.faces[g.face_of_dart[(t, u1)]]
        if f.degree == 4 and set(f.vertices) == quad:
            return True
    if g.prev_cw(u1, t) == v:
        f = g.faces[g.face_of_dart[(u1, t)]]
        if f.degree == 4 and set(f.vertices) == quad:
            return False
    raise BadAnchor(f"no face ({t},{u1},{v},{u2})")


def find_support(g: PlaneGraph, t: int, v: int, u1: int) -> Optional[SupportWitness]:
    """The (v, u1)-support of ``t``, if it exists.

    Walks the neighbours of ``u1`` starting at ``t`` then ``v``, through
    quadrangles whose far corner has degree at most 3, until the edge from
    ``u1`` meets a face of degree at least 5 or a quadrangle whose corner
    opposite the current vertex has degree at least 4.
    """
    forward = _anchor_direction(g, t, v, u1)
    chain = [t, v]
    cur = v
    while True:
        if g.degree(cur) != 3:
            return None
        if forward:
            nxt = g.next_cw(u1, cur)
            fid = g.face_of_dart[(cur, u1)]
        else:
            nxt = g.prev_cw(u1, cur)
            fid = g.face_of_dart[(u1, cur)]
        f = g.faces[fid]
        if f.degree >= 5:
            return SupportWitness(t, v, u1, cur, tuple(chain))
        if f.degree != 4:
            return None
        pos = _dart_position(f, (cur, u1) if forward else (u1, cur))
        opp = f.vertices[(pos + 2) % 4] if forward else f.vertices[(pos + 3) % 4]
        if g.degree(opp) >= 4:
            return SupportWitness(t, v, u1, cur, tuple(chain))
        if nxt in chain:
            return None
        chain.append(nxt)
        cur = nxt


def _dart_position(f, dart: tuple[int, int]) -> int:
    for i, d in enumerate(f.darts):
        if (d.origin, d.target) == dart:
            return i
    raise AssertionError("dart not on face")


def support_anchors(g: PlaneGraph) -> list[tuple[int, int, int, int]]:
    """All (t, v, u1, u2) with a quadrangular face (t, u1, v, u2), d(t)=2, d(v)=3.

    Each pivot order is listed, so every anchored pair (t, v) yields two
    entries, one per pivot.
    """
    seen = set()
    out = []
    for f in g.faces:
        if f.degree != 4:
            continue
        vs = f.vertices
        for i in range(4):
            t = vs[i]
            v = vs[(i + 2) % 4]
            if g.degree(t) != 2 or g.degree(v) != 3:
                continue
            a, b = vs[(i + 1) % 4], vs[(i + 3) % 4]
            for u1, u2 in ((a, b), (b, a)):
                key = (t, v, u1)
                if key not in seen and u1 != u2:
                    seen.add(key)
                    out.append((t, v, u1, u2))
    return out


def all_supports(g: PlaneGraph) -> list[SupportWitness]:
    out = []
    for t, v, u1, _ in support_anchors(g):
        try:
            s = find_support(g, t, v, u1)
        except BadAnchor:
            continue
        if s is not None:
            out.append(s)
    return out


def c2_c3_diagnostic(g: PlaneGraph) -> Optional[Configuration]:
    """A chorded 4-cycle (C2) or 5-cycle (C3), if one exists."""
    for u, w in g.edges():
        common = sorted(g.neighbor_set(u) & g.neighbor_set(w))
        if len(common) >= 2:
            return C2(u, common[0], w, common[1])
    for w, y in g.edges():
        for a, b in ((w, y), (y, w)):
            # cycle (u, v, a, x, b): x common to a and b, v-u path avoiding them
            for x in sorted(g.neighbor_set(a) & g.neighbor_set(b)):
                for v in sorted(g.neighbor_set(a) - {b, x}):
                    for u in sorted(g.neighbor_set(v) & g.neighbor_set(b) - {a, x, v}):
                        return C3(u, v, a, x, b)
    return None


__all__ = [
    "BadAnchor",
    "C1",
    "C2",
    "C3",
    "C4",
    "C5",
    "C6",
    "C7",
    "Configuration",
    "PRIORITY",
    "SupportWitness",
    "all_configurations",
    "all_supports",
    "c2_c3_diagnostic",
    "configuration_vertices",
    "detect_configuration",
    "edge_key",
    "find_support",
    "format_configuration",
    "iter_c1",
    "iter_c4",
    "iter_c5",
    "iter_c6",
    "iter_c7",
    "opposite_in_quad",
    "support_anchors",
    "verify_configuration",
]
