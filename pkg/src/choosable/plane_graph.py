"""Plane graphs stored as rotation systems.

A plane graph is given by, for every vertex, the clockwise cyclic order of
its neighbours.  Faces are recovered by the dart successor rule: the face
successor of the dart ``u -> v`` is ``v -> w`` where ``w`` immediately
follows ``u`` in the rotation of ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import AbstractSet as Set, Iterable, Mapping, Optional, Sequence

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    """Canonical (sorted) form of the undirected edge ``uv``."""
    return (u, v) if u < v else (v, u)


class PlaneGraphError(ValueError):
    pass


class NonSimple(PlaneGraphError):
    pass


class AsymmetricAdjacency(PlaneGraphError):
    pass


class NotPlaneEmbedding(PlaneGraphError):
    pass


class NotAQuad(PlaneGraphError):
    pass


@dataclass(frozen=True)
class Dart:
    origin: int
    target: int

    @property
    def twin(self) -> "Dart":
        return Dart(self.target, self.origin)


@dataclass(frozen=True)
class FaceWalk:
    """Closed boundary walk of one face; vertices and edges may repeat."""

    darts: tuple[Dart, ...]

    @property
    def degree(self) -> int:
        return len(self.darts)

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(d.origin for d in self.darts)

    def edges(self) -> list[Edge]:
        return [edge_key(d.origin, d.target) for d in self.darts]

    def __len__(self) -> int:
        return len(self.darts)


class PlaneGraph:
    """Immutable simple plane graph given by a clockwise rotation system.

    Vertex ids are arbitrary non-negative integers; after vertex deletion the
    id set is no longer contiguous.
    """

    def __init__(self, rotation: Mapping[int, Sequence[int]], *, validate: bool = True):
        self.rotation: dict[int, tuple[int, ...]] = {
            v: tuple(rotation[v]) for v in sorted(rotation)
        }
        if validate:
            self._check_simple_symmetric()
        self._pos: dict[tuple[int, int], int] = {}
        for v, rot in self.rotation.items():
            for i, w in enumerate(rot):
                self._pos[(v, w)] = i
        if validate:
            self.validate()

    # ------------------------------------------------------------------ checks

    def _check_simple_symmetric(self) -> None:
        for v, rot in self.rotation.items():
            if v in rot:
                raise NonSimple(f"loop at vertex {v}")
            if len(set(rot)) != len(rot):
                raise NonSimple(f"repeated neighbour in rotation of {v}: {list(rot)}")
        for v, rot in self.rotation.items():
            for w in rot:
                if w not in self.rotation:
                    raise AsymmetricAdjacency(f"{v} lists unknown vertex {w}")
                if v not in self.rotation[w]:
                    raise AsymmetricAdjacency(f"{w} in rotation({v}) but {v} not in rotation({w})")

    def validate(self) -> None:
        """Check the genus-0 certificate on every component and the handshake sums."""
        face_count: dict[int, int] = {}
        comp = self._component_index
        for f in self.faces:
            c = comp[f.darts[0].origin]
            face_count[c] = face_count.get(c, 0) + 1
        for c, members in enumerate(self.components()):
            n_v = len(members)
            n_e = sum(len(self.rotation[v]) for v in members) // 2
            # an isolated vertex traces no face but still sits in one
            n_f = max(face_count.get(c, 0), 1)
            if n_v - n_e + n_f != 2:
                raise NotPlaneEmbedding(
                    f"component containing {members[0]}: V-E+F = {n_v}-{n_e}+{n_f} != 2"
                )
        two_e = 2 * self.num_edges
        assert sum(self.degree(v) for v in self.rotation) == two_e
        assert sum(f.degree for f in self.faces) == two_e

    # ----------------------------------------------------------------- queries

    @property
    def vertices(self) -> list[int]:
        return list(self.rotation)

    @property
    def num_vertices(self) -> int:
        return len(self.rotation)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(r) for r in self.rotation.values()) // 2

    @cached_property
    def max_degree(self) -> int:
        return max((len(r) for r in self.rotation.values()), default=0)

    @cached_property
    def _adj(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(r) for v, r in self.rotation.items()}

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.rotation[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self._pos

    def has_vertex(self, v: int) -> bool:
        return v in self.rotation

    def edges(self) -> list[Edge]:
        return [(u, v) for u, rot in self.rotation.items() for v in sorted(rot) if u < v]

    def next_cw(self, v: int, u: int) -> int:
        """Neighbour of ``v`` immediately after ``u`` in clockwise order."""
        rot = self.rotation[v]
        return rot[(self._pos[(v, u)] + 1) % len(rot)]

    def prev_cw(self, v: int, u: int) -> int:
        rot = self.rotation[v]
        return rot[(self._pos[(v, u)] - 1) % len(rot)]

    def successor(self, d: Dart) -> Dart:
        return Dart(d.target, self.next_cw(d.target, d.origin))

    @cached_property
    def faces(self) -> tuple[FaceWalk, ...]:
        return tuple(trace_faces(self))

    @cached_property
    def face_of_dart(self) -> dict[tuple[int, int], int]:
        index = {}
        for i, f in enumerate(self.faces):
            for d in f.darts:
                index[(d.origin, d.target)] = i
        return index

    def face_degree(self, i: int) -> int:
        return self.faces[i].degree

    def components(self) -> list[list[int]]:
        return self._components

    @cached_property
    def _components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for s in self.rotation:
            if s in seen:
                continue
            seen.add(s)
            stack, members = [s], []
            while stack:
                v = stack.pop()
                members.append(v)
                for w in self.rotation[v]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            out.append(sorted(members))
        return out

    @cached_property
    def _component_index(self) -> dict[int, int]:
        return {v: c for c, members in enumerate(self._components) for v in members}

    # ---------------------------------------------------------------- deletion

    def delete_edges(self, edges: Iterable[Edge]) -> "PlaneGraph":
        """Sub-embedding without ``edges``; the cyclic order of the rest is kept."""
        gone: dict[int, set[int]] = {}
        for u, v in edges:
            if not self.has_edge(u, v):
                raise KeyError(f"no edge {u}-{v}")
            gone.setdefault(u, set()).add(v)
            gone.setdefault(v, set()).add(u)
        rot = dict(self.rotation)
        for v, ws in gone.items():
            rot[v] = tuple(w for w in rot[v] if w not in ws)
        return PlaneGraph(rot, validate=False)

    def delete_vertices(self, vertices: Iterable[int]) -> "PlaneGraph":
        gone = set(vertices)
        touched = {w for v in gone for w in self.rotation[v]} - gone
        rot = {v: r for v, r in self.rotation.items() if v not in gone}
        for v in touched:
            rot[v] = tuple(w for w in rot[v] if w not in gone)
        return PlaneGraph(rot, validate=False)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PlaneGraph) and self.rotation == other.rotation

    def __hash__(self) -> int:
        return hash(tuple(self.rotation.items()))

    def __repr__(self) -> str:
        return f"PlaneGraph(V={self.num_vertices}, E={self.num_edges}, F={len(self.faces)})"


def build_from_rotation(n: int, rotations: Mapping[int, Sequence[int]] | Sequence[Sequence[int]]) -> PlaneGraph:
    """Validated plane graph on vertices ``0..n-1``.

    Vertices missing from ``rotations`` are isolated.  Raises ``NonSimple``,
    ``AsymmetricAdjacency`` or ``NotPlaneEmbedding``.
    """
    if not isinstance(rotations, Mapping):
        rotations = dict(enumerate(rotations))
    rot = {}
    for v in range(n):
        rot[v] = tuple(rotations.get(v, ()))
    for v, ws in rotations.items():
        if not 0 <= v < n:
            raise AsymmetricAdjacency(f"vertex id {v} outside [0, {n})")
        for w in ws:
            if not 0 <= w < n:
                raise AsymmetricAdjacency(f"neighbour id {w} of {v} outside [0, {n})")
    return PlaneGraph(rot)


def trace_faces(g: PlaneGraph) -> list[FaceWalk]:
    """Partition the darts of ``g`` into face boundary walks.

    Walks are started from unvisited darts in sorted order, so the output is
    a deterministic function of the rotation system.
    """
    visited: set[tuple[int, int]] = set()
    faces = []
    for u, rot in g.rotation.items():
        for v in sorted(rot):
            if (u, v) in visited:
                continue
            walk = []
            d = Dart(u, v)
            while (d.origin, d.target) not in visited:
                visited.add((d.origin, d.target))
                walk.append(d)
                d = g.successor(d)
            faces.append(FaceWalk(tuple(walk)))
    return faces


@dataclass(frozen=True)
class TriangleC4Witness:
    triangle: tuple[int, int, int]
    cycle: tuple[int, int, int, int]
    shared_edge: Edge

    def describe(self) -> str:
        a, b, c = self.triangle
        return (
            f"triangle ({a},{b},{c}) shares edge {self.shared_edge} "
            f"with 4-cycle {tuple(self.cycle)}"
        )


def triangle_c4_on_edge(adj: Mapping[int, Set[int]], u: int, v: int) -> Optional[TriangleC4Witness]:
    """Witness whose shared edge is ``uv``, over a plain adjacency map."""
    nu, nv = adj[u], adj[v]
    apexes = nu & nv
    if not apexes:
        return None
    w = min(apexes)
    for a in sorted(nu - {v}):
        common = (nv & adj[a]) - {u, a}
        if common:
            return TriangleC4Witness((u, v, w), (u, a, min(common), v), edge_key(u, v))
    return None


def find_triangle_adjacent_c4(g: PlaneGraph) -> Optional[TriangleC4Witness]:
    """Return a 3-cycle and a 4-cycle sharing an edge, or ``None``."""
    adj = g._adj
    for u, v in g.edges():
        found = triangle_c4_on_edge(adj, u, v)
        if found is not None:
            return found
    return None


def opposite_in_quad(g: PlaneGraph, face: FaceWalk | int, u: int, occurrence: int = 0) -> int:
    """Vertex two steps along the quadrangular ``face`` from an occurrence of ``u``."""
    if isinstance(face, int):
        face = g.faces[face]
    if face.degree != 4:
        raise NotAQuad(f"face has degree {face.degree}")
    positions = [i for i, w in enumerate(face.vertices) if w == u]
    if occurrence >= len(positions):
        raise ValueError(f"vertex {u} does not occur {occurrence + 1} times on face")
    return face.vertices[(positions[occurrence] + 2) % 4]


def from_coordinates(points: Mapping[int, tuple[float, float]], edges: Iterable[Edge]) -> PlaneGraph:
    """Rotation system of a straight-line drawing; neighbours sorted clockwise.

    The drawing is trusted to be crossing-free; the result is validated.
    """
    import math

    nbrs: dict[int, list[int]] = {v: [] for v in points}
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    rot = {}
    for v, ws in nbrs.items():
        x0, y0 = points[v]
        # decreasing angle is clockwise
        rot[v] = sorted(ws, key=lambda w: -math.atan2(points[w][1] - y0, points[w][0] - x0))
    return PlaneGraph(rot)
