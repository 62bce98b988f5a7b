"""Exact discharging in quarter units.

Vertices start with d(v) - 6 and faces with 2 d(f) - 6; the face rules
R1.1-R1.4, R2.1, R2.2, R3, the support rule R4 and the pot rule Rg move
weight around.  Every amount is a multiple of 1/4, so weights are kept as
integers counting quarters.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .configurations import all_configurations, all_supports, configuration_vertices, format_configuration
from .plane_graph import PlaneGraph

QUARTER = 4  # quarter units per unit of weight

POT = "POT"


@dataclass(frozen=True)
class TransferRecord:
    rule: str
    source: str  # "V<id>", "F<id>" or "POT"
    sink: str
    amount: int  # quarter units
    occurrence: int = 0

    def line(self) -> str:
        return f"T {self.rule} {self.source} -> {self.sink} {self.amount} occ {self.occurrence}"


def _v(v: int) -> str:
    return f"V{v}"


def _f(i: int) -> str:
    return f"F{i}"


def _isolated(g: PlaneGraph) -> list[int]:
    return [v for v in g.vertices if g.degree(v) == 0]


def face_vertices(g: PlaneGraph, i: int) -> tuple[int, ...]:
    """Vertices of ledger face ``i``; indices past the traced faces are the
    degree-0 faces of isolated vertices, in vertex order."""
    if i < len(g.faces):
        return g.faces[i].vertices
    return (_isolated(g)[i - len(g.faces)],)


@dataclass
class WeightLedger:
    vertex_weight: dict[int, int]
    face_weight: dict[int, int]
    pot: int = 0
    transfers: list[TransferRecord] = field(default_factory=list)
    initial_vertex: dict[int, int] = field(default_factory=dict)
    initial_face: dict[int, int] = field(default_factory=dict)

    @classmethod
    def initial(cls, g: PlaneGraph) -> "WeightLedger":
        vw = {v: QUARTER * (g.degree(v) - 6) for v in g.vertices}
        fw = {i: QUARTER * (2 * f.degree - 6) for i, f in enumerate(g.faces)}
        # an isolated vertex traces no walk but sits in a face of degree 0
        for j, _ in enumerate(_isolated(g)):
            fw[len(g.faces) + j] = QUARTER * -6
        return cls(dict(vw), dict(fw), 0, [], vw, fw)

    @property
    def initial_total(self) -> int:
        return sum(self.initial_vertex.values()) + sum(self.initial_face.values())

    @property
    def total(self) -> int:
        return sum(self.vertex_weight.values()) + sum(self.face_weight.values()) + self.pot

    def _move(self, account: str, delta: int) -> None:
        if account == POT:
            self.pot += delta
        elif account[0] == "V":
            self.vertex_weight[int(account[1:])] += delta
        else:
            self.face_weight[int(account[1:])] += delta

    def apply(self, t: TransferRecord) -> None:
        before = self.total
        self._move(t.source, -t.amount)
        self._move(t.sink, t.amount)
        self.transfers.append(t)
        assert self.total == before

    def same_outcome(self, other: "WeightLedger") -> bool:
        return (
            self.vertex_weight == other.vertex_weight
            and self.face_weight == other.face_weight
            and self.pot == other.pot
            and Counter(self.transfers) == Counter(other.transfers)
        )


def face_transfers(g: PlaneGraph, k: int) -> list[TransferRecord]:
    """R1.x, R2.x and R3, once per occurrence on each face of degree >= 4."""
    out = []
    for fi, f in enumerate(g.faces):
        df = f.degree
        if df < 4:
            continue
        verts = f.vertices
        for i, u in enumerate(verts):
            du = g.degree(u)
            rule, amount = None, 0
            if du <= 3:
                if df == 4:
                    if g.degree(verts[(i + 2) % 4]) <= 3:
                        rule, amount = "R1.1", 4
                    else:
                        rule, amount = "R1.2", 6
                elif du == 3:
                    rule, amount = "R1.3", 6
                elif du == 2:
                    a, b = g.neighbors(u)
                    if not g.has_edge(a, b):
                        rule, amount = "R1.3", 6
                    elif df >= 6:
                        rule, amount = "R1.4", 10
            elif du <= 5:
                if df == 4 or du == 5:
                    rule, amount = "R2.1", 2
                else:
                    rule, amount = "R2.2", 4
            if rule is not None:
                out.append(TransferRecord(rule, _f(fi), _v(u), amount, i))
        for i, d in enumerate(f.darts):
            apexes = g.neighbor_set(d.origin) & g.neighbor_set(d.target)
            for w in sorted(apexes):
                if g.degree(w) == 2:
                    out.append(TransferRecord("R3", _f(fi), _v(w), 2, i))
    return out


def support_transfers(g: PlaneGraph) -> list[TransferRecord]:
    """R4: a quarter from each support to its degree-2 vertex, per anchor."""
    return [TransferRecord("R4", _v(s.w), _v(s.t), 1, 0) for s in all_supports(g)]


def pot_transfers(g: PlaneGraph, k: int) -> list[TransferRecord]:
    out = []
    for v in g.vertices:
        if g.degree(v) == k:
            out.append(TransferRecord("Rg", _v(v), POT, QUARTER, 0))
        elif g.degree(v) == 2:
            out.append(TransferRecord("Rg", POT, _v(v), QUARTER, 0))
    return out


def all_transfers(g: PlaneGraph, k: int) -> list[TransferRecord]:
    return face_transfers(g, k) + support_transfers(g) + pot_transfers(g, k)


def run_discharging(g: PlaneGraph, k: int, shuffle_seed: Optional[int] = None) -> WeightLedger:
    """Apply every rule once per qualifying occurrence.

    Rules read only degrees and structure, never current weights, so the
    order of application does not matter; ``shuffle_seed`` permutes it.
    """
    ledger = WeightLedger.initial(g)
    transfers = all_transfers(g, k)
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(transfers)
    for t in transfers:
        ledger.apply(t)
    return ledger


@dataclass
class AuditReport:
    k: int
    num_vertices: int
    num_edges: int
    num_faces: int
    ledger: WeightLedger
    conservation_ok: bool
    negatives: list[tuple[str, int, int]]
    deg_k: int
    deg_2: int
    r3_in_face: list[TransferRecord]
    cross_refs: dict[str, list[str]]

    @property
    def total_initial(self) -> int:
        return self.ledger.initial_total

    @property
    def euler_expected(self) -> int:
        return 24 * (self.num_edges - self.num_vertices - self.num_faces)

    @property
    def euler_ok(self) -> bool:
        return self.total_initial == self.euler_expected

    @property
    def pot_ok(self) -> bool:
        return self.deg_k >= self.deg_2

    def lines(self) -> list[str]:
        L = self.ledger
        out = []
        for v in sorted(L.vertex_weight):
            out.append(f"V {v} init {L.initial_vertex[v]} final {L.vertex_weight[v]}")
        for i in sorted(L.face_weight):
            out.append(f"F {i} init {L.initial_face[i]} final {L.face_weight[i]}")
        out.extend(t.line() for t in L.transfers)
        for t in self.r3_in_face:
            out.append(f"R3_IN_FACE {t.source} -> {t.sink} occ {t.occurrence}")
        for kind, ident, w in self.negatives:
            refs = self.cross_refs.get(f"{kind}{ident}", [])
            out.append(f"NEGATIVE {kind} {ident} {w} configs {len(refs)}" + "".join(f" | {r}" for r in refs))
        out.append(f"k {self.k}")
        out.append(f"euler V {self.num_vertices} E {self.num_edges} F {self.num_faces}")
        out.append(f"total_initial_q {self.total_initial}")
        out.append(f"euler_expected_q {self.euler_expected}")
        out.append(f"total_final_q {L.total}")
        out.append(f"pot_q {L.pot}")
        out.append(f"deg_k {self.deg_k} deg_2 {self.deg_2} pot_ok {int(self.pot_ok)}")
        out.append(f"conservation {'ok' if self.conservation_ok else 'FAIL'}")
        out.append(f"negatives {len(self.negatives)}")
        return out

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"


def audit(g: PlaneGraph, k: int) -> AuditReport:
    ledger = run_discharging(g, k)
    conservation_ok = ledger.total == ledger.initial_total
    negatives = [("V", v, w) for v, w in sorted(ledger.vertex_weight.items()) if w < 0]
    negatives += [("F", i, w) for i, w in sorted(ledger.face_weight.items()) if w < 0]
    in_face = []
    for t in ledger.transfers:
        if t.rule == "R3":
            fi, w = int(t.source[1:]), int(t.sink[1:])
            if w in face_vertices(g, fi):
                in_face.append(t)
    cross: dict[str, list[str]] = {}
    if negatives:
        configs = [(configuration_vertices(c), format_configuration(c)) for c in all_configurations(g, k)]
        for kind, ident, _ in negatives:
            around = {ident} if kind == "V" else set(face_vertices(g, ident))
            cross[f"{kind}{ident}"] = [s for vs, s in configs if vs & around]
    deg_k = sum(1 for v in g.vertices if g.degree(v) == k)
    deg_2 = sum(1 for v in g.vertices if g.degree(v) == 2)
    return AuditReport(
        k, g.num_vertices, g.num_edges, len(ledger.face_weight), ledger, conservation_ok, negatives, deg_k, deg_2, in_face, cross
    )
