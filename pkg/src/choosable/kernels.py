"""Coloring primitives shared by every extension step.

* ``WorkingLists`` tracks, for the elements still to be colored, which list
  colors are not yet used by a conflicting colored element.
* ``greedy_extend`` colors a sequence, lowest available color first.
* ``color_even_cycle`` is the constructive 2-choosability of even cycles.
* ``color_k23`` edge-colors K_{2,3} from lists of sizes 2,2,3,3,2,2.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Hashable, Iterable, Iterator, Mapping, Sequence

from .plane_graph import PlaneGraph, edge_key

Element = Hashable  # an edge (u, v) with u < v, or a vertex id


class KernelError(Exception):
    pass


class EmptyList(KernelError):
    def __init__(self, element):
        super().__init__(f"no color left for {element!r}")
        self.element = element


class OddLength(KernelError):
    pass


class ListTooSmall(KernelError):
    pass


class PreconditionViolated(KernelError):
    pass


def is_edge(x) -> bool:
    return isinstance(x, tuple)


def conflicts(g: PlaneGraph, x, total: bool) -> Iterator:
    """Elements adjacent or incident to ``x`` (vertices only in total mode)."""
    if is_edge(x):
        u, v = x
        for w in g.neighbors(u):
            if w != v:
                yield edge_key(u, w)
        for w in g.neighbors(v):
            if w != u:
                yield edge_key(v, w)
        if total:
            yield u
            yield v
    else:
        for w in g.neighbors(x):
            yield edge_key(x, w)
        if total:
            yield from g.neighbors(x)


class WorkingLists:
    """Available colors of pending elements given a partial coloring.

    ``coloring`` is shared and mutated in place.  Only elements registered as
    pending have cached available sets; ``assign`` keeps those caches in
    step, and ``recompute`` rebuilds one from scratch.
    """

    def __init__(
        self,
        g: PlaneGraph,
        lists: Mapping,
        coloring: dict,
        total: bool,
        pending: Iterable = (),
    ):
        self.g = g
        self.lists = lists
        self.coloring = coloring
        self.total = total
        self._avail: dict = {}
        for x in pending:
            self.add_pending(x)

    def add_pending(self, x) -> None:
        assert x not in self.coloring, f"{x!r} is already colored"
        self._avail[x] = self.recompute(x)

    def recompute(self, x) -> set:
        used = {self.coloring[y] for y in conflicts(self.g, x, self.total) if y in self.coloring}
        return set(self.lists[x]) - used

    def available(self, x) -> set:
        return self._avail[x]

    def pending(self) -> list:
        return list(self._avail)

    def assign(self, x, color) -> None:
        assert x in self._avail, f"{x!r} is not pending"
        assert color in self._avail[x], f"color {color} unavailable for {x!r}"
        del self._avail[x]
        self.coloring[x] = color
        for y in conflicts(self.g, x, self.total):
            if y in self._avail:
                self._avail[y].discard(color)

    def greedy(self, x, avoid: Iterable = ()) -> int:
        """Color ``x`` with its lowest available color outside ``avoid``."""
        options = self._avail[x] - set(avoid)
        if not options:
            raise EmptyList(x)
        c = min(options)
        self.assign(x, c)
        return c


def greedy_extend(order: Sequence, wl: WorkingLists) -> dict:
    """Color ``order`` one element at a time, lowest available color first."""
    out = {}
    for x in order:
        out[x] = wl.greedy(x)
    return out


def trim(colors: Iterable[int], size: int) -> frozenset[int]:
    return frozenset(sorted(colors)[:size])


def color_even_cycle(lists: Sequence[Iterable[int]]) -> list[int]:
    """Proper coloring of a cycle of even length from lists of size >= 2.

    Position ``i`` conflicts with ``i-1`` and ``i+1`` (indices mod n).  A
    length-2 cycle is two elements that must differ.
    """
    n = len(lists)
    if n % 2 or n == 0:
        raise OddLength(f"cycle length {n}")
    if any(len(set(L)) < 2 for L in lists):
        raise ListTooSmall("every list needs two colors")
    L = [trim(x, 2) for x in lists]
    if all(x == L[0] for x in L):
        lo, hi = sorted(L[0])
        return [lo if i % 2 == 0 else hi for i in range(n)]
    i = next(j for j in range(n) if L[j] != L[(j + 1) % n])
    out: list = [None] * n
    out[i] = min(L[i] - L[(i + 1) % n])
    # walk backwards from i-1 round to i+1; each step has one colored neighbour
    # except the last, whose other neighbour i holds a color outside its list
    for step in range(1, n):
        j = (i - step) % n
        taken = {out[(j + 1) % n], out[(j - 1) % n]}
        options = L[j] - taken
        if not options:
            raise EmptyList(j)
        out[j] = min(options)
    return out


# --------------------------------------------------------------------- K2,3

ROLES = "abcdef"

# a, b, c meet at y; d, e, f meet at the other degree-3 vertex;
# c-d meet at z, a-f and b-e at the two remaining degree-2 vertices
K23_CONFLICTS = {
    "a": "bcf",
    "b": "ace",
    "c": "abd",
    "d": "cef",
    "e": "bdf",
    "f": "ade",
}

_SWAP_AB = {"a": "b", "b": "a", "c": "c", "d": "d", "e": "f", "f": "e"}
_SWAP_SIDES = {"a": "f", "b": "e", "c": "d", "d": "c", "e": "b", "f": "a"}
_SYMMETRIES = [
    {r: r for r in ROLES},
    _SWAP_AB,
    _SWAP_SIDES,
    {r: _SWAP_SIDES[_SWAP_AB[r]] for r in ROLES},
]


@dataclass(frozen=True)
class K23Instance:
    """Lists for the six edges of K_{2,3}; see ``K23_CONFLICTS`` for the roles."""

    a: frozenset
    b: frozenset
    c: frozenset
    d: frozenset
    e: frozenset
    f: frozenset

    def as_dict(self) -> dict[str, frozenset]:
        return {r: getattr(self, r) for r in ROLES}


def trim_k23(inst: K23Instance) -> dict[str, frozenset]:
    """Cut lists to sizes 2,2,3,3,2,2 keeping L(a) != L(b).

    Each list keeps its lexicographically smallest admissible subset.
    """
    L = inst.as_dict()
    sizes = {"a": 2, "b": 2, "c": 3, "d": 3, "e": 2, "f": 2}
    for r, s in sizes.items():
        if len(L[r]) < s:
            raise PreconditionViolated(f"list {r} has {len(L[r])} < {s} colors")
    out = {r: trim(L[r], s) for r, s in sizes.items()}
    if out["a"] == out["b"]:
        alt_b = [frozenset(x) for x in combinations(sorted(L["b"]), 2) if frozenset(x) != out["a"]]
        alt_a = [frozenset(x) for x in combinations(sorted(L["a"]), 2) if frozenset(x) != out["b"]]
        if alt_b:
            out["b"] = alt_b[0]
        elif alt_a:
            out["a"] = alt_a[0]
        else:
            raise PreconditionViolated(f"L(a) = L(b) = {sorted(out['a'])}")
    return out


def _pick(L, col, r, avoid=()) -> None:
    used = {col[x] for x in K23_CONFLICTS[r] if x in col}
    options = L[r] - used - set(avoid)
    assert options, f"K23 step {r}: no color left"
    col[r] = min(options)


def _k23_case(L: dict) -> int:
    if L["a"] & L["e"] != L["b"] & L["f"]:
        return 1
    if L["a"] | L["e"] != L["b"] | L["f"]:
        return 2
    if not (L["a"] | L["b"] <= L["c"]) or not (L["e"] | L["f"] <= L["d"]):
        return 3
    return 4


def k23_case(inst: K23Instance) -> int:
    """Which branch of the case analysis ``color_k23`` takes (1 to 4)."""
    return _k23_case(trim_k23(inst))


def _case1(L) -> dict:
    alpha = min((L["a"] & L["e"]) - (L["b"] & L["f"]))
    col = {"a": alpha, "e": alpha}
    if alpha not in L["b"]:
        for r in "fdcb":
            _pick(L, col, r)
    else:
        for r in "bcdf":
            _pick(L, col, r)
    return col


def _case2(L) -> dict:
    alpha = min(L["a"] - (L["b"] | L["f"]))
    col = {"a": alpha}
    if L["e"] == L["f"]:
        col["d"] = min(L["d"] - L["f"])
        for r in "cbef":
            _pick(L, col, r)
    else:
        col["f"] = min(L["f"] - L["e"] - {alpha})
        ring = "bcde"  # b-c at y, c-d at z, d-e at the far hub, e-b
        lists = [L[r] - {col[x] for x in K23_CONFLICTS[r] if x in col} for r in ring]
        for r, c in zip(ring, color_even_cycle(lists)):
            col[r] = c
    return col


def _case3(L) -> dict:
    alpha = min(L["a"] - L["c"])
    col = {"a": alpha}
    if alpha not in L["b"]:
        order = "febdc"
    elif alpha not in L["f"]:
        order = "befdc"
    else:
        assert alpha in L["e"]
        col["e"] = alpha
        order = "bfdc"
    for r in order:
        _pick(L, col, r)
    return col


def _case4(L) -> dict:
    (one,) = L["a"] & L["b"]
    (two,) = L["a"] - L["b"]
    (three,) = L["b"] - L["a"]
    (alpha,) = L["e"] & L["f"]
    assert L["c"] == {one, two, three}
    assert L["f"] == {alpha, two} and L["e"] == {alpha, three} and L["d"] == {alpha, two, three}
    return {"a": one, "b": three, "c": two, "d": three, "e": alpha, "f": two}


def _canonical_condition(case: int, L) -> bool:
    if case == 1:
        return bool((L["a"] & L["e"]) - (L["b"] & L["f"]))
    if case == 2:
        return bool(L["a"] - (L["b"] | L["f"]))
    if case == 3:
        return bool(L["a"] - L["c"])
    return True


_CASES = {1: _case1, 2: _case2, 3: _case3, 4: _case4}


def color_k23(inst: K23Instance) -> dict[str, int]:
    """Proper edge coloring of K_{2,3}; keys are the roles ``a`` to ``f``.

    The first three cases are symmetric under swapping (a, e) with (b, f)
    and under swapping the sides (a, b, c) with (f, e, d); each is run on
    the first relabelling that puts the lists in the branch's normal form.
    """
    L = trim_k23(inst)
    case = _k23_case(L)
    for perm in _SYMMETRIES if case != 4 else _SYMMETRIES[:1]:
        P = {r: L[perm[r]] for r in ROLES}
        if _canonical_condition(case, P):
            col = _CASES[case](P)
            out = {perm[r]: c for r, c in col.items()}
            break
    else:
        raise AssertionError(f"no normal form for case {case}: {L}")
    for r in ROLES:
        assert out[r] in L[r], (r, out, L)
        for s in K23_CONFLICTS[r]:
            assert out[r] != out[s], (r, s, out, L)
    return out
