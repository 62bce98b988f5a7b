"""Line-oriented text formats for graphs, list assignments and colorings.

Graph::

    V <n>
    R <v>: <w1> <w2> ... <wd>      # clockwise rotation of v

Lists and colorings::

    E <u> <v>: <c1> <c2> ...       V <v>: <c1> <c2> ...
    E <u> <v> -> <c>               V <v> -> <c>

``#`` starts a comment anywhere on a line; blank lines are ignored.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .plane_graph import PlaneGraph, build_from_rotation, edge_key


class FormatError(ValueError):
    pass


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if toks:
            yield no, toks


def _int(tok: str, no: int) -> int:
    body = tok[1:] if tok[:1] == "-" else tok
    if not (body.isascii() and body.isdigit()):
        raise FormatError(f"line {no}: expected a decimal integer, got {tok!r}")
    return int(tok)


def _split_colon(toks: list[str], no: int) -> tuple[list[str], list[str]]:
    joined = " ".join(toks).replace(":", " : ")
    parts = joined.split()
    if parts.count(":") != 1:
        raise FormatError(f"line {no}: expected exactly one ':'")
    i = parts.index(":")
    return parts[:i], parts[i + 1 :]


# ------------------------------------------------------------------- graphs


def parse_graph(text: str) -> PlaneGraph:
    """Raises ``FormatError`` on syntax and a ``PlaneGraphError`` when the
    rotation system is not a simple plane embedding."""
    n = None
    rot: dict[int, list[int]] = {}
    for no, toks in _lines(text):
        tag = toks[0]
        if tag == "V":
            if n is not None:
                raise FormatError(f"line {no}: repeated V line")
            if len(toks) != 2:
                raise FormatError(f"line {no}: expected 'V <n>'")
            n = _int(toks[1], no)
            if n < 0:
                raise FormatError(f"line {no}: negative vertex count")
        elif tag == "R":
            if n is None:
                raise FormatError(f"line {no}: R line before V line")
            head, tail = _split_colon(toks, no)
            if head[0] != "R" or len(head) != 2:
                raise FormatError(f"line {no}: expected 'R <v>: ...'")
            v = _int(head[1], no)
            if v in rot:
                raise FormatError(f"line {no}: second rotation for vertex {v}")
            rot[v] = [_int(t, no) for t in tail]
        else:
            raise FormatError(f"line {no}: unknown tag {tag!r}")
    if n is None:
        raise FormatError("missing V line")
    return build_from_rotation(n, rot)


def format_graph(g: PlaneGraph) -> str:
    ids = g.vertices
    if ids != list(range(len(ids))):
        raise ValueError("format_graph needs vertex ids 0..n-1")
    out = [f"V {g.num_vertices}"]
    for v in ids:
        out.append(f"R {v}: " + " ".join(map(str, g.neighbors(v))) if g.degree(v) else f"R {v}:")
    return "\n".join(out) + "\n"


# ---------------------------------------------------- lists and colorings


def _element(head: list[str], no: int):
    if not head:
        raise FormatError(f"line {no}: missing element")
    if head[0] == "E" and len(head) == 3:
        u, v = _int(head[1], no), _int(head[2], no)
        if u == v:
            raise FormatError(f"line {no}: loop {u}-{v}")
        return edge_key(u, v)
    if head[0] == "V" and len(head) == 2:
        return _int(head[1], no)
    raise FormatError(f"line {no}: expected 'E <u> <v>' or 'V <v>'")


def parse_lists(text: str) -> dict:
    out: dict = {}
    for no, toks in _lines(text):
        head, tail = _split_colon(toks, no)
        x = _element(head, no)
        if x in out:
            raise FormatError(f"line {no}: second list for {x!r}")
        colors = [_int(t, no) for t in tail]
        if len(set(colors)) != len(colors):
            raise FormatError(f"line {no}: repeated color in list")
        out[x] = frozenset(colors)
    return out


def _sort_key(x):
    return (0, x) if isinstance(x, tuple) else (1, (x,))


def format_lists(lists: Mapping) -> str:
    out = []
    for x in sorted(lists, key=_sort_key):
        cs = " ".join(map(str, sorted(lists[x])))
        out.append(f"E {x[0]} {x[1]}: {cs}" if isinstance(x, tuple) else f"V {x}: {cs}")
    return "\n".join(out) + ("\n" if out else "")


def parse_coloring(text: str) -> dict:
    out: dict = {}
    for no, toks in _lines(text):
        if "->" not in toks or toks.count("->") != 1:
            raise FormatError(f"line {no}: expected '<element> -> <color>'")
        i = toks.index("->")
        if len(toks) != i + 2:
            raise FormatError(f"line {no}: expected one color after '->'")
        x = _element(toks[:i], no)
        if x in out:
            raise FormatError(f"line {no}: second color for {x!r}")
        out[x] = _int(toks[i + 1], no)
    return out


def format_coloring(coloring: Mapping) -> str:
    out = []
    for x in sorted(coloring, key=_sort_key):
        out.append(f"E {x[0]} {x[1]} -> {coloring[x]}" if isinstance(x, tuple) else f"V {x} -> {coloring[x]}")
    return "\n".join(out) + ("\n" if out else "")
