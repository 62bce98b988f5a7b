import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from choosable.kernels import (
    K23_CONFLICTS,
    EmptyList,
    K23Instance,
    ListTooSmall,
    OddLength,
    PreconditionViolated,
    WorkingLists,
    color_even_cycle,
    color_k23,
    greedy_extend,
    k23_case,
    trim_k23,
)
from choosable.testkit.oracle import brute_force_color, k23_graph

from graphs import triangle


def proper_on_cycle(lists, colors):
    n = len(lists)
    return all(colors[i] in lists[i] for i in range(n)) and all(colors[i] != colors[(i + 1) % n] for i in range(n))


def test_even_cycle_equal_lists_alternate():
    assert color_even_cycle([{1, 2}] * 4) == [1, 2, 1, 2]


def test_even_cycle_mixed_lists():
    lists = [{1, 2}, {1, 2}, {2, 3}, {1, 3}]
    assert proper_on_cycle(lists, color_even_cycle(lists))


def test_even_cycle_errors():
    with pytest.raises(OddLength):
        color_even_cycle([{1, 2}] * 3)
    with pytest.raises(ListTooSmall):
        color_even_cycle([{1}, {1, 2}, {1, 2}, {1, 2}])


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 6).flatmap(lambda h: st.lists(st.sets(st.integers(1, 6), min_size=2, max_size=4), min_size=2 * h, max_size=2 * h)))
def test_even_cycle_property(lists):
    assert proper_on_cycle(lists, color_even_cycle(lists))


def test_greedy_lowest_first():
    g = triangle()
    lists = {e: {1, 2, 3} for e in g.edges()}
    col = {}
    wl = WorkingLists(g, lists, col, False, g.edges())
    out = greedy_extend(g.edges(), wl)
    assert sorted(out.values()) == [1, 2, 3]
    assert out[g.edges()[0]] == 1


def test_greedy_empty_list():
    g = triangle()
    lists = {e: {1, 2} for e in g.edges()}
    wl = WorkingLists(g, lists, {}, False, g.edges())
    with pytest.raises(EmptyList):
        greedy_extend(g.edges(), wl)


def test_working_lists_total_mode_tracks_vertices():
    g = triangle()
    lists = {x: {1, 2, 3, 4} for x in list(g.edges()) + g.vertices}
    col = {0: 1}
    wl = WorkingLists(g, lists, col, True, [(0, 1), 1, 2])
    assert wl.available((0, 1)) == {2, 3, 4}
    assert wl.available(2) == {2, 3, 4}
    wl.assign((0, 1), 2)
    assert wl.available(1) == {3, 4}
    assert wl.available(2) == {2, 3, 4}


FINAL_CASE = K23Instance(
    a=frozenset({1, 2}),
    b=frozenset({1, 3}),
    c=frozenset({1, 2, 3}),
    d=frozenset({4, 2, 3}),
    e=frozenset({4, 3}),
    f=frozenset({4, 2}),
)


def test_k23_final_case_pinned():
    assert k23_case(FINAL_CASE) == 4
    assert color_k23(FINAL_CASE) == {"a": 1, "b": 3, "c": 2, "d": 3, "e": 4, "f": 2}


def test_k23_oracle_agrees_on_final_case():
    g, roles = k23_graph()
    lists = {roles[r]: getattr(FINAL_CASE, r) for r in "abcdef"}
    assert brute_force_color(g, lists) is not None


def test_k23_graph_is_plane_k23():
    g, roles = k23_graph()
    assert g.num_edges == 6 and sorted(f.degree for f in g.faces) == [4, 4, 4]
    for r, e in roles.items():
        for s in K23_CONFLICTS[r]:
            assert set(e) & set(roles[s])
        for s in set("abcdef") - set(K23_CONFLICTS[r]) - {r}:
            assert not set(e) & set(roles[s])


def test_k23_trim_rules():
    big = K23Instance(*(frozenset(range(1, 6)) for _ in range(6)))
    L = trim_k23(big)
    assert [len(L[r]) for r in "abcdef"] == [2, 2, 3, 3, 2, 2]
    assert L["a"] != L["b"]
    same = K23Instance(frozenset({1, 2}), frozenset({1, 2}), *(frozenset({1, 2, 3}),) * 2, frozenset({1, 2}), frozenset({1, 2}))
    with pytest.raises(PreconditionViolated):
        trim_k23(same)
    small = K23Instance(frozenset({1}), *(frozenset({1, 2, 3}),) * 5)
    with pytest.raises(PreconditionViolated):
        trim_k23(small)


def test_k23_each_case_is_reached():
    seen = set()
    rng = random.Random(5)
    pairs = [frozenset(c) for c in itertools.combinations(range(1, 6), 2)]
    triples = [frozenset(c) for c in itertools.combinations(range(1, 6), 3)]
    while len(seen) < 4:
        a, b, e, f = (rng.choice(pairs) for _ in range(4))
        if a == b:
            continue
        seen.add(k23_case(K23Instance(a, b, rng.choice(triples), rng.choice(triples), e, f)))
    assert seen == {1, 2, 3, 4}


@settings(max_examples=300, deadline=None)
@given(st.lists(st.sets(st.integers(1, 8), min_size=3, max_size=5), min_size=6, max_size=6))
def test_k23_larger_lists(ls):
    inst = K23Instance(*(frozenset(x) for x in ls))
    col = color_k23(inst)
    for r in "abcdef":
        assert col[r] in getattr(inst, r)
        assert all(col[r] != col[s] for s in K23_CONFLICTS[r])
