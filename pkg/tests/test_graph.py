import itertools

import pytest
from hypothesis import given, settings

from conftest import connected_graphs as connected_st
from conftest import graphs as graphs_st
from pbei.fixtures import BRIDGED_TRIANGLES, THREE_TRIANGLES, THREE_TRIANGLES_SQUARES, K3, P5
from pbei.graph import (
    EVEN,
    ODD,
    Graph,
    NotConnected,
    _components,
    _is_disconnector,
    analyze_components,
    disconnector_info,
    enumerate_disconnectors,
    is_disconnector,
    parity_reachable,
    sign_split_patterns,
    walk_parities_within,
)
from pbei.combinatorics import MarkovMove, markov_basis
from pbei.verify import parity_by_enumeration


def test_graph_validation():
    with pytest.raises(ValueError, match="loop"):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError, match="range"):
        Graph(2, [(1, 3)])
    with pytest.raises(ValueError, match="duplicate"):
        Graph(3, [(1, 2), (2, 1)])


def test_edges_are_canonical():
    assert Graph(3, [(3, 1), (2, 1)]).edges == ((1, 2), (1, 3))
    assert Graph(3, [(3, 1), (2, 1)]) == Graph(3, [(1, 2), (1, 3)])


def test_component_report_counts():
    g = Graph(7, [(1, 2), (2, 3), (1, 3), (4, 5)])
    rep = analyze_components(g)
    assert [sorted(c) for c in rep.components] == [[1, 2, 3], [4, 5], [6], [7]]
    assert rep.bipartite_flags == (False, True, True, True)
    assert (rep.c, rep.c0, rep.c1, rep.s) == (4, 3, 1, 7)
    assert rep.s == 2 * rep.c0 + rep.c1


def test_induced_subgraph():
    sub = P5.remove({3})
    assert sub.vertices == [1, 2, 4, 5]
    assert sub.edges == [(1, 2), (4, 5)]
    assert P5.induced({1, 2, 3}).edges == [(1, 2), (2, 3)]


def test_parity_small_cases():
    assert parity_reachable(P5, 1, 2, ODD)
    assert not parity_reachable(P5, 1, 2, EVEN)
    assert parity_reachable(P5, 1, 1, EVEN)  # the empty walk
    assert not parity_reachable(P5, 1, 1, ODD)
    assert parity_reachable(K3, 1, 1, ODD)
    assert parity_reachable(K3, 1, 2, EVEN)
    assert walk_parities_within(BRIDGED_TRIANGLES, {1, 2, 3}, 1, 3) == (True, True)
    assert walk_parities_within(BRIDGED_TRIANGLES, {3, 4, 5}, 3, 5) == (False, True)


@settings(max_examples=60, deadline=None)
@given(graphs_st(max_n=6))
def test_parity_matches_enumeration(g):
    for i, j in itertools.product(g.vertices, repeat=2):
        for parity in (ODD, EVEN):
            assert parity_reachable(g, i, j, parity) == parity_by_enumeration(g, i, j, parity)


def test_not_connected_rejected():
    with pytest.raises(NotConnected):
        enumerate_disconnectors(Graph(4, [(1, 2), (3, 4)]))


def test_p5_disconnectors():
    infos = enumerate_disconnectors(P5)
    assert [sorted(d.S) for d in infos] == [[], [2], [3], [4], [2, 4]]
    assert all(d.effective for d in infos)


def test_triangle_disconnectors():
    assert [sorted(d.S) for d in enumerate_disconnectors(K3)] == [[], [1], [2], [3]]


def test_sign_patterns_fixtures():
    info = disconnector_info(BRIDGED_TRIANGLES, {4})
    assert info.sign_split_patterns == ((1, -1), (-1, 1))
    assert sign_split_patterns(BRIDGED_TRIANGLES, info, char2=True) == []
    sq = disconnector_info(THREE_TRIANGLES, THREE_TRIANGLES_SQUARES)
    assert not sq.effective
    assert sorted(sq.constraint_sets()) == [(0, 1), (0, 2), (1, 2)]


def test_disconnector_info_rejects_non_disconnector():
    with pytest.raises(ValueError):
        disconnector_info(P5, {1})


def _naive_disconnectors(g):
    adj = g.adjacency()
    out = []
    for r in range(g.n + 1):
        for S in itertools.combinations(g.vertices, r):
            if _is_disconnector(adj, frozenset(S)):
                out.append(sorted(S))
    return out


@settings(max_examples=60, deadline=None)
@given(connected_st(max_n=6))
def test_disconnector_properties(g):
    infos = enumerate_disconnectors(g)
    # the isolated-vertex filter is sound
    assert [sorted(d.S) for d in infos] == _naive_disconnectors(g)
    adj = g.adjacency()
    for d in infos:
        keep = frozenset(g.vertices) - d.S
        s_here = _components({v: adj[v] & keep for v in keep}).s
        for s in d.S:
            back = keep | {s}
            assert _components({v: adj[v] & back for v in back}).s < s_here
        assert d.effective == bool(sign_split_patterns(g, d))
    if g.n >= 2:
        base = analyze_components(g).s
        for s in g.vertices:
            assert is_disconnector(g, {s}) == (analyze_components(g.remove({s})).s > base)


@settings(max_examples=40, deadline=None)
@given(connected_st(max_n=5))
def test_removed_walks_leave_markov_basis(g):
    full = set(markov_basis(g))
    for r in range(1, g.n):
        for S in itertools.combinations(g.vertices, r):
            sub = g.remove(S)
            sub_moves = set(markov_basis(sub))
            for i, j in itertools.combinations_with_replacement(sub.vertices, 2):
                for parity in (ODD, EVEN):
                    if i == j and parity == EVEN:
                        continue
                    move = MarkovMove(i, j, parity)
                    if move in full and not parity_reachable(sub, i, j, parity):
                        assert move not in sub_moves
