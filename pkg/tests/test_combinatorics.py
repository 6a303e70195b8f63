import itertools
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from conftest import connected_graphs as connected_st
from pbei.combinatorics import (
    MarkovMove,
    WalkBinomial,
    _support_walks,
    markov_basis,
    pbei,
    reduced_binomials_by_definition,
    reduced_groebner_combinatorial,
)
from pbei.fixtures import TAILED_TRIANGLE, K3
from pbei.graph import (
    EVEN,
    ODD,
    Graph,
    NotConnected,
    _parity_closure,
    _restricted_adj,
    all_graphs,
    analyze_components,
    connected_graphs,
)
from pbei.poly import GF2, QQ, LEX, TermOrder


def test_markov_basis_of_fixture():
    moves = markov_basis(TAILED_TRIANGLE)
    assert len(moves) == 36
    assert MarkovMove(4, 5, EVEN) in moves
    assert MarkovMove(1, 1, ODD) in moves


def test_markov_basis_bipartite_has_no_squares():
    path = Graph(4, [(1, 2), (2, 3), (3, 4)])
    assert all(m.i != m.j for m in markov_basis(path))
    assert MarkovMove(1, 4, ODD) in markov_basis(path)
    assert MarkovMove(1, 3, EVEN) in markov_basis(path)


def test_walk_binomial_json_round_trip():
    wb = WalkBinomial(4, 6, ODD, frozenset({1, 2, 3}), frozenset({2}))
    data = wb.to_json()
    assert data == {"i": 4, "j": 6, "parity": "odd", "interior": [1, 2, 3], "px": [2], "py": [1, 3]}
    assert WalkBinomial.from_json(data) == wb
    with pytest.raises(ValueError):
        WalkBinomial.from_json({**data, "py": [1]})
    with pytest.raises(ValueError):
        WalkBinomial.from_json({**data, "parity": "weird"})


def test_fixture_basis_and_literal_rule():
    true_basis = reduced_groebner_combinatorial(TAILED_TRIANGLE)
    literal = reduced_binomials_by_definition(TAILED_TRIANGLE)
    assert len(true_basis) == 21 and len(literal) == 20
    assert set(literal) < set(true_basis)


def test_literal_rule_misses_triangle_element():
    missing = set(reduced_groebner_combinatorial(K3)) - set(reduced_binomials_by_definition(K3))
    assert {str(w.realize(3)) for w in missing} == {"x1*y2*y3 - x3*y1*y2"}


def test_literal_rule_is_subset_everywhere():
    for n in range(1, 5):
        for g in connected_graphs(n):
            assert set(reduced_binomials_by_definition(g)) <= set(reduced_groebner_combinatorial(g))


def test_disconnected_graph_rejected():
    with pytest.raises(NotConnected):
        reduced_groebner_combinatorial(Graph(3, [(1, 2)]))


def test_triangle_initial_ideal_not_square_free():
    leads = [w.realize(3).leading_monomial for w in reduced_groebner_combinatorial(K3)]
    assert any(e >= 2 for m in leads for e in m)


def test_output_sorted():
    basis = reduced_groebner_combinatorial(TAILED_TRIANGLE)
    assert basis == sorted(basis, key=WalkBinomial.sort_key)


# -- walk supports against brute-force walk enumeration -------------------


def _walk_supports(g, i):
    """``{(j, parity, vertex set)}`` over all walks from ``i`` (state search)."""
    adj = g.adjacency()
    start = (i, frozenset({i}), 0)
    seen = {start}
    stack = [start]
    while stack:
        v, used, par = stack.pop()
        for w in adj[v]:
            nxt = (w, used | {w}, par ^ 1)
            if nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return {(v, ODD if par else EVEN, used) for v, used, par in seen}


def test_interior_support_against_enumeration():
    """A walk with interior exactly Z exists iff G[Z+{i,j}] is connected and carries the parity."""
    for n in range(1, 6):
        for g in all_graphs(n):
            adj = g.adjacency()
            for i in g.vertices:
                brute = {(j, par, used - {i, j}) for j, par, used in _walk_supports(g, i)}
                rest = [v for v in g.vertices if v != i]
                for j in g.vertices:
                    others = [v for v in rest if v != j]
                    for r in range(len(others) + 1):
                        for Z in itertools.combinations(others, r):
                            P = frozenset(Z) | {i, j}
                            even, odd = _parity_closure(_restricted_adj(adj, P), i)
                            spans = (even | odd | {i}) == P
                            for par, reach in ((ODD, odd), (EVEN, even)):
                                assert (spans and j in reach) == ((j, par, frozenset(Z)) in brute)


def test_support_walks_are_minimal():
    for i, j, parity, Z, *_ in _support_walks(TAILED_TRIANGLE, LEX):
        for k in Z:
            P = (Z - {k}) | {i, j}
            even, odd = _parity_closure(_restricted_adj(TAILED_TRIANGLE.adjacency(), P), i)
            assert j not in (odd if parity == ODD else even)


# -- random walks realize ideal members ----------------------------


@st.composite
def graph_with_walk(draw):
    g = draw(connected_st(min_n=2, max_n=5))
    adj = g.adjacency()
    walk = [draw(st.sampled_from(list(g.vertices)))]
    for _ in range(draw(st.integers(1, 7))):
        walk.append(draw(st.sampled_from(sorted(adj[walk[-1]]))))
    interior = frozenset(walk) - {walk[0], walk[-1]}
    px = frozenset(draw(st.lists(st.sampled_from(sorted(interior)), unique=True)) if interior else [])
    return g, walk, interior, px


@settings(max_examples=60, deadline=None)
@given(graph_with_walk(), st.sampled_from([QQ, GF2]))
def test_walk_binomial_membership(data, fld):
    g, walk, interior, px = data
    i, j = walk[0], walk[-1]
    parity = ODD if (len(walk) - 1) % 2 else EVEN
    if parity == EVEN and i == j:
        return
    wb = WalkBinomial(i, j, parity, interior, px)
    assert pbei(g, fld).contains(wb.realize(g.n, fld))


# -- Lawrence/Graver spot check ------------------------------------------------


def _in_lattice(g, u):
    """``u`` lies in the image of the incidence matrix (componentwise balance/parity test)."""
    rep = analyze_components(g)
    adj = g.adjacency()
    for comp, bip in zip(rep.components, rep.bipartite_flags):
        if bip:
            root = min(comp)
            even, _ = _parity_closure(adj, root)
            if sum(u[v - 1] if v in even else -u[v - 1] for v in comp) != 0:
                return False
        elif sum(u[v - 1] for v in comp) % 2:
            return False
    return True


def _conformal_sum(u, moves):
    vectors = {m.vector(len(u)) for m in moves}
    vectors |= {tuple(-x for x in v) for v in vectors}

    @lru_cache(maxsize=None)
    def ok(u):
        if not any(u):
            return True
        for v in vectors:
            if all(x == 0 or (x > 0 and 0 < x <= y) or (x < 0 and y <= x < 0) for x, y in zip(v, u)):
                if ok(tuple(a - b for a, b in zip(u, v))):
                    return True
        return False

    return ok(tuple(u))


def test_graver_spot_check():
    for n in range(1, 5):
        for g in connected_graphs(n):
            moves = markov_basis(g)
            for u in itertools.product(range(-2, 3), repeat=n):
                if _in_lattice(g, u):
                    assert _conformal_sum(u, moves), (g.edges, u)


def test_lattice_membership_test():
    # every {-1,0,1} combination of edge vectors passes; a unit vector does not
    g = Graph(4, [(1, 2), (2, 3), (3, 4), (1, 3)])
    for combo in itertools.product([-1, 0, 1], repeat=len(g.edges)):
        u = [0] * 4
        for c, (a, b) in zip(combo, g.edges):
            u[a - 1] += c
            u[b - 1] += c
        assert _in_lattice(g, u)
    assert not _in_lattice(g, (1, 0, 0, 0))


# -- relabeling ------------------------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(connected_st(max_n=5), st.randoms(use_true_random=False))
def test_relabeling_equivariance(g, rnd):
    labels = list(g.vertices)
    rnd.shuffle(labels)
    perm = dict(zip(g.vertices, labels))
    h = g.relabel(perm)

    def move_key(m, p):
        return (frozenset({p[m.i], p[m.j]}), m.parity, m.i == m.j)

    ident = {v: v for v in g.vertices}
    assert {move_key(m, perm) for m in markov_basis(g)} == {move_key(m, ident) for m in markov_basis(h)}

    order = TermOrder(tuple(perm[v] for v in g.vertices))
    mapped = {
        (perm[w.i], perm[w.j], w.parity, frozenset(perm[k] for k in w.interior), frozenset(perm[k] for k in w.assign_x))
        for w in reduced_groebner_combinatorial(g)
    }
    got = {(w.i, w.j, w.parity, w.interior, w.assign_x) for w in reduced_groebner_combinatorial(h, order)}
    assert mapped == got
