import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import graphs as graphs_st
from pbei.fixtures import THREE_TRIANGLES, K3, P5
from pbei.snf import IntMatrix, check_smith_invariants, expected_invariants, smith_normal_form, stacked_incidence


def _det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** c * m[0][c] * _det([row[:c] + row[c + 1 :] for row in m[1:]]) for c in range(len(m)))


def _determinantal_divisors(rows):
    """``D_k`` = gcd of all ``k x k`` minors, for ``k = 1..rank``."""
    r, c = len(rows), len(rows[0])
    out = []
    for k in range(1, min(r, c) + 1):
        g = 0
        for rs in itertools.combinations(range(r), k):
            for cs in itertools.combinations(range(c), k):
                g = math.gcd(g, _det([[rows[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g)
    return out


def test_known_matrices():
    assert smith_normal_form(IntMatrix([[2, 4], [6, 8]])).diagonal == (2, 4)
    assert smith_normal_form(IntMatrix([[0, 0], [0, 0]]), keep_zeros=True).diagonal == (0, 0)
    assert smith_normal_form(IntMatrix([[6]])).rank == 1


def test_fixture_invariants():
    assert smith_normal_form(stacked_incidence(K3)).nonzero() == (1, 1, 2)
    assert smith_normal_form(stacked_incidence(P5)).nonzero() == (1, 1, 1, 1)
    assert expected_invariants(THREE_TRIANGLES) == (1,) * 11 + (2,)
    assert check_smith_invariants(THREE_TRIANGLES)


def test_matrix_json_round_trip():
    m = IntMatrix([[1, -2, 0], [3, 4, 5]])
    assert IntMatrix.from_json(m.to_json()) == m
    assert m.to_json() == '{"rows": 2, "cols": 3, "data": [[1, -2, 0], [3, 4, 5]]}'
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])


_small = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-6, 6), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@settings(max_examples=150, deadline=None)
@given(_small)
def test_invariants_match_minor_gcds(rows):
    diag = smith_normal_form(IntMatrix(rows)).diagonal
    assert all(b % a == 0 for a, b in zip(diag, diag[1:]))
    D = _determinantal_divisors(rows)
    assert len(D) == len(diag)
    prod = 1
    for d, Dk in zip(diag, D):
        prod *= d
        assert prod == Dk


@settings(max_examples=80, deadline=None)
@given(_small, st.randoms(use_true_random=False))
def test_permutation_invariance(rows, rnd):
    perm_rows = rows[:]
    rnd.shuffle(perm_rows)
    cols = list(range(len(rows[0])))
    rnd.shuffle(cols)
    permuted = [[r[c] for c in cols] for r in perm_rows]
    assert smith_normal_form(IntMatrix(rows)) == smith_normal_form(IntMatrix(permuted))


@settings(max_examples=60, deadline=None)
@given(graphs_st(max_n=6))
def test_smith_invariants_random(g):
    assert check_smith_invariants(g)
