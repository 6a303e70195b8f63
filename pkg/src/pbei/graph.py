"""Graphs, walk parity and disconnector combinatorics.

Vertices are the integers ``1..n``.  Smaller labels are *larger* in the
term order (``x_1`` is the largest variable), so "i precedes j" in the
order means ``i < j`` numerically.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

ODD = "odd"
EVEN = "even"


class NotConnected(ValueError):
    """Raised when an operation requires a connected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, n: int, edges: Iterable[Iterable[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            i, j = e
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {i}-{j} out of range 1..{n}")
            pair = (min(i, j), max(i, j))
            if pair in canon:
                raise ValueError(f"duplicate edge {pair[0]}-{pair[1]}")
            canon.add(pair)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", tuple(sorted(canon)))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[int]], n: int | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        if n is None:
            n = max((max(e) for e in edges), default=0)
        return cls(n, edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def induced(self, keep: Iterable[int]) -> "InducedSubgraph":
        keep = frozenset(keep)
        return InducedSubgraph(self, frozenset(self.vertices) - keep)

    def remove(self, removed: Iterable[int]) -> "InducedSubgraph":
        return InducedSubgraph(self, frozenset(removed))

    def relabel(self, perm: dict[int, int]) -> "Graph":
        """Apply the vertex map ``v -> perm[v]`` (a bijection of 1..n)."""
        return Graph(self.n, [(perm[i], perm[j]) for i, j in self.edges])

    def is_connected(self) -> bool:
        return analyze_components(self).c <= 1


@dataclass(frozen=True)
class InducedSubgraph:
    """``G_S``: the subgraph of ``parent`` induced on ``V \\ removed``."""

    parent: Graph
    removed: frozenset[int]

    @property
    def vertices(self) -> list[int]:
        return [v for v in self.parent.vertices if v not in self.removed]

    @property
    def edges(self) -> list[tuple[int, int]]:
        r = self.removed
        return [e for e in self.parent.edges if e[0] not in r and e[1] not in r]

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adj[i].add(j)
            adj[j].add(i)
        return adj


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[frozenset[int], ...]
    bipartite_flags: tuple[bool, ...]

    @property
    def c(self) -> int:
        return len(self.components)

    @property
    def c0(self) -> int:
        return sum(self.bipartite_flags)

    @property
    def c1(self) -> int:
        return self.c - self.c0

    @property
    def s(self) -> int:
        return self.c0 + self.c

    def bipartite(self) -> list[frozenset[int]]:
        return [C for C, b in zip(self.components, self.bipartite_flags) if b]

    def nonbipartite(self) -> list[frozenset[int]]:
        return [C for C, b in zip(self.components, self.bipartite_flags) if not b]

    def component_of(self, v: int) -> int:
        for idx, C in enumerate(self.components):
            if v in C:
                return idx
        raise KeyError(v)


def _components(adj: dict[int, set[int]]) -> ComponentReport:
    color: dict[int, int] = {}
    comps, flags = [], []
    for start in sorted(adj):
        if start in color:
            continue
        color[start] = 0
        comp = {start}
        bip = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    comp.add(w)
                    queue.append(w)
                elif color[w] == color[u]:
                    bip = False
        comps.append(frozenset(comp))
        flags.append(bip)
    return ComponentReport(tuple(comps), tuple(flags))


def analyze_components(g: Graph | InducedSubgraph) -> ComponentReport:
    """Connected components, sorted by minimal vertex, with bipartiteness."""
    return _components(g.adjacency())


def _parity_closure(adj: dict[int, set[int]], i: int) -> tuple[set[int], set[int]]:
    """Vertices reachable from ``i`` by even / odd walks (BFS on the double cover)."""
    seen = {(i, 0)}
    queue = deque([(i, 0)])
    while queue:
        u, p = queue.popleft()
        for w in adj[u]:
            state = (w, 1 - p)
            if state not in seen:
                seen.add(state)
                queue.append(state)
    even = {v for v, p in seen if p == 0}
    odd = {v for v, p in seen if p == 1}
    return even, odd


def _restricted_adj(adj: dict[int, set[int]], support: frozenset[int] | set[int]) -> dict[int, set[int]]:
    return {v: adj[v] & support for v in support}


def parity_reachable(g: Graph | InducedSubgraph, i: int, j: int, parity: str) -> bool:
    """Whether an (i,j)-walk of the given parity exists.

    The empty walk counts as an even (i,i)-walk.
    """
    even, odd = _parity_closure(g.adjacency(), i)
    return j in (odd if parity == ODD else even)


def walk_parities_within(g: Graph, support: Iterable[int], i: int, j: int) -> tuple[bool, bool]:
    """``(odd_exists, even_exists)`` for (i,j)-walks inside ``G[support]``."""
    support = frozenset(support)
    if i not in support or j not in support:
        raise ValueError("endpoints must lie in the support")
    even, odd = _parity_closure(_restricted_adj(g.adjacency(), support), i)
    return j in odd, j in even


# -- disconnectors ---------------------------------------------------------


@dataclass(frozen=True)
class DisconnectorInfo:
    S: frozenset[int]
    components: ComponentReport
    joined_components: dict[int, tuple[int, ...]] = field(hash=False, compare=False)
    effective: bool = False
    sign_split_patterns: tuple[tuple[int, ...], ...] = ()

    @property
    def nonbipartite_index(self) -> list[int]:
        """Indices (into ``components``) of the non-bipartite components."""
        return [k for k, b in enumerate(self.components.bipartite_flags) if not b]

    def constraint_sets(self) -> list[tuple[int, ...]]:
        """Hyperedges: joined sets made up of non-bipartite components only."""
        flags = self.components.bipartite_flags
        out = []
        for s in sorted(self.S):
            joined = self.joined_components[s]
            if not any(flags[k] for k in joined):
                out.append(joined)
        return out


def _s_value(adj: dict[int, set[int]]) -> int:
    return _components(adj).s


def _is_disconnector(adj: dict[int, set[int]], S: frozenset[int]) -> bool:
    keep = frozenset(adj) - S
    base = _s_value(_restricted_adj(adj, keep))
    for s in S:
        if _s_value(_restricted_adj(adj, keep | {s})) >= base:
            return False
    return True


def is_disconnector(g: Graph, S: Iterable[int]) -> bool:
    return _is_disconnector(g.adjacency(), frozenset(S))


def _joined(adj: dict[int, set[int]], report: ComponentReport, S: frozenset[int]) -> dict[int, tuple[int, ...]]:
    out = {}
    for s in S:
        idx = {report.component_of(w) for w in adj[s] if w not in S}
        out[s] = tuple(sorted(idx))
    return out


def _sign_vectors(nonbip: list[int], constraints: list[tuple[int, ...]], char2: bool) -> list[tuple[int, ...]]:
    pos = {k: t for t, k in enumerate(nonbip)}
    if char2:
        candidates = [tuple([1] * len(nonbip))]
    else:
        candidates = list(itertools.product((1, -1), repeat=len(nonbip)))
    out = []
    for sigma in candidates:
        if all(len({sigma[pos[k]] for k in C}) > 1 for C in constraints):
            out.append(sigma)
    return out


def sign_split_patterns(g: Graph, S: DisconnectorInfo, char2: bool = False) -> list[tuple[int, ...]]:
    """Sign-split vectors over the non-bipartite components of ``G_S``.

    Signs are ``+1``/``-1`` in the order of ``S.nonbipartite_index``
    (components sorted by minimal vertex).  In characteristic two only the
    all-plus vector is a candidate.
    """
    return _sign_vectors(S.nonbipartite_index, S.constraint_sets(), char2)


def _build_info(g: Graph, adj: dict[int, set[int]], S: frozenset[int]) -> DisconnectorInfo:
    report = _components(_restricted_adj(adj, frozenset(adj) - S))
    joined = _joined(adj, report, S)
    info = DisconnectorInfo(S, report, joined)
    patterns = tuple(sign_split_patterns(g, info))
    return DisconnectorInfo(S, report, joined, bool(patterns), patterns)


def disconnector_info(g: Graph, S: Iterable[int]) -> DisconnectorInfo:
    S = frozenset(S)
    adj = g.adjacency()
    if not _is_disconnector(adj, S):
        raise ValueError(f"{sorted(S)} is not a disconnector")
    return _build_info(g, adj, S)


def _canonical_key(S: frozenset[int]) -> tuple[int, tuple[int, ...]]:
    return (len(S), tuple(sorted(S)))


def enumerate_disconnectors(g: Graph) -> list[DisconnectorInfo]:
    """All disconnectors of a connected graph, sorted by size then lexicographically."""
    if not g.is_connected():
        raise NotConnected("disconnectors are only defined for connected graphs")
    adj = g.adjacency()
    verts = list(g.vertices)
    found = []
    for r in range(len(verts) + 1):
        for combo in itertools.combinations(verts, r):
            S = frozenset(combo)
            # a vertex isolated after restoring it can never be in S
            if any(not (adj[s] - S) for s in S):
                continue
            if _is_disconnector(adj, S):
                found.append(_build_info(g, adj, S))
    found.sort(key=lambda d: _canonical_key(d.S))
    return found


# -- enumeration helpers ---------------------------------------------------


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on ``1..n``."""
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, [p for b, p in enumerate(pairs) if mask >> b & 1])


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labeled simple graph on ``1..n``."""
    for g in all_graphs(n):
        if g.is_connected():
            yield g
