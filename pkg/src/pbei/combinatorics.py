"""The ideal, its Markov basis and its lex Gröbner basis, read off the graph."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import EVEN, ODD, Graph, InducedSubgraph, NotConnected, _parity_closure, _restricted_adj
from .groebner import IdealHandle
from .poly import LEX, QQ, CoefficientField, Polynomial, TermOrder, binomial, monomial_from


@dataclass(frozen=True, order=True)
class MarkovMove:
    """Odd: ``x_i x_j - y_i y_j`` (``i == j`` allowed); even: ``x_i y_j - y_i x_j``."""

    i: int
    j: int
    parity: str

    def realize(self, n: int, fld: CoefficientField = QQ) -> Polynomial:
        if self.parity == ODD:
            return binomial(n, monomial_from(n, xs=(self.i, self.j)), monomial_from(n, ys=(self.i, self.j)), fld)
        return binomial(n, monomial_from(n, xs=(self.i,), ys=(self.j,)), monomial_from(n, xs=(self.j,), ys=(self.i,)), fld)

    def vector(self, n: int) -> tuple[int, ...]:
        """The Graver element of ``im(A_G)``."""
        v = [0] * n
        v[self.i - 1] += 1
        v[self.j - 1] += 1 if self.parity == ODD else -1
        return tuple(v)


@dataclass(frozen=True)
class WalkBinomial:
    i: int
    j: int
    parity: str
    interior: frozenset[int]
    assign_x: frozenset[int]

    @property
    def assign_y(self) -> frozenset[int]:
        return self.interior - self.assign_x

    def sort_key(self):
        return (self.j, self.i, self.parity, tuple(sorted(self.interior)))

    def realize(self, n: int, fld: CoefficientField = QQ) -> Polynomial:
        lead, trail = _monomials(self, n)
        return binomial(n, lead, trail, fld)

    def to_json(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "parity": self.parity,
            "interior": sorted(self.interior),
            "px": sorted(self.assign_x),
            "py": sorted(self.assign_y),
        }

    @classmethod
    def from_json(cls, data: dict) -> "WalkBinomial":
        interior = frozenset(data["interior"])
        px = frozenset(data.get("px", ()))
        if "py" in data and frozenset(data["py"]) != interior - px:
            raise ValueError("px and py must partition the interior")
        if not px <= interior:
            raise ValueError("px must be a subset of the interior")
        if data["parity"] not in (ODD, EVEN):
            raise ValueError(f"bad parity {data['parity']!r}")
        return cls(int(data["i"]), int(data["j"]), data["parity"], interior, px)


def realize(wb: WalkBinomial, n: int, fld: CoefficientField = QQ) -> Polynomial:
    return wb.realize(n, fld)


def pbei_generators(g: Graph | InducedSubgraph, n: int | None = None, fld: CoefficientField = QQ) -> list[Polynomial]:
    """``x_i x_j - y_i y_j`` for every edge, in edge order."""
    if n is None:
        n = g.n if isinstance(g, Graph) else g.parent.n
    return [MarkovMove(i, j, ODD).realize(n, fld) for i, j in g.edges]


def pbei(g: Graph, fld: CoefficientField = QQ, order: TermOrder = LEX) -> IdealHandle:
    return IdealHandle(pbei_generators(g, fld=fld), 2 * g.n, fld, order)


def markov_basis(g: Graph | InducedSubgraph) -> list[MarkovMove]:
    """One move per parity-reachable pair, sorted by ``(i, j, parity)``.

    Odd pairs have ``i <= j`` (``i == j`` for an odd closed walk), even
    pairs ``i < j``; the zero move is excluded.
    """
    adj = g.adjacency()
    moves = []
    for i in sorted(adj):
        even, odd = _parity_closure(adj, i)
        moves.extend(MarkovMove(i, j, ODD) for j in odd if j >= i)
        moves.extend(MarkovMove(i, j, EVEN) for j in even if j > i)
    moves.sort()
    return moves


def saturation_ideal(g: Graph | InducedSubgraph, fld: CoefficientField = QQ, order: TermOrder = LEX) -> IdealHandle:
    """``pbei(G) : (prod x_i y_i)^∞`` generated by its Markov basis."""
    n = g.n if isinstance(g, Graph) else g.parent.n
    return IdealHandle([m.realize(n, fld) for m in markov_basis(g)], 2 * n, fld, order)


def incidence_lattice(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """Incidence matrix ``A_G`` (|V| x |E|) and the stacked ``(A_G; -A_G)``."""
    A = [[1 if v in e else 0 for e in g.edges] for v in g.vertices]
    return A, A + [[-a for a in row] for row in A]


def _support_walks(g: Graph, order: TermOrder):
    """Yield ``(i, j, parity, Z, odd_i, even_i, succ)`` for every parity-minimal support.

    ``Z`` is the interior: ``G[Z + {i, j}]`` is connected, carries an
    (i,j)-walk of the parity, and loses it when any vertex of ``Z`` is
    deleted.  ``i >= j`` in the order (odd ``i == j`` allowed).
    """
    n = g.n
    rank = order.rank(n)

    def succ(a, b):
        return rank[a] < rank[b]

    adj = g.adjacency()
    closures: dict = {}

    def walks(support, a):
        key = (support, a)
        if key not in closures:
            closures[key] = _parity_closure(_restricted_adj(adj, support), a)
        return closures[key]

    verts = list(g.vertices)
    for i in verts:
        for j in verts:
            if succ(j, i):
                continue
            for parity in (ODD, EVEN):
                if parity == EVEN and i == j:
                    continue
                rest = [v for v in verts if v != i and v != j]
                for r in range(len(rest) + 1):
                    for Z in itertools.combinations(rest, r):
                        Z = frozenset(Z)
                        P = Z | {i, j}
                        even_i, odd_i = walks(P, i)
                        if (even_i | odd_i | {i}) != P:
                            continue
                        if j not in (odd_i if parity == ODD else even_i):
                            continue
                        if any(j in walks(P - {k}, i)[parity == ODD] for k in Z):
                            continue
                        yield i, j, parity, Z, odd_i, even_i, succ


def reduced_binomials_by_definition(g: Graph, order: TermOrder = LEX) -> list[WalkBinomial]:
    """Walk binomials passing the per-vertex order/parity bullets literally.

    Kept for comparison: on graphs with a triangle ``i > k > j`` this set
    misses elements of the reduced Gröbner basis (see
    :func:`reduced_groebner_combinatorial`).
    """
    if not g.is_connected():
        raise NotConnected("the combinatorial Gröbner basis needs a connected graph")
    out = []
    for i, j, parity, Z, odd_i, even_i, succ in _support_walks(g, order):
        px = set()
        ok = True
        for k in Z:
            odd_ik, even_ik = k in odd_i, k in even_i
            if parity == ODD:
                if not succ(k, j) or (succ(i, k) and even_ik):
                    ok = False
                    break
            else:
                if succ(i, k) and succ(k, j) and even_ik:
                    ok = False
                    break
                if succ(j, k):
                    if odd_ik and even_ik:
                        ok = False
                        break
                    if even_ik:
                        px.add(k)
        if ok:
            out.append(WalkBinomial(i, j, parity, Z, frozenset(px)))
    out.sort(key=WalkBinomial.sort_key)
    return out


def _divisors(m: tuple[int, ...]):
    for e in itertools.product(*(range(k + 1) for k in m)):
        yield e


def reduced_groebner_combinatorial(g: Graph, order: TermOrder = LEX) -> list[WalkBinomial]:
    """The reduced lex Gröbner basis as a set of walk binomials.

    Candidates are the binomials of parity-minimal walk supports with every
    choice of ``x``/``y`` on the interior.  An element belongs to the basis
    iff its leading monomial is not a proper multiple of another
    candidate's, and its trailing monomial is divisible by no candidate's
    leading monomial.  Only walk parities and monomial divisibility are
    used; no polynomial is ever reduced.
    """
    if not g.is_connected():
        raise NotConnected("the combinatorial Gröbner basis needs a connected graph")
    n = g.n
    perm = order.to_standard(n)

    def key(mono):
        # exponent tuple in the order's variable layout
        e = [0] * (2 * n)
        for k, v in enumerate(mono):
            e[perm[k]] = v
        return tuple(e)

    cands = []
    for i, j, parity, Z, _odd_i, _even_i, _succ in _support_walks(g, order):
        zs = sorted(Z)
        for choice in itertools.product((False, True), repeat=len(zs)):
            px = frozenset(k for k, isx in zip(zs, choice) if isx)
            wb = WalkBinomial(i, j, parity, Z, px)
            lead, trail = _monomials(wb, n)
            cands.append((key(lead), key(trail), wb))
    leads = {lead for lead, _, _ in cands}
    out = []
    for lead, trail, wb in cands:
        if any(d != lead and d in leads for d in _divisors(lead)):
            continue
        if any(d in leads for d in _divisors(trail)):
            continue
        out.append(wb)
    out.sort(key=WalkBinomial.sort_key)
    return out


def _monomials(wb: WalkBinomial, n: int):
    xs, ys = sorted(wb.assign_x), sorted(wb.assign_y)
    if wb.parity == ODD:
        return (monomial_from(n, xs=[wb.i, wb.j, *xs], ys=ys), monomial_from(n, xs=xs, ys=[wb.i, wb.j, *ys]))
    return (monomial_from(n, xs=[wb.i, *xs], ys=[wb.j, *ys]), monomial_from(n, xs=[wb.j, *xs], ys=[wb.i, *ys]))
