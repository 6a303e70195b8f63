"""Minimal primes, radicality and the mesoprimary decomposition.

Every decomposition is built from graph data alone (disconnectors, sign
patterns, Markov bases of induced subgraphs).  The ``verify_*`` functions
check them against the polynomial engine and are meant for small graphs.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Callable

from .combinatorics import markov_basis, pbei, pbei_generators, saturation_ideal
from .graph import (
    DisconnectorInfo,
    Graph,
    NotConnected,
    analyze_components,
    enumerate_disconnectors,
    sign_split_patterns,
)
from .groebner import IdealHandle, ideal_equal, intersect_all
from .poly import QQ, CoefficientField, Polynomial, monomial_from

DEFAULT_ORACLE_CAP = 5


class OracleTimeout(RuntimeError):
    """The input is larger than the configured oracle bound."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"oracle check refused: {n} vertices exceeds the bound of {cap}")
        self.n = n
        self.cap = cap


def oracle_cap(cap: int | None = None) -> int:
    env = os.environ.get("PBEI_ORACLE_CAP")
    if env:
        return int(env)
    return DEFAULT_ORACLE_CAP if cap is None else cap


def _guard(g: Graph, cap: int | None):
    bound = oracle_cap(cap)
    if g.n > bound:
        raise OracleTimeout(g.n, bound)


def _variables(n: int, S, fld: CoefficientField) -> list[Polynomial]:
    out = []
    for s in sorted(S):
        out.append(Polynomial.monomial(monomial_from(n, xs=(s,)), fld))
        out.append(Polynomial.monomial(monomial_from(n, ys=(s,)), fld))
    return out


def _sign_prime(n: int, part, sign: int, fld: CoefficientField) -> list[Polynomial]:
    """``p^+`` is generated by ``x_v + y_v``, ``p^-`` by ``x_v - y_v``."""
    return [
        Polynomial({monomial_from(n, xs=(v,)): 1, monomial_from(n, ys=(v,)): sign}, 2 * n, fld) for v in sorted(part)
    ]


def _part_markov(g: Graph, part, fld: CoefficientField) -> list[Polynomial]:
    sub = g.induced(part)
    return [m.realize(g.n, fld) for m in markov_basis(sub)]


@dataclass(frozen=True)
class PrimeComponent:
    S: frozenset[int]
    bipartite_parts: tuple[frozenset[int], ...]
    nonbipartite_parts: tuple[frozenset[int], ...]
    sigma: tuple[int, ...]

    def generators(self, g: Graph, fld: CoefficientField = QQ) -> list[Polynomial]:
        gens = _variables(g.n, self.S, fld)
        for B in self.bipartite_parts:
            gens += _part_markov(g, B, fld)
        for N, sign in zip(self.nonbipartite_parts, self.sigma):
            gens += _sign_prime(g.n, N, sign, fld)
        return gens

    def ideal(self, g: Graph, fld: CoefficientField = QQ) -> IdealHandle:
        return IdealHandle(self.generators(g, fld), 2 * g.n, fld)

    def key(self):
        return (len(self.S), tuple(sorted(self.S)), tuple(-s for s in self.sigma))

    def to_json(self) -> dict:
        return {
            "S": sorted(self.S),
            "bipartite_parts": [sorted(B) for B in self.bipartite_parts],
            "nonbipartite_parts": [sorted(N) for N in self.nonbipartite_parts],
            "sigma": ["+" if s > 0 else "-" for s in self.sigma],
        }


@dataclass(frozen=True)
class MesoComponent:
    S: frozenset[int]

    def generators(self, g: Graph, fld: CoefficientField = QQ) -> list[Polynomial]:
        rest = g.remove(self.S)
        return _variables(g.n, self.S, fld) + [m.realize(g.n, fld) for m in markov_basis(rest)]

    def ideal(self, g: Graph, fld: CoefficientField = QQ) -> IdealHandle:
        return IdealHandle(self.generators(g, fld), 2 * g.n, fld)

    def to_json(self) -> dict:
        return {"S": sorted(self.S)}


def saturation_decomposition(g: Graph, fld: CoefficientField = QQ) -> list[IdealHandle]:
    """Decomposition of ``sat(G)`` blockwise over connected components.

    Characteristic other than two: the ``2^c1`` minimal primes.  In
    characteristic two: ``sat(G)`` itself (primary over
    :func:`saturation_radical`).
    """
    n = g.n
    rep = analyze_components(g)
    bip = [gen for B in rep.bipartite() for gen in _part_markov(g, B, fld)]
    nonbip = rep.nonbipartite()
    if fld.characteristic == 2:
        return [saturation_ideal(g, fld)]
    out = []
    for sigma in itertools.product((1, -1), repeat=len(nonbip)):
        gens = list(bip)
        for N, s in zip(nonbip, sigma):
            gens += _sign_prime(n, N, s, fld)
        out.append(IdealHandle(gens, 2 * n, fld))
    return out


def saturation_radical(g: Graph, fld: CoefficientField = QQ) -> IdealHandle:
    """The prime ``sum sat(B_i) + sum p^+(N_i)``."""
    rep = analyze_components(g)
    gens = [gen for B in rep.bipartite() for gen in _part_markov(g, B, fld)]
    for N in rep.nonbipartite():
        gens += _sign_prime(g.n, N, 1, fld)
    return IdealHandle(gens, 2 * g.n, fld)


SignRule = Callable[[Graph, DisconnectorInfo, bool], list]


def minimal_primes(g: Graph, fld: CoefficientField = QQ, sign_rule: SignRule = sign_split_patterns) -> list[PrimeComponent]:
    """``m_S + p`` over disconnectors ``S`` and sign-split minimal primes ``p`` of ``sat(G_S)``."""
    if not g.is_connected():
        raise NotConnected("minimal primes are computed for connected graphs")
    char2 = fld.characteristic == 2
    out = []
    for info in enumerate_disconnectors(g):
        rep = info.components
        for sigma in sign_rule(g, info, char2):
            out.append(PrimeComponent(info.S, tuple(rep.bipartite()), tuple(rep.nonbipartite()), tuple(sigma)))
    out.sort(key=PrimeComponent.key)
    return out


def is_radical(g: Graph, fld: CoefficientField = QQ) -> bool:
    return fld.characteristic != 2 or analyze_components(g).c1 == 0


def mesoprimary_decomposition(g: Graph) -> list[MesoComponent]:
    """One component ``m_S + sat(G_S)`` per effective disconnector."""
    if not g.is_connected():
        raise NotConnected("the mesoprimary decomposition is computed for connected graphs")
    return [MesoComponent(info.S) for info in enumerate_disconnectors(g) if info.effective]


# -- verification ------------------------------------------------------------


def verify_intersection_identity(g: Graph, fld: CoefficientField = QQ, cap: int | None = None) -> bool:
    """``pbei(G) == sat(G) ∩ ⋂_i (pbei(G_{i}) + m_{i})`` by the oracle."""
    _guard(g, cap)
    n = g.n
    parts = [saturation_ideal(g, fld)]
    for i in g.vertices:
        gens = pbei_generators(g.remove({i}), n, fld) + _variables(n, {i}, fld)
        parts.append(IdealHandle(gens, 2 * n, fld))
    return ideal_equal(intersect_all(parts), pbei(g, fld))


def verify_decomposition(g: Graph, fld: CoefficientField = QQ, which: str = "minimal", cap: int | None = None) -> dict:
    """Oracle report for the minimal primes or the mesoprimary decomposition."""
    _guard(g, cap)
    I = pbei(g, fld)
    if which == "minimal":
        comps = minimal_primes(g, fld)
        ideals = [c.ideal(g, fld) for c in comps]
        contains = all(J.contains_ideal(I) for J in ideals)
        incomparable = all(
            not ideals[b].contains_ideal(ideals[a]) for a in range(len(ideals)) for b in range(len(ideals)) if a != b
        )
        equal = ideal_equal(intersect_all(ideals), I)
        expected = is_radical(g, fld)
        return {
            "which": which,
            "field": str(fld),
            "components": len(comps),
            "contains_ideal": contains,
            "pairwise_incomparable": incomparable,
            "intersection_equal": equal,
            "expected_equal": expected,
            "passed": contains and incomparable and equal == expected,
        }
    if which == "meso":
        comps = mesoprimary_decomposition(g)
        ideals = [c.ideal(g, fld) for c in comps]
        contains = all(J.contains_ideal(I) for J in ideals)
        equal = ideal_equal(intersect_all(ideals), I)
        return {
            "which": which,
            "field": str(fld),
            "components": len(comps),
            "contains_ideal": contains,
            "intersection_equal": equal,
            "expected_equal": True,
            "passed": contains and equal,
        }
    raise ValueError(f"unknown decomposition kind {which!r}")


def swap_xy(f: Polynomial, n: int) -> Polynomial:
    """The involution ``x_v <-> y_v`` for all vertices."""
    return f.permute([n + k for k in range(n)] + list(range(n)))


__all__ = [
    "MesoComponent",
    "OracleTimeout",
    "PrimeComponent",
    "is_radical",
    "mesoprimary_decomposition",
    "minimal_primes",
    "saturation_decomposition",
    "saturation_radical",
    "swap_xy",
    "verify_decomposition",
    "verify_intersection_identity",
]
