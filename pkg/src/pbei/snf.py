"""Smith normal form of integer matrices."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import kernels
from .graph import Graph, analyze_components


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __init__(self, data, rows: int | None = None, cols: int | None = None):
        data = tuple(tuple(int(v) for v in r) for r in data)
        rows = len(data) if rows is None else rows
        cols = (len(data[0]) if data else 0) if cols is None else cols
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError("inconsistent matrix dimensions")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def to_json(self) -> str:
        return json.dumps({"rows": self.rows, "cols": self.cols, "data": [list(r) for r in self.data]})

    @classmethod
    def from_json(cls, text: str) -> "IntMatrix":
        d = json.loads(text)
        return cls(d["data"], d["rows"], d["cols"])


@dataclass(frozen=True)
class SnfResult:
    diagonal: tuple[int, ...]
    rank: int

    def nonzero(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d)


def smith_normal_form(m: IntMatrix, keep_zeros: bool = False) -> SnfResult:
    """Invariant factors ``d_1 | d_2 | ...``; trailing zeros only if ``keep_zeros``."""
    diag = kernels.snf_diagonal([list(r) for r in m.data]) if m.rows and m.cols else []
    rank = len(diag)
    if keep_zeros:
        diag = diag + [0] * (min(m.rows, m.cols) - rank)
    return SnfResult(tuple(diag), rank)


def stacked_incidence(g: Graph) -> IntMatrix:
    A = [[1 if v in e else 0 for e in g.edges] for v in g.vertices]
    return IntMatrix(A + [[-a for a in row] for row in A], 2 * g.n, len(g.edges))


def expected_invariants(g: Graph) -> tuple[int, ...]:
    rep = analyze_components(g)
    return (1,) * (g.n - rep.c) + (2,) * rep.c1


def check_smith_invariants(g: Graph) -> bool:
    """Nonzero invariant factors are ``1`` (|V| - c times) then ``2`` (c1 times)."""
    return smith_normal_form(stacked_incidence(g)).nonzero() == expected_invariants(g)
