"""Exhaustive desk-scale verification suite.

Each check sweeps all labeled graphs (or all connected ones) up to a
vertex bound and compares a combinatorial construction with an
independent computation.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .combinatorics import markov_basis, pbei, reduced_groebner_combinatorial, saturation_ideal
from .decomposition import (
    mesoprimary_decomposition,
    minimal_primes,
    verify_decomposition,
    verify_intersection_identity,
)
from .fixtures import TAILED_TRIANGLE, BRIDGED_TRIANGLES, THREE_TRIANGLES, THREE_TRIANGLES_SQUARES, P5
from .graph import (
    EVEN,
    ODD,
    Graph,
    all_graphs,
    connected_graphs,
    disconnector_info,
    parity_reachable,
    sign_split_patterns,
)
from .groebner import ideal_equal, intersect_all, saturate
from .poly import GF2, GF3, QQ
from .snf import check_smith_invariants


@dataclass
class CheckResult:
    name: str
    claim: str
    graphs: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "claim": self.claim,
            "graphs": self.graphs,
            "passed": self.passed,
            "failures": self.failures[:5],
            "seconds": round(self.seconds, 2),
        }


def walk_endpoints_by_length(g: Graph, max_len: int) -> dict[int, list[set[int]]]:
    """``out[i][L]`` is the set of ends of length-``L`` walks from ``i``."""
    adj = g.adjacency()
    out = {}
    for i in g.vertices:
        layers = [{i}]
        for _ in range(max_len):
            layers.append({w for u in layers[-1] for w in adj[u]})
        out[i] = layers
    return out


def parity_by_enumeration(g: Graph, i: int, j: int, parity: str) -> bool:
    layers = walk_endpoints_by_length(g, 2 * g.n)[i]
    start = 1 if parity == ODD else 0
    return any(j in layers[L] for L in range(start, len(layers), 2))


def flipped_sign_rule(g, info, char2):
    """Deliberately wrong sign-split rule: constant instead of non-constant."""
    nb = info.nonbipartite_index
    pos = {k: t for t, k in enumerate(nb)}
    out = []
    for sigma in itertools.product((1, -1), repeat=len(nb)):
        if all(len({sigma[pos[k]] for k in C}) == 1 for C in info.constraint_sets()):
            out.append(sigma)
    return out


def _run(result: CheckResult, graphs, check):
    t0 = time.perf_counter()
    for g in graphs:
        result.graphs += 1
        try:
            ok = check(g)
        except Exception as exc:  # a crash counts as a failure of the check
            ok = False
            result.failures.append({"edges": [list(e) for e in g.edges], "n": g.n, "error": repr(exc)})
            continue
        if not ok:
            result.failures.append({"edges": [list(e) for e in g.edges], "n": g.n})
    result.seconds = time.perf_counter() - t0
    return result


def _connected_upto(cap: int):
    for n in range(1, cap + 1):
        yield from connected_graphs(n)


def _all_upto(cap: int):
    for n in range(0, cap + 1):
        yield from all_graphs(n)


def check_parity(cap: int) -> CheckResult:
    def check(g):
        for i in g.vertices:
            layers = walk_endpoints_by_length(g, 2 * g.n)[i]
            for j in g.vertices:
                for parity, start in ((ODD, 1), (EVEN, 0)):
                    brute = any(j in layers[L] for L in range(start, len(layers), 2))
                    if brute != parity_reachable(g, i, j, parity):
                        return False
        return True

    return _run(CheckResult("parity", "double-cover BFS matches walk enumeration"), _all_upto(cap), check)


def check_smith(cap: int) -> CheckResult:
    return _run(CheckResult("smith", "SNF of (A;-A) is 1^(|V|-c) 2^(c1)"), _all_upto(cap), check_smith_invariants)


def check_groebner(cap: int) -> CheckResult:
    def check(g):
        comb = reduced_groebner_combinatorial(g)
        for fld in (QQ, GF2, GF3):
            if set(pbei(g, fld).basis) != {w.realize(g.n, fld) for w in comb}:
                return False
        return True

    return _run(CheckResult("groebner", "walk binomials = Buchberger basis over QQ, GF(2), GF(3)"), _connected_upto(cap), check)


def check_markov(cap: int) -> CheckResult:
    def check(g):
        sat = saturate(pbei(g, QQ), (1,) * (2 * g.n))
        return ideal_equal(sat, saturation_ideal(g, QQ))

    return _run(CheckResult("markov", "Markov ideal = saturation by elimination"), _connected_upto(cap), check)


def check_radical(cap: int, sign_rule=None) -> CheckResult:
    def check(g):
        if sign_rule is None:
            return verify_decomposition(g, QQ, "minimal", cap=cap)["passed"]
        comps = minimal_primes(g, QQ, sign_rule=sign_rule)
        return bool(comps) and ideal_equal(intersect_all([c.ideal(g, QQ) for c in comps]), pbei(g, QQ))

    return _run(CheckResult("radical", "minimal primes intersect to pbei over QQ"), _connected_upto(cap), check)


def check_identity(cap: int) -> CheckResult:
    def check(g):
        return verify_intersection_identity(g, QQ, cap=cap) and verify_intersection_identity(g, GF2, cap=cap)

    return _run(CheckResult("intersection", "pbei = sat ∩ ⋂(pbei + m_i) over QQ and GF(2)"), _connected_upto(cap), check)


def check_meso(cap: int) -> CheckResult:
    def check(g):
        return (
            verify_decomposition(g, GF2, "meso", cap=cap)["passed"]
            and verify_decomposition(g, QQ, "meso", cap=cap)["passed"]
        )

    return _run(CheckResult("meso", "effective-disconnector components intersect to pbei"), _connected_upto(cap), check)


def check_fixtures(sign_rule=sign_split_patterns) -> CheckResult:
    res = CheckResult("fixtures", "worked examples: 36-move graph, sign-split graph, square graph, 5-path")
    t0 = time.perf_counter()
    checks = {
        "tailed-triangle-markov": lambda: len(markov_basis(TAILED_TRIANGLE)) == 36,
        "bridged-triangles-sign-split": lambda: sorted(sign_rule(BRIDGED_TRIANGLES, disconnector_info(BRIDGED_TRIANGLES, {4}), False)) == [(-1, 1), (1, -1)],
        "three-triangles-not-effective": lambda: sign_rule(THREE_TRIANGLES, disconnector_info(THREE_TRIANGLES, THREE_TRIANGLES_SQUARES), False) == [],
        "p5-meso": lambda: _p5_ok(),
    }
    for name, fn in checks.items():
        res.graphs += 1
        try:
            ok = fn()
        except Exception as exc:
            ok = False
            name = f"{name}: {exc!r}"
        if not ok:
            res.failures.append({"fixture": name})
    res.seconds = time.perf_counter() - t0
    return res


def _p5_ok() -> bool:
    return [sorted(c.S) for c in mesoprimary_decomposition(P5)] == [[], [2], [3], [4], [2, 4]]


def run_suite(
    ideal_cap: int = 4,
    groebner_cap: int = 5,
    combinatorial_cap: int = 6,
    inject_fault: bool = False,
    workers: int | None = None,
) -> list[CheckResult]:
    """Run every check, in worker processes unless ``workers == 1``.

    ``inject_fault`` swaps in a wrong sign-split rule.  Results come back
    in a fixed order regardless of scheduling.
    """
    rule = flipped_sign_rule if inject_fault else sign_split_patterns
    jobs = [
        (check_fixtures, (rule,)),
        (check_parity, (combinatorial_cap,)),
        (check_smith, (combinatorial_cap,)),
        (check_groebner, (groebner_cap,)),
        (check_markov, (ideal_cap,)),
        (check_radical, (ideal_cap, rule if inject_fault else None)),
        (check_identity, (ideal_cap,)),
        (check_meso, (ideal_cap,)),
    ]
    workers = min(len(jobs), workers or os.cpu_count() or 1)
    if workers == 1:
        return [fn(*args) for fn, args in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, *args) for fn, args in jobs]
        return [f.result() for f in futures]
