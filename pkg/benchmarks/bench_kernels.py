"""Compare the compiled kernels with the pure-Python fallback.

Reduction workloads are recorded from real Buchberger runs, then replayed
through each backend; the SNF workload is every stacked incidence matrix
of a labeled graph on six vertices.

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import os
import statistics
import subprocess
import sys
import time

from pbei import _purekernels, kernels
from pbei.combinatorics import pbei
from pbei.decomposition import verify_intersection_identity
from pbei.fixtures import TAILED_TRIANGLE, BRIDGED_TRIANGLES, K3, P5
from pbei.graph import all_graphs, connected_graphs
from pbei.poly import GF2, GF3, QQ
from pbei.snf import stacked_incidence

try:
    from pbei import _ckernels
except ImportError:
    _ckernels = None


def record_reductions(work):
    """Capture every ``reduce_full`` call made while ``work()`` runs."""
    calls = []
    real = kernels.reduce_full

    def spy(f, basis, modulus):
        calls.append((dict(f), list(basis), modulus))
        return real(f, basis, modulus)

    kernels.reduce_full = spy
    try:
        work()
    finally:
        kernels.reduce_full = real
    return calls


def snf_workload():
    return [stacked_incidence(g).data for g in all_graphs(6)]


def time_it(fn, repeat):
    runs = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - t0)
    return min(runs), statistics.median(runs)


SWEEP = """
import time
from pbei.combinatorics import pbei
from pbei.graph import connected_graphs
from pbei.poly import GF2, GF3, QQ
t0 = time.perf_counter()
for n in range(1, 6):
    for g in connected_graphs(n):
        for fld in (QQ, GF2, GF3):
            pbei(g, fld).basis
print(time.perf_counter() - t0)
"""


def end_to_end(pure: bool) -> float:
    """Gröbner bases of every connected graph on <= 5 vertices, in a fresh interpreter."""
    env = {**os.environ, "PBEI_PURE_PYTHON": "1" if pure else "0"}
    out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--skip-sweep", action="store_true", help="skip the end-to-end Buchberger sweep")
    args = ap.parse_args(argv)
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install -e . --no-build-isolation`")

    small = [TAILED_TRIANGLE, BRIDGED_TRIANGLES, K3, P5, *connected_graphs(4)]
    sources = {
        "reduce: bases over QQ": lambda: [pbei(g, QQ).basis for g in small],
        "reduce: bases over GF(2/3)": lambda: [pbei(g, f).basis for g in small for f in (GF2, GF3)],
        "reduce: intersections": lambda: [verify_intersection_identity(g, QQ) for g in [P5, *connected_graphs(4)]],
    }
    workloads = {}
    for name, work in sources.items():
        calls = record_reductions(work)
        workloads[name] = (
            len(calls),
            lambda impl, calls=calls: [impl.reduce_full(f, b, m) for f, b, m in calls],
        )
    mats = snf_workload()
    workloads["snf (all graphs, 6 vertices)"] = (len(mats), lambda impl: [impl.snf_diagonal(m) for m in mats])

    print(f"{'workload':<32}{'calls':>8}{'python s':>11}{'compiled s':>12}{'speedup':>9}")
    for name, (count, run) in workloads.items():
        assert run(_purekernels) == run(_ckernels), f"backends disagree on {name}"
        py, _ = time_it(lambda: run(_purekernels), args.repeat)
        cc, _ = time_it(lambda: run(_ckernels), args.repeat)
        print(f"{name:<32}{count:>8}{py:>11.3f}{cc:>12.3f}{py / cc:>8.1f}x")
    if not args.skip_sweep:
        py, cc = end_to_end(True), end_to_end(False)
        print(f"{'end-to-end bases, <= 5 vertices':<32}{2316:>8}{py:>11.3f}{cc:>12.3f}{py / cc:>8.1f}x")


if __name__ == "__main__":
    main()
