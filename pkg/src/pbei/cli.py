"""``pbei`` command-line interface.

Exit codes: 0 success, 1 a ``--verify`` check failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import kernels
from .combinatorics import markov_basis, pbei, pbei_generators, reduced_groebner_combinatorial
from .decomposition import (
    OracleTimeout,
    _guard,
    is_radical,
    mesoprimary_decomposition,
    minimal_primes,
    oracle_cap,
    verify_decomposition,
)
from .graph import Graph, NotConnected, enumerate_disconnectors
from .graphio import GraphFormatError, load_graph, parse_inline_edges
from .poly import CoefficientField, TermOrder, field
from .polyio import polynomial_to_json
from .snf import expected_invariants, smith_normal_form, stacked_incidence

GRAPH_COMMANDS = ("generators", "markov", "groebner", "disconnectors", "minimal-primes", "decompose", "radical", "snf")
# ideal-level oracle cap; the Gröbner and combinatorial sweeps go one and two higher
SUITE_DEFAULT_CAP = 4
SUITE_HARD_LIMIT = 5


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph: Graph | None
    fld: CoefficientField
    order: TermOrder
    verify: bool
    cap: int | None
    fmt: str


@dataclass
class Report:
    data: dict
    text: list[str]
    ok: bool = True


def _parse_order(text: str | None, n: int) -> TermOrder:
    if text is None:
        return TermOrder()
    try:
        ranking = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise InputError(f"--order must be comma-separated vertex labels, got {text!r}") from None
    if sorted(ranking) != list(range(1, n + 1)):
        raise InputError(f"--order must be a permutation of 1..{n}")
    return TermOrder(ranking)


def _sets(S) -> str:
    return "{" + ",".join(map(str, sorted(S))) + "}"


def _poly_entry(f) -> dict:
    return {"text": str(f), "terms": polynomial_to_json(f)}


def cmd_generators(cfg: RunConfig) -> Report:
    gens = pbei_generators(cfg.graph, fld=cfg.fld)
    return Report(
        {"count": len(gens), "generators": [_poly_entry(f) for f in gens]},
        [str(f) for f in gens],
    )


def cmd_markov(cfg: RunConfig) -> Report:
    g = cfg.graph
    moves = markov_basis(g)
    entries = []
    for m in moves:
        f = m.realize(g.n, cfg.fld)
        entries.append({"i": m.i, "j": m.j, "parity": m.parity, "binomial": str(f)})
    counts = {
        "odd": sum(m.parity == "odd" and m.i != m.j for m in moves),
        "even": sum(m.parity == "even" for m in moves),
        "squares": sum(m.i == m.j for m in moves),
    }
    text = [f"{len(moves)} moves ({counts['odd']} odd, {counts['even']} even, {counts['squares']} squares)"]
    text += [e["binomial"] for e in entries]
    return Report({"count": len(moves), "counts": counts, "moves": entries}, text)


def cmd_groebner(cfg: RunConfig) -> Report:
    g = cfg.graph
    basis = reduced_groebner_combinatorial(g, cfg.order)
    entries = [{**wb.to_json(), "binomial": str(wb.realize(g.n, cfg.fld))} for wb in basis]
    data = {"count": len(basis), "order": list(cfg.order.vertex_ranking(g.n)), "basis": entries}
    text = [f"{len(basis)} elements"] + [e["binomial"] for e in entries]
    ok = True
    if cfg.verify:
        _guard(g, cfg.cap)
        oracle = set(pbei(g, cfg.fld, cfg.order).basis)
        ok = oracle == {wb.realize(g.n, cfg.fld) for wb in basis}
        data["verification"] = {"buchberger_equal": ok, "passed": ok}
        text.append(f"buchberger check: {'pass' if ok else 'FAIL'}")
    return Report(data, text, ok)


def cmd_disconnectors(cfg: RunConfig) -> Report:
    infos = enumerate_disconnectors(cfg.graph)
    entries, text = [], []
    for info in infos:
        rep = info.components
        entries.append(
            {
                "S": sorted(info.S),
                "components": [sorted(C) for C in rep.components],
                "bipartite": list(rep.bipartite_flags),
                "joined_components": {str(s): list(v) for s, v in sorted(info.joined_components.items())},
                "effective": info.effective,
                "sign_split_patterns": [["+" if x > 0 else "-" for x in p] for p in info.sign_split_patterns],
            }
        )
        tag = "effective" if info.effective else "not effective"
        text.append(f"S={_sets(info.S)} components={' '.join(_sets(C) for C in rep.components)} {tag}")
    return Report({"count": len(infos), "disconnectors": entries}, text)


def _prime_text(c) -> str:
    parts = [f"m_{_sets(c.S)}"] if c.S else []
    parts += [f"sat{_sets(B)}" for B in c.bipartite_parts]
    parts += [f"p^{'+' if s > 0 else '-'}{_sets(N)}" for N, s in zip(c.nonbipartite_parts, c.sigma)]
    return " + ".join(parts) if parts else "0"


def cmd_minimal_primes(cfg: RunConfig) -> Report:
    g = cfg.graph
    comps = minimal_primes(g, cfg.fld)
    data = {"count": len(comps), "field": str(cfg.fld), "components": [c.to_json() for c in comps]}
    text = [f"{len(comps)} minimal primes"] + [_prime_text(c) for c in comps]
    ok = True
    if cfg.verify:
        v = verify_decomposition(g, cfg.fld, "minimal", cap=cfg.cap)
        ok = v["contains_ideal"] and v["pairwise_incomparable"]
        data["verification"] = {**v, "passed": ok}
        text.append(f"minimal primes contain the ideal and are incomparable: {'pass' if ok else 'FAIL'}")
    return Report(data, text, ok)


def cmd_decompose(cfg: RunConfig) -> Report:
    g = cfg.graph
    comps = mesoprimary_decomposition(g)
    data = {"count": len(comps), "field": str(cfg.fld), "components": [c.to_json() for c in comps]}
    text = [f"{len(comps)} components"]
    text += [(f"m_{_sets(c.S)} + " if c.S else "") + f"sat(G_{_sets(c.S)})" for c in comps]
    ok = True
    if cfg.verify:
        v = verify_decomposition(g, cfg.fld, "meso", cap=cfg.cap)
        ok = v["passed"]
        data["verification"] = v
        text.append(f"intersection check: {'pass' if ok else 'FAIL'}")
    return Report(data, text, ok)


def cmd_radical(cfg: RunConfig) -> Report:
    g = cfg.graph
    if not g.is_connected():
        raise NotConnected("radicality is decided for connected graphs")
    rad = is_radical(g, cfg.fld)
    data = {"radical": rad, "field": str(cfg.fld)}
    text = ["radical" if rad else "not radical"]
    ok = True
    if cfg.verify:
        v = verify_decomposition(g, cfg.fld, "minimal", cap=cfg.cap)
        ok = v["intersection_equal"] == rad
        data["verification"] = {"intersection_of_minimal_primes_equal": v["intersection_equal"], "passed": ok}
        text.append(f"oracle agrees: {'pass' if ok else 'FAIL'}")
    return Report(data, text, ok)


def cmd_snf(cfg: RunConfig) -> Report:
    g = cfg.graph
    res = smith_normal_form(stacked_incidence(g))
    diag = list(res.nonzero())
    data = {"diagonal": diag, "rank": res.rank}
    text = ["diagonal: " + " ".join(map(str, diag)) if diag else "diagonal: (empty)"]
    ok = True
    if cfg.verify:
        want = list(expected_invariants(g))
        ok = diag == want
        data["verification"] = {"expected": want, "passed": ok}
        text.append(f"component count check: {'pass' if ok else 'FAIL'}")
    return Report(data, text, ok)


def cmd_verify_suite(cfg: RunConfig, inject_fault: bool = False, jobs: int | None = None) -> Report:
    from .verify import run_suite

    cap = oracle_cap(SUITE_DEFAULT_CAP if cfg.cap is None else cfg.cap)
    if not 1 <= cap <= SUITE_HARD_LIMIT:
        raise OracleTimeout(cap, SUITE_HARD_LIMIT)
    results = run_suite(ideal_cap=cap, groebner_cap=cap + 1, combinatorial_cap=cap + 2, inject_fault=inject_fault, workers=jobs)
    ok = all(r.passed for r in results)
    data = {
        "caps": {"ideal": cap, "groebner": cap + 1, "combinatorial": cap + 2},
        "checks": [r.to_json() for r in results],
        "passed": ok,
    }
    width = max(len(r.name) for r in results)
    text = [f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  {r.graphs:>6} graphs  {r.claim}" for r in results]
    for r in results:
        for f in r.failures[:3]:
            text.append(f"  {r.name} failure: {json.dumps(f, sort_keys=True)}")
    return Report(data, text, ok)


COMMANDS = {
    "generators": cmd_generators,
    "markov": cmd_markov,
    "groebner": cmd_groebner,
    "disconnectors": cmd_disconnectors,
    "minimal-primes": cmd_minimal_primes,
    "decompose": cmd_decompose,
    "radical": cmd_radical,
    "snf": cmd_snf,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, choices=(0, 2, 3), default=0, help="field characteristic")
    common.add_argument("--verify", action="store_true", help="cross-check against the polynomial oracle")
    common.add_argument("--cap", type=int, default=None, help="largest vertex count for oracle checks")
    common.add_argument("--format", choices=("json", "text"), default="json", dest="fmt")

    graph_opts = argparse.ArgumentParser(add_help=False)
    src = graph_opts.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE", help="edge-list or JSON graph file")
    src.add_argument("--edges", metavar="LIST", help='inline edges such as "1-2,2-3"')
    graph_opts.add_argument("--order", metavar="PERM", help="vertex ranking for lex, largest first, e.g. 3,1,2")

    parser = argparse.ArgumentParser(prog="pbei", description="Parity binomial edge ideals of graphs.")
    parser.add_argument("--backend", action="store_true", help="print the kernel backend and exit")
    sub = parser.add_subparsers(dest="command")
    for name in GRAPH_COMMANDS:
        sub.add_parser(name, parents=[common, graph_opts])
    suite = sub.add_parser("verify-suite", parents=[common])
    suite.add_argument("--inject-fault", action="store_true", help="use a deliberately wrong sign-split rule")
    suite.add_argument("--jobs", type=int, default=None, help="worker processes (default: one per CPU)")
    return parser


def _load(args) -> Graph:
    if args.graph is not None:
        try:
            return load_graph(args.graph)
        except OSError as exc:
            raise InputError(f"cannot read {args.graph}: {exc.strerror}") from None
    return parse_inline_edges(args.edges)


def _emit(report: Report, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(report.data, sort_keys=True, indent=2) + "\n")
    else:
        out.write("\n".join(report.text) + "\n")


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend:
        out.write(kernels.BACKEND + "\n")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        if args.command == "verify-suite":
            cfg = RunConfig(args.command, None, field(args.char), TermOrder(), True, args.cap, args.fmt)
            report = cmd_verify_suite(cfg, args.inject_fault, args.jobs)
        else:
            g = _load(args)
            cfg = RunConfig(args.command, g, field(args.char), _parse_order(args.order, g.n), args.verify, args.cap, args.fmt)
            report = COMMANDS[args.command](cfg)
    except GraphFormatError as exc:
        print(f"pbei: input error: {exc}", file=sys.stderr)
        return 2
    except NotConnected as exc:
        print(f"pbei: graph is not connected: {exc}", file=sys.stderr)
        return 2
    except OracleTimeout as exc:
        print(f"pbei: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"pbei: {exc}", file=sys.stderr)
        return 2
    _emit(report, args.fmt, out)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
