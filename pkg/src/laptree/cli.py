"""Command line front end: build trees, print spectra, run lemma checks, the
degree-sequence solver, and the exhaustive spectrum-determination search.

Exit codes: 0 success / all checks pass, 1 a check or verdict failed,
2 usage or input error.  LAPTREE_CAP overrides the enumeration cap.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .enumeration import DEFAULT_ORDER_CAP
from .graphs import (
    DoubleStarlikeParams,
    Graph,
    build_double_starlike,
    graph6_decode,
    graph6_encode,
)
from .lemmas import (
    BOUND_TOL,
    check_h_bounds,
    check_interlacing_edge,
    check_interlacing_principal,
    check_interlacing_vertex,
    check_lemma6_mu1_bounds,
    check_lemma7_mu2,
    check_lemma8_mu3,
    expected_degree_sequence,
    solve_degree_sequences,
)
from .search import run_grid, verify_dls
from .spectra import (
    adjacency_matrix,
    char_poly,
    eigenvalues,
    laplacian_matrix,
)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


@dataclass
class CliConfig:
    cap: int = DEFAULT_ORDER_CAP
    tol: float = BOUND_TOL
    fmt: str = "text"
    results_path: str = "dls_results.jsonl"
    checkpoint_path: str | None = None

    def __post_init__(self):
        if self.cap < 1:
            raise ValueError("enumeration cap must be >= 1")
        if self.tol <= 0:
            raise ValueError("tolerance must be positive")


def _env_cap() -> int:
    raw = os.environ.get("LAPTREE_CAP")
    if raw is None:
        return DEFAULT_ORDER_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"LAPTREE_CAP must be an integer, got {raw!r}") from exc


def _fmt_float(x: float) -> str:
    return f"{x:.12g}"


def _json_float(x: float) -> float:
    return float(_fmt_float(x))


def _emit(obj: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj))


def _params_from_args(args) -> DoubleStarlikeParams:
    return DoubleStarlikeParams(args.p, args.n, args.q)


def cmd_build(args, config: CliConfig) -> int:
    g = build_double_starlike(_params_from_args(args))
    g6 = graph6_encode(g)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "params": [args.p, args.n, args.q],
                    "order": g.order,
                    "graph6": g6,
                    "degree_multiset": list(g.degree_multiset()),
                }
            )
        )
    else:
        print(g6)
    return EXIT_OK


def _spectrum_one(g6: str, args, config: CliConfig) -> None:
    g = graph6_decode(g6, max_order=config.cap)
    matrix = laplacian_matrix(g) if args.matrix == "laplacian" else adjacency_matrix(g)
    spec = eigenvalues(matrix, args.matrix)
    # values within solver tolerance of zero print as zero
    vals = [0.0 if abs(x) <= spec.tolerance else x for x in spec.eigenvalues]
    payload: dict = {
        "graph6": graph6_encode(g),
        "matrix": args.matrix,
        "order": g.order,
        "eigenvalues": [_json_float(x) for x in vals],
    }
    if args.exact:
        payload["charpoly"] = char_poly(matrix).to_json_list()
    if config.fmt == "json":
        print(json.dumps(payload))
    else:
        print(" ".join(_fmt_float(x) for x in vals))
        if args.exact:
            print("charpoly " + " ".join(payload["charpoly"]))


def cmd_spectrum(args, config: CliConfig) -> int:
    inputs = [args.graph6] if args.graph6 else [l.strip() for l in sys.stdin if l.strip()]
    if not inputs:
        raise ValueError("no graph6 input given")
    for g6 in inputs:
        _spectrum_one(g6, args, config)
    return EXIT_OK


def _lemma_checks_for_graph(g: Graph, tol: float) -> list[dict]:
    checks: list[dict] = []

    def skip(lemma_id: str, reason: str) -> None:
        checks.append({"lemma_id": lemma_id, "applicable": False, "reason": reason})

    def bound(check) -> None:
        d = check.to_json_dict()
        d["applicable"] = True
        checks.append(d)

    def flag(lemma_id: str, ok: bool, inputs: dict) -> None:
        checks.append(
            {"lemma_id": lemma_id, "applicable": True, "inputs": inputs, "passed": ok}
        )

    if g.size >= 1:
        bound(check_lemma6_mu1_bounds(g, tol))
    else:
        skip("lemma6-mu1", "graph has no edges")
    if g.order >= 3 and g.is_connected():
        bound(check_lemma7_mu2(g, tol))
    else:
        skip("lemma7-mu2", "needs a connected graph on >= 3 vertices")
    if g.order >= 4 and g.is_connected():
        bound(check_lemma8_mu3(g, tol))
    else:
        skip("lemma8-mu3", "needs a connected graph on >= 4 vertices")
    if g.order >= 2:
        degs = g.degrees()
        u = max(range(g.order), key=lambda v: (degs[v], -v))
        flag(
            "interlacing-vertex",
            check_interlacing_vertex(g, u, tol),
            {"vertex": u},
        )
    else:
        skip("interlacing-vertex", "needs at least 2 vertices")
    first_edge = next(g.edges(), None)
    if first_edge is not None:
        flag(
            "interlacing-edge",
            check_interlacing_edge(g, first_edge, tol),
            {"edge": list(first_edge)},
        )
    else:
        skip("interlacing-edge", "graph has no edges")
    if g.order >= 2:
        keep = list(range(g.order - 1))
        flag(
            "interlacing-principal",
            check_interlacing_principal(laplacian_matrix(g), keep, tol),
            {"keep": keep},
        )
    else:
        skip("interlacing-principal", "needs at least 2 vertices")
    return checks


def cmd_check_lemmas(args, config: CliConfig) -> int:
    checks: list[dict]
    if args.graph6:
        g = graph6_decode(args.graph6, max_order=config.cap)
        checks = _lemma_checks_for_graph(g, config.tol)
    else:
        if args.params is None or len(args.params) != 3:
            raise ValueError("give p n q or --graph6 STRING")
        p, n, q = args.params
        params = DoubleStarlikeParams(p, n, q)
        g = build_double_starlike(params)
        checks = _lemma_checks_for_graph(g, config.tol)
        if n >= 4 and p > q >= 2:
            for c in check_h_bounds(params, config.tol):
                d = c.to_json_dict()
                d["applicable"] = True
                checks.append(d)
            sols = solve_degree_sequences(params)
            expected = expected_degree_sequence(params)
            checks.append(
                {
                    "lemma_id": "degree-sequence-unique",
                    "applicable": True,
                    "inputs": {"p": p, "n": n, "q": q},
                    "passed": sols == [expected],
                }
            )
        else:
            reason = "needs n >= 4 and p > q >= 2"
            for lemma_id in ("h-mu1", "h-mu2", "h-mu3", "degree-sequence-unique"):
                checks.append(
                    {"lemma_id": lemma_id, "applicable": False, "reason": reason}
                )

    all_passed = all(c.get("passed", True) for c in checks if c.get("applicable"))
    if config.fmt == "json":
        print(json.dumps({"checks": checks, "all_passed": all_passed}))
    else:
        for c in checks:
            if not c.get("applicable"):
                print(f"SKIP {c['lemma_id']}: not applicable ({c['reason']})")
                continue
            status = "PASS" if c["passed"] else "FAIL"
            if "bounds" in c:
                lo = c["bounds"]["lower"]
                hi = c["bounds"]["upper"]
                val = c["values"]["value"]
                lo_s = _fmt_float(lo) if lo is not None else "-inf"
                hi_s = _fmt_float(hi) if hi is not None else "inf"
                print(f"{status} {c['lemma_id']}: {lo_s} <= {_fmt_float(val)} <= {hi_s}")
            else:
                print(f"{status} {c['lemma_id']}")
        print("all checks passed" if all_passed else "some checks FAILED")
    return EXIT_OK if all_passed else EXIT_CHECK_FAILED


def cmd_degseq(args, config: CliConfig) -> int:
    params = _params_from_args(args)
    sols = solve_degree_sequences(params)
    if config.fmt == "json":
        print(
            json.dumps(
                {
                    "params": [args.p, args.n, args.q],
                    "solutions": [list(s.counts) for s in sols],
                }
            )
        )
    else:
        print(f"{len(sols)} solution(s)")
        for s in sols:
            print(s.describe())
    return EXIT_OK


def _print_report(report, config: CliConfig) -> None:
    if config.fmt == "json":
        print(json.dumps(report.to_json_dict()))
    else:
        p, n, q = report.params
        print(f"target H({p},{n},{q})  order {report.order}  graph6 {report.target}")
        print(f"trees examined: {report.trees_examined}")
        print(f"verdict: {report.verdict}")
        if report.mates:
            print("mates: " + " ".join(report.mates))
        print(f"elapsed: {_fmt_float(report.elapsed)}s")


def cmd_verify(args, config: CliConfig) -> int:
    report = verify_dls(
        _params_from_args(args),
        cap=config.cap,
        use_prefilter=not args.no_prefilter,
        checkpoint_path=config.checkpoint_path,
    )
    _print_report(report, config)
    return EXIT_OK if report.verdict == "determined" else EXIT_CHECK_FAILED


def cmd_grid(args, config: CliConfig) -> int:
    n_reports = 0
    n_determined = 0
    for report in run_grid(
        pmax=args.pmax,
        qmax=args.qmax,
        nmax=args.nmax,
        order_cap=args.grid_order_cap,
        results_path=config.results_path,
        checkpoint_path=config.checkpoint_path,
        cap=config.cap,
        use_prefilter=not args.no_prefilter,
        jobs=args.jobs,
    ):
        n_reports += 1
        n_determined += report.verdict == "determined"
        if config.fmt == "text":
            p, n, q = report.params
            print(
                f"H({p},{n},{q}) order {report.order}: {report.verdict} "
                f"({report.trees_examined} trees)"
            )
    summary = {
        "reports": n_reports,
        "determined": n_determined,
        "results_path": config.results_path,
    }
    if config.fmt == "json":
        print(json.dumps(summary))
    else:
        print(
            f"{n_determined}/{n_reports} determined, results in {config.results_path}"
        )
    return EXIT_OK if n_determined == n_reports else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laptree",
        description="Spectral toolkit for double starlike trees.",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--tol", type=float, default=BOUND_TOL,
                        help="absolute tolerance for bound checks")
    parser.add_argument("--order-cap", type=int, default=None,
                        help="enumeration cap (default 18 or LAPTREE_CAP)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="graph6 of the double starlike tree")
    for name in ("p", "n", "q"):
        p_build.add_argument(name, type=int)
    p_build.set_defaults(func=cmd_build)

    p_spec = sub.add_parser("spectrum", help="eigenvalues of a graph6 graph")
    p_spec.add_argument("graph6", nargs="?", help="graph6 string (default: stdin)")
    p_spec.add_argument("--matrix", choices=("laplacian", "adjacency"),
                        default="laplacian")
    p_spec.add_argument("--exact", action="store_true",
                        help="also print the exact characteristic polynomial")
    p_spec.set_defaults(func=cmd_spectrum)

    p_check = sub.add_parser("check-lemmas", help="run all applicable checks")
    p_check.add_argument("params", type=int, nargs="*", metavar="P N Q")
    p_check.add_argument("--graph6", help="check a graph given in graph6")
    p_check.set_defaults(func=cmd_check_lemmas)

    p_deg = sub.add_parser("degseq", help="degree-sequence constraint solver")
    for name in ("p", "n", "q"):
        p_deg.add_argument(name, type=int)
    p_deg.set_defaults(func=cmd_degseq)

    p_verify = sub.add_parser("verify", help="exhaustive spectrum-determination check")
    for name in ("p", "n", "q"):
        p_verify.add_argument(name, type=int)
    p_verify.add_argument("--no-prefilter", action="store_true")
    p_verify.add_argument("--checkpoint", help="checkpoint file path")
    p_verify.set_defaults(func=cmd_verify)

    p_grid = sub.add_parser("grid", help="verify over a parameter grid")
    p_grid.add_argument("--pmax", type=int, default=12)
    p_grid.add_argument("--qmax", type=int, default=12)
    p_grid.add_argument("--nmax", type=int, default=12)
    p_grid.add_argument("--order-cap", dest="grid_order_cap", type=int, default=10)
    p_grid.add_argument("--out", default="dls_results.jsonl")
    p_grid.add_argument("--checkpoint", help="checkpoint file path")
    p_grid.add_argument("--jobs", type=int, default=1)
    p_grid.add_argument("--no-prefilter", action="store_true")
    p_grid.set_defaults(func=cmd_grid)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cap = args.order_cap if args.order_cap is not None else _env_cap()
        config = CliConfig(
            cap=cap,
            tol=args.tol,
            fmt=args.format,
            results_path=getattr(args, "out", "dls_results.jsonl"),
            checkpoint_path=getattr(args, "checkpoint", None),
        )
        return args.func(args, config)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
