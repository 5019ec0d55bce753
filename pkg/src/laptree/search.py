"""Exhaustive determined-by-Laplacian-spectrum verification over free trees,
with optional pre-filtering, JSONL result persistence, and resumable
checkpoints.

Only trees are searched: a graph sharing the Laplacian spectrum of a tree has
the same vertex count, edge count and component count, hence is itself a
tree.  Verdicts rest on exact integer characteristic polynomial comparison;
the pre-filter hashes exact power sums of the Laplacian, so it can never
split truly cospectral graphs and the mate set is filter-independent.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator, Sequence

from .enumeration import (
    DEFAULT_ORDER_CAP,
    enumerate_free_trees,
    enumerate_free_trees_with_sequences,
    enumerate_trees_with_degree_multiset,
)
from .graphs import (
    DoubleStarlikeParams,
    Graph,
    build_double_starlike,
    canonical_form,
    graph6_encode,
)
from .spectra import IntMatrix, IntPolynomial, char_poly, laplacian_matrix

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK = (1 << 64) - 1


def _mix64(h: int, value: int) -> int:
    for b in value.to_bytes((value.bit_length() + 8) // 8 + 1, "big", signed=True):
        h = ((h ^ b) * _FNV_PRIME) & _MASK
    return h


def spectral_fingerprint(m: IntMatrix) -> int:
    """64-bit hash of the exact power sums trace(M^k), k = 1..4.

    Equal characteristic polynomials force equal power sums, so the
    fingerprint never separates cospectral matrices; hash collisions are
    harmless because every hit is re-verified exactly.
    """
    e1 = m.entries
    n = m.dimension
    m2 = m.matmul(m)
    e2 = m2.entries
    t1 = m.trace()
    t2 = m2.trace()
    t3 = sum(e2[i][j] * e1[i][j] for i in range(n) for j in range(n))
    t4 = sum(x * x for row in e2 for x in row)
    h = _mix64(_FNV_OFFSET, n)
    for t in (t1, t2, t3, t4):
        h = _mix64(h, t)
    return h


@dataclass(frozen=True)
class DlsReport:
    """Verdict of an exhaustive cospectral-mate search for one target."""

    target: str
    params: tuple[int, int, int]
    order: int
    trees_examined: int
    charpoly: IntPolynomial
    mates: tuple[str, ...]
    verdict: str
    elapsed: float
    enumeration_complete: bool
    trees_only: bool = True

    def to_json_dict(self) -> dict:
        return {
            "target": self.target,
            "params": list(self.params),
            "order": self.order,
            "trees_examined": self.trees_examined,
            "charpoly": self.charpoly.to_json_list(),
            "mates": list(self.mates),
            "verdict": self.verdict,
            "elapsed": self.elapsed,
            "enumeration_complete": self.enumeration_complete,
            "trees_only": self.trees_only,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "DlsReport":
        return cls(
            target=d["target"],
            params=tuple(d["params"]),
            order=d["order"],
            trees_examined=d["trees_examined"],
            charpoly=IntPolynomial.from_json_list(d["charpoly"]),
            mates=tuple(d["mates"]),
            verdict=d["verdict"],
            elapsed=d["elapsed"],
            enumeration_complete=d["enumeration_complete"],
            trees_only=d.get("trees_only", True),
        )


@dataclass
class SearchCheckpoint:
    """Resumable position inside one enumeration scan."""

    order: int
    last_sequence: tuple[int, ...] | None
    partial_mates: list[str] = field(default_factory=list)
    partial_count: int = 0

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "last_sequence": list(self.last_sequence) if self.last_sequence else None,
            "partial_mates": list(self.partial_mates),
            "partial_count": self.partial_count,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "SearchCheckpoint":
        seq = d.get("last_sequence")
        return cls(
            order=d["order"],
            last_sequence=tuple(seq) if seq else None,
            partial_mates=list(d.get("partial_mates", [])),
            partial_count=d.get("partial_count", 0),
        )


def write_json_atomic(path: str, payload: dict) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
        fh.flush()
        os.fsync(fh.fileno())
    os.replace(tmp, path)


def _scan_tree_space(
    target: Graph,
    order: int,
    cap: int,
    use_prefilter: bool,
    checkpoint: SearchCheckpoint | None = None,
    on_progress: Callable[[SearchCheckpoint], None] | None = None,
    progress_every: int = 2000,
) -> tuple[int, list[str], IntPolynomial]:
    """Exhaustive scan of all free trees of `order` for non-isomorphic trees
    with the target's exact Laplacian char poly."""
    target_poly = char_poly(laplacian_matrix(target))
    target_fp = spectral_fingerprint(laplacian_matrix(target)) if use_prefilter else 0
    target_canon = canonical_form(target)
    count = checkpoint.partial_count if checkpoint else 0
    mates = list(checkpoint.partial_mates) if checkpoint else []
    start_after = checkpoint.last_sequence if checkpoint else None
    last_seq: tuple[int, ...] | None = start_after
    for seq, t in enumerate_free_trees_with_sequences(
        order, cap=cap, start_after=start_after
    ):
        count += 1
        last_seq = seq
        lap = laplacian_matrix(t)
        if use_prefilter and spectral_fingerprint(lap) != target_fp:
            pass
        elif char_poly(lap) == target_poly and canonical_form(t) != target_canon:
            mates.append(graph6_encode(t))
        if on_progress is not None and count % progress_every == 0:
            on_progress(SearchCheckpoint(order, last_seq, list(mates), count))
    return count, mates, target_poly


def verify_dls(
    params: DoubleStarlikeParams,
    cap: int = DEFAULT_ORDER_CAP,
    use_prefilter: bool = True,
    checkpoint_path: str | None = None,
    progress_every: int = 2000,
) -> DlsReport:
    """Check whether H(p,n,q) is determined by its Laplacian spectrum among
    all free trees of its order, by exhaustive exact comparison."""
    order = params.order
    if order > cap:
        raise ValueError(f"order {order} exceeds enumeration cap {cap}")
    target = build_double_starlike(params)
    t0 = time.monotonic()

    resume: SearchCheckpoint | None = None
    on_progress = None
    if checkpoint_path:
        if os.path.exists(checkpoint_path):
            with open(checkpoint_path, encoding="utf-8") as fh:
                doc = json.load(fh)
            if doc.get("kind") == "verify" and tuple(doc.get("params", ())) == (
                params.p,
                params.n,
                params.q,
            ):
                resume = SearchCheckpoint.from_json_dict(doc["scan"])

        def on_progress(ck: SearchCheckpoint) -> None:
            write_json_atomic(
                checkpoint_path,
                {
                    "kind": "verify",
                    "params": [params.p, params.n, params.q],
                    "scan": ck.to_json_dict(),
                },
            )

    count, mates, poly = _scan_tree_space(
        target,
        order,
        cap,
        use_prefilter,
        checkpoint=resume,
        on_progress=on_progress,
        progress_every=progress_every,
    )
    if checkpoint_path and os.path.exists(checkpoint_path):
        os.remove(checkpoint_path)
    verdict = "determined" if not mates else "not-determined"
    return DlsReport(
        target=graph6_encode(target),
        params=(params.p, params.n, params.q),
        order=order,
        trees_examined=count,
        charpoly=poly,
        mates=tuple(mates),
        verdict=verdict,
        elapsed=time.monotonic() - t0,
        enumeration_complete=True,
    )


def search_cospectral_mates(
    g: Graph,
    family: str = "all-trees",
    cap: int = DEFAULT_ORDER_CAP,
    use_prefilter: bool = True,
) -> list[Graph]:
    """All non-isomorphic trees sharing g's exact Laplacian char poly.

    `family` is "all-trees" or "degree-multiset" (candidates restricted to
    g's degree multiset; falls back to filtering the full enumeration when
    the multiset is not a two-hub one).
    """
    if not g.is_tree():
        raise ValueError("mate search target must be a tree")
    if g.order > cap:
        raise ValueError(f"order {g.order} exceeds enumeration cap {cap}")
    if family == "all-trees":
        candidates: Iterator[Graph] = enumerate_free_trees(g.order, cap=cap)
    elif family == "degree-multiset":
        ms = g.degree_multiset()
        if sum(1 for d in ms if d > 2) == 2:
            candidates = enumerate_trees_with_degree_multiset(ms)
        else:
            candidates = (
                t for t in enumerate_free_trees(g.order, cap=cap)
                if t.degree_multiset() == ms
            )
    else:
        raise ValueError(f"unknown family {family!r}")
    target_poly = char_poly(laplacian_matrix(g))
    target_fp = spectral_fingerprint(laplacian_matrix(g)) if use_prefilter else 0
    target_canon = canonical_form(g)
    mates = []
    for t in candidates:
        lap = laplacian_matrix(t)
        if use_prefilter and spectral_fingerprint(lap) != target_fp:
            continue
        if char_poly(lap) == target_poly and canonical_form(t) != target_canon:
            mates.append(t)
    return mates


def grid_cells(
    pmax: int, qmax: int, nmax: int, order_cap: int
) -> list[DoubleStarlikeParams]:
    """Deterministic traversal order of the (p, n, q) grid: ascending total
    order, then n, then q (with p >= q determined by the total)."""
    cells = []
    for total in range(4, order_cap + 1):
        for n in range(2, min(nmax, total - 2) + 1):
            rest = total - n
            for q in range(1, min(qmax, rest // 2) + 1):
                p = rest - q
                if p <= pmax:
                    cells.append(DoubleStarlikeParams(p, n, q))
    return cells


def _grid_worker(args: tuple) -> dict:
    p, n, q, cap, use_prefilter = args
    report = verify_dls(
        DoubleStarlikeParams(p, n, q), cap=cap, use_prefilter=use_prefilter
    )
    return report.to_json_dict()


def _truncate_jsonl(path: str, keep_lines: int) -> None:
    if not os.path.exists(path):
        if keep_lines:
            raise ValueError(f"results file {path} missing but checkpoint expects it")
        return
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    if len(lines) == keep_lines and all(l.endswith("\n") for l in lines):
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.writelines(lines[:keep_lines])
        fh.flush()
        os.fsync(fh.fileno())


def run_grid(
    pmax: int,
    qmax: int,
    nmax: int,
    order_cap: int,
    results_path: str,
    checkpoint_path: str | None = None,
    cap: int = DEFAULT_ORDER_CAP,
    use_prefilter: bool = True,
    jobs: int = 1,
    progress_every: int = 2000,
) -> Iterator[DlsReport]:
    """Run verify_dls over the whole parameter grid, appending one JSON line
    per report to `results_path` and checkpointing after every report (and,
    for single-job runs, inside each scan).

    Resuming from a checkpoint reproduces the results file byte for byte.
    """
    if order_cap > cap:
        raise ValueError(f"order cap {order_cap} exceeds enumeration cap {cap}")
    cells = grid_cells(pmax, qmax, nmax, order_cap)
    grid_key = {"pmax": pmax, "qmax": qmax, "nmax": nmax, "order_cap": order_cap}

    completed = 0
    resume_scan: SearchCheckpoint | None = None
    if checkpoint_path and os.path.exists(checkpoint_path):
        with open(checkpoint_path, encoding="utf-8") as fh:
            doc = json.load(fh)
        if doc.get("kind") != "grid" or doc.get("grid") != grid_key:
            raise ValueError(
                f"checkpoint {checkpoint_path} belongs to a different run"
            )
        completed = doc.get("completed", 0)
        if doc.get("scan") is not None:
            resume_scan = SearchCheckpoint.from_json_dict(doc["scan"])
    _truncate_jsonl(results_path, completed)

    def checkpoint_doc(scan: SearchCheckpoint | None) -> dict:
        return {
            "kind": "grid",
            "grid": grid_key,
            "completed": completed,
            "scan": scan.to_json_dict() if scan else None,
        }

    results = open(results_path, "a", encoding="utf-8")
    try:
        if jobs > 1:
            pending = [
                (c.p, c.n, c.q, cap, use_prefilter) for c in cells[completed:]
            ]
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                for d in pool.map(_grid_worker, pending):
                    report = DlsReport.from_json_dict(d)
                    results.write(json.dumps(d) + "\n")
                    results.flush()
                    completed += 1
                    if checkpoint_path:
                        write_json_atomic(checkpoint_path, checkpoint_doc(None))
                    yield report
        else:
            for cell in cells[completed:]:
                t0 = time.monotonic()
                target = build_double_starlike(cell)
                on_progress = None
                if checkpoint_path:

                    def on_progress(ck: SearchCheckpoint) -> None:
                        write_json_atomic(
                            checkpoint_path, checkpoint_doc(ck)
                        )

                scan_resume = resume_scan
                resume_scan = None
                count, mates, poly = _scan_tree_space(
                    target,
                    cell.order,
                    cap,
                    use_prefilter,
                    checkpoint=scan_resume,
                    on_progress=on_progress,
                    progress_every=progress_every,
                )
                report = DlsReport(
                    target=graph6_encode(target),
                    params=(cell.p, cell.n, cell.q),
                    order=cell.order,
                    trees_examined=count,
                    charpoly=poly,
                    mates=tuple(mates),
                    verdict="determined" if not mates else "not-determined",
                    elapsed=time.monotonic() - t0,
                    enumeration_complete=True,
                )
                results.write(json.dumps(report.to_json_dict()) + "\n")
                results.flush()
                completed += 1
                if checkpoint_path:
                    write_json_atomic(checkpoint_path, checkpoint_doc(None))
                yield report
    finally:
        results.close()


def read_results(path: str) -> list[DlsReport]:
    reports = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                reports.append(DlsReport.from_json_dict(json.loads(line)))
    return reports
