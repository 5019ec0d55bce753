"""Executable checkers for the eigenvalue bounds, interlacing relations, the
degree-sequence constraint solver, and the two-hub tree classifier with its
path-count defect."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import (
    CandidateShape,
    DoubleStarlikeParams,
    Graph,
    build_double_starlike,
    line_graph,
)
from .spectra import (
    IntMatrix,
    eigenvalues,
    laplacian_spectrum,
    p3_count,
)

BOUND_TOL = 1e-8


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of a single eigenvalue bound check; absent bounds are open."""

    lemma_id: str
    lower: float | None
    value: float
    upper: float | None
    slack_low: float
    slack_high: float
    passed: bool
    inputs: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "lemma_id": self.lemma_id,
            "inputs": self.inputs,
            "bounds": {"lower": self.lower, "upper": self.upper},
            "values": {
                "value": self.value,
                "slack_low": None if math.isinf(self.slack_low) else self.slack_low,
                "slack_high": None if math.isinf(self.slack_high) else self.slack_high,
            },
            "passed": self.passed,
        }


def _bound_check(
    lemma_id: str,
    value: float,
    lower: float | None,
    upper: float | None,
    tol: float,
    inputs: dict | None = None,
) -> BoundCheck:
    slack_low = value - lower if lower is not None else math.inf
    slack_high = upper - value if upper is not None else math.inf
    passed = slack_low >= -tol and slack_high >= -tol
    return BoundCheck(
        lemma_id, lower, value, upper, slack_low, slack_high, passed, inputs or {}
    )


def check_lemma6_mu1_bounds(g: Graph, tol: float = BOUND_TOL) -> BoundCheck:
    """d1 + 1 <= mu1 <= max over edges of a degree/neighbor-average quotient."""
    if g.size == 0:
        raise ValueError("mu1 bounds need at least one edge")
    degs = g.degrees()
    avg_nbr = [
        sum(degs[u] for u in g.adj[v]) / degs[v] if degs[v] else 0.0
        for v in range(g.order)
    ]
    upper = max(
        (degs[i] * (degs[i] + avg_nbr[i]) + degs[j] * (degs[j] + avg_nbr[j]))
        / (degs[i] + degs[j])
        for i, j in g.edges()
    )
    mu1 = laplacian_spectrum(g).mu(1)
    return _bound_check("lemma6-mu1", mu1, max(degs) + 1.0, upper, tol)


def check_lemma7_mu2(g: Graph, tol: float = BOUND_TOL) -> BoundCheck:
    """mu2 >= d2 for connected graphs on at least 3 vertices."""
    if g.order < 3 or not g.is_connected():
        raise ValueError("mu2 bound needs a connected graph on >= 3 vertices")
    d2 = sorted(g.degrees(), reverse=True)[1]
    mu2 = laplacian_spectrum(g).mu(2)
    return _bound_check("lemma7-mu2", mu2, float(d2), None, tol)


def check_lemma8_mu3(g: Graph, tol: float = BOUND_TOL) -> BoundCheck:
    """mu3 >= d3 - 1 for connected graphs on at least 4 vertices."""
    if g.order < 4 or not g.is_connected():
        raise ValueError("mu3 bound needs a connected graph on >= 4 vertices")
    d3 = sorted(g.degrees(), reverse=True)[2]
    mu3 = laplacian_spectrum(g).mu(3)
    return _bound_check("lemma8-mu3", mu3, d3 - 1.0, None, tol)


def check_interlacing_vertex(g: Graph, u: int, tol: float = BOUND_TOL) -> bool:
    """mu_i(G) >= mu_i(G-u) >= mu_{i+1}(G) - 1 for all i."""
    if not 0 <= u < g.order:
        raise ValueError(f"vertex {u} out of range")
    mu = laplacian_spectrum(g).eigenvalues
    mu_sub = laplacian_spectrum(g.delete_vertex(u)).eigenvalues
    n = g.order
    for i in range(n - 1):
        if not (mu[i] + tol >= mu_sub[i] >= mu[i + 1] - 1.0 - tol):
            return False
    return True


def check_interlacing_edge(g: Graph, e: tuple[int, int], tol: float = BOUND_TOL) -> bool:
    """mu_i(G) >= mu_i(G-e) >= mu_{i+1}(G) for all i."""
    u, v = e
    mu = laplacian_spectrum(g).eigenvalues
    mu_sub = laplacian_spectrum(g.delete_edge(u, v)).eigenvalues
    n = g.order
    for i in range(n - 1):
        if not (mu[i] + tol >= mu_sub[i] >= mu[i + 1] - tol):
            return False
    return True


def check_interlacing_principal(
    m: IntMatrix, keep: Sequence[int], tol: float = BOUND_TOL
) -> bool:
    """alpha_i >= alpha'_i >= alpha_{n-k+i} for a principal submatrix of size k."""
    sub = m.principal_submatrix(keep)
    alpha = eigenvalues(m, "adjacency").eigenvalues
    alpha_sub = eigenvalues(sub, "adjacency").eigenvalues
    n, k = m.dimension, sub.dimension
    for i in range(k):
        if not (alpha[i] + tol >= alpha_sub[i] >= alpha[n - k + i] - tol):
            return False
    return True


def check_h_bounds(
    params: DoubleStarlikeParams, tol: float = BOUND_TOL
) -> list[BoundCheck]:
    """The three Laplacian eigenvalue windows of the double starlike tree:
    p+2 <= mu1 <= p+2+1/(p+2), q+2 <= mu2 <= q+3+1/(q+2), mu3 < 4.

    Only stated for n >= 4 and p > q >= 2.
    """
    p, n, q = params.p, params.n, params.q
    if n < 4 or not (p > q >= 2):
        raise ValueError("bounds require n >= 4 and p > q >= 2")
    spec = laplacian_spectrum(build_double_starlike(params))
    inputs = {"p": p, "n": n, "q": q}
    return [
        _bound_check("h-mu1", spec.mu(1), p + 2.0, p + 2.0 + 1.0 / (p + 2), tol, inputs),
        _bound_check("h-mu2", spec.mu(2), q + 2.0, q + 3.0 + 1.0 / (q + 2), tol, inputs),
        _bound_check("h-mu3", spec.mu(3), None, 4.0, tol, inputs),
    ]


@dataclass(frozen=True)
class DegreeSequenceSolution:
    """Vertex counts by degree: counts[i] is the number of degree-(i+1)
    vertices, listed up to the largest degree present."""

    counts: tuple[int, ...]

    @property
    def max_degree(self) -> int:
        return len(self.counts)

    def count_of_degree(self, d: int) -> int:
        return self.counts[d - 1] if 1 <= d <= len(self.counts) else 0

    def describe(self) -> str:
        parts = [
            f"n{d}={c}"
            for d, c in sorted(enumerate(self.counts, start=1), reverse=True)
            if c
        ]
        return " ".join(parts)


def expected_degree_sequence(params: DoubleStarlikeParams) -> DegreeSequenceSolution:
    """The surviving count vector: one vertex each of degrees p+1 and q+1,
    n-2 of degree 2 and p+q leaves."""
    p, n, q = params.p, params.n, params.q
    counts = [0] * (p + 1)
    counts[0] = p + q
    counts[1] = n - 2
    counts[q] += 1
    counts[p] += 1
    return DegreeSequenceSolution(tuple(counts))


def solve_degree_sequences(
    params: DoubleStarlikeParams,
) -> list[DegreeSequenceSolution]:
    """All count vectors (n_1 .. n_D), D <= p+1, compatible with the spectral
    constraints on a tree sharing the Laplacian spectrum of H(p,n,q):

      sum n_i             = n+p+q            (vertex count)
      sum i n_i           = 2(n+p+q-1)       (edge count)
      sum i^2 n_i         = (p+1)^2+(q+1)^2+4(n-2)+p+q   (degree squares)
      sum C(i,3) n_i      = C(p+1,3)+C(q+1,3)            (line-graph triangles)
      at most one vertex of degree > q+3, at most two of degree > 4

    Exhaustive exact-integer enumeration; solutions in lexicographic order of
    the count vector.
    """
    p, n, q = params.p, params.n, params.q
    if n < 4 or not (p > q >= 2):
        raise ValueError("solver requires n >= 4 and p > q >= 2")
    total = n + p + q
    # sum (i-1)(i-2) n_i over i>=3, implied by the three power-sum equations
    w_target = p * p + q * q - p - q
    t_target = math.comb(p + 1, 3) + math.comb(q + 1, 3)
    dmax = p + 1

    solutions: list[tuple[int, ...]] = []
    counts_hi: dict[int, int] = {}

    def place(i: int, w_rem: int, t_rem: int, over4: int, over_q3: int) -> None:
        if i == 2:
            if w_rem or t_rem:
                return
            s0 = sum(counts_hi.values())
            s1 = sum(d * c for d, c in counts_hi.items())
            n2 = total - 2 - s1 + s0
            n1 = total - s0 - n2
            if n2 < 0 or n1 < 0:
                return
            counts = [n1, n2] + [counts_hi.get(d, 0) for d in range(3, dmax + 1)]
            solutions.append(tuple(counts))
            return
        wi = (i - 1) * (i - 2)
        ti = math.comb(i, 3)
        cap = min(w_rem // wi, t_rem // ti)
        if i > 4:
            cap = min(cap, 2 - over4)
        if i > q + 3:
            cap = min(cap, 1 - over_q3)
        for c in range(cap, -1, -1):
            counts_hi[i] = c
            place(
                i - 1,
                w_rem - c * wi,
                t_rem - c * ti,
                over4 + (c if i > 4 else 0),
                over_q3 + (c if i > q + 3 else 0),
            )
        del counts_hi[i]

    place(dmax, w_target, t_target, 0, 0)
    solutions.sort()
    out = []
    for counts in solutions:
        trimmed = list(counts)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        out.append(DegreeSequenceSolution(tuple(trimmed)))
    return out


def classify_candidate(t: Graph) -> CandidateShape:
    """Recover the two-hub shape of a tree with exactly two vertices of
    degree above 2; inverse of build_candidate up to isomorphism."""
    if not t.is_tree():
        raise ValueError("classification requires a tree")
    hubs = [v for v in range(t.order) if t.degree(v) > 2]
    if len(hubs) != 2:
        raise ValueError(f"expected exactly two hubs, found {len(hubs)}")
    hubs.sort(key=lambda v: (-t.degree(v), v))
    p_hub, q_hub = hubs

    # unique hub-to-hub path in a tree
    parent = {p_hub: p_hub}
    stack = [p_hub]
    while stack:
        v = stack.pop()
        for u in t.adj[v]:
            if u not in parent:
                parent[u] = v
                stack.append(u)
    path = [q_hub]
    while path[-1] != p_hub:
        path.append(parent[path[-1]])
    on_path = set(path)

    def branches_at(hub: int) -> list[int]:
        lengths = []
        for u in t.adj[hub]:
            if u in on_path:
                continue
            internal = 0
            prev, cur = hub, u
            while t.degree(cur) == 2:
                internal += 1
                nxt = next(w for w in t.adj[cur] if w != prev)
                prev, cur = cur, nxt
            if t.degree(cur) != 1:
                raise AssertionError("branch must end in a leaf")
            if internal:
                lengths.append(internal)
        return lengths

    bl_p = branches_at(p_hub)
    bl_q = branches_at(q_hub)
    adjacent = len(path) == 2
    return CandidateShape(
        hubs_adjacent=adjacent,
        a=len(bl_q),
        b=len(bl_p),
        hub_path_len=0 if adjacent else len(path),
        branch_lengths_q=tuple(bl_q),
        branch_lengths_p=tuple(bl_p),
    )


def p3_defect(t: Graph, params: DoubleStarlikeParams) -> int:
    """Difference in 3-vertex path counts between the line graphs of t and of
    the reference double starlike tree, by direct counting."""
    h = build_double_starlike(params)
    if t.degree_multiset() != h.degree_multiset():
        raise ValueError("degree multiset of t does not match the reference tree")
    return p3_count(line_graph(t)) - p3_count(line_graph(h))


def predicted_p3_defect(params: DoubleStarlikeParams, shape: CandidateShape) -> int:
    """Closed-form path-count defect for a candidate shape against H(p,n,q).

    With the reference hubs non-adjacent (n >= 3): an adjacent-hub candidate
    has defect (p-1)(q-1) + b(p-1) + a(q-1), a non-adjacent one a(q-1)+b(p-1).
    For n = 2 the reference itself has adjacent hubs and the defect of any
    candidate is a(q-1) + b(p-1).
    """
    p, n, q = params.p, params.n, params.q
    a, b = shape.a, shape.b
    base = a * (q - 1) + b * (p - 1)
    if shape.hubs_adjacent and n >= 3:
        return (p - 1) * (q - 1) + base
    return base
