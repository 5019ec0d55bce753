"""Exact integer characteristic polynomials and floating-point symmetric
eigensolving.

Cospectrality verdicts rest solely on integer arithmetic: characteristic
polynomials are computed by the division-free Berkowitz method over Python
integers.  Floating-point eigenvalues come from an in-house Householder
tridiagonalization followed by implicit-shift QL and are advisory, used for
bound and interlacing checks only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Sequence

from .graphs import Graph

MatrixKind = Literal["adjacency", "laplacian"]


@dataclass(frozen=True)
class IntMatrix:
    """Square matrix of arbitrary-precision integers, stored row-major."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ValueError("matrix must be square")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(int(x) for x in row) for row in rows))

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def is_symmetric(self) -> bool:
        e = self.entries
        n = len(e)
        return all(e[i][j] == e[j][i] for i in range(n) for j in range(i + 1, n))

    def max_abs(self) -> int:
        return max((abs(x) for row in self.entries for x in row), default=0)

    def trace(self) -> int:
        return sum(self.entries[i][i] for i in range(self.dimension))

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        a, b = self.entries, other.entries
        n = len(a)
        bt = list(zip(*b))
        return IntMatrix(
            tuple(
                tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
                for row in a
            )
        )

    def power_trace(self, k: int) -> int:
        """trace(M^k) by repeated multiplication; k = 0 gives the dimension."""
        if k < 0:
            raise ValueError("power must be >= 0")
        if k == 0:
            return self.dimension
        acc = self
        for _ in range(k - 1):
            acc = acc.matmul(self)
        return acc.trace()

    def principal_submatrix(self, keep: Sequence[int]) -> "IntMatrix":
        idx = list(keep)
        if len(set(idx)) != len(idx) or any(not 0 <= i < self.dimension for i in idx):
            raise ValueError("keep must be distinct indices in range")
        return IntMatrix(
            tuple(tuple(self.entries[i][j] for j in idx) for i in idx)
        )


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial; coefficients ascending, constant term first."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return self.coefficients and self.coefficients[-1] == 1

    def evaluate(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def evaluate_exact(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def zero_root_multiplicity(self) -> int:
        """Multiplicity of the root 0, by repeated exact division by x."""
        k = 0
        while k < len(self.coefficients) - 1 and self.coefficients[k] == 0:
            k += 1
        return k

    def to_json_list(self) -> list[str]:
        return [str(c) for c in self.coefficients]

    @classmethod
    def from_json_list(cls, items: Sequence[str]) -> "IntPolynomial":
        return cls(tuple(int(s) for s in items))


def adjacency_matrix(g: Graph) -> IntMatrix:
    n = g.order
    rows = [[0] * n for _ in range(n)]
    for u, v in g.edges():
        rows[u][v] = 1
        rows[v][u] = 1
    return IntMatrix.from_rows(rows)


def laplacian_matrix(g: Graph) -> IntMatrix:
    n = g.order
    rows = [[0] * n for _ in range(n)]
    for v in range(n):
        rows[v][v] = g.degree(v)
    for u, v in g.edges():
        rows[u][v] = -1
        rows[v][u] = -1
    return IntMatrix.from_rows(rows)


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Monic characteristic polynomial det(xI - M) by the Berkowitz method.

    Division-free, so every intermediate value is an exact integer.
    """
    a = m.entries
    n = m.dimension
    if n == 0:
        return IntPolynomial((1,))
    # poly holds coefficients in descending order of x, leading first
    poly = [1, -a[0][0]]
    for r in range(1, n):
        row = a[r][:r]
        col = [a[i][r] for i in range(r)]
        toep = [1, -a[r][r]]
        v = col
        for _ in range(r):
            toep.append(-sum(x * y for x, y in zip(row, v)))
            v = [sum(a[i][j] * v[j] for j in range(r)) for i in range(r)]
        nxt = [0] * (r + 2)
        for i in range(r + 2):
            s = 0
            lo = max(0, i - r)
            for j in range(lo, i + 1):
                s += toep[j] * poly[i - j]
            nxt[i] = s
        poly = nxt
    return IntPolynomial(tuple(reversed(poly)))


@dataclass(frozen=True)
class SpectrumSummary:
    """All real eigenvalues of a symmetric integer matrix, sorted descending."""

    eigenvalues: tuple[float, ...]
    matrix_kind: MatrixKind
    tolerance: float

    def mu(self, i: int) -> float:
        """1-based access in non-increasing order."""
        return self.eigenvalues[i - 1]


def eigenvalue_tolerance(m: IntMatrix) -> float:
    return 1e-10 * max(1, m.dimension) * max(1, m.max_abs())


def _householder_tridiagonal(a: list[list[float]]) -> tuple[list[float], list[float]]:
    """Reduce a symmetric matrix (destroyed) to tridiagonal (diag, subdiag)."""
    n = len(a)
    e = [0.0] * n
    for k in range(n - 2):
        x = [a[i][k] for i in range(k + 1, n)]
        norm = math.sqrt(sum(t * t for t in x))
        if norm == 0.0:
            e[k + 1] = 0.0
            continue
        alpha = -norm if x[0] >= 0 else norm
        v = x[:]
        v[0] -= alpha
        beta = sum(t * t for t in v)
        if beta == 0.0:
            e[k + 1] = alpha
            continue
        sub = range(k + 1, n)
        u = [2.0 / beta * sum(a[i][j] * v[j - k - 1] for j in sub) for i in sub]
        kappa = sum(v[i] * u[i] for i in range(len(v))) / beta
        p = [u[i] - kappa * v[i] for i in range(len(v))]
        for i in sub:
            vi = v[i - k - 1]
            pi = p[i - k - 1]
            for j in sub:
                a[i][j] -= vi * p[j - k - 1] + pi * v[j - k - 1]
        a[k + 1][k] = a[k][k + 1] = alpha
        for i in range(k + 2, n):
            a[i][k] = a[k][i] = 0.0
        e[k + 1] = alpha
    if n >= 2:
        e[n - 1] = a[n - 1][n - 2]
    d = [a[i][i] for i in range(n)]
    return d, e[1:] + [0.0]


def _ql_implicit(d: list[float], e: list[float]) -> list[float]:
    """Eigenvalues of a symmetric tridiagonal matrix (diag d, subdiag e) by
    the implicit-shift QL iteration."""
    n = len(d)
    d = d[:]
    e = e[:] + [0.0] * (n - len(e))
    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= 1e-15 * dd + 1e-300:
                    break
                m += 1
            if m == l:
                break
            iterations += 1
            if iterations > 50:
                raise ArithmeticError("QL iteration failed to converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return d


def eigenvalues(m: IntMatrix, kind: MatrixKind) -> SpectrumSummary:
    """All eigenvalues of a symmetric matrix, sorted non-increasing."""
    if not m.is_symmetric():
        raise ValueError("eigensolver requires a symmetric matrix")
    n = m.dimension
    if n == 0:
        return SpectrumSummary((), kind, 0.0)
    a = [[float(x) for x in row] for row in m.entries]
    d, e = _householder_tridiagonal(a)
    vals = _ql_implicit(d, e)
    vals.sort(reverse=True)
    return SpectrumSummary(tuple(vals), kind, eigenvalue_tolerance(m))


def laplacian_spectrum(g: Graph) -> SpectrumSummary:
    return eigenvalues(laplacian_matrix(g), "laplacian")


def adjacency_spectrum(g: Graph) -> SpectrumSummary:
    return eigenvalues(adjacency_matrix(g), "adjacency")


def laplacian_charpoly(g: Graph) -> IntPolynomial:
    return char_poly(laplacian_matrix(g))


def is_laplacian_cospectral(g1: Graph, g2: Graph) -> bool:
    """Exact coefficient-wise equality of the Laplacian char polys."""
    return laplacian_charpoly(g1) == laplacian_charpoly(g2)


def closed_walks(g: Graph, k: int) -> int:
    """Number of closed walks of length k, i.e. trace(A^k), exact."""
    if k < 0:
        raise ValueError("walk length must be >= 0")
    return adjacency_matrix(g).power_trace(k)


def cw4_decomposition(g: Graph) -> tuple[int, int, int]:
    """(edges, paths on 3 vertices, 4-cycles), each counted directly.

    The 3-vertex path count is over middle vertices, sum of C(d,2); 4-cycles
    come from common-neighbor pairs, each cycle counted once.
    """
    m = g.size
    p3 = sum(d * (d - 1) // 2 for d in g.degrees())
    n = g.order
    nbr = [set(row) for row in g.adj]
    twice_c4 = 0
    for u in range(n):
        for v in range(u + 1, n):
            co = len(nbr[u] & nbr[v])
            if co >= 2:
                twice_c4 += co * (co - 1) // 2
    if twice_c4 % 2:
        raise AssertionError("4-cycle double count must be even")
    return m, p3, twice_c4 // 2


def p3_count(g: Graph) -> int:
    """Number of paths on three vertices (choose a middle vertex and two
    of its neighbors)."""
    return sum(d * (d - 1) // 2 for d in g.degrees())


def spectrum_invariants(g: Graph) -> tuple[int, int, int, int, int]:
    """(vertices, edges, components, spanning trees, sum of squared degrees),
    all exact integers recovered from the Laplacian characteristic polynomial.

    Spanning trees are reported as 0 for disconnected graphs.
    """
    poly = laplacian_charpoly(g)
    c = poly.coefficients
    n = poly.degree
    edges2 = -c[n - 1] if n >= 1 else 0
    if edges2 % 2:
        raise AssertionError("Laplacian trace must be even")
    edges = edges2 // 2
    components = poly.zero_root_multiplicity()
    if components == 1:
        st = (-1) ** (n - 1) * c[1]
        if st % n:
            raise AssertionError("matrix-tree count must divide by n")
        spanning = st // n
    else:
        spanning = 0
    # power sum p2 = e1^2 - 2 e2 with e1 = -c[n-1], e2 = c[n-2]
    p2 = c[n - 1] ** 2 - 2 * (c[n - 2] if n >= 2 else 0)
    sum_sq = p2 - edges2
    return n, edges, components, spanning, sum_sq


def complement_laplacian_charpoly(g: Graph) -> IntPolynomial:
    """Exact Laplacian char poly of the complement, computed directly from
    the complement's adjacency structure."""
    return laplacian_charpoly(g.complement())
