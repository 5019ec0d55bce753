"""Undirected simple graphs, double starlike tree constructors, line graphs,
tree canonical forms, and the graph6 interchange format.

Vertices are 0-based integers; the internal form keeps every neighbor list
sorted strictly ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence


class Graph:
    """Immutable undirected simple graph stored as sorted adjacency lists."""

    __slots__ = ("adj",)

    def __init__(self, adj: Sequence[Sequence[int]]):
        n = len(adj)
        frozen = []
        for v, nbrs in enumerate(adj):
            row = tuple(nbrs)
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"neighbor list of {v} not strictly ascending")
            for u in row:
                if u == v:
                    raise ValueError(f"self-loop at vertex {v}")
                if not 0 <= u < n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
            frozen.append(row)
        for v, row in enumerate(frozen):
            for u in row:
                if v not in frozen[u]:
                    raise ValueError(f"edge {v}-{u} not symmetric")
        object.__setattr__(self, "adj", tuple(frozen))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls([sorted(s) for s in adj])

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def order(self) -> int:
        return len(self.adj)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.adj)

    def degree_multiset(self) -> tuple[int, ...]:
        """Degrees sorted non-increasing."""
        return tuple(sorted(self.degrees(), reverse=True))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        for u, row in enumerate(self.adj):
            for v in row:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_connected(self) -> bool:
        n = self.order
        if n == 0:
            return True
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if not seen[u]:
                    seen[u] = True
                    count += 1
                    stack.append(u)
        return count == n

    def is_tree(self) -> bool:
        return self.size == self.order - 1 and self.is_connected()

    def connected_components(self) -> int:
        n = self.order
        seen = [False] * n
        comps = 0
        for s in range(n):
            if seen[s]:
                continue
            comps += 1
            seen[s] = True
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        stack.append(u)
        return comps

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        n = self.order
        adj: list[list[int]] = [[] for _ in range(n)]
        for v, row in enumerate(self.adj):
            adj[perm[v]] = sorted(perm[u] for u in row)
        return Graph(adj)

    def complement(self) -> "Graph":
        n = self.order
        return Graph(
            [
                [u for u in range(n) if u != v and u not in set(row)]
                for v, row in enumerate(self.adj)
            ]
        )

    def delete_vertex(self, v: int) -> "Graph":
        n = self.order
        if not 0 <= v < n:
            raise ValueError(f"vertex {v} out of range")
        keep = [u for u in range(n) if u != v]
        pos = {u: i for i, u in enumerate(keep)}
        return Graph([[pos[w] for w in self.adj[u] if w != v] for u in keep])

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"no edge {u}-{v}")
        return Graph(
            [
                [w for w in row if not ((x == u and w == v) or (x == v and w == u))]
                for x, row in enumerate(self.adj)
            ]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


@dataclass(frozen=True)
class DoubleStarlikeParams:
    """Parameters of the tree with p pendants on one end of an n-vertex path
    and q pendants on the other."""

    p: int
    n: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.n < 1 or self.q < 1:
            raise ValueError(f"p, n, q must all be >= 1, got {self}")

    @property
    def order(self) -> int:
        return self.n + self.p + self.q


def build_double_starlike(params: DoubleStarlikeParams) -> Graph:
    """Path on vertices 0..n-1, p leaves attached to vertex 0 and q leaves
    attached to vertex n-1.

    For n >= 2 the hubs are the path endpoints with degrees p+1 and q+1;
    for n = 1 the single path vertex carries all p+q leaves (a star).
    """
    p, n, q = params.p, params.n, params.q
    edges = [(i, i + 1) for i in range(n - 1)]
    edges += [(0, n + i) for i in range(p)]
    edges += [(n - 1, n + p + i) for i in range(q)]
    return Graph.from_edges(n + p + q, edges)


@dataclass(frozen=True)
class CandidateShape:
    """Shape of a tree with exactly two hubs of degree > 2.

    `hub_path_len` counts the vertices on the hub-to-hub path including both
    hubs (0 when the hubs are adjacent).  Branch lengths count the degree-2
    vertices on each pendant path hanging off a hub; the closing leaf is not
    counted, so every listed branch has length >= 1 and a plain pendant leaf
    is never listed (it is absorbed into the q-a resp. p-b leaves).
    """

    hubs_adjacent: bool
    a: int
    b: int
    hub_path_len: int = 0
    branch_lengths_q: tuple[int, ...] = field(default_factory=tuple)
    branch_lengths_p: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(
            self, "branch_lengths_q", tuple(sorted(self.branch_lengths_q, reverse=True))
        )
        object.__setattr__(
            self, "branch_lengths_p", tuple(sorted(self.branch_lengths_p, reverse=True))
        )
        if self.a != len(self.branch_lengths_q) or self.b != len(self.branch_lengths_p):
            raise ValueError("a, b must match the branch length multisets")
        if any(l < 1 for l in self.branch_lengths_q + self.branch_lengths_p):
            raise ValueError("listed branches need at least one degree-2 vertex")
        if self.hubs_adjacent:
            if self.hub_path_len != 0:
                raise ValueError("adjacent hubs have hub_path_len 0")
        elif self.hub_path_len < 3:
            raise ValueError("non-adjacent hubs need hub_path_len >= 3")

    @property
    def implied_n(self) -> int:
        """Path length n of the matching degree multiset {p+1,q+1,2^(n-2),1^(p+q)}."""
        total = sum(self.branch_lengths_q) + sum(self.branch_lengths_p)
        if self.hubs_adjacent:
            return total + 2
        return self.hub_path_len + total


def build_candidate(pq: tuple[int, int], shape: CandidateShape) -> Graph:
    """Tree with hubs of degree p+1 and q+1 and the pendant-path structure
    given by `shape`.  Vertex 0 is the p-hub, vertex 1 the q-hub."""
    p, q = pq
    if shape.a > q or shape.b > p:
        raise ValueError(f"a <= q and b <= p required, got a={shape.a}, b={shape.b}")
    n = shape.implied_n
    deg2_budget = n - 2
    used = (0 if shape.hubs_adjacent else shape.hub_path_len - 2) + sum(
        shape.branch_lengths_q
    ) + sum(shape.branch_lengths_p)
    if used != deg2_budget:
        raise ValueError("branch and hub-path lengths are inconsistent")

    edges: list[tuple[int, int]] = []
    nxt = 2  # vertices 0, 1 are the hubs

    def fresh() -> int:
        nonlocal nxt
        nxt += 1
        return nxt - 1

    if shape.hubs_adjacent:
        edges.append((0, 1))
    else:
        prev = 0
        for _ in range(shape.hub_path_len - 2):
            v = fresh()
            edges.append((prev, v))
            prev = v
        edges.append((prev, 1))

    def attach_branch(hub: int, internal: int) -> None:
        prev = hub
        for _ in range(internal):
            v = fresh()
            edges.append((prev, v))
            prev = v
        leaf = fresh()
        edges.append((prev, leaf))

    for l in shape.branch_lengths_p:
        attach_branch(0, l)
    for l in shape.branch_lengths_q:
        attach_branch(1, l)
    for _ in range(p - shape.b):
        edges.append((0, fresh()))
    for _ in range(q - shape.a):
        edges.append((1, fresh()))
    return Graph.from_edges(nxt, edges)


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of g; two edge-vertices are adjacent iff the edges
    share an endpoint.  Edge indexing is lexicographic by endpoint pair."""
    edge_list = list(g.edges())
    index = {e: i for i, e in enumerate(edge_list)}
    m = len(edge_list)
    adj: list[set[int]] = [set() for _ in range(m)]
    for v in range(g.order):
        incident = [
            index[(min(v, u), max(v, u))] for u in g.adj[v]
        ]
        for i in range(len(incident)):
            for j in range(i + 1, len(incident)):
                adj[incident[i]].add(incident[j])
                adj[incident[j]].add(incident[i])
    return Graph([sorted(s) for s in adj])


def tree_centers(g: Graph) -> list[int]:
    """The 1 or 2 central vertices of a tree (peel leaves until <= 2 remain)."""
    n = g.order
    if n <= 2:
        return list(range(n))
    deg = [len(row) for row in g.adj]
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            deg[v] = 0
            for u in g.adj[v]:
                if deg[u] > 1:
                    deg[u] -= 1
                    if deg[u] == 1:
                        nxt.append(u)
        layer = nxt
    return sorted(layer)


def _ahu_encoding(g: Graph, root: int) -> bytes:
    """Nested-parenthesis encoding of the tree rooted at `root`; children are
    ordered by their own encodings so the result is isomorphism-invariant."""
    n = g.order
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for u in g.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
    enc: list[bytes] = [b""] * n
    for v in reversed(order):
        kids = sorted(enc[u] for u in g.adj[v] if parent[u] == v and u != root)
        enc[v] = b"(" + b"".join(kids) + b")"
    return enc[root]


def canonical_form(g: Graph) -> bytes:
    """Canonical byte-string for a tree: equal iff the trees are isomorphic.

    Roots at the tree center; for bicentral trees the lexicographically
    smaller of the two rooted encodings is taken.
    """
    if not g.is_tree():
        raise ValueError("canonical_form requires a tree")
    return min(_ahu_encoding(g, c) for c in tree_centers(g))


def canonical_level_sequence(g: Graph, root: int) -> tuple[int, ...]:
    """Lexicographically maximal preorder depth sequence of the tree rooted
    at `root` (subtrees listed in non-increasing sequence order)."""
    n = g.order
    parent = [-1] * n
    order = [root]
    parent[root] = root
    for v in order:
        for u in g.adj[v]:
            if parent[u] == -1:
                parent[u] = v
                order.append(u)
    seq: list[tuple[int, ...]] = [()] * n
    depth = [0] * n
    for v in order:
        if v != root:
            depth[v] = depth[parent[v]] + 1
    for v in reversed(order):
        kids = sorted(
            (seq[u] for u in g.adj[v] if parent[u] == v and u != root), reverse=True
        )
        flat = [depth[v]]
        for k in kids:
            flat.extend(k)
        seq[v] = tuple(flat)
    return seq[root]


# --- graph6 ----------------------------------------------------------------

_G6_MAX_ORDER = 62


def graph6_encode(g: Graph) -> str:
    """Encode a simple graph in graph6 (short form, order <= 62)."""
    n = g.order
    if n > _G6_MAX_ORDER:
        raise ValueError(f"graph6 short form limited to order {_G6_MAX_ORDER}")
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        byte = 0
        for b in bits[k : k + 6]:
            byte = (byte << 1) | b
        chars.append(chr(63 + byte))
    return "".join(chars)


def graph6_decode(text: str, max_order: int | None = None) -> Graph:
    """Decode a graph6 string; rejects malformed input and nonzero padding."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise ValueError("empty graph6 string")
    head = ord(s[0]) - 63
    if head < 0 or head > _G6_MAX_ORDER:
        raise ValueError(f"unsupported graph6 header {s[0]!r}")
    n = head
    if max_order is not None and n > max_order:
        raise ValueError(f"graph6 order {n} exceeds limit {max_order}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) != nbytes:
        raise ValueError(f"graph6 body length {len(body)}, expected {nbytes}")
    bits: list[int] = []
    for ch in body:
        val = ord(ch) - 63
        if val < 0 or val > 63:
            raise ValueError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise ValueError("nonzero padding bits in graph6 string")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)
