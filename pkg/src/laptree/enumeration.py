"""Free tree enumeration via canonical level sequences.

Rooted trees on n vertices are generated as canonical level sequences in
lexicographically decreasing order by the classic constant-amortized-time
successor rule: start from the path [0,1,...,n-1], repeatedly chop the last
vertex deeper than level 1 and re-copy the block of its parent.  A rooted
sequence is kept as a free tree exactly when its root is a center of the
underlying tree and the sequence is the maximal center-rooted one, so each
isomorphism class surfaces exactly once, in a deterministic order.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from .graphs import CandidateShape, Graph, build_candidate, canonical_form, \
    canonical_level_sequence, tree_centers

DEFAULT_ORDER_CAP = 18


def first_level_sequence(order: int) -> tuple[int, ...]:
    return tuple(range(order))


def next_level_sequence(seq: Sequence[int]) -> tuple[int, ...] | None:
    """Successor of a canonical rooted level sequence, or None after the star."""
    n = len(seq)
    p = -1
    for i in range(n - 1, 0, -1):
        if seq[i] > 1:
            p = i
            break
    if p < 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq[:p])
    span = p - q
    for i in range(p, n):
        out.append(out[i - span])
    return tuple(out)


def level_sequence_to_graph(seq: Sequence[int]) -> Graph:
    """Tree from a preorder depth sequence (parent = nearest shallower left)."""
    n = len(seq)
    edges = []
    stack: list[int] = []
    for v, d in enumerate(seq):
        while len(stack) > d:
            stack.pop()
        if stack:
            edges.append((stack[-1], v))
        stack.append(v)
    return Graph.from_edges(n, edges)


def _is_free_canonical(seq: tuple[int, ...], g: Graph) -> bool:
    centers = tree_centers(g)
    if 0 not in centers:
        return False
    return seq == max(canonical_level_sequence(g, c) for c in centers)


def enumerate_free_trees(
    order: int,
    cap: int = DEFAULT_ORDER_CAP,
    start_after: Sequence[int] | None = None,
) -> Iterator[Graph]:
    """One representative per isomorphism class of trees on `order` vertices.

    `start_after` resumes the stream just past a previously seen level
    sequence (used by checkpointed searches).
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order > cap:
        raise ValueError(f"order {order} above enumeration cap {cap}")
    if order == 1:
        if start_after is None:
            yield Graph([[]])
        return
    seq: tuple[int, ...] | None
    if start_after is None:
        seq = first_level_sequence(order)
    else:
        seq = next_level_sequence(tuple(start_after))
    while seq is not None:
        g = level_sequence_to_graph(seq)
        if _is_free_canonical(seq, g):
            yield g
        seq = next_level_sequence(seq)


def enumerate_free_trees_with_sequences(
    order: int,
    cap: int = DEFAULT_ORDER_CAP,
    start_after: Sequence[int] | None = None,
) -> Iterator[tuple[tuple[int, ...], Graph]]:
    """Like enumerate_free_trees but also yields the level sequence of each
    tree, which doubles as a resume token."""
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    if order > cap:
        raise ValueError(f"order {order} above enumeration cap {cap}")
    if order == 1:
        if start_after is None:
            yield (0,), Graph([[]])
        return
    seq: tuple[int, ...] | None
    if start_after is None:
        seq = first_level_sequence(order)
    else:
        seq = next_level_sequence(tuple(start_after))
    while seq is not None:
        g = level_sequence_to_graph(seq)
        if _is_free_canonical(seq, g):
            yield seq, g
        seq = next_level_sequence(seq)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of `total` into `parts` positive parts."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def double_starlike_multiset(degrees: Sequence[int]) -> tuple[int, int, int]:
    """Split a degree multiset with exactly two entries > 2 into (p, n, q).

    Raises ValueError when the multiset cannot belong to a tree or has the
    wrong number of hub entries.
    """
    d = sorted(degrees, reverse=True)
    if len(d) < 2 or sum(d) != 2 * (len(d) - 1):
        raise ValueError("degree multiset is not graphical for a tree")
    hubs = [x for x in d if x > 2]
    if len(hubs) != 2:
        raise ValueError(f"expected exactly two entries > 2, got {len(hubs)}")
    p, q = hubs[0] - 1, hubs[1] - 1
    twos = sum(1 for x in d if x == 2)
    ones = sum(1 for x in d if x == 1)
    n = twos + 2
    if ones != p + q or len(d) != n + p + q:
        raise ValueError("degree multiset does not match {p+1,q+1,2^*,1^*}")
    return p, n, q


def candidate_shapes(p: int, n: int, q: int) -> Iterator[CandidateShape]:
    """All shapes whose tree has degree multiset {p+1, q+1, 2^(n-2), 1^(p+q)}.

    Iterates hub adjacency, branch counts a and b, then the splits of the
    degree-2 budget; branch length multisets are non-increasing so shapes are
    not repeated, though mirror-symmetric trees can still collide and are
    deduplicated by the caller.
    """
    budget = n - 2
    for hubs_adjacent in (True, False):
        hub_lens = (0,) if hubs_adjacent else tuple(range(3, n + 1))
        for hub_len in hub_lens:
            rem = budget - (0 if hubs_adjacent else hub_len - 2)
            if rem < 0:
                continue
            for a in range(q + 1):
                for b in range(p + 1):
                    if a + b == 0:
                        if rem == 0:
                            yield CandidateShape(hubs_adjacent, 0, 0, hub_len)
                        continue
                    for comp in _compositions(rem, a + b):
                        bq = comp[:a]
                        bp = comp[a:]
                        if any(bq[i] < bq[i + 1] for i in range(a - 1)):
                            continue
                        if any(bp[i] < bp[i + 1] for i in range(b - 1)):
                            continue
                        yield CandidateShape(hubs_adjacent, a, b, hub_len, bq, bp)


def enumerate_trees_with_degree_multiset(degrees: Sequence[int]) -> Iterator[Graph]:
    """One tree per isomorphism class with the given degree multiset, which
    must have exactly two entries above 2."""
    p, n, q = double_starlike_multiset(degrees)
    target = tuple(sorted(degrees, reverse=True))
    seen: set[bytes] = set()
    for shape in candidate_shapes(p, n, q):
        g = build_candidate((p, q), shape)
        if g.degree_multiset() != target:
            continue
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g
