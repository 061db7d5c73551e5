"""Induced subgraph search, isomorphism, and canonical forms.

Patterns in this toolkit have at most ~19 vertices, so plain backtracking
with degree and neighbourhood-compatibility pruning is enough; no heavy
canonical labelling engine is used.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits, gen_path


@dataclass(frozen=True)
class Embedding:
    """Injective map of pattern vertices 0..k-1 into a host graph.

    map[p] is the host vertex carrying pattern vertex p. The embedding is
    induced: pattern edges and non-edges both transfer.
    """

    map: tuple

    def verify(self, host: Graph, pattern: Graph) -> bool:
        m = self.map
        if len(m) != pattern.n or len(set(m)) != len(m):
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        for p in range(pattern.n):
            for q in range(p + 1, pattern.n):
                if pattern.has_edge(p, q) != host.has_edge(m[p], m[q]):
                    return False
        return True


def _pattern_order(pattern: Graph):
    """Vertex order for backtracking: max degree first, then greedy by
    number of already-placed neighbours (ties to smaller index)."""
    if pattern.n == 0:
        return []
    order = [max(range(pattern.n), key=lambda v: (pattern.degree(v), -v))]
    placed = {order[0]}
    while len(order) < pattern.n:
        best = None
        best_key = None
        for v in range(pattern.n):
            if v in placed:
                continue
            anchored = sum(1 for w in pattern.neighbors(v) if w in placed)
            key = (anchored, pattern.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed.add(best)
    return order


def contains_induced(host: Graph, pattern: Graph):
    """First induced embedding of pattern into host, or None.

    Deterministic for a fixed vertex order: pattern vertices are placed in
    a fixed connectivity-greedy order and host candidates are tried in
    ascending index order.
    """
    if pattern.n > host.n:
        return None
    if pattern.n == 0:
        return Embedding(())

    order = _pattern_order(pattern)
    full = (1 << host.n) - 1
    host_deg_ok = [0] * (host.n + 1)
    # candidate mask per pattern degree: host vertices of degree >= d
    for d in range(host.n + 1):
        mask = 0
        for v in range(host.n):
            if host.degree(v) >= d:
                mask |= 1 << v
        host_deg_ok[d] = mask

    assigned = {}
    used_mask = 0

    def place(i):
        nonlocal used_mask
        if i == len(order):
            return True
        p = order[i]
        cand = host_deg_ok[pattern.degree(p)] & ~used_mask
        for q, hv in assigned.items():
            if cand == 0:
                break
            if pattern.has_edge(p, q):
                cand &= host.adj_mask(hv)
            else:
                cand &= full ^ host.adj_mask(hv)
        for hv in _bits(cand):
            assigned[p] = hv
            used_mask |= 1 << hv
            if place(i + 1):
                return True
            used_mask &= ~(1 << hv)
            del assigned[p]
        return False

    if place(0):
        return Embedding(tuple(assigned[p] for p in range(pattern.n)))
    return None


_P5 = gen_path(5)


def is_p5_free(g: Graph) -> bool:
    """True iff g has no induced path on five vertices."""
    return contains_induced(g, _P5) is None


# -- canonical forms -----------------------------------------------------------


def _refine(g: Graph, colours):
    """Iterated colour refinement: colour := (colour, sorted nbr colours)."""
    n = g.n
    while True:
        sig = [
            (colours[v], tuple(sorted(colours[w] for w in g.neighbors(v))))
            for v in range(n)
        ]
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [ranks[sig[v]] for v in range(n)]
        if new == colours:
            return new
        colours = new


def _adj_bits(g: Graph, order):
    """Upper-triangle adjacency bits of g relabelled by order, as an int."""
    pos = {v: i for i, v in enumerate(order)}
    bits = 0
    idx = 0
    n = g.n
    for j in range(1, n):
        for i in range(j):
            if g.has_edge(order[i], order[j]):
                bits |= 1 << idx
            idx += 1
    return bits


def canonical_form(g: Graph):
    """Canonical invariant: equal for two graphs iff they are isomorphic.

    Individualisation-refinement search over orderings compatible with the
    refined colour partition, taking the minimum adjacency bit string over
    all leaves. Exponential in the worst case but fine at toolkit scale.
    """
    n = g.n
    if n == 0:
        return (0, 0)
    best = None

    def search(colours):
        nonlocal best
        cells = {}
        for v in range(n):
            cells.setdefault(colours[v], []).append(v)
        keys = sorted(cells)
        target = None
        for c in keys:
            if len(cells[c]) > 1:
                target = c
                break
        if target is None:
            order = [cells[c][0] for c in keys]
            bits = _adj_bits(g, order)
            if best is None or bits < best:
                best = bits
            return
        for v in cells[target]:
            nxt = list(colours)
            nxt[v] = -1  # individualise: strictly smallest colour
            search(_refine(g, nxt))

    search(_refine(g, [0] * n))
    return (n, best)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism decision via canonical form comparison."""
    if g.n != h.n or g.m != h.m or g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
