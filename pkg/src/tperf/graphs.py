"""Immutable simple graphs on vertices 0..n-1 with bitset adjacency.

All operations are pure functions; graphs are hashable values and safe to
share between threads. Vertex labels are dense 0-based integers and are
preserved by every operation unless stated otherwise.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import CycleCapExceeded, InvalidParameter

DEFAULT_CYCLE_CAP = 10**6


def _bits(mask: int):
    """Yield set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no loops, no parallel edges, adjacency symmetric."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameter(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise InvalidParameter(f"loop at vertex {u} rejected")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def from_masks(cls, masks) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(masks)
        g._adj = tuple(masks)
        return g

    # -- queries ---------------------------------------------------------

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors(self, v: int):
        return _bits(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    @property
    def m(self) -> int:
        return sum(a.bit_count() for a in self._adj) // 2

    def vertices(self):
        return range(self.n)

    def edges(self):
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u]) if u < v]

    def degree_sequence(self):
        return sorted(a.bit_count() for a in self._adj)

    def is_stable_set(self, vs) -> bool:
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all(self._adj[v] & mask == 0 for v in _bits(mask))

    def is_clique(self, vs) -> bool:
        vs = list(vs)
        mask = 0
        for v in vs:
            mask |= 1 << v
        return all((self._adj[v] & mask).bit_count() == len(vs) - 1 for v in vs)

    # -- derived graphs --------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph.from_masks(
            [(full ^ self._adj[v]) & ~(1 << v) for v in range(self.n)]
        )

    def induced(self, vs) -> "Graph":
        """Subgraph induced on vs, relabelled densely in ascending vs order."""
        vs = sorted(vs)
        pos = {v: i for i, v in enumerate(vs)}
        masks = [0] * len(vs)
        for i, v in enumerate(vs):
            for w in _bits(self._adj[v]):
                j = pos.get(w)
                if j is not None:
                    masks[i] |= 1 << j
        return Graph.from_masks(masks)

    def delete_vertex(self, v: int) -> "Graph":
        return self.induced([u for u in range(self.n) if u != v])

    # -- traversal -------------------------------------------------------

    def connected_components(self):
        """Components as sorted vertex lists, ordered by minimum vertex."""
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = 1 << s
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self._adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- value semantics --------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


# -- generators -------------------------------------------------------------


def gen_path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def gen_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def gen_complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def gen_cycle_power(n: int, k: int) -> Graph:
    """k-th power of the n-cycle: i~j iff circular distance is in 1..k."""
    if n < 3:
        raise InvalidParameter(f"cycle power needs n >= 3, got {n}")
    if k < 0:
        raise InvalidParameter(f"power must be non-negative, got {k}")
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            d = min(j - i, n - (j - i))
            if 0 < d <= k:
                edges.append((i, j))
    return Graph(n, edges)


@dataclass(frozen=True)
class AntiwebSpec:
    """Parameters (n, k) of an antiweb on vertices 0..n-1.

    Edge rule: ij is an edge iff the circular distance of i and j exceeds k,
    i.e. the antiweb is the complement of the k-th cycle power with the same
    labelling. Requires n >= 3 and n > 2k so the graph is well defined.
    """

    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise InvalidParameter(f"antiweb needs n >= 3, got n={self.n}")
        if self.k < 0:
            raise InvalidParameter(f"antiweb needs k >= 0, got k={self.k}")
        if self.n <= 2 * self.k:
            raise InvalidParameter(
                f"antiweb needs n > 2k, got n={self.n}, k={self.k}"
            )

    @property
    def is_prime(self) -> bool:
        return self.n >= 2 * self.k + 2 and math.gcd(self.k + 1, self.n) == 1

    def __str__(self):
        return f"AW({self.n},{self.k})"


def gen_antiweb(spec: AntiwebSpec) -> Graph:
    """Antiweb for spec: complement of gen_cycle_power(n, k), same labelling."""
    return gen_cycle_power(spec.n, spec.k).complement()


def antiweb(n: int, k: int) -> Graph:
    return gen_antiweb(AntiwebSpec(n, k))


def gen_wheel(n: int) -> Graph:
    """Wheel with n+1 vertices: rim cycle 0..n-1 plus hub n adjacent to all."""
    if n < 3:
        raise InvalidParameter(f"wheel needs rim length >= 3, got {n}")
    edges = [(i, (i + 1) % n) for i in range(n)] + [(i, n) for i in range(n)]
    return Graph(n + 1, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


# -- structural predicates ----------------------------------------------------


def is_bipartite(g: Graph):
    """Two-colour g by BFS; returns (side0, side1) sorted lists, or None.

    Component roots (minimum vertex of each component) land in side0.
    """
    colour = [-1] * g.n
    for s in range(g.n):
        if colour[s] != -1:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if colour[w] == -1:
                    colour[w] = colour[v] ^ 1
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return None
    return (
        [v for v in range(g.n) if colour[v] == 0],
        [v for v in range(g.n) if colour[v] == 1],
    )


def graph_minus_neighbourhood(g: Graph, v: int) -> Graph:
    """g with N(v) deleted; v itself stays and becomes isolated."""
    keep = [u for u in range(g.n) if u == v or not g.has_edge(u, v)]
    return g.induced(keep)


def is_near_bipartite(g: Graph) -> bool:
    """True iff deleting the neighbourhood of any vertex leaves a bipartite graph."""
    return all(is_bipartite(graph_minus_neighbourhood(g, v)) is not None for v in range(g.n))


def is_almost_bipartite(g: Graph) -> bool:
    """True iff the graph is bipartite or some single vertex deletion makes it so."""
    if is_bipartite(g) is not None:
        return True
    return any(is_bipartite(g.delete_vertex(v)) is not None for v in range(g.n))


def odd_girth(g: Graph):
    """Length of a shortest odd cycle, or None if bipartite.

    BFS on the bipartite double cover: the distance from (v, even) to
    (v, odd) equals the length of a shortest odd closed walk through v, and
    the minimum over all v is attained on a shortest odd cycle.
    """
    best = None
    for s in range(g.n):
        dist = {(s, 0): 0}
        queue = deque([(s, 0)])
        while queue:
            v, p = queue.popleft()
            d = dist[(v, p)]
            if best is not None and d >= best:
                continue
            for w in g.neighbors(v):
                nxt = (w, p ^ 1)
                if nxt not in dist:
                    dist[nxt] = d + 1
                    queue.append(nxt)
        d = dist.get((s, 1))
        if d is not None and (best is None or d < best):
            best = d
    return best


def enumerate_induced_odd_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP):
    """All chordless odd cycles of g, each exactly once.

    A cycle is reported as its lexicographically least rotation/reflection
    starting at its minimum vertex: (s, a, ..., b) where a < b are the two
    cycle neighbours of s. The search grows a chordless path from a through
    vertices above s that avoid N(s), and closes on a neighbour of s larger
    than a. Raises CycleCapExceeded instead of truncating silently.
    """
    out = []
    adj = g._adj

    def extend(path, path_mask, inner_mask, s, a):
        last = path[-1]
        for w in _bits(adj[last]):
            if w <= s or path_mask >> w & 1:
                continue
            if adj[w] & inner_mask:
                continue  # chord to a non-endpoint path vertex
            if adj[w] >> s & 1:
                if w > a:
                    cyc = (s, *path, w)
                    if len(cyc) % 2 == 1:
                        out.append(cyc)
                        if len(out) > cap:
                            raise CycleCapExceeded(cap)
            else:
                path.append(w)
                extend(path, path_mask | (1 << w), inner_mask | (1 << last), s, a)
                path.pop()

    for s in range(g.n):
        for a in _bits(adj[s]):
            if a > s:
                extend([a], 1 << a, 0, s, a)
    return out
