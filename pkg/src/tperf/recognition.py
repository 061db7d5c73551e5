"""Certificate-producing recognizers.

Covers the antiweb containment arithmetic, the near-bipartite and P5-free
t-perfection recognizers (finite forbidden induced subgraph lists), odd
wheel and even Moebius ladder searches, harmonious cutset machinery,
clique separators, and odd pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import InvalidParameter, NotNearBipartite, NotP5Free, ResourceExhausted
from .graphs import (
    Graph,
    AntiwebSpec,
    antiweb,
    enumerate_induced_odd_cycles,
    gen_complete,
    is_bipartite,
    is_near_bipartite,
)
from .isomorphism import Embedding, contains_induced, is_p5_free
from .named import gen_named

DEFAULT_PATH_CAP = 200_000


@dataclass(frozen=True)
class ForbiddenWitness:
    """A named forbidden pattern together with its induced embedding."""

    which: str
    embedding: Embedding
    pattern: Graph

    def verify(self, host: Graph) -> bool:
        return self.embedding.verify(host, self.pattern)


def trotter_contains(n: int, k: int, n2: int, k2: int) -> bool:
    """Antiweb containment arithmetic: AW(n2,k2) induced in AW(n,k) iff
    n(k2+1) >= n2(k+1) and n*k2 <= n2*k. Parameters are validated; the
    arithmetic is meaningful for genuine antiwebs (n >= 2k+2 both sides)."""
    AntiwebSpec(n, k)
    AntiwebSpec(n2, k2)
    return n * (k2 + 1) >= n2 * (k + 1) and n * k2 <= n2 * k


def find_odd_wheel(g: Graph):
    """First induced odd wheel: a hub plus an induced odd cycle inside the
    hub's neighbourhood. Hubs are scanned in ascending order."""
    for hub in range(g.n):
        nbrs = sorted(g.neighbors(hub))
        if len(nbrs) < 3:
            continue
        sub = g.induced(nbrs)
        cycles = enumerate_induced_odd_cycles(sub)
        if cycles:
            cyc = cycles[0]
            rim = [nbrs[i] for i in cyc]
            emb = Embedding(tuple(rim) + (hub,))
            from .graphs import gen_wheel

            return ForbiddenWitness(
                f"OddWheel({len(rim)})", emb, gen_wheel(len(rim))
            )
    return None


def find_even_moebius(g: Graph):
    """First induced even Moebius ladder AW(4t+4, 2t), smallest t first."""
    t = 0
    while 4 * t + 4 <= g.n:
        pattern = antiweb(4 * t + 4, 2 * t)
        emb = contains_induced(g, pattern)
        if emb is not None:
            return ForbiddenWitness(f"AW({4 * t + 4},{2 * t})", emb, pattern)
        t += 1
    return None


NEAR_BIPARTITE_FORBIDDEN_ANTIWEBS = ((7, 1), (10, 2), (13, 3), (13, 4), (19, 7))


def is_t_perfect_near_bipartite(g: Graph):
    """Near-bipartite t-perfection by forbidden induced subgraphs.

    t-perfect iff no induced odd wheel, even Moebius ladder, or any of
    AW(7,1), AW(10,2), AW(13,3), AW(13,4), AW(19,7). Returns
    (verdict, witness or None); raises NotNearBipartite if the
    precondition fails.
    """
    if not is_near_bipartite(g):
        raise NotNearBipartite(f"{g!r} is not near-bipartite")
    w = find_odd_wheel(g)
    if w is not None:
        return False, w
    w = find_even_moebius(g)
    if w is not None:
        return False, w
    for n2, k2 in NEAR_BIPARTITE_FORBIDDEN_ANTIWEBS:
        if n2 > g.n:
            continue
        pattern = antiweb(n2, k2)
        emb = contains_induced(g, pattern)
        if emb is not None:
            return False, ForbiddenWitness(f"AW({n2},{k2})", emb, pattern)
    return True, None


# the eight t-imperfect forbidden patterns for P5-free inputs, searched
# smallest first
P5_FREE_FORBIDDEN = (
    ("K4", "K4"),
    ("W5", "W5"),
    ("K4figA", "K4figA"),
    ("K4figB", "K4figB"),
    ("C7sq", "C7sq"),
    ("K4figC", "K4figC"),
    ("AW(10,2)", "AW10_2"),
    ("AW(13,3)", "AW13_3"),
)


def is_t_perfect_p5_free(g: Graph):
    """P5-free t-perfection by the eight forbidden induced subgraphs.

    Returns (verdict, witness or None); raises NotP5Free if g contains an
    induced five-vertex path.
    """
    if not is_p5_free(g):
        raise NotP5Free(f"{g!r} contains an induced P5")
    for which, named_id in P5_FREE_FORBIDDEN:
        pattern = gen_named(named_id)
        if pattern.n > g.n:
            continue
        emb = contains_induced(g, pattern)
        if emb is not None:
            return False, ForbiddenWitness(which, emb, pattern)
    return True, None


# -- induced paths, odd pairs ----------------------------------------------------


def induced_paths_between(g: Graph, u: int, v: int, cap: int = DEFAULT_PATH_CAP):
    """All induced u-v paths as vertex tuples (u first). The trivial path
    (u,) is included when u == v. Raises ResourceExhausted past cap."""
    if u == v:
        return [(u,)]
    out = []

    # chordlessness is enforced against inner_mask (path minus active
    # endpoint), which also covers the final hop onto v
    def extend(path, path_mask, inner_mask):
        last = path[-1]
        for w in g.neighbors(last):
            if path_mask >> w & 1:
                continue
            if g.adj_mask(w) & inner_mask:
                continue
            if w == v:
                out.append((*path, w))
                if len(out) > cap:
                    raise ResourceExhausted(
                        f"more than {cap} induced paths between {u} and {v}"
                    )
            else:
                path.append(w)
                extend(path, path_mask | (1 << w), inner_mask | (1 << last))
                path.pop()

    extend([u], 1 << u, 0)
    return out


def verify_odd_pair(g: Graph, u: int, v: int, cap: int = DEFAULT_PATH_CAP) -> bool:
    """True iff every induced u-v path has odd edge count (vacuously true
    when no path exists). Path length counts edges."""
    if u == v:
        return False
    return all(len(p) % 2 == 0 for p in induced_paths_between(g, u, v, cap))


# -- harmonious tuples and cutsets -------------------------------------------------


@dataclass(frozen=True)
class HarmoniousTuple:
    """Ordered disjoint parts, optionally with the proper separation whose
    middle set they partition. separation is a pair of vertex tuples
    (V(G1), V(G2)) or None when only the parity structure is of interest."""

    parts: tuple
    separation: tuple | None = None

    @property
    def cutset(self):
        return tuple(sorted(v for part in self.parts for v in part))


@dataclass(frozen=True)
class HarmonyViolation:
    kind: str  # "structure" or "parity"
    detail: str
    path: tuple | None = None


def verify_harmonious_tuple(g: Graph, t: HarmoniousTuple, cap: int = DEFAULT_PATH_CAP):
    """Check a tuple against the parity rule: induced paths between parts
    have even length iff the parts coincide (the trivial one-vertex path
    counts as even). Returns (True, None) or (False, HarmonyViolation);
    structural problems are reported distinctly from parity failures."""
    parts = [tuple(sorted(p)) for p in t.parts]
    seen = set()
    for p in parts:
        for x in p:
            if not 0 <= x < g.n:
                return False, HarmonyViolation("structure", f"vertex {x} out of range")
            if x in seen:
                return False, HarmonyViolation("structure", f"vertex {x} in two parts")
            seen.add(x)
    if t.separation is not None:
        s1, s2 = (set(t.separation[0]), set(t.separation[1]))
        if s1 | s2 != set(range(g.n)):
            return False, HarmonyViolation("structure", "separation does not cover V")
        if not (s1 - s2) or not (s2 - s1):
            return False, HarmonyViolation("structure", "separation is not proper")
        for a in s1 - s2:
            for b in s2 - s1:
                if g.has_edge(a, b):
                    return False, HarmonyViolation(
                        "structure", f"edge {a}-{b} crosses the separation"
                    )
        if seen != (s1 & s2):
            return False, HarmonyViolation(
                "structure", "parts do not partition the separator"
            )
    if len(parts) >= 3:
        for i in range(len(parts)):
            for j in range(i + 1, len(parts)):
                for a in parts[i]:
                    for b in parts[j]:
                        if not g.has_edge(a, b):
                            return False, HarmonyViolation(
                                "structure",
                                f"parts {i} and {j} not complete: {a}-{b} missing",
                            )
    for i in range(len(parts)):
        for j in range(i, len(parts)):
            for a in parts[i]:
                for b in parts[j]:
                    if a >= b and i == j:
                        continue
                    for path in induced_paths_between(g, a, b, cap):
                        length = len(path) - 1
                        if (length % 2 == 0) != (i == j):
                            want = "even" if i == j else "odd"
                            return False, HarmonyViolation(
                                "parity",
                                f"induced path {path} has length {length}, "
                                f"needs {want} (parts {i},{j})",
                                path=path,
                            )
    return True, None


def _proper_separation_for(g: Graph, cutset):
    """Split G - cutset components into two sides; None if connected."""
    rest = [v for v in range(g.n) if v not in cutset]
    sub = g.induced(rest)
    comps = sub.connected_components()
    if len(comps) < 2:
        return None
    side1 = set(cutset) | {rest[i] for i in comps[0]}
    side2 = set(cutset) | {rest[i] for c in comps[1:] for i in c}
    return tuple(sorted(side1)), tuple(sorted(side2))


def find_harmonious_cutset(g: Graph, max_n: int = 12, cap: int = DEFAULT_PATH_CAP):
    """Exhaustive search for a harmonious cutset, smallest cutset first.

    For each separator X (by size, then lexicographic), pairs with an even
    induced path are forced into one part; pairs with an odd path must be
    separated. Partitions of the forced groups are tried with one part,
    two parts, and as a fallback all partitions into three pairwise
    complete parts. Returns a verified HarmoniousTuple or None. For a
    disconnected graph the empty cutset qualifies.
    """
    if g.n > max_n:
        raise InvalidParameter(
            f"harmonious cutset search guarded at n <= {max_n}, got {g.n}"
        )
    for size in range(0, g.n - 1):
        for cutset in combinations(range(g.n), size):
            sep = _proper_separation_for(g, cutset)
            if sep is None:
                continue
            tup = _harmonious_partition(g, cutset, sep, cap)
            if tup is not None:
                ok, _ = verify_harmonious_tuple(g, tup, cap)
                if ok:
                    return tup
    return None


def _harmonious_partition(g: Graph, cutset, sep, cap):
    k = len(cutset)
    if k == 0:
        return HarmoniousTuple((), sep)
    even = [[False] * k for _ in range(k)]
    odd = [[False] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            try:
                paths = induced_paths_between(g, cutset[i], cutset[j], cap)
            except ResourceExhausted:
                return None
            for p in paths:
                if (len(p) - 1) % 2 == 0:
                    even[i][j] = even[j][i] = True
                else:
                    odd[i][j] = odd[j][i] = True
            if even[i][j] and odd[i][j]:
                return None

    # union-find over forced-same (even path) pairs
    parent = list(range(k))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(k):
        for j in range(i + 1, k):
            if even[i][j]:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(k):
        groups.setdefault(find(i), []).append(i)
    glist = sorted(groups.values())
    gidx = {i: gi for gi, grp in enumerate(glist) for i in grp}
    # conflict between groups joined by an odd-path pair; odd pair inside
    # one group kills the cutset
    nglist = len(glist)
    conflict = [[False] * nglist for _ in range(nglist)]
    for i in range(k):
        for j in range(i + 1, k):
            if odd[i][j]:
                a, b = gidx[i], gidx[j]
                if a == b:
                    return None
                conflict[a][b] = conflict[b][a] = True

    def build(assignment, nparts):
        parts = [[] for _ in range(nparts)]
        for gi, part in enumerate(assignment):
            parts[part].extend(cutset[i] for i in glist[gi])
        return HarmoniousTuple(tuple(tuple(sorted(p)) for p in parts), sep)

    if not any(conflict[a][b] for a in range(nglist) for b in range(nglist)):
        return build([0] * nglist, 1)
    cg = Graph(nglist, [(a, b) for a in range(nglist) for b in range(a + 1, nglist) if conflict[a][b]])
    sides = is_bipartite(cg)
    if sides is not None and sides[1]:
        assignment = [0 if gi in sides[0] else 1 for gi in range(nglist)]
        return build(assignment, 2)
    # three-part fallback: all assignments of groups to 3 parts
    if nglist <= 1:
        return None
    for assignment in _assignments(nglist, 3):
        ok = True
        for a in range(nglist):
            for b in range(a + 1, nglist):
                if conflict[a][b] and assignment[a] == assignment[b]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        tup = build(assignment, 3)
        if any(not p for p in tup.parts):
            continue
        good, _ = verify_harmonious_tuple(g, tup, cap)
        if good:
            return tup
    return None


def _assignments(n_items, n_parts):
    """All surjective-ish part assignments with canonical first-use order."""
    def rec(i, used, cur):
        if i == n_items:
            yield tuple(cur)
            return
        for p in range(min(used + 1, n_parts)):
            cur.append(p)
            yield from rec(i + 1, max(used, p + 1), cur)
            cur.pop()

    yield from rec(0, 0, [])


def find_clique_separator(g: Graph):
    """Smallest clique K (by size, then lexicographic) with G - K
    disconnected, returned with a proper separation; None otherwise."""
    for size in range(0, g.n - 1):
        for vs in combinations(range(g.n), size):
            if vs and not g.is_clique(vs):
                continue
            sep = _proper_separation_for(g, vs)
            if sep is not None:
                return tuple(vs), sep
    return None
