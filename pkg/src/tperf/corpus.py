"""Isomorph-free small graph corpora.

Graphs are generated level by level: every n-vertex graph arises from an
(n-1)-vertex graph by attaching vertex n-1 with some neighbour mask, and
duplicates are removed through canonical forms. For an induced-hereditary
property the filter may prune during generation (deleting the last vertex
of a graph with the property again has the property), which keeps
restricted corpora like the near-bipartite one feasible at larger n.
The unrestricted class counts for n = 1..7 are pinned as a self-test.
"""

from __future__ import annotations

from .graphs import Graph
from .isomorphism import canonical_form

# numbers of simple graphs up to isomorphism on 1..7 vertices
KNOWN_COUNTS = (1, 2, 4, 11, 34, 156, 1044)


def _extensions(g: Graph):
    n = g.n
    for mask in range(1 << n):
        yield Graph.from_masks(
            tuple(g.adj_mask(v) | ((mask >> v & 1) << n) for v in range(n))
            + (mask,)
        )


def generate_level(previous, hereditary_filter=None):
    """All isomorphism classes one vertex larger than the given classes."""
    out = {}
    for g in previous:
        for h in _extensions(g):
            if hereditary_filter is not None and not hereditary_filter(h):
                continue
            key = canonical_form(h)
            if key not in out:
                out[key] = h
    return [out[k] for k in sorted(out)]


def graphs_upto(max_n: int, hereditary_filter=None):
    """Yield (n, graphs) for n = 1..max_n, each level sorted canonically.

    hereditary_filter, when given, must be an induced-hereditary predicate;
    it is applied during generation, so every emitted graph satisfies it
    and the enumeration within the property class is still exhaustive.
    """
    level = [Graph(1)]
    if hereditary_filter is not None:
        level = [g for g in level if hereditary_filter(g)]
    n = 1
    while n <= max_n:
        yield n, level
        n += 1
        if n <= max_n:
            level = generate_level(level, hereditary_filter)


def all_graphs(max_n: int, hereditary_filter=None):
    """Flat list of all classes with 1..max_n vertices."""
    out = []
    for _n, level in graphs_upto(max_n, hereditary_filter):
        out.extend(level)
    return out


def verify_generator_counts(max_n: int = 7) -> bool:
    """Self-test: class counts match the known totals of simple graphs."""
    for n, level in graphs_upto(max_n):
        if len(level) != KNOWN_COUNTS[n - 1]:
            return False
    return True
