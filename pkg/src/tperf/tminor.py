"""Vertex deletion, t-contraction, and bounded search through t-minor space.

A t-contraction at v is allowed when N(v) is stable; v and N(v) merge into
one new vertex. Relabelling is dense and order-preserving with the merged
vertex last, so certificates replay reproducibly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import InvalidParameter, NeighbourhoodNotStable
from .graphs import Graph, _bits
from .isomorphism import are_isomorphic, canonical_form

DELETE = "delete"
TCONTRACT = "tcontract"


@dataclass(frozen=True)
class TMinorStep:
    """One vertex deletion or t-contraction applied to a concrete graph.

    op is "delete" or "tcontract"; v is the vertex in the labelling of the
    graph the step was applied to. relabelling maps surviving old labels to
    new labels; deleted or merged-away vertices have no entry. For a
    contraction, merged is the label of the new vertex (always last).
    """

    op: str
    v: int
    result: Graph
    relabelling: dict
    merged: int | None = None

    def to_json_obj(self):
        obj = {
            "op": self.op,
            "v": self.v,
            "relabelling": {str(k): val for k, val in sorted(self.relabelling.items())},
        }
        if self.merged is not None:
            obj["merged"] = self.merged
        return obj


def steps_to_json_obj(steps) -> list:
    return [s.to_json_obj() for s in steps]


def delete_step(g: Graph, v: int) -> TMinorStep:
    survivors = [u for u in range(g.n) if u != v]
    relabelling = {old: i for i, old in enumerate(survivors)}
    return TMinorStep(DELETE, v, g.induced(survivors), relabelling)


def t_contract(g: Graph, v: int) -> Graph:
    return t_contract_step(g, v).result


def t_contract_step(g: Graph, v: int) -> TMinorStep:
    """Contract all edges at v; requires N(v) stable.

    The merged vertex is adjacent to every former neighbour of N(v) outside
    {v} and N(v). Survivors keep their relative order, the merged vertex
    gets the last label, so the result has n - deg(v) vertices.
    """
    nv = g.adj_mask(v)
    for u in _bits(nv):
        if g.adj_mask(u) & nv:
            raise NeighbourhoodNotStable(v)
    gone = nv | (1 << v)
    survivors = [u for u in range(g.n) if not gone >> u & 1]
    relabelling = {old: i for i, old in enumerate(survivors)}
    tilde = len(survivors)
    edges = [
        (relabelling[a], relabelling[b])
        for a, b in g.edges()
        if not gone >> a & 1 and not gone >> b & 1
    ]
    second = 0
    for u in _bits(nv):
        second |= g.adj_mask(u)
    for w in _bits(second & ~gone):
        edges.append((relabelling[w], tilde))
    return TMinorStep(
        TCONTRACT, v, Graph(tilde + 1, edges), relabelling, merged=tilde
    )


def contraction_candidates(g: Graph):
    """Vertices whose neighbourhood is stable, in ascending order."""
    out = []
    for v in range(g.n):
        nv = g.adj_mask(v)
        if all(g.adj_mask(u) & nv == 0 for u in _bits(nv)):
            out.append(v)
    return out


def one_step_t_minors(g: Graph):
    """All single-step t-minors, deduplicated up to isomorphism.

    Candidate steps are ordered deletions first (by vertex), then valid
    contractions (by vertex); the first step of each isomorphism class is
    kept, so witnesses carry the lexicographically least representative.
    """
    steps = [delete_step(g, v) for v in range(g.n)]
    steps.extend(t_contract_step(g, v) for v in contraction_candidates(g))
    kept = []
    seen = set()
    for step in steps:
        key = canonical_form(step.result)
        if key not in seen:
            seen.add(key)
            kept.append(step)
    return kept


def replay_steps(g: Graph, ops) -> Graph:
    """Apply (op, vertex) pairs given in ORIGINAL labels of g.

    Vertices are translated through the accumulated relabelling after each
    step; referencing a vertex that was already removed is an error.
    """
    current = g
    where = {v: v for v in range(g.n)}
    for op, v in ops:
        if v not in where:
            raise InvalidParameter(f"vertex {v} no longer present for {op}")
        cur_v = where[v]
        if op == DELETE:
            step = delete_step(current, cur_v)
        elif op == TCONTRACT:
            step = t_contract_step(current, cur_v)
        else:
            raise InvalidParameter(f"unknown t-minor op {op!r}")
        current = step.result
        where = {
            orig: step.relabelling[cur]
            for orig, cur in where.items()
            if cur in step.relabelling
        }
    return current


@dataclass(frozen=True)
class TMinorSearch:
    """Outcome of has_t_minor: steps is a witnessing sequence or None.

    When steps is None, exhausted distinguishes "budget ran out" from
    "the reachable space closed, target proven absent".
    """

    steps: tuple | None
    exhausted: bool

    @property
    def found(self) -> bool:
        return self.steps is not None


def has_t_minor(g: Graph, target: Graph, node_budget: int = 10000) -> TMinorSearch:
    """BFS over isomorphism classes of t-minors looking for target.

    node_budget bounds the number of distinct classes expanded. Classes
    smaller than the target are pruned (steps only shrink graphs).
    """
    if node_budget <= 0:
        raise InvalidParameter("node_budget must be positive")
    if are_isomorphic(g, target):
        return TMinorSearch((), False)
    queue = deque([(g, ())])
    visited = {canonical_form(g)}
    expanded = 0
    while queue:
        if expanded >= node_budget:
            return TMinorSearch(None, True)
        current, steps = queue.popleft()
        expanded += 1
        for step in one_step_t_minors(current):
            h = step.result
            if h.n < target.n:
                continue
            key = canonical_form(h)
            if key in visited:
                continue
            visited.add(key)
            if are_isomorphic(h, target):
                return TMinorSearch(steps + (step,), False)
            if h.n > target.n:
                queue.append((h, steps + (step,)))
    return TMinorSearch(None, False)
