"""Exact rational polyhedral core.

Everything in this module works over exact rationals (Python ints and
fractions.Fraction); there is no floating point anywhere. The inequality
system for a graph consists of non-negativity, edge, and induced odd cycle
rows; vertices of the resulting polytope are enumerated by the double
description method over integers, which yields the ground-truth
t-perfection oracle at small sizes. Membership in the stable set polytope
is decided by exact phase-1 simplex, returning explicit convex combination
weights or a separating hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import (
    DimensionGuard,
    InvalidParameter,
    ResourceExhausted,
    UnboundedPolytope,
)
from .graphs import DEFAULT_CYCLE_CAP, Graph, _bits, enumerate_induced_odd_cycles
from .simplex import INFEASIBLE, OPTIMAL, solve_lp

DEFAULT_RAY_CAP = 500_000

NONNEG = "nonneg"
EDGE = "edge"
ODDCYCLE = "oddcycle"


@dataclass(frozen=True)
class Row:
    """One inequality coeffs . x <= rhs with a tag identifying its origin."""

    coeffs: tuple
    rhs: object
    tag: tuple

    def evaluate(self, x):
        return sum(c * xi for c, xi in zip(self.coeffs, x) if c)

    def satisfied_by(self, x) -> bool:
        return self.evaluate(x) <= self.rhs


@dataclass(frozen=True)
class HPolytope:
    """Inequality system A.x <= b over n variables with tagged rows."""

    n: int
    rows: tuple


def reconstruct_row(tag, n):
    """Rebuild (coeffs, rhs) from a row tag; the audit ground truth."""
    kind = tag[0]
    coeffs = [0] * n
    if kind == NONNEG:
        coeffs[tag[1]] = -1
        return tuple(coeffs), 0
    if kind == EDGE:
        coeffs[tag[1]] = 1
        coeffs[tag[2]] = 1
        return tuple(coeffs), 1
    if kind == ODDCYCLE:
        for v in tag[1]:
            coeffs[v] = 1
        return tuple(coeffs), len(tag[1]) // 2
    raise InvalidParameter(f"unknown row tag {tag!r}")


def audit_polytope(p: HPolytope) -> bool:
    """Check that every row's tag reconstructs its stored coefficients."""
    for row in p.rows:
        coeffs, rhs = reconstruct_row(row.tag, p.n)
        if tuple(row.coeffs) != coeffs or row.rhs != rhs:
            return False
    return True


def build_tstab(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> HPolytope:
    """Non-negativity, edge, and induced odd cycle rows for g, in that order."""
    rows = []
    for v in range(g.n):
        coeffs = [0] * g.n
        coeffs[v] = -1
        rows.append(Row(tuple(coeffs), 0, (NONNEG, v)))
    for u, v in g.edges():
        coeffs = [0] * g.n
        coeffs[u] = 1
        coeffs[v] = 1
        rows.append(Row(tuple(coeffs), 1, (EDGE, u, v)))
    for cyc in enumerate_induced_odd_cycles(g, cap=cycle_cap):
        coeffs = [0] * g.n
        for v in cyc:
            coeffs[v] = 1
        rows.append(Row(tuple(coeffs), len(cyc) // 2, (ODDCYCLE, cyc)))
    return HPolytope(g.n, tuple(rows))


def polytope_audit_dump(p: HPolytope) -> str:
    """Audit text format: one row per line, 'tag;coeffs;rhs' with ; fields."""
    lines = []
    for row in p.rows:
        tag = ",".join(str(t) for t in row.tag)
        coeffs = ",".join(str(c) for c in row.coeffs)
        lines.append(f"{tag};{coeffs};{row.rhs}")
    return "\n".join(lines) + "\n"


def in_tstab(g: Graph, x, polytope: HPolytope | None = None,
             cycle_cap: int = DEFAULT_CYCLE_CAP):
    """(True, None) if x satisfies every row, else (False, first violated row)."""
    p = polytope if polytope is not None else build_tstab(g, cycle_cap)
    for row in p.rows:
        if not row.satisfied_by(x):
            return False, row
    return True, None


# -- stable sets ---------------------------------------------------------------


def stable_set_masks(g: Graph):
    """Bitmasks of all stable sets (including 0), include/exclude recursion."""
    out = []
    adj = g._adj
    n = g.n

    def rec(i, chosen, banned):
        if i == n:
            out.append(chosen)
            return
        rec(i + 1, chosen, banned)
        if not banned >> i & 1:
            rec(i + 1, chosen | (1 << i), banned | adj[i])

    rec(0, 0, 0)
    return out

def stable_sets(g: Graph):
    """All stable sets as sorted vertex tuples, deterministic order."""
    return [tuple(_bits(m)) for m in stable_set_masks(g)]


def characteristic_vector(n: int, vs):
    x = [Fraction(0)] * n
    for v in vs:
        x[v] = Fraction(1)
    return tuple(x)


def max_weight_stable_set(g: Graph, w):
    """Exact maximiser by enumeration; first maximiser in enumeration order."""
    best_mask = 0
    best_val = Fraction(0)
    for mask in stable_set_masks(g):
        val = sum((w[v] for v in _bits(mask)), Fraction(0))
        if val > best_val:
            best_val = val
            best_mask = mask
    return tuple(_bits(best_mask)), best_val


# -- stable set polytope membership ---------------------------------------------


@dataclass(frozen=True)
class SspResult:
    """Membership verdict with an exact certificate.

    member: combination is a list of (stable set tuple, positive weight)
    with weights summing to one and combining to x.
    non-member: separator (a, beta) satisfies a . chi_S <= beta for every
    stable set S but a . x > beta.
    """

    member: bool
    combination: list | None = None
    separator: tuple | None = None


def in_ssp(g: Graph, x) -> SspResult:
    sets = stable_sets(g)
    n = g.n
    cols = len(sets)
    A = []
    for v in range(n):
        A.append([1 if v in s else 0 for s in sets])
    A.append([1] * cols)
    b = list(x) + [1]
    res = solve_lp(A, b, [0] * cols)
    if res.status == OPTIMAL:
        combination = [
            (sets[j], res.x[j]) for j in range(cols) if res.x[j] > 0
        ]
        if not combination:  # x == 0: empty set with weight 1
            combination = [((), Fraction(1))]
        return SspResult(True, combination=combination)
    if res.status == INFEASIBLE:
        y = res.farkas
        a = tuple(y[:n])
        beta = -y[n]
        return SspResult(False, separator=(a, beta))
    raise AssertionError("membership LP can only be optimal or infeasible")


# -- vertex enumeration (double description) ------------------------------------


def _normalize_ray(vec):
    g = 0
    for v in vec:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in vec)
    return tuple(vec)


def _homogenize(row: Row):
    """Row coeffs.x <= rhs as integer vector c with c.(t,x) <= 0."""
    coeffs = [Fraction(-row.rhs)] + [Fraction(c) for c in row.coeffs]
    denom = 1
    for c in coeffs:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    return tuple(int(c * denom) for c in coeffs)


def enumerate_vertices(p: HPolytope, max_rays: int = DEFAULT_RAY_CAP):
    """Exact vertex set of a bounded polytope, via double description.

    The polytope must carry a non-negativity row for every variable (true
    for every system built here); those rows plus t >= 0 form the initial
    simplicial cone of the homogenization, and the remaining rows are
    inserted one at a time in their stored order. Ray pairs are combined
    only when combinatorially adjacent (no third ray's tight set contains
    their common tight set). Raises UnboundedPolytope if a recession ray
    survives, ResourceExhausted if the ray count passes max_rays.
    """
    n = p.n
    if n == 0:
        return [()]
    seen_nonneg = {row.tag[1] for row in p.rows if row.tag[0] == NONNEG}
    if seen_nonneg != set(range(n)):
        raise InvalidParameter(
            "vertex enumeration requires a non-negativity row per variable"
        )
    others = [row for row in p.rows if row.tag[0] != NONNEG]

    d = n + 1  # homogenized dimension
    # constraint bits: 0 -> t >= 0, 1+v -> x_v >= 0, d+i -> others[i]
    rays = []
    all_x_tight = 0
    for v in range(n):
        all_x_tight |= 1 << (1 + v)
    rays.append(((1,) + (0,) * n, all_x_tight))
    for v in range(n):
        vec = [0] * d
        vec[1 + v] = 1
        z = 1 | (all_x_tight ^ (1 << (1 + v)))
        rays.append((tuple(vec), z))

    for i, row in enumerate(others):
        c = _homogenize(row)
        idx = d + i
        inside = []
        on = []
        outside = []
        for vec, z in rays:
            val = 0
            for ci, vi in zip(c, vec):
                if ci and vi:
                    val += ci * vi
            if val < 0:
                inside.append((vec, z, val))
            elif val == 0:
                on.append((vec, z | (1 << idx)))
            else:
                outside.append((vec, z, val))
        if not outside:
            rays = [(vec, z) for vec, z, _ in inside] + on
            continue
        new_rays = []
        min_common = d - 2
        for vec_o, z_o, val_o in outside:
            for vec_i, z_i, val_i in inside:
                common = z_o & z_i
                if common.bit_count() < min_common:
                    continue
                adjacent = True
                for vec_q, z_q in rays:
                    if z_q & common == common and vec_q != vec_o and vec_q != vec_i:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = tuple(
                    val_o * a - val_i * b for a, b in zip(vec_i, vec_o)
                )
                new_rays.append((_normalize_ray(w), common | (1 << idx)))
        rays = [(vec, z) for vec, z, _ in inside] + on + new_rays
        if len(rays) > max_rays:
            raise ResourceExhausted(
                f"double description exceeded {max_rays} rays "
                f"(row {i + 1} of {len(others)})"
            )

    vertices = []
    for vec, _z in rays:
        t = vec[0]
        if t == 0:
            raise UnboundedPolytope(f"recession direction {vec[1:]} survives")
        vertices.append(tuple(Fraction(xi, t) for xi in vec[1:]))
    # extreme rays are pairwise distinct already; dedupe defensively
    return sorted(set(vertices))


# -- t-perfection oracle ---------------------------------------------------------


@dataclass(frozen=True)
class TPerfVerdict:
    """Ground-truth verdict; when t_perfect is False the witness is a
    fractional vertex of the inequality system together with a basis of
    linearly independent tight rows (tags, in original vertex labels)."""

    t_perfect: bool
    witness: tuple | None = None
    tight_rows: tuple | None = None
    vertex_count: int = 0
    fractional_count: int = 0


def _relabel_tag(tag, mapping):
    if tag[0] == NONNEG:
        return (NONNEG, mapping[tag[1]])
    if tag[0] == EDGE:
        return (EDGE, mapping[tag[1]], mapping[tag[2]])
    if tag[0] == ODDCYCLE:
        return (ODDCYCLE, tuple(mapping[v] for v in tag[1]))
    raise InvalidParameter(f"unknown row tag {tag!r}")


def _independent_tight_rows(p: HPolytope, x, need: int):
    """Greedy basis of tight rows using exact Gaussian elimination."""
    basis = []
    tags = []
    for row in p.rows:
        if row.evaluate(x) != row.rhs:
            continue
        vec = [Fraction(c) for c in row.coeffs]
        for pivot_vec, pivot_col in basis:
            if vec[pivot_col]:
                f = vec[pivot_col] / pivot_vec[pivot_col]
                vec = [a - f * b for a, b in zip(vec, pivot_vec)]
        col = next((j for j, a in enumerate(vec) if a), None)
        if col is None:
            continue
        basis.append((vec, col))
        tags.append(row.tag)
        if len(tags) == need:
            return tags
    raise AssertionError("point is not a vertex: too few independent tight rows")


def is_t_perfect_oracle(
    g: Graph,
    force_long: bool = False,
    cycle_cap: int = DEFAULT_CYCLE_CAP,
    max_rays: int = DEFAULT_RAY_CAP,
    size_guard: int = 13,
) -> TPerfVerdict:
    """Full vertex enumeration oracle: t-perfect iff every vertex is 0/1.

    Isolated vertices are dropped before enumeration (their only effect is
    an unbounded coordinate direction; on the remaining 0/1 box they
    contribute integral vertices only), so the empty graph and single
    vertices count as t-perfect. Inputs above size_guard vertices are
    refused unless force_long is set. Resource exhaustion raises, it is
    never converted into a verdict.
    """
    if g.n > size_guard and not force_long:
        raise DimensionGuard(
            f"full oracle refused n={g.n} > {size_guard}; pass force_long to override"
        )
    core = [v for v in range(g.n) if g.degree(v) > 0]
    reduced = g.induced(core)
    if reduced.n == 0:
        return TPerfVerdict(True, vertex_count=1)
    p = build_tstab(reduced, cycle_cap)
    verts = enumerate_vertices(p, max_rays=max_rays)
    fractional = [x for x in verts if any(xi.denominator != 1 for xi in x)]
    if not fractional:
        return TPerfVerdict(True, vertex_count=len(verts))
    x = fractional[0]
    tags = _independent_tight_rows(p, x, reduced.n)
    mapping = {i: core[i] for i in range(reduced.n)}
    witness = [Fraction(0)] * g.n
    for i, v in enumerate(core):
        witness[v] = x[i]
    tight = [_relabel_tag(tag, mapping) for tag in tags]
    tight.extend((NONNEG, v) for v in range(g.n) if g.degree(v) == 0)
    return TPerfVerdict(
        False,
        witness=tuple(witness),
        tight_rows=tuple(tight),
        vertex_count=len(verts),
        fractional_count=len(fractional),
    )


# -- fractional chromatic number --------------------------------------------------


def fractional_chromatic(g: Graph) -> Fraction:
    """Optimum of the fractional stable-set covering LP, exact.

    min sum y_S subject to sum_{S containing v} y_S >= 1 for every vertex,
    y >= 0, over all non-empty stable sets (the empty set never helps a
    cover). Solved by exact simplex with surplus variables.
    """
    if g.n == 0:
        return Fraction(0)
    sets = [s for s in stable_sets(g) if s]
    cols = len(sets)
    A = []
    for v in range(g.n):
        A.append([1 if v in s else 0 for s in sets] + [0] * g.n)
        A[v][cols + v] = -1
    b = [1] * g.n
    c = [1] * cols + [0] * g.n
    res = solve_lp(A, b, c)
    if res.status != OPTIMAL:
        raise AssertionError("covering LP is always feasible and bounded")
    return res.objective


def fractional_chromatic_dual(g: Graph) -> Fraction:
    """Independently solved dual: max 1.z with z(S) <= 1 per stable set."""
    if g.n == 0:
        return Fraction(0)
    sets = [s for s in stable_sets(g) if s]
    rows = len(sets)
    A = []
    for i, s in enumerate(sets):
        A.append([1 if v in s else 0 for v in range(g.n)] + [0] * rows)
        A[i][g.n + i] = 1
    b = [1] * rows
    c = [-1] * g.n + [0] * rows
    res = solve_lp(A, b, c)
    if res.status != OPTIMAL:
        raise AssertionError("packing LP is always feasible and bounded")
    return -res.objective
