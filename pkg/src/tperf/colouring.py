"""Exact colouring: backtracking solver, the constructive 4-colouring for
near-bipartite inputs, the twelve-pattern 3-colourability detector for
P5-free graphs, and the odd-girth formula report for the fractional
chromatic number."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvalidParameter,
    NeighbourhoodNotBipartite,
    NotNearBipartite,
    NotP5Free,
    TheoremViolation,
)
from .graphs import Graph, is_bipartite, is_near_bipartite, odd_girth
from .isomorphism import contains_induced, is_p5_free
from .named import gen_named
from .polytope import fractional_chromatic
from .recognition import ForbiddenWitness, is_t_perfect_p5_free


def is_proper_colouring(g: Graph, colours: dict) -> bool:
    if set(colours) != set(range(g.n)):
        return False
    return all(colours[u] != colours[v] for u, v in g.edges())


def k_colouring(g: Graph, k: int):
    """Proper colouring with colours 1..k, or None if impossible.

    Backtracking with saturation-degree vertex choice and first-use colour
    symmetry breaking; exact and deterministic.
    """
    if k < 0:
        raise InvalidParameter("colour count must be non-negative")
    if g.n == 0:
        return {}
    if k == 0:
        return None
    colours = {}

    def choose():
        best, best_key = -1, None
        for v in range(g.n):
            if v in colours:
                continue
            sat = len({colours[w] for w in g.neighbors(v) if w in colours})
            key = (sat, g.degree(v), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def backtrack(used):
        if len(colours) == g.n:
            return True
        v = choose()
        taken = {colours[w] for w in g.neighbors(v) if w in colours}
        for c in range(1, min(used + 1, k) + 1):
            if c in taken:
                continue
            colours[v] = c
            if backtrack(max(used, c)):
                return True
            del colours[v]
        return False

    if backtrack(0):
        return dict(sorted(colours.items()))
    return None


def chromatic_number(g: Graph) -> int:
    k = 0
    while True:
        if k_colouring(g, k) is not None:
            return k
        k += 1


def colour_near_bipartite_4(g: Graph, v: int | None = None) -> dict:
    """Constructive 4-colouring of a near-bipartite graph.

    Colours 1,2 go to the bipartition of G - N(v) (v stays and gets 1 as
    its component root), colours 3,4 to the bipartition of G[N(v)]. When v
    is not given, the smallest vertex whose neighbourhood induces a
    bipartite graph is picked; if the chosen neighbourhood is not
    bipartite the graph has an induced odd wheel and cannot be t-perfect,
    reported as NeighbourhoodNotBipartite.
    """
    if not is_near_bipartite(g):
        raise NotNearBipartite(f"{g!r} is not near-bipartite")
    if g.n == 0:
        return {}
    nbhd_sides = None
    if v is None:
        for cand in range(g.n):
            nbrs = sorted(g.neighbors(cand))
            sides = is_bipartite(g.induced(nbrs))
            if sides is not None:
                v = cand
                nbhd_sides = (nbrs, sides)
                break
        if v is None:
            raise NeighbourhoodNotBipartite(0)
    else:
        nbrs = sorted(g.neighbors(v))
        sides = is_bipartite(g.induced(nbrs))
        if sides is None:
            raise NeighbourhoodNotBipartite(v)
        nbhd_sides = (nbrs, sides)

    keep = [u for u in range(g.n) if u == v or not g.has_edge(u, v)]
    rest_sides = is_bipartite(g.induced(keep))
    if rest_sides is None:
        raise NotNearBipartite(f"G - N({v}) is not bipartite")

    colours = {}
    for i in rest_sides[0]:
        colours[keep[i]] = 1
    for i in rest_sides[1]:
        colours[keep[i]] = 2
    nbrs, sides = nbhd_sides
    for i in sides[0]:
        colours[nbrs[i]] = 3
    for i in sides[1]:
        colours[nbrs[i]] = 4
    return dict(sorted(colours.items()))


# the twelve 4-critical P5-free patterns in their published numbering
MM_PATTERNS = (
    ("K4", "K4"),
    ("W5", "W5"),
    ("MM_a", "MM_a"),
    ("MM_b", "MM_b"),
    ("MM_c", "MM_c"),
    ("MM_d", "MM_d"),
    ("MM_e", "MM_e"),
    ("MM_f", "MM_f"),
    ("C7sq", "C7sq"),
    ("MM_g", "MM_g"),
    ("AW(10,2)", "AW10_2"),
    ("AW(13,3)", "AW13_3"),
)


def mm_forbidden(g: Graph):
    """First of the twelve 3-colourability obstructions found induced in g,
    scanned in their published order; None when all are absent."""
    for which, named_id in MM_PATTERNS:
        pattern = gen_named(named_id)
        if pattern.n > g.n:
            continue
        emb = contains_induced(g, pattern)
        if emb is not None:
            return ForbiddenWitness(which, emb, pattern)
    return None


def three_colour_p5_free_tperfect(g: Graph) -> dict:
    """3-colouring of a P5-free t-perfect graph.

    Checks the preconditions, asserts that none of the twelve
    3-colourability obstructions occurs (each is t-imperfect, so finding
    one in a t-perfect graph would be a contradiction), then solves. A
    missing 3-colouring raises TheoremViolation; it can never fire unless
    the library itself is broken.
    """
    if not is_p5_free(g):
        raise NotP5Free(f"{g!r} contains an induced P5")
    verdict, witness = is_t_perfect_p5_free(g)
    if not verdict:
        raise InvalidParameter(
            f"input is not t-perfect (contains {witness.which}); "
            "3-colourability is not guaranteed"
        )
    found = mm_forbidden(g)
    if found is not None:
        raise TheoremViolation(
            f"t-perfect input contains obstruction {found.which}"
        )
    colouring = k_colouring(g, 3)
    if colouring is None:
        raise TheoremViolation("no 3-colouring despite all obstructions absent")
    return colouring


@dataclass(frozen=True)
class ChiFormulaReport:
    og: int
    chi_f: Fraction
    formula_value: Fraction
    matches: bool


def check_chi_f_formula(g: Graph) -> ChiFormulaReport:
    """Exact comparison of the fractional chromatic number against
    2*og/(og-1); requires a non-bipartite input."""
    og = odd_girth(g)
    if og is None:
        raise InvalidParameter("formula needs a non-bipartite graph")
    chi_f = fractional_chromatic(g)
    formula = Fraction(2 * og, og - 1)
    return ChiFormulaReport(og, chi_f, formula, chi_f == formula)
