"""Fixed small graphs transcribed from their defining drawings.

Labelling convention for every figure-derived graph: the outer 5-cycle is
0-1-2-3-4 (in cycle order), inner/apex vertices follow in the order they are
introduced below. Each entry documents its edge set explicitly; a unit test
pins the degree sequences, and the delete/contract recipes are replayed
against K4 as an acceptance check.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidParameter
from .graphs import Graph, antiweb, gen_complete, gen_cycle_power, gen_path, gen_wheel

_RIM = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]


def _fig(extra_edges, n=None):
    edges = _RIM + extra_edges
    if n is None:
        n = 1 + max(max(e) for e in edges)
    return Graph(n, edges)


@dataclass(frozen=True)
class FigureRecipe:
    """Delete the grey vertices, then t-contract at each black vertex (in
    order), to reach K4. Vertices are original labels."""

    greys: tuple = ()
    blacks: tuple = ()


def _build_named():
    graphs = {}
    recipes = {}

    # 5-hole plus a centre (5) adjacent to three consecutive rim vertices.
    graphs["K4figA"] = _fig([(5, 0), (5, 1), (5, 2)])
    recipes["K4figA"] = FigureRecipe(greys=(), blacks=(3,))

    # 5-hole plus a centre (5) adjacent to four consecutive rim vertices.
    graphs["K4figB"] = _fig([(5, 0), (5, 1), (5, 2), (5, 3)])
    recipes["K4figB"] = FigureRecipe(greys=(), blacks=(4,))

    # 5-hole plus u=5 ~ {0,1,3}, v=6 ~ {1,3,4}, x=7 ~ {5,6}; both degree-2
    # vertices (2 and 7) must be contracted.
    graphs["K4figC"] = _fig([(5, 0), (5, 1), (5, 3), (6, 1), (6, 3), (6, 4), (7, 5), (7, 6)])
    recipes["K4figC"] = FigureRecipe(greys=(), blacks=(2, 7))

    # The seven remaining 4-critical patterns, (a) through (g). Grey = to
    # delete, black = to contract.
    graphs["MM_a"] = _fig([(5, 0), (5, 4), (5, 3), (6, 0), (6, 1), (6, 2)])
    recipes["MM_a"] = FigureRecipe(greys=(5,), blacks=(4,))

    graphs["MM_b"] = _fig([(5, 0), (5, 4), (5, 3), (6, 0), (6, 1), (6, 2), (6, 5)])
    recipes["MM_b"] = FigureRecipe(greys=(5,), blacks=(4,))

    graphs["MM_c"] = _fig([(5, 0), (5, 4), (5, 1), (6, 1), (6, 2), (6, 3), (6, 4)])
    recipes["MM_c"] = FigureRecipe(greys=(6,), blacks=(3,))

    graphs["MM_d"] = _fig([(5, 0), (5, 2), (5, 3), (6, 1), (6, 2), (6, 3), (6, 4)])
    recipes["MM_d"] = FigureRecipe(greys=(), blacks=(0,))

    graphs["MM_e"] = _fig([(5, 0), (5, 4), (5, 3), (5, 2), (6, 0), (6, 1), (6, 2), (6, 3)])
    recipes["MM_e"] = FigureRecipe(greys=(5,), blacks=(4,))

    graphs["MM_f"] = _fig(
        [(1, 4), (5, 0), (5, 4), (5, 3), (6, 0), (6, 1), (6, 2), (6, 5)]
    )
    recipes["MM_f"] = FigureRecipe(greys=(4,), blacks=(3,))

    graphs["MM_g"] = _fig(
        [
            (5, 0), (5, 4), (5, 1),
            (6, 4), (6, 2), (6, 1),
            (7, 4), (7, 3), (7, 1),
            (8, 9), (8, 6), (8, 7),
            (9, 6), (9, 7),
        ]
    )
    recipes["MM_g"] = FigureRecipe(greys=(6, 7, 8, 9), blacks=(3,))

    graphs["P5"] = gen_path(5)
    graphs["K4"] = gen_complete(4)
    graphs["W5"] = gen_wheel(5)
    graphs["C7sq"] = gen_cycle_power(7, 2)
    graphs["AW10_2"] = antiweb(10, 2)
    graphs["AW13_3"] = antiweb(13, 3)

    return graphs, recipes


NAMED_GRAPHS, FIGURE_RECIPES = _build_named()

NAMED_IDS = tuple(NAMED_GRAPHS)


def gen_named(name: str) -> Graph:
    """Graph for a named id; raises InvalidParameter for unknown names."""
    try:
        return NAMED_GRAPHS[name]
    except KeyError:
        raise InvalidParameter(
            f"unknown named graph {name!r}; known: {', '.join(NAMED_IDS)}"
        ) from None
