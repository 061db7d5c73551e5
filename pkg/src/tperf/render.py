"""Figure rendering for reports: circular-layout graph drawings to files.

matplotlib is imported lazily and driven with the Agg backend so the CLI
works headless; figures land next to the JSON reports when requested.
"""

from __future__ import annotations

import math

from .graphs import Graph


def _layout(g: Graph):
    pos = {}
    for v in range(g.n):
        angle = math.pi / 2 + 2 * math.pi * v / max(g.n, 1)
        pos[v] = (math.cos(angle), math.sin(angle))
    return pos


def save_graph_figure(g: Graph, path, highlight=None, title=None):
    """Draw g on a circle and save to path.

    highlight is an optional set of vertices (for instance the image of a
    forbidden-pattern embedding); induced edges between highlighted
    vertices are emphasised.
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    highlight = set(highlight or ())
    pos = _layout(g)
    fig, ax = plt.subplots(figsize=(4.2, 4.2))
    for u, v in g.edges():
        hot = u in highlight and v in highlight
        xs = (pos[u][0], pos[v][0])
        ys = (pos[u][1], pos[v][1])
        ax.plot(
            xs,
            ys,
            color="#d62728" if hot else "#777777",
            linewidth=2.2 if hot else 1.0,
            zorder=2 if hot else 1,
        )
    for v in range(g.n):
        hot = v in highlight
        ax.scatter(
            *pos[v],
            s=260,
            color="#d62728" if hot else "#1f77b4",
            zorder=3,
            edgecolors="white",
        )
        ax.annotate(
            str(v),
            pos[v],
            color="white",
            ha="center",
            va="center",
            fontsize=9,
            zorder=4,
        )
    if title:
        ax.set_title(title)
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
