"""Exception hierarchy shared across the toolkit."""


class TperfError(Exception):
    """Base class for all toolkit errors."""


class InvalidParameter(TperfError, ValueError):
    """A generator or operation was called with out-of-range parameters."""


class CycleCapExceeded(TperfError):
    """Induced odd cycle enumeration hit its configured cap."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"induced odd cycle enumeration exceeded cap of {cap}")


class ResourceExhausted(TperfError):
    """A configured resource cap (ray count, path count, search size) was hit.

    The computation is undecided, this is never a verdict.
    """


class UnboundedPolytope(TperfError):
    """Vertex enumeration was asked for an unbounded polyhedron."""


class DimensionGuard(TperfError):
    """Full oracle refused an input above the size guard without force_long."""


class NeighbourhoodNotStable(TperfError):
    """t-contraction attempted at a vertex whose neighbourhood is not stable."""

    def __init__(self, v):
        self.vertex = v
        super().__init__(f"neighbourhood of vertex {v} is not stable")


class NotNearBipartite(TperfError):
    """Near-bipartite recognizer called on a graph that is not near-bipartite."""


class NotP5Free(TperfError):
    """P5-free recognizer called on a graph containing an induced P5."""


class NeighbourhoodNotBipartite(TperfError):
    """4-colouring procedure hit a vertex whose neighbourhood induces an odd cycle."""

    def __init__(self, v):
        self.vertex = v
        super().__init__(f"neighbourhood of vertex {v} does not induce a bipartite graph")


class TheoremViolation(TperfError):
    """An implication that must hold for every valid input failed.

    Raised only if the library itself is wrong or the input broke a
    precondition that was supposed to be verified. Never expected to fire.
    """
