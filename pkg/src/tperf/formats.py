"""graph6 and DIMACS edge-format encoding and parsing.

graph6 follows the standard byte encoding (printable ASCII, 6 bits per
byte offset by 63, upper triangle column by column); the optional
">>graph6<<" header is accepted on input and never written. DIMACS uses
"p edge n m" plus 1-based "e u v" lines.
"""

from __future__ import annotations

from .errors import InvalidParameter
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 0:
        raise InvalidParameter("graph6 cannot encode negative sizes")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise InvalidParameter(f"graph6 size limit exceeded: {n}")


def _decode_n(s: str):
    """Returns (n, rest-of-string)."""
    if not s:
        raise InvalidParameter("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, s[1:]
    if len(s) >= 2 and s[1] != "~":
        chunk, rest = s[1:4], s[4:]
        if len(chunk) != 3:
            raise InvalidParameter("truncated graph6 size field")
        n = 0
        for c in chunk:
            n = (n << 6) | (ord(c) - 63)
        return n, rest
    chunk, rest = s[2:8], s[8:]
    if len(chunk) != 6:
        raise InvalidParameter("truncated graph6 size field")
    n = 0
    for c in chunk:
        n = (n << 6) | (ord(c) - 63)
    return n, rest


def to_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _encode_n(g.n) + "".join(body)


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER) :]
    n, rest = _decode_n(s)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise InvalidParameter(
            f"graph6 body length {len(rest)} does not match n={n} (need {need})"
        )
    bits = []
    for c in rest:
        val = ord(c) - 63
        if not 0 <= val <= 63:
            raise InvalidParameter(f"invalid graph6 byte {c!r}")
        bits.extend((val >> s6) & 1 for s6 in (5, 4, 3, 2, 1, 0))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


def to_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise InvalidParameter(f"bad DIMACS problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise InvalidParameter("DIMACS edge line before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            edges.append((u, v))
        else:
            raise InvalidParameter(f"unrecognised DIMACS line: {line!r}")
    if n is None:
        raise InvalidParameter("DIMACS input has no problem line")
    return Graph(n, edges)
