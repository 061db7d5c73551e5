"""Standalone certificate re-verification for report JSON files.

Deliberately self-contained: only the standard library, its own graph6
decoder, and first-principles arithmetic, so a report can be audited
without trusting any of the package's solvers. Usage:

    python3 -m tperf.checker report.json [report2.json ...]

Exit code 0 when every certificate re-verifies, 1 otherwise.
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction


def decode_graph6(s):
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if s[0] != "~":
        n, body = ord(s[0]) - 63, s[1:]
    elif s[1] != "~":
        n = 0
        for c in s[1:4]:
            n = (n << 6) | (ord(c) - 63)
        body = s[4:]
    else:
        n = 0
        for c in s[2:8]:
            n = (n << 6) | (ord(c) - 63)
        body = s[8:]
    bits = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> k) & 1 for k in (5, 4, 3, 2, 1, 0))
    adj = [set() for _ in range(n)]
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i].add(j)
                adj[j].add(i)
            idx += 1
    return n, adj


def frac(s):
    return Fraction(s)


def row_from_tag(tag, n):
    kind = tag[0]
    coeffs = [0] * n
    if kind == "nonneg":
        coeffs[tag[1]] = -1
        return coeffs, Fraction(0)
    if kind == "edge":
        coeffs[tag[1]] = 1
        coeffs[tag[2]] = 1
        return coeffs, Fraction(1)
    if kind == "oddcycle":
        cyc = tag[1]
        for v in cyc:
            coeffs[v] = 1
        return coeffs, Fraction(len(cyc) // 2)
    raise ValueError(f"unknown tag {tag}")


def check_tag_consistency(tag, n, adj):
    """The tag must describe a real feature of the graph."""
    kind = tag[0]
    if kind == "nonneg":
        return 0 <= tag[1] < n
    if kind == "edge":
        u, v = tag[1], tag[2]
        return 0 <= u < n and 0 <= v < n and v in adj[u]
    if kind == "oddcycle":
        cyc = list(tag[1])
        k = len(cyc)
        if k % 2 == 0 or k < 3 or len(set(cyc)) != k:
            return False
        for i, u in enumerate(cyc):
            for j in range(i + 1, k):
                v = cyc[j]
                consecutive = j - i == 1 or (i == 0 and j == k - 1)
                if consecutive != (v in adj[u]):
                    return False
        return True
    return False


def check_embedding(cert, host_n, host_adj):
    pn, padj = decode_graph6(cert["pattern_graph6"])
    m = cert["map"]
    if len(m) != pn or len(set(m)) != pn:
        return "embedding map not injective or wrong size"
    if any(not 0 <= v < host_n for v in m):
        return "embedding image out of range"
    for p in range(pn):
        for q in range(p + 1, pn):
            if (q in padj[p]) != (m[q] in host_adj[m[p]]):
                return f"embedding not induced at pattern pair ({p},{q})"
    return None


def check_fractional_vertex(cert, n, adj):
    x = [frac(s) for s in cert["x"]]
    if len(x) != n:
        return "witness dimension mismatch"
    if all(xi.denominator == 1 for xi in x):
        return "witness is integral"
    tight = cert["tight_rows"]
    if len(tight) != n:
        return f"need {n} tight rows, got {len(tight)}"
    rows = []
    for tag in tight:
        tag = _detag(tag)
        if not check_tag_consistency(tag, n, adj):
            return f"tag {tag} does not match the graph"
        coeffs, rhs = row_from_tag(tag, n)
        val = sum(c * xi for c, xi in zip(coeffs, x))
        if val != rhs:
            return f"row {tag} not tight: {val} != {rhs}"
        rows.append(coeffs)
    # rank check by fraction-free elimination
    mat = [[Fraction(c) for c in row] for row in rows]
    rank = 0
    for col in range(n):
        piv = next((r for r in range(rank, n) if mat[r][col]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for r in range(n):
            if r != rank and mat[r][col]:
                f = mat[r][col] / mat[rank][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rank])]
        rank += 1
    if rank != n:
        return f"tight rows have rank {rank} < {n}"
    return None


def check_combination(cert, n, adj, x=None):
    total = Fraction(0)
    combo = [Fraction(0)] * n
    for item in cert["weights"]:
        vs = item["set"]
        w = frac(item["weight"])
        if w <= 0:
            return "non-positive weight"
        for i, u in enumerate(vs):
            for v in vs[i + 1 :]:
                if v in adj[u]:
                    return f"set {vs} is not stable ({u}~{v})"
            combo[u] += w
        total += w
    if total != 1:
        return f"weights sum to {total}, not 1"
    if x is not None:
        target = [frac(s) for s in x]
        if combo != target:
            return "combination does not reproduce the point"
    return None


def check_violating_path(cert, n, adj):
    path = cert["path"]
    if len(set(path)) != len(path):
        return "path repeats a vertex"
    for i, u in enumerate(path):
        for j in range(i + 1, len(path)):
            v = path[j]
            if (j - i == 1) != (v in adj[u]):
                return f"path not induced at ({u},{v})"
    return None


def check_violated_row(cert, n, adj):
    tag = _detag(cert["tag"])
    if not check_tag_consistency(tag, n, adj):
        return f"tag {tag} does not match the graph"
    coeffs, rhs = row_from_tag(tag, n)
    x = [frac(s) for s in cert["x"]]
    val = sum(c * xi for c, xi in zip(coeffs, x))
    if val <= rhs:
        return f"row {tag} is satisfied: {val} <= {rhs}"
    return None


def check_separating_hyperplane(cert, n, adj, x):
    a = [frac(s) for s in cert["a"]]
    beta = frac(cert["beta"])
    point = [frac(s) for s in x]
    if sum(ai * xi for ai, xi in zip(a, point)) <= beta:
        return "hyperplane does not cut the point"
    # exact check over all stable sets by branch and bound
    best = _max_stable_weight(n, adj, a)
    if best > beta:
        return f"hyperplane invalid: stable set reaches {best} > {beta}"
    return None


def _max_stable_weight(n, adj, w):
    best = Fraction(0)

    def rec(i, cur, banned):
        nonlocal best
        if i == n:
            if cur > best:
                best = cur
            return
        rec(i + 1, cur, banned)
        if i not in banned:
            rec(i + 1, cur + w[i], banned | adj[i])

    rec(0, Fraction(0), set())
    return best


def check_colouring(cert, n, adj):
    colours = {int(k): v for k, v in cert["colours"].items()}
    if set(colours) != set(range(n)):
        return "colouring does not cover all vertices"
    k = cert.get("k")
    if k is not None and any(not 1 <= c <= k for c in colours.values()):
        return f"colour outside 1..{k}"
    for u in range(n):
        for v in adj[u]:
            if u < v and colours[u] == colours[v]:
                return f"edge {u}-{v} monochromatic"
    return None


def _detag(tag):
    if isinstance(tag, list):
        return tuple(_detag(t) for t in tag)
    return tag


CHECKERS = {
    "embedding": lambda cert, n, adj, v: check_embedding(cert, n, adj),
    "fractional_vertex": lambda cert, n, adj, v: check_fractional_vertex(cert, n, adj),
    "convex_combination": lambda cert, n, adj, v: check_combination(
        cert, n, adj, cert.get("x")
    ),
    "violating_path": lambda cert, n, adj, v: check_violating_path(cert, n, adj),
    "violated_row": lambda cert, n, adj, v: check_violated_row(cert, n, adj),
    "separating_hyperplane": lambda cert, n, adj, v: check_separating_hyperplane(
        cert, n, adj, cert["x"]
    ),
    "colouring": lambda cert, n, adj, v: check_colouring(cert, n, adj),
}


def check_report(report) -> list:
    """All certificate failures in a report dict; empty means verified."""
    failures = []
    g6 = report.get("input", {}).get("graph6")
    if g6 is None:
        return ["report has no input graph6"]
    n, adj = decode_graph6(g6)
    for verdict in report.get("verdicts", []):
        cert = verdict.get("certificate")
        if cert is None:
            failures.append(f"verdict {verdict.get('property')} has no certificate")
            continue
        kind = cert.get("type")
        if kind == "exhaustive":
            continue  # explicit exhaustive tag carries no finite certificate
        fn = CHECKERS.get(kind)
        if fn is None:
            failures.append(f"unknown certificate type {kind!r}")
            continue
        err = fn(cert, n, adj, verdict)
        if err:
            failures.append(f"{verdict.get('property')}: {err}")
    return failures


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    if not argv:
        print("usage: python3 -m tperf.checker report.json [...]", file=sys.stderr)
        return 2
    bad = 0
    for path in argv:
        with open(path) as fh:
            report = json.load(fh)
        failures = check_report(report)
        if failures:
            bad += 1
            print(f"{path}: FAIL")
            for f in failures:
                print(f"  {f}")
        else:
            print(f"{path}: OK")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
