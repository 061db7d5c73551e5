"""Exact rational two-phase simplex with Bland's rule.

Solves min c.x subject to A.x = b, x >= 0 over Fractions. Bland's pivoting
rule guarantees termination; every pivot is exact, there is no floating
point anywhere. Artificial columns are kept in the tableau (barred from
re-entering) so dual values and Farkas certificates can be read off.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LpResult:
    status: str
    x: list | None = None
    objective: Fraction | None = None
    dual: list | None = None
    farkas: list | None = None


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    inv = Fraction(1) / piv
    tableau[row] = [t * inv for t in tableau[row]]
    prow = tableau[row]
    for i, trow in enumerate(tableau):
        if i != row and trow[col]:
            f = trow[col]
            tableau[i] = [a - f * p for a, p in zip(trow, prow)]
    basis[row] = col


def _run(tableau, basis, costs, allowed):
    """Bland-rule simplex loop on the tableau; returns False if unbounded."""
    m = len(tableau)
    width = len(tableau[0])
    while True:
        # reduced costs from scratch: r_j = c_j - sum_i c_B[i] * T[i][j]
        cb = [costs[basis[i]] for i in range(m)]
        entering = -1
        for j in range(width - 1):
            if not allowed[j] or j in basis:
                continue
            r = costs[j]
            for i in range(m):
                if cb[i] and tableau[i][j]:
                    r -= cb[i] * tableau[i][j]
            if r < 0:
                entering = j
                break
        if entering < 0:
            return True
        leaving = -1
        best = None
        for i in range(m):
            a = tableau[i][entering]
            if a > 0:
                ratio = tableau[i][-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leaving]):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return False
        _pivot(tableau, basis, leaving, entering)


def solve_lp(A, b, c) -> LpResult:
    """min c.x s.t. A.x = b, x >= 0; A is a list of rows.

    On OPTIMAL the result carries x, the objective, and duals y (one per
    row, free sign) satisfying y.b == objective. On INFEASIBLE it carries a
    Farkas vector y with y.A <= 0 componentwise and y.b > 0.
    """
    m = len(A)
    n = len(A[0]) if m else len(c)
    sign = [1] * m
    rows = []
    rhs = []
    for i in range(m):
        bi = Fraction(b[i])
        if bi < 0:
            sign[i] = -1
            rows.append([Fraction(-a) for a in A[i]])
            rhs.append(-bi)
        else:
            rows.append([Fraction(a) for a in A[i]])
            rhs.append(bi)

    # tableau columns: n structural, m artificial, then rhs
    width = n + m + 1
    tableau = []
    for i in range(m):
        row = rows[i] + [Fraction(0)] * m + [rhs[i]]
        row[n + i] = Fraction(1)
        tableau.append(row)
    basis = [n + i for i in range(m)]

    phase1_costs = [Fraction(0)] * n + [Fraction(1)] * m + [Fraction(0)]
    allowed = [True] * (width - 1)
    if not _run(tableau, basis, phase1_costs, allowed):
        raise AssertionError("phase 1 cannot be unbounded")

    w = sum(tableau[i][-1] for i in range(m) if basis[i] >= n)
    if w > 0:
        # Farkas certificate from phase-1 duals: y_i = 1 - reduced cost of
        # artificial i = value of c_B.B^-1 at column n+i, re-signed.
        cb = [phase1_costs[basis[i]] for i in range(m)]
        farkas = []
        for i in range(m):
            yi = sum(cb[r] * tableau[r][n + i] for r in range(m))
            farkas.append(sign[i] * yi)
        return LpResult(INFEASIBLE, farkas=farkas)

    # drive basic artificials out where possible (redundant rows keep them
    # basic at zero, which is harmless as they may not re-enter)
    for i in range(m):
        if basis[i] >= n and tableau[i][-1] == 0:
            for j in range(n):
                if tableau[i][j]:
                    _pivot(tableau, basis, i, j)
                    break

    phase2_costs = [Fraction(ci) for ci in c] + [Fraction(0)] * m + [Fraction(0)]
    allowed = [True] * n + [False] * m
    if not _run(tableau, basis, phase2_costs, allowed):
        return LpResult(UNBOUNDED)

    x = [Fraction(0)] * n
    for i in range(m):
        if basis[i] < n:
            x[basis[i]] = tableau[i][-1]
    objective = sum(phase2_costs[j] * x[j] for j in range(n))
    cb = [phase2_costs[basis[i]] for i in range(m)]
    dual = []
    for i in range(m):
        yi = sum(cb[r] * tableau[r][n + i] for r in range(m))
        dual.append(sign[i] * yi)
    return LpResult(OPTIMAL, x=x, objective=objective, dual=dual)
