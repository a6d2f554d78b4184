"""Exact two-phase simplex over ``fractions.Fraction``.

Dense tableau, Bland's rule for both the entering and the leaving variable,
so the method terminates without any tolerance policy. Intended for the
tiny programs produced by Delsarte-type bounds (tens of variables at most).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    pivots: int = 0


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], basis: list[int]):
        self.rows = rows
        self.basis = basis
        self.pivots = 0

    def pivot(self, r: int, j: int) -> None:
        row = self.rows[r]
        p = row[j]
        if p != 1:
            self.rows[r] = row = [v / p for v in row]
        for i, other in enumerate(self.rows):
            if i != r and other[j] != 0:
                f = other[j]
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
        self.basis[r] = j
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction], columns: range) -> list[Fraction]:
        out = []
        for j in columns:
            z = cost[j]
            for r, b in enumerate(self.basis):
                if cost[b]:
                    z -= cost[b] * self.rows[r][j]
            out.append(z)
        return out

    def optimise(self, cost: Sequence[Fraction], ncols: int) -> bool:
        """Maximise ``cost``; return False if unbounded."""
        while True:
            rc = self.reduced_costs(cost, range(ncols))
            entering = next((j for j in range(ncols) if rc[j] > 0), None)
            if entering is None:
                return True
            best = None
            for r, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    key = (row[-1] / a, self.basis[r])
                    if best is None or key < best[0]:
                        best = (key, r)
            if best is None:
                return False
            self.pivot(best[1], entering)


def maximize(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximise ``c @ x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    nvar = len(c)
    c = [Fraction(v) for v in c]
    cons = [([Fraction(v) for v in row], Fraction(b), False) for row, b in zip(A_ub, b_ub)]
    cons += [([Fraction(v) for v in row], Fraction(b), True) for row, b in zip(A_eq, b_eq)]
    n_slack = sum(1 for *_, eq in cons if not eq)
    m = len(cons)
    ncols = nvar + n_slack + m  # originals, slacks, artificials
    art0 = nvar + n_slack

    rows: list[list[Fraction]] = []
    slack = nvar
    for r, (coef, rhs, eq) in enumerate(cons):
        if len(coef) != nvar:
            raise ValueError("constraint width does not match objective")
        row = coef + [Fraction(0)] * (ncols - nvar) + [rhs]
        if not eq:
            row[slack] = Fraction(1)
            slack += 1
        if rhs < 0:
            row = [-v for v in row]
        row[art0 + r] = Fraction(1)
        rows.append(row)
    tab = _Tableau(rows, [art0 + r for r in range(m)])

    phase1 = [Fraction(0)] * art0 + [Fraction(-1)] * m
    tab.optimise(phase1, ncols)
    if any(tab.rows[r][-1] != 0 for r, b in enumerate(tab.basis) if b >= art0):
        return LPResult(INFEASIBLE, pivots=tab.pivots)

    # drive zero-level artificials out of the basis; drop redundant rows
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= art0:
            j = next((j for j in range(art0) if tab.rows[r][j] != 0), None)
            if j is None:
                del tab.rows[r]
                del tab.basis[r]
                continue
            tab.pivot(r, j)
        r += 1
    tab.rows = [row[:art0] + [row[-1]] for row in tab.rows]

    phase2 = c + [Fraction(0)] * n_slack
    if not tab.optimise(phase2, art0):
        return LPResult(UNBOUNDED, pivots=tab.pivots)
    x = [Fraction(0)] * art0
    for r, b in enumerate(tab.basis):
        x[b] = tab.rows[r][-1]
    value = sum((ci * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, value, tuple(x[:nvar]), tab.pivots)
