"""Two-phase primal simplex over exact rationals (Bland's rule).

Solves min c*x subject to A x = b, x >= 0.  Constraint coefficients and
costs are rationals; right-hand sides may carry an infinitesimal component
(GenericReal), in which case all comparisons are lexicographic.  No floating
point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .generic import GenericReal

Status = str  # "optimal" | "infeasible" | "unbounded"

_ZERO = GenericReal(Fraction(0))


def _to_generic(x) -> GenericReal:
    return x if isinstance(x, GenericReal) else GenericReal(Fraction(x))


class _Tableau:
    def __init__(self, rows: list[list[Fraction]], rhs: list[GenericReal],
                 basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    @property
    def m(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def pivot(self, r: int, c: int):
        piv = self.rows[r][c]
        inv = Fraction(1) / piv
        self.rows[r] = [x * inv for x in self.rows[r]]
        self.rhs[r] = self.rhs[r] * inv
        for i in range(self.m):
            if i == r:
                continue
            f = self.rows[i][c]
            if f == 0:
                continue
            self.rows[i] = [x - f * y for x, y in zip(self.rows[i], self.rows[r])]
            self.rhs[i] = self.rhs[i] - self.rhs[r] * f
        self.basis[r] = c

    def reduced_costs(self, costs: Sequence[Fraction]) -> list[Fraction]:
        red = list(costs)
        for r, bj in enumerate(self.basis):
            cb = costs[bj]
            if cb == 0:
                continue
            row = self.rows[r]
            for j in range(len(red)):
                red[j] -= cb * row[j]
        return red

    def objective(self, costs: Sequence[Fraction]) -> GenericReal:
        total = _ZERO
        for r, bj in enumerate(self.basis):
            if costs[bj] != 0:
                total = total + self.rhs[r] * costs[bj]
        return total

    def run(self, costs: Sequence[Fraction], allowed: int) -> Status:
        """Optimize over columns [0, allowed); Bland's rule throughout."""
        while True:
            red = self.reduced_costs(costs)
            enter = -1
            for j in range(allowed):
                if red[j] < 0:
                    enter = j
                    break
            if enter < 0:
                return "optimal"
            leave = -1
            best: Optional[GenericReal] = None
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.rhs[i] * (Fraction(1) / a)
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            self.pivot(leave, enter)


def lp_solve(A: Sequence[Sequence[Fraction]], b: Sequence, c: Sequence[Fraction]
             ) -> tuple[Status, Optional[list[GenericReal]], Optional[GenericReal]]:
    """Minimize c*x subject to A x = b, x >= 0.

    Returns (status, x, value); x and value are None unless optimal.
    """
    m = len(A)
    n = len(c)
    rhs = [_to_generic(v) for v in b]
    if m == 0:
        if any(cj < 0 for cj in c):
            return "unbounded", None, None
        zero = [_ZERO] * n
        return "optimal", zero, _ZERO

    rows = [[Fraction(x) for x in row] for row in A]
    for row in rows:
        if len(row) != n:
            raise ValueError("ragged constraint matrix")

    # phase 1: flip rows to make rhs lex-nonnegative, append artificials
    for i in range(m):
        if rhs[i] < _ZERO:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    for i in range(m):
        ext = [Fraction(0)] * m
        ext[i] = Fraction(1)
        rows[i] = rows[i] + ext
    basis = [n + i for i in range(m)]
    tab = _Tableau(rows, rhs, basis)
    costs1 = [Fraction(0)] * n + [Fraction(1)] * m
    status = tab.run(costs1, allowed=n + m)
    if status != "optimal":  # phase 1 is always bounded below by 0
        raise AssertionError("phase-1 simplex cannot be unbounded")
    if tab.objective(costs1) > _ZERO:
        return "infeasible", None, None

    # drive artificials out of the basis; drop redundant rows
    keep = []
    for r in range(tab.m):
        if tab.basis[r] < n:
            keep.append(r)
            continue
        piv = next((j for j in range(n) if tab.rows[r][j] != 0), None)
        if piv is None:
            continue  # identically-zero row
        tab.pivot(r, piv)
        keep.append(r)
    tab.rows = [tab.rows[r][:n] for r in keep]
    tab.rhs = [tab.rhs[r] for r in keep]
    tab.basis = [tab.basis[r] for r in keep]

    costs2 = [Fraction(x) for x in c]
    status = tab.run(costs2, allowed=n)
    if status == "unbounded":
        return "unbounded", None, None
    x = [_ZERO] * n
    for r, bj in enumerate(tab.basis):
        x[bj] = tab.rhs[r]
    return "optimal", x, tab.objective(costs2)


def lp_feasible(A: Sequence[Sequence[Fraction]], b: Sequence) -> bool:
    """Feasibility of A x = b, x >= 0."""
    status, _, _ = lp_solve(A, b, [Fraction(0)] * (len(A[0]) if A else 0))
    return status == "optimal"
