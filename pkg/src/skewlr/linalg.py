"""Exact rational linear solving for change-of-basis computations."""

from __future__ import annotations

from fractions import Fraction


class LinearSolver:
    """Solve A x = b exactly, where the columns of A are sparse mappings.

    Columns are dicts keyed by arbitrary sortable row labels. The solver
    reduces [A | I] once and answers any number of right-hand sides.
    """

    def __init__(self, columns):
        self.columns = [dict(c) for c in columns]
        keys = sorted({k for col in self.columns for k in col})
        self.row_index = {k: i for i, k in enumerate(keys)}
        m = len(keys)
        n = len(self.columns)
        a = [[Fraction(0)] * n for _ in range(m)]
        for j, col in enumerate(self.columns):
            for k, v in col.items():
                a[self.row_index[k]][j] = Fraction(v)
        e = [[Fraction(int(i == j)) for j in range(m)] for i in range(m)]
        pivots = []
        r = 0
        for j in range(n):
            p = next((i for i in range(r, m) if a[i][j]), None)
            if p is None:
                continue
            a[r], a[p] = a[p], a[r]
            e[r], e[p] = e[p], e[r]
            inv = 1 / a[r][j]
            a[r] = [x * inv for x in a[r]]
            e[r] = [x * inv for x in e[r]]
            for i in range(m):
                if i != r and a[i][j]:
                    f = a[i][j]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    e[i] = [x - f * y for x, y in zip(e[i], e[r])]
            pivots.append((r, j))
            r += 1
        self.a = a
        self.e = e
        self.pivots = pivots
        self.rank = r
        self.m = m
        self.n = n

    def solve(self, target):
        """Coefficients x with sum_j x_j columns[j] == target, or None."""
        b = [Fraction(0)] * self.m
        for k, v in dict(target).items():
            if not v:
                continue
            i = self.row_index.get(k)
            if i is None:
                return None
            b[i] = Fraction(v)
        nz = [t for t in range(self.m) if b[t]]
        y = [sum(self.e[i][t] * b[t] for t in nz) for i in range(self.m)]
        for i in range(self.rank, self.m):
            if y[i]:
                return None
        x = [Fraction(0)] * self.n
        for row, col in self.pivots:
            x[col] = y[row]
        # paranoid exactness: confirm the combination reproduces the target
        acc = {}
        for j, xj in enumerate(x):
            if not xj:
                continue
            for k, v in self.columns[j].items():
                acc[k] = acc.get(k, 0) + xj * v
        acc = {k: v for k, v in acc.items() if v}
        if acc != {k: v for k, v in dict(target).items() if v}:
            return None
        return x
