"""Semistandard skew tableaux, row insertion, and tableau-counting rules.

Reading convention: the row word lists rows left to right, bottom row
first. A word is lattice when every prefix of its reverse contains at
least as many letters i as letters i+1, for every i.
"""

from __future__ import annotations

from bisect import bisect_right
from itertools import chain

from .shapes import contains, enumerate_partitions, is_partition


class Tableau:
    """A semistandard filling of a skew shape outer/inner.

    Rows are stored top first; row i holds the entries in columns
    inner_i .. outer_i - 1.
    """

    __slots__ = ("outer", "inner", "rows")

    def __init__(self, outer, inner, rows):
        outer = tuple(outer)
        inner = tuple(inner)
        rows = tuple(tuple(r) for r in rows)
        if not (is_partition(outer) and is_partition(inner)):
            raise ValueError("shape must be a pair of partitions")
        if not contains(outer, inner):
            raise ValueError("inner shape not contained in outer shape")
        if len(rows) != len(outer):
            raise ValueError("wrong number of rows")
        pad = inner + (0,) * (len(outer) - len(inner))
        for i, row in enumerate(rows):
            if len(row) != outer[i] - pad[i]:
                raise ValueError("row %d has the wrong length" % i)
            if any(x < 1 for x in row):
                raise ValueError("entries must be positive")
            if any(a > b for a, b in zip(row, row[1:])):
                raise ValueError("row %d not weakly increasing" % i)
        for i in range(len(rows) - 1):
            lo = pad[i + 1]
            hi = min(outer[i + 1], outer[i])
            for c in range(max(lo, pad[i]), hi):
                if rows[i + 1][c - pad[i + 1]] <= rows[i][c - pad[i]]:
                    raise ValueError("column %d not strictly increasing" % c)
        self.outer = outer
        self.inner = inner
        self.rows = rows

    def row_word(self):
        return tuple(chain.from_iterable(reversed(self.rows)))

    def content(self):
        """Letter multiplicities as a tuple indexed from letter 1."""
        top = max((x for r in self.rows for x in r), default=0)
        cnt = [0] * top
        for r in self.rows:
            for x in r:
                cnt[x - 1] += 1
        return tuple(cnt)

    def size(self):
        return sum(self.outer) - sum(self.inner)

    def __eq__(self, other):
        return (isinstance(other, Tableau)
                and self.outer == other.outer
                and self.inner == other.inner
                and self.rows == other.rows)

    def __hash__(self):
        return hash((self.outer, self.inner, self.rows))

    def __repr__(self):
        return "Tableau(%r, %r, %r)" % (self.outer, self.inner, self.rows)

    def __str__(self):
        pad = self.inner + (0,) * (len(self.outer) - len(self.inner))
        lines = []
        for i, row in enumerate(self.rows):
            cells = ["."] * pad[i] + [str(x) for x in row]
            lines.append(" ".join(cells))
        return "\n".join(lines)


def insert(word) -> Tableau:
    """Row-insert a word into the empty tableau."""
    rows = []
    for x in word:
        r = 0
        while True:
            if r == len(rows):
                rows.append([x])
                break
            row = rows[r]
            i = bisect_right(row, x)
            if i == len(row):
                row.append(x)
                break
            row[i], x = x, row[i]
            r += 1
    return Tableau(tuple(len(r) for r in rows), (), rows)


def rectify(t: Tableau) -> Tableau:
    """Straight-shape representative of the Knuth class of t."""
    return insert(t.row_word())


def star(a: Tableau, b: Tableau) -> Tableau:
    """Disjoint union with a strictly southwest of b.

    The row word of the result is row_word(a) followed by row_word(b).
    """
    off = a.outer[0] if a.outer else 0
    a_pad = a.inner + (0,) * (len(a.outer) - len(a.inner))
    b_pad = b.inner + (0,) * (len(b.outer) - len(b.inner))
    outer = tuple(x + off for x in b.outer) + a.outer
    inner = tuple(x + off for x in b_pad) + a_pad
    inner = tuple(x for x in inner if x > 0)
    return Tableau(outer, inner, b.rows + a.rows)


def knuth_equivalent(s: Tableau, t: Tableau) -> bool:
    return rectify(s) == rectify(t)


def yamanouchi_tableau(shape) -> Tableau:
    """Straight tableau with row i filled by the letter i."""
    return Tableau(tuple(shape), (), tuple((i + 1,) * x for i, x in enumerate(shape)))


def _cells_reading(outer, pad):
    """Cells row by row, left to right."""
    return [(i, c) for i in range(len(outer)) for c in range(pad[i], outer[i])]


def enumerate_tableaux(outer, inner, content):
    """All semistandard fillings of outer/inner with the exact content.

    content is a sequence of letter multiplicities, letter 1 first.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    pad = inner + (0,) * (len(outer) - len(inner))
    cells = _cells_reading(outer, pad)
    if sum(content) != len(cells):
        return []
    remaining = list(content)
    grid = {}
    out = []

    def rec(pos):
        if pos == len(cells):
            rows = tuple(tuple(grid[(i, c)] for c in range(pad[i], outer[i]))
                         for i in range(len(outer)))
            out.append(Tableau(outer, inner, rows))
            return
        i, c = cells[pos]
        lo = 1
        if c > pad[i]:
            lo = grid[(i, c - 1)]
        if i > 0 and pad[i - 1] <= c < outer[i - 1]:
            lo = max(lo, grid[(i - 1, c)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[(i, c)] = v
            rec(pos + 1)
            remaining[v - 1] += 1
        grid.pop((i, c), None)

    rec(0)
    return out


def enumerate_tableaux_bounded(outer, inner, max_content):
    """All semistandard fillings with content at most max_content per letter."""
    outer = tuple(outer)
    inner = tuple(inner)
    pad = inner + (0,) * (len(outer) - len(inner))
    cells = _cells_reading(outer, pad)
    if sum(max_content) < len(cells):
        return []
    remaining = list(max_content)
    grid = {}
    out = []

    def rec(pos):
        if pos == len(cells):
            rows = tuple(tuple(grid[(i, c)] for c in range(pad[i], outer[i]))
                         for i in range(len(outer)))
            out.append(Tableau(outer, inner, rows))
            return
        i, c = cells[pos]
        lo = 1
        if c > pad[i]:
            lo = grid[(i, c - 1)]
        if i > 0 and pad[i - 1] <= c < outer[i - 1]:
            lo = max(lo, grid[(i - 1, c)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            grid[(i, c)] = v
            rec(pos + 1)
            remaining[v - 1] += 1
        grid.pop((i, c), None)

    rec(0)
    return out


def _lattice_core(outer, inner, content):
    """Count or bucket lattice fillings of outer/inner.

    Cells are filled in reverse reading order (rows top to bottom, right
    to left) so the lattice prefix condition prunes online. With content
    None, returns a dict content -> count; otherwise an int.
    """
    outer = tuple(outer)
    inner = tuple(inner)
    if not contains(outer, inner):
        return 0 if content is not None else {}
    pad = inner + (0,) * (len(outer) - len(inner))
    cells = [(i, c) for i in range(len(outer))
             for c in range(outer[i] - 1, pad[i] - 1, -1)]
    ncells = len(cells)
    if content is not None and sum(content) != ncells:
        return 0
    # in a lattice filling every entry is at most its row index
    nletters = len(content) if content is not None else len(outer)
    counts = [0] * (nletters + 1)
    budget = list(content) if content is not None else None
    grid = {}
    buckets = {}
    total = 0

    def rec(pos):
        nonlocal total
        if pos == ncells:
            if budget is None:
                key = []
                for x in counts[1:]:
                    if x == 0:
                        break
                    key.append(x)
                key = tuple(key)
                buckets[key] = buckets.get(key, 0) + 1
            else:
                total += 1
            return
        i, c = cells[pos]
        hi = nletters
        if c + 1 < outer[i]:
            hi = min(hi, grid[(i, c + 1)])
        lo = 1
        if i > 0 and pad[i - 1] <= c < outer[i - 1]:
            lo = grid[(i - 1, c)] + 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if budget is not None and budget[v - 1] == 0:
                continue
            counts[v] += 1
            if budget is not None:
                budget[v - 1] -= 1
            grid[(i, c)] = v
            rec(pos + 1)
            counts[v] -= 1
            if budget is not None:
                budget[v - 1] += 1
        grid.pop((i, c), None)

    rec(0)
    return total if content is not None else buckets


def count_lattice_fillings(outer, inner, content) -> int:
    return _lattice_core(outer, inner, tuple(content))


def lattice_content_counts(outer, inner):
    """Bucket all lattice fillings of outer/inner by their content."""
    return _lattice_core(outer, inner, None)


def lr_coefficient_yamanouchi(lam, mu, nu) -> int:
    """Structure constant by counting lattice fillings of nu/lam of content mu."""
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam):
        return 0
    return count_lattice_fillings(nu, lam, mu)


def lr_coefficient(lam, mu, nu) -> int:
    """Structure constant by counting pairs (R, S) of straight tableaux.

    R runs over shape lam, S over shape mu; the pair counts when the
    rectification of their star product is the Yamanouchi tableau of nu.
    """
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    if sum(lam) + sum(mu) != sum(nu):
        return 0
    target = yamanouchi_tableau(nu)
    count = 0
    for r in enumerate_tableaux_bounded(lam, (), nu):
        rc = r.content()
        rest = list(nu)
        for i, x in enumerate(rc):
            rest[i] -= x
        for s in enumerate_tableaux(mu, (), tuple(rest)):
            if insert(r.row_word() + s.row_word()) == target:
                count += 1
    return count


def lr_triple(pi, rho, sigma, tau) -> int:
    """Count triples (P, R, S) of straight shapes pi, rho, sigma whose
    star product rectifies to the Yamanouchi tableau of tau."""
    pi, rho, sigma, tau = tuple(pi), tuple(rho), tuple(sigma), tuple(tau)
    if sum(pi) + sum(rho) + sum(sigma) != sum(tau):
        return 0
    target = yamanouchi_tableau(tau)
    count = 0
    for p in enumerate_tableaux_bounded(pi, (), tau):
        rest1 = list(tau)
        for i, x in enumerate(p.content()):
            rest1[i] -= x
        for r in enumerate_tableaux_bounded(rho, (), tuple(rest1)):
            rest2 = rest1[:]
            for i, x in enumerate(r.content()):
                rest2[i] -= x
            for s in enumerate_tableaux(sigma, (), tuple(rest2)):
                if insert(p.row_word() + r.row_word() + s.row_word()) == target:
                    count += 1
    return count


def standard_tableaux(shape) -> int:
    """Number of standard tableaux of a straight shape, by enumeration."""
    n = sum(shape)
    return len(enumerate_tableaux(shape, (), (1,) * n))
