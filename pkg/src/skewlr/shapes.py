"""Partitions, compositions, and skew-shape predicates.

Shapes are plain tuples of positive ints: partitions are weakly decreasing,
compositions keep their order. The empty tuple is the empty shape. The
canonical order used everywhere is graded, then reverse-lexicographic
within a degree.
"""

from __future__ import annotations

from itertools import accumulate


def is_partition(p) -> bool:
    return all(a >= b for a, b in zip(p, p[1:])) and all(x > 0 for x in p)


def is_strict_partition(p) -> bool:
    return all(a > b for a, b in zip(p, p[1:])) and all(x > 0 for x in p)


def is_composition(p) -> bool:
    return all(x > 0 for x in p)


def canonical_key(shape):
    """Sort key: by size, then reverse-lexicographic."""
    return (sum(shape), tuple(-x for x in shape))


def conjugate(p):
    """Transpose of the Young diagram of a partition."""
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > c) for c in range(p[0]))


def contains(outer, inner) -> bool:
    """True iff inner_i <= outer_i for every row."""
    if len(inner) > len(outer):
        return False
    return all(o >= i for o, i in zip(outer, inner))


def is_horizontal_strip(inner, outer, size) -> bool:
    """True iff outer/inner is a horizontal strip of the given size.

    Horizontal means at most one box per column: outer[i+1] <= inner[i].
    A single box in a new row still qualifies.
    """
    if not contains(outer, inner):
        return False
    if sum(outer) - sum(inner) != size:
        return False
    pad = inner + (0,) * (len(outer) - len(inner))
    return all(outer[i + 1] <= pad[i] for i in range(len(outer) - 1))


def is_vertical_strip(inner, outer, size) -> bool:
    """True iff outer/inner is a vertical strip: at most one box per row."""
    if not contains(outer, inner):
        return False
    if sum(outer) - sum(inner) != size:
        return False
    pad = inner + (0,) * (len(outer) - len(inner))
    return all(o - i <= 1 for o, i in zip(outer, pad))


def enumerate_partitions(n, max_part=None, strict=False, max_length=None):
    """All partitions of n meeting the constraints, in canonical order."""
    if n < 0:
        return []
    bound = n if max_part is None else min(max_part, n)
    out = []

    def rec(remaining, top, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if max_length is not None and len(prefix) >= max_length:
            return
        for part in range(min(top, remaining), 0, -1):
            prefix.append(part)
            rec(remaining - part, part - 1 if strict else part, prefix)
            prefix.pop()

    rec(n, bound, [])
    return out


def enumerate_compositions(n):
    """All 2^(n-1) compositions of n (just the empty one for n = 0)."""
    if n < 0:
        return []
    if n == 0:
        return [()]
    out = []

    def rec(remaining, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for part in range(remaining, 0, -1):
            prefix.append(part)
            rec(remaining - part, prefix)
            prefix.pop()

    rec(n, [])
    return out


def subpartitions(p):
    """Every partition contained in p, any size, in canonical-per-row order."""
    results = []

    def rec(i, prev, prefix):
        if i == len(p):
            results.append(tuple(prefix))
            return
        for a in range(min(prev, p[i]), 0, -1):
            prefix.append(a)
            rec(i + 1, a, prefix)
            prefix.pop()
        results.append(tuple(prefix))

    rec(0, p[0] if p else 0, [])
    return results


def add_horizontal_strips(p, r):
    """All partitions q >= p with q/p a horizontal r-strip."""
    results = []
    n = len(p)

    def rec(i, budget, prefix):
        if i == n:
            if budget == 0:
                results.append(tuple(prefix))
            elif n == 0:
                results.append((budget,))
            elif budget <= p[n - 1]:
                # at most one new row; interleaving caps it at the last part of p
                results.append(tuple(prefix) + (budget,))
            return
        hi = p[i] + budget if i == 0 else min(p[i - 1], p[i] + budget)
        for q in range(hi, p[i] - 1, -1):
            prefix.append(q)
            rec(i + 1, budget - (q - p[i]), prefix)
            prefix.pop()

    rec(0, r, [])
    return results


def add_vertical_strips(p, r):
    """All partitions q >= p with q/p a vertical r-strip."""
    results = []
    n = len(p)

    def rec(i, budget, prefix):
        if i == n:
            if budget == 0:
                results.append(tuple(prefix))
            else:
                results.append(tuple(prefix) + (1,) * budget)
            return
        for a in (1, 0):
            if a > budget:
                continue
            q = p[i] + a
            if i > 0 and q > prefix[i - 1]:
                continue
            prefix.append(q)
            rec(i + 1, budget - a, prefix)
            prefix.pop()

    rec(0, r, [])
    return results


def remove_horizontal_strips(p, r):
    """All partitions q <= p with p/q a horizontal r-strip."""
    results = []
    n = len(p)

    def rec(i, budget, prefix):
        if i == n:
            if budget == 0:
                results.append(tuple(x for x in prefix if x > 0))
            return
        lo = p[i + 1] if i + 1 < n else 0
        for q in range(p[i], lo - 1, -1):
            if p[i] - q > budget:
                break
            prefix.append(q)
            rec(i + 1, budget - (p[i] - q), prefix)
            prefix.pop()

    rec(0, r, [])
    return results


def remove_vertical_strips(p, r):
    """All partitions q <= p with p/q a vertical r-strip."""
    results = []
    n = len(p)

    def rec(i, budget, prefix):
        if i == n:
            if budget == 0:
                results.append(tuple(x for x in prefix if x > 0))
            return
        for a in (0, 1):
            if a > budget or p[i] - a < 0:
                continue
            q = p[i] - a
            if i > 0 and q > prefix[i - 1]:
                continue
            prefix.append(q)
            rec(i + 1, budget - a, prefix)
            prefix.pop()

    rec(0, r, [])
    return results


def partition_str(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def composition_str(p) -> str:
    return "(" + ",".join(str(x) for x in p) + ")"


def descent_set(alpha):
    """Partial sums of a composition, the last one omitted."""
    return set(accumulate(alpha[:-1]))


def composition_from_descent_set(s, n):
    parts = []
    prev = 0
    for x in sorted(s) + [n]:
        parts.append(x - prev)
        prev = x
    return tuple(x for x in parts if x > 0) if n else ()
