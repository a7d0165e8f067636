"""k-bounded partitions, cores, weak strips, and the k-Schur basis.

The basis is pinned down by the weak Pieri rule: multiplying by a
generator h_r adds weak strips. Iterating that rule expands h monomials,
and inverting the resulting unitriangular transition gives every k-Schur
function in h coordinates, where products and coproducts are cheap.
"""

from __future__ import annotations

import functools

from .hopf import Element, HopfBasisSpec, SkewSum, skew_expand
from .schur import ClassicalBasisElement
from .shapes import (add_horizontal_strips, canonical_key, conjugate, contains,
                     enumerate_partitions, is_horizontal_strip, is_partition,
                     is_vertical_strip, partition_str, remove_vertical_strips)


def _check_k_bounded(lam, k):
    if not is_partition(lam):
        raise ValueError("not a partition: %r" % (lam,))
    if lam and lam[0] > k:
        raise ValueError("partition %r has a part above %d" % (lam, k))


def _hook(outer, i, c):
    arm = outer[i] - c - 1
    leg = sum(1 for j in range(i + 1, len(outer)) if outer[j] > c)
    return arm + leg + 1


@functools.cache
def core_from_kbounded(lam, k):
    """The (k+1)-core whose short-hook rows have the lengths of lam.

    Rows are built bottom up: each new top row takes the least length
    that avoids hooks of k+1 and leaves exactly the prescribed number of
    cells with hook at most k.
    """
    lam = tuple(lam)
    _check_k_bounded(lam, k)
    rows = []
    for part in reversed(lam):
        below = rows[0] if rows else 0
        length = below
        while True:
            if length > below + part * (k + 1) + k:
                raise RuntimeError("row search failed at %r" % (lam,))
            cand = (length,) + tuple(rows)
            hooks = [_hook(cand, 0, c) for c in range(length)]
            if (k + 1) not in hooks and sum(1 for h in hooks if h <= k) == part:
                break
            length += 1
        rows.insert(0, length)
    return tuple(rows)


@functools.cache
def kbounded_from_core(core, k):
    """Row lengths of the cells with hook at most k; rejects non-cores."""
    core = tuple(core)
    if not is_partition(core):
        raise ValueError("not a partition: %r" % (core,))
    for i in range(len(core)):
        for c in range(core[i]):
            if _hook(core, i, c) == k + 1:
                raise ValueError("%r has a hook of %d" % (core, k + 1))
    out = tuple(sum(1 for c in range(core[i]) if _hook(core, i, c) <= k)
                for i in range(len(core)))
    if not is_partition(out):
        raise RuntimeError("short-hook counts of %r are not a partition" % (core,))
    return out


@functools.cache
def k_conjugate(lam, k):
    """Conjugate through the core: transpose the core, then read back."""
    return kbounded_from_core(conjugate(core_from_kbounded(tuple(lam), k)), k)


def is_weak_strip(lam, mu, r, k) -> bool:
    """True iff mu/lam is a horizontal r-strip and the k-conjugates differ
    by a vertical r-strip. Strips larger than k never qualify."""
    lam, mu = tuple(lam), tuple(mu)
    _check_k_bounded(lam, k)
    _check_k_bounded(mu, k)
    if r < 0 or r > k:
        return False
    if not is_horizontal_strip(lam, mu, r):
        return False
    return is_vertical_strip(k_conjugate(lam, k), k_conjugate(mu, k), r)


def k_pieri(lam, r, k):
    """All mu reached from lam by a weak r-strip, in canonical order."""
    lam = tuple(lam)
    _check_k_bounded(lam, k)
    if r < 0 or r > k:
        raise ValueError("strip size %d out of range for k=%d" % (r, k))
    out = []
    for mu in add_horizontal_strips(lam, r):
        if mu and mu[0] > k:
            continue
        if is_vertical_strip(k_conjugate(lam, k), k_conjugate(mu, k), r):
            out.append(mu)
    return out


@functools.cache
def _h_to_kschur_table(k, n):
    """h monomials of degree n expanded over the k-Schur basis."""
    out = {}
    for lam in enumerate_partitions(n, max_part=k):
        acc = {(): 1}
        for r in lam:
            nxt = {}
            for mu, c in acc.items():
                for up in k_pieri(mu, r, k):
                    nxt[up] = nxt.get(up, 0) + c
            acc = nxt
        out[lam] = acc
    return out


@functools.cache
def _kschur_to_h_table(k, n):
    """Inverse transition: each k-Schur function as an h combination.

    The forward matrix must be unitriangular in canonical order; the
    inverse comes from back substitution and stays integral.
    """
    basis = enumerate_partitions(n, max_part=k)
    pos = {p: i for i, p in enumerate(basis)}
    fwd = _h_to_kschur_table(k, n)
    m = len(basis)
    mat = [[0] * m for _ in range(m)]
    for j, lam in enumerate(basis):
        for mu, c in fwd[lam].items():
            i = pos[mu]
            if i > j or (i == j and c != 1):
                raise RuntimeError("transition not unitriangular at %r" % (lam,))
            mat[i][j] = c
    out = {}
    for j, lam in enumerate(basis):
        x = [0] * m
        x[j] = 1
        for i in range(j - 1, -1, -1):
            acc = 0
            for t in range(i + 1, j + 1):
                if mat[i][t] and x[t]:
                    acc += mat[i][t] * x[t]
            x[i] = -acc
        out[lam] = {basis[i]: x[i] for i in range(m) if x[i]}
    return out


def h_in_kschur(lam, k) -> Element:
    """The h monomial of a k-bounded partition in k-Schur coordinates."""
    lam = tuple(lam)
    _check_k_bounded(lam, k)
    return Element(_h_to_kschur_table(k, sum(lam))[lam])


def kschur_in_h(lam, k) -> ClassicalBasisElement:
    """A k-Schur function written in h coordinates."""
    lam = tuple(lam)
    _check_k_bounded(lam, k)
    return ClassicalBasisElement("h", _kschur_to_h_table(k, sum(lam))[lam])


@functools.cache
def _h_coproduct_split(part):
    """Coproduct of an h monomial: every split of each generator."""
    acc = {((), ()): 1}
    for n in part:
        nxt = {}
        for (left, right), c in acc.items():
            for i in range(n + 1):
                l2 = left + (i,) if i else left
                r2 = right + (n - i,) if n - i else right
                key = (l2, r2)
                nxt[key] = nxt.get(key, 0) + c
        acc = nxt
    out = {}
    for (left, right), c in acc.items():
        key = (tuple(sorted(left, reverse=True)), tuple(sorted(right, reverse=True)))
        out[key] = out.get(key, 0) + c
    return out


class KSchurSpec(HopfBasisSpec):
    def __init__(self, k):
        super().__init__()
        self.k = k
        self.name = "kschur%d" % k

    def _basis(self, n):
        return enumerate_partitions(n, max_part=self.k)

    def _product(self, lam, mu):
        k = self.k
        hl = _kschur_to_h_table(k, sum(lam))[lam]
        hm = _kschur_to_h_table(k, sum(mu))[mu]
        hp = {}
        for a, ca in hl.items():
            for b, cb in hm.items():
                key = tuple(sorted(a + b, reverse=True))
                hp[key] = hp.get(key, 0) + ca * cb
        n = sum(lam) + sum(mu)
        fwd = _h_to_kschur_table(k, n)
        out = {}
        for hpart, c in hp.items():
            for nu, v in fwd[hpart].items():
                out[nu] = out.get(nu, 0) + c * v
        return out

    def _coproduct(self, nu):
        k = self.k
        out = {}
        for hpart, c in _kschur_to_h_table(k, sum(nu))[nu].items():
            for (left, right), m in _h_coproduct_split(hpart).items():
                lexp = _h_to_kschur_table(k, sum(left))[left]
                rexp = _h_to_kschur_table(k, sum(right))[right]
                for a, ca in lexp.items():
                    for b, cb in rexp.items():
                        key = (a, b)
                        out[key] = out.get(key, 0) + c * m * ca * cb
        return {key: v for key, v in out.items() if v}

    def antipode_index(self, idx):
        return k_conjugate(idx, self.k)

    def index_str(self, idx):
        return "sk%d%s" % (self.k, partition_str(idx))


@functools.cache
def kschur_spec(k) -> KSchurSpec:
    if k < 1:
        raise ValueError("k must be positive")
    return KSchurSpec(k)


def kschur_constants(lam, mu, k):
    return dict(kschur_spec(k).product_constants(tuple(lam), tuple(mu)))


def kschur_coproduct_constants(nu, k):
    return dict(kschur_spec(k).coproduct_constants(tuple(nu)))


def skew_kschur(outer, inner, k) -> Element:
    """Skew k-Schur element outer/inner expanded in the k-Schur basis."""
    return skew_expand(tuple(outer), tuple(inner), kschur_spec(k))


def skew_k_pieri(lam, mu, r, k) -> SkewSum:
    """Signed skew expansion of (mu/lam) * h_r by weak strips.

    Grows mu by a weak i-strip and shrinks lam so the k-conjugates lose a
    weak j-strip, over all i + j = r, with sign (-1)^j.
    """
    lam, mu = tuple(lam), tuple(mu)
    _check_k_bounded(lam, k)
    _check_k_bounded(mu, k)
    if r < 0 or r > k:
        raise ValueError("strip size %d out of range for k=%d" % (r, k))
    if not contains(mu, lam):
        raise ValueError("%r is not contained in %r" % (lam, mu))
    out = SkewSum()
    for j in range(r + 1):
        i = r - j
        downs = [lm for lm in remove_vertical_strips(lam, j)
                 if is_weak_strip(k_conjugate(lm, k), k_conjugate(lam, k), j, k)]
        if not downs:
            continue
        sign = -1 if j % 2 else 1
        for mp in k_pieri(mu, i, k):
            for lm in downs:
                out.add(mp, lm, sign)
    return out
