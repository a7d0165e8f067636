"""The self-dual algebra of symmetric functions in its Schur basis.

Products and coproducts both count lattice fillings; the classical m, h,
e, p bases are supported through exact change-of-basis against the Schur
pivot.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .hopf import Element, HopfBasisSpec, SkewSum
from .linalg import LinearSolver
from .shapes import (add_horizontal_strips, add_vertical_strips, canonical_key,
                     conjugate, contains, enumerate_partitions, partition_str,
                     subpartitions)
from .tableaux import (count_lattice_fillings, enumerate_tableaux,
                       enumerate_tableaux_bounded, insert,
                       lattice_content_counts, yamanouchi_tableau)


class SchurSpec(HopfBasisSpec):
    name = "schur"

    def _basis(self, n):
        return enumerate_partitions(n)

    def _product(self, lam, mu):
        n = sum(lam) + sum(mu)
        out = {}
        for nu in enumerate_partitions(n):
            if not contains(nu, lam):
                continue
            c = count_lattice_fillings(nu, lam, mu)
            if c:
                out[nu] = c
        return out

    def _skew_slice(self, outer, inner):
        if not contains(outer, inner):
            return {}
        return lattice_content_counts(outer, inner)

    def antipode_index(self, idx):
        return conjugate(idx)

    def index_str(self, idx):
        return "s" + partition_str(idx)


@functools.cache
def schur_spec() -> SchurSpec:
    return SchurSpec()


TAGS = ("m", "h", "e", "p", "s")


class ClassicalBasisElement:
    """A symmetric function written in one classical basis."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag, terms=None):
        if tag not in TAGS:
            raise ValueError("unknown basis tag %r" % tag)
        self.tag = tag
        data = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for k, v in items:
                if v:
                    k = tuple(k)
                    data[k] = data.get(k, 0) + v
        self.terms = {k: v for k, v in data.items() if v}

    @classmethod
    def basis(cls, tag, idx):
        return cls(tag, {tuple(idx): 1})

    def scaled(self, c):
        return ClassicalBasisElement(self.tag, {k: c * v for k, v in self.terms.items()})

    def __add__(self, other):
        if self.tag != other.tag:
            raise ValueError("cannot add %s-terms to %s-terms" % (other.tag, self.tag))
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return ClassicalBasisElement(self.tag, out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def __eq__(self, other):
        return (isinstance(other, ClassicalBasisElement)
                and self.tag == other.tag and self.terms == other.terms)

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __repr__(self):
        if not self.terms:
            return "CBE(%s, 0)" % self.tag
        bits = ["%s*%s%r" % (c, self.tag, k) for k, c in self.sorted_terms()]
        return "CBE(" + " + ".join(bits) + ")"


def _s_mult(d1, d2):
    spec = schur_spec()
    out = {}
    for a, ca in d1.items():
        for b, cb in d2.items():
            c = ca * cb
            for k, v in spec.product_constants(a, b).items():
                out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


@functools.cache
def _h_to_s(part):
    out = {(): 1}
    for r in part:
        nxt = {}
        for mu, c in out.items():
            for nu in add_horizontal_strips(mu, r):
                nxt[nu] = nxt.get(nu, 0) + c
        out = nxt
    return out


@functools.cache
def _e_to_s(part):
    out = {(): 1}
    for r in part:
        nxt = {}
        for mu, c in out.items():
            for nu in add_vertical_strips(mu, r):
                nxt[nu] = nxt.get(nu, 0) + c
        out = nxt
    return out


@functools.cache
def _p_to_h(n):
    """Power sum in complete homogeneous coordinates, by the Newton recurrence."""
    if n == 0:
        return {(): 1}
    out = {(n,): n}
    for i in range(1, n):
        for part, c in _p_to_h(i).items():
            key = tuple(sorted(part + (n - i,), reverse=True))
            out[key] = out.get(key, 0) - c
    return {k: v for k, v in out.items() if v}


@functools.cache
def _p_part_to_s(part):
    acc = {(): 1}
    for n in part:
        step = {}
        for hpart, c in _p_to_h(n).items():
            for k, v in _h_to_s(hpart).items():
                step[k] = step.get(k, 0) + c * v
        acc = _s_mult(acc, step)
    return acc


@functools.cache
def _kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    return len(enumerate_tableaux(lam, (), mu))


@functools.cache
def _from_s_solver(tag, n):
    parts = enumerate_partitions(n)
    if tag == "h":
        cols = [_h_to_s(p) for p in parts]
    elif tag == "e":
        cols = [_e_to_s(p) for p in parts]
    elif tag == "p":
        cols = [_p_part_to_s(p) for p in parts]
    elif tag == "m":
        # columns are the m-expansions of the Schur basis
        cols = [{mu: _kostka(lam, mu) for mu in parts if _kostka(lam, mu)}
                for lam in parts]
    else:
        raise ValueError(tag)
    return parts, LinearSolver(cols)


def _to_s(x: ClassicalBasisElement) -> dict:
    if x.tag == "s":
        return dict(x.terms)
    out = {}
    if x.tag == "m":
        # group by degree and solve against the m-expansions of Schur terms
        by_deg = {}
        for k, v in x.terms.items():
            by_deg.setdefault(sum(k), {})[k] = v
        for n, target in by_deg.items():
            parts, solver = _from_s_solver("m", n)
            coeffs = solver.solve(target)
            if coeffs is None:
                raise ArithmeticError("inconsistent m-expansion")
            for lam, c in zip(parts, coeffs):
                if c:
                    out[lam] = out.get(lam, 0) + c
        return out
    table = {"h": _h_to_s, "e": _e_to_s, "p": _p_part_to_s}[x.tag]
    for k, v in x.terms.items():
        for lam, c in table(k).items():
            out[lam] = out.get(lam, 0) + v * c
    return {k: v for k, v in out.items() if v}


def _from_s(sdict, tag) -> dict:
    if tag == "s":
        return dict(sdict)
    out = {}
    if tag == "m":
        parts_seen = {}
        for lam, c in sdict.items():
            n = sum(lam)
            for mu in parts_seen.setdefault(n, enumerate_partitions(n)):
                k = _kostka(lam, mu)
                if k:
                    out[mu] = out.get(mu, 0) + c * k
        return {k: v for k, v in out.items() if v}
    by_deg = {}
    for k, v in sdict.items():
        by_deg.setdefault(sum(k), {})[k] = v
    for n, target in by_deg.items():
        parts, solver = _from_s_solver(tag, n)
        coeffs = solver.solve(target)
        if coeffs is None:
            raise ArithmeticError("element has no exact %s-expansion" % tag)
        for part, c in zip(parts, coeffs):
            if c:
                out[part] = out.get(part, 0) + c
    return out


def basis_convert(x: ClassicalBasisElement, target: str) -> ClassicalBasisElement:
    """Exact change of basis between m, h, e, p, s coordinates."""
    if target not in TAGS:
        raise ValueError("unknown basis tag %r" % target)
    if x.tag == target:
        return ClassicalBasisElement(target, dict(x.terms))
    return ClassicalBasisElement(target, _from_s(_to_s(x), target))


def hall_pair(x: ClassicalBasisElement, y: ClassicalBasisElement):
    """The pairing in which the Schur basis is orthonormal."""
    xs = _to_s(x)
    ys = _to_s(y)
    acc = 0
    for k, v in xs.items():
        w = ys.get(k)
        if w:
            acc += v * w
    return acc


def classical_multiply(x: ClassicalBasisElement, y: ClassicalBasisElement):
    """Product of symmetric functions.

    Same-tag h, e, p inputs multiply by part concatenation; anything else
    goes through Schur coordinates.
    """
    if x.tag == y.tag and x.tag in ("h", "e", "p"):
        out = {}
        for a, ca in x.terms.items():
            for b, cb in y.terms.items():
                k = tuple(sorted(a + b, reverse=True))
                out[k] = out.get(k, 0) + ca * cb
        return ClassicalBasisElement(x.tag, out)
    return ClassicalBasisElement("s", _s_mult(_to_s(x), _to_s(y)))


def schur_element(x: ClassicalBasisElement) -> Element:
    return Element(_to_s(x))


def coproduct_skew(tau, sigma):
    """Tensor constants of the skew Schur element tau/sigma by tableau
    counting: triples (R1, R2, S) of straight shapes with S of shape
    sigma whose star product rectifies to the Yamanouchi tableau of tau.

    Returns a mapping (shape of R1, shape of R2) -> count.
    """
    tau, sigma = tuple(tau), tuple(sigma)
    if not contains(tau, sigma):
        return {}
    target = yamanouchi_tableau(tau)
    free = sum(tau) - sum(sigma)
    out = {}
    for a in range(free + 1):
        for pi in enumerate_partitions(a):
            for r1 in enumerate_tableaux_bounded(pi, (), tau):
                rest1 = list(tau)
                for i, x in enumerate(r1.content()):
                    rest1[i] -= x
                for rho in enumerate_partitions(free - a):
                    for r2 in enumerate_tableaux_bounded(rho, (), tuple(rest1)):
                        rest2 = rest1[:]
                        for i, x in enumerate(r2.content()):
                            rest2[i] -= x
                        for s in enumerate_tableaux(sigma, (), tuple(rest2)):
                            word = r1.row_word() + r2.row_word() + s.row_word()
                            if insert(word) == target:
                                out[(pi, rho)] = out.get((pi, rho), 0) + 1
    return out


def skew_lr_combinatorial(lam, mu, sigma, tau) -> SkewSum:
    """Signed skew expansion of (mu/lam) * (tau/sigma) by tableau counting.

    Counts triples (S1, S2, S) of semistandard tableaux, where S1 has the
    conjugate shape of lam over a smaller shape, S2 grows mu, S has shape
    sigma, and the star product of the three rectifies to the Yamanouchi
    tableau of tau. Each triple contributes with sign (-1)^|S1|.
    """
    lam, mu, sigma, tau = tuple(lam), tuple(mu), tuple(sigma), tuple(tau)
    out = SkewSum()
    if not contains(mu, lam) or not contains(tau, sigma):
        return out
    free = sum(tau) - sum(sigma)
    if free < 0:
        return out
    target = yamanouchi_tableau(tau)
    lam_c = conjugate(lam)
    by_size = {}
    for sub in subpartitions(lam):
        by_size.setdefault(sum(lam) - sum(sub), []).append(sub)
    for a in range(min(free, sum(lam)) + 1):
        b = free - a
        uppers = [up for up in enumerate_partitions(sum(mu) + b) if contains(up, mu)]
        for lam_minus in by_size.get(a, ()):
            shape1 = (lam_c, conjugate(lam_minus))
            for s1 in enumerate_tableaux_bounded(shape1[0], shape1[1], tau):
                rest1 = list(tau)
                for i, x in enumerate(s1.content()):
                    rest1[i] -= x
                sign = -1 if a % 2 else 1
                for mu_plus in uppers:
                    for s2 in enumerate_tableaux_bounded(mu_plus, mu, tuple(rest1)):
                        rest2 = rest1[:]
                        for i, x in enumerate(s2.content()):
                            rest2[i] -= x
                        for s in enumerate_tableaux(sigma, (), tuple(rest2)):
                            word = s1.row_word() + s2.row_word() + s.row_word()
                            if insert(word) == target:
                                out.add(mu_plus, lam_minus, sign)
    return out
