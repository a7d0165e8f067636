"""The self-dual algebra spanned by odd power sums, in its Q and P bases.

Q functions are built two independent ways (a Pfaffian-style expansion
over two-row cases, and orthogonalization of q-monomials) and the two
must agree. Internally everything runs in power-sum coordinates, where
the bilinear form is diagonal.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .hopf import DualSpec, Element, HopfBasisSpec, SkewSum, skew_expand, skew_product_theorem
from .linalg import LinearSolver
from .schur import ClassicalBasisElement, basis_convert
from .shapes import enumerate_partitions, is_strict_partition, partition_str


def z_weight(part) -> int:
    """Size of the centralizer class: product of i^m_i * m_i!."""
    out = 1
    mult = {}
    for x in part:
        mult[x] = mult.get(x, 0) + 1
    for i, m in mult.items():
        out *= i ** m
        for j in range(1, m + 1):
            out *= j
    return out


@functools.cache
def _h_in_p(n):
    return {lam: Fraction(1, z_weight(lam)) for lam in enumerate_partitions(n)}


@functools.cache
def _e_in_p(n):
    return {lam: Fraction((-1) ** (n - len(lam)), z_weight(lam))
            for lam in enumerate_partitions(n)}


def _p_mult(d1, d2):
    out = {}
    for a, ca in d1.items():
        for b, cb in d2.items():
            k = tuple(sorted(a + b, reverse=True))
            out[k] = out.get(k, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


@functools.cache
def _q_in_p(n):
    """Generator q_n in power-sum coordinates: the h e convolution."""
    out = {}
    for i in range(n + 1):
        for k, v in _p_mult(_h_in_p(i), _e_in_p(n - i)).items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


@functools.cache
def _q_monomial_p(part):
    acc = {(): Fraction(1)}
    for n in part:
        acc = _p_mult(acc, _q_in_p(n))
    return acc


def _pair_p(d1, d2):
    """Diagonal pairing of power sums: z(lam) / 2^len(lam) on the diagonal."""
    acc = Fraction(0)
    for k, v in d1.items():
        w = d2.get(k)
        if w:
            acc += v * w * Fraction(z_weight(k), 2 ** len(k))
    return acc


@functools.cache
def _q_table_p(n):
    """Q functions of degree n in power-sum coordinates, by
    orthogonalizing q-monomials in canonical order."""
    out = {}
    for lam in enumerate_partitions(n, strict=True):
        v = dict(_q_monomial_p(lam))
        for mu, q in out.items():
            coef = _pair_p(v, q) / _pair_p(q, q)
            if coef:
                for k, w in q.items():
                    v[k] = v.get(k, 0) - coef * w
        v = {k: w for k, w in v.items() if w}
        norm = _pair_p(v, v)
        if norm != Fraction(2 ** len(lam)):
            raise ArithmeticError(
                "orthogonalization produced the wrong norm %s at %s" % (norm, lam))
        out[lam] = v
    return out


def _q_p(lam):
    return _q_table_p(sum(lam))[lam]


# ---- independent construction in Schur coordinates ----

def _s_mult(d1, d2):
    from .schur import _s_mult as mult
    return mult(d1, d2)


@functools.cache
def _q_in_s(n):
    from .schur import _e_to_s, _h_to_s
    out = {}
    for i in range(n + 1):
        for k, v in _s_mult(_h_to_s((i,) if i else ()),
                            _e_to_s((n - i,) if n - i else ())).items():
            out[k] = out.get(k, 0) + v
    return {k: v for k, v in out.items() if v}


@functools.cache
def _q_two_row_s(a, b):
    """Two-row Q function: alternating convolution of generators."""
    if b == 0:
        return _q_in_s(a)
    out = dict(_s_mult(_q_in_s(a), _q_in_s(b)))
    for i in range(1, b + 1):
        sign = -1 if i % 2 else 1
        for k, v in _s_mult(_q_in_s(a + i), _q_in_s(b - i)).items():
            out[k] = out.get(k, 0) + 2 * sign * v
    return {k: v for k, v in out.items() if v}


@functools.cache
def _q_pfaffian_s(lam):
    """Q function by expanding along the first row of the two-row array."""
    if len(lam) == 0:
        return {(): 1}
    if len(lam) == 1:
        return _q_in_s(lam[0])
    seq = lam if len(lam) % 2 == 0 else lam + (0,)
    return _pf_expand(seq)


@functools.cache
def _pf_expand(seq):
    if not seq:
        return {(): 1}
    out = {}
    for j in range(1, len(seq)):
        sign = -1 if j % 2 == 0 else 1
        block = _q_two_row_s(seq[0], seq[j])
        rest = _pf_expand(seq[1:j] + seq[j + 1:])
        for k, v in _s_mult(block, rest).items():
            out[k] = out.get(k, 0) + sign * v
    return {k: v for k, v in out.items() if v}


def q_generator(n) -> ClassicalBasisElement:
    """The degree-n generator, as a Schur expansion."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return ClassicalBasisElement("s", _q_in_s(n))


def build_Q(lam) -> ClassicalBasisElement:
    """Q function of a strict partition, as a Schur expansion.

    Computed independently by the two-row expansion and by
    orthogonalization; a mismatch aborts.
    """
    lam = tuple(lam)
    if not is_strict_partition(lam):
        raise ValueError("index must be a strict partition")
    a = _q_pfaffian_s(lam)
    b = basis_convert(ClassicalBasisElement("p", _q_p(lam)), "s").terms
    if a != b:
        raise ArithmeticError("the two Q constructions disagree at %s" % (lam,))
    for k, v in a.items():
        if v != int(v):
            raise ArithmeticError("non-integral Schur coefficient at %s" % (lam,))
    return ClassicalBasisElement("s", {k: int(v) for k, v in a.items()})


@functools.cache
def _q_solver(n):
    parts = enumerate_partitions(n, strict=True)
    return parts, LinearSolver([_q_p(p) for p in parts])


def _solve_q(target_p):
    """Write a power-sum mapping as an integer Q combination."""
    by_deg = {}
    for k, v in target_p.items():
        by_deg.setdefault(sum(k), {})[k] = v
    out = {}
    for n, tgt in by_deg.items():
        parts, solver = _q_solver(n)
        coeffs = solver.solve(tgt)
        if coeffs is None:
            raise ArithmeticError("element lies outside the Q span")
        for part, c in zip(parts, coeffs):
            if c:
                if c.denominator != 1:
                    raise ArithmeticError("non-integral Q coefficient %s at %s" % (c, part))
                out[part] = int(c)
    return out


class QSpec(HopfBasisSpec):
    name = "q"

    def _basis(self, n):
        return enumerate_partitions(n, strict=True)

    def _product(self, lam, mu):
        out = _solve_q(_p_mult(_q_p(lam), _q_p(mu)))
        for k, v in out.items():
            if v < 0:
                raise ArithmeticError("negative product constant at %s" % (k,))
        return out

    def _coproduct(self, nu):
        # split each power-sum monomial across the tensor factors, then
        # resolve both slots into Q coordinates degree split by split
        tens = {}
        for pkey, c in _q_p(nu).items():
            split = {((), ()): c}
            for part in pkey:
                nxt = {}
                for (left, right), v in split.items():
                    kl = (left + (part,), right)
                    nxt[kl] = nxt.get(kl, 0) + v
                    kr = (left, right + (part,))
                    nxt[kr] = nxt.get(kr, 0) + v
                split = nxt
            for (left, right), v in split.items():
                k = (tuple(sorted(left, reverse=True)), tuple(sorted(right, reverse=True)))
                tens[k] = tens.get(k, 0) + v
        by_split = {}
        for (left, right), v in tens.items():
            if v:
                by_split.setdefault((sum(left), sum(right)), {})[(left, right)] = v
        out = {}
        for (d1, d2), block in by_split.items():
            parts1, solver1 = _q_solver(d1)
            # stage one: resolve the left slot for each fixed right monomial
            stage = {}
            right_keys = sorted({r for (_, r) in block})
            for r in right_keys:
                tgt = {l: v for (l, rr), v in block.items() if rr == r}
                coeffs = solver1.solve(tgt)
                if coeffs is None:
                    raise ArithmeticError("coproduct leaves the Q span (left slot)")
                for lam, c in zip(parts1, coeffs):
                    if c:
                        stage.setdefault(lam, {})[r] = c
            parts2, solver2 = _q_solver(d2)
            for lam, tgt in stage.items():
                coeffs = solver2.solve(tgt)
                if coeffs is None:
                    raise ArithmeticError("coproduct leaves the Q span (right slot)")
                for mu, c in zip(parts2, coeffs):
                    if c:
                        if c.denominator != 1 or c < 0:
                            raise ArithmeticError(
                                "bad coproduct constant %s at %s" % (c, (lam, mu)))
                        out[(lam, mu)] = int(c)
        return out

    def antipode_index(self, idx):
        return idx

    def index_str(self, idx):
        return "Q" + partition_str(idx)


@functools.cache
def q_spec() -> QSpec:
    spec = QSpec()
    spec._dual_spec = DualSpec(spec, name="p_schur",
                               index_str=lambda idx: "P" + partition_str(idx))
    return spec


def p_spec() -> DualSpec:
    return q_spec().dual()


def f_constants(lam, mu):
    """Tensor constants: coefficient mappings nu -> f with Q_nu selecting
    Q_lam x Q_mu in its coproduct."""
    lam, mu = tuple(lam), tuple(mu)
    spec = q_spec()
    n = sum(lam) + sum(mu)
    out = {}
    for nu in spec.basis(n):
        c = spec.coproduct_constants(nu).get((lam, mu))
        if c:
            out[nu] = c
    return out


def g_constants(lam, mu):
    """Product constants: Q_lam Q_mu = sum g Q_nu."""
    return dict(q_spec().product_constants(tuple(lam), tuple(mu)))


def omega_pair(x: ClassicalBasisElement, y: ClassicalBasisElement):
    """The pairing with diagonal z(lam)/2^len(lam) on odd power sums.

    Inputs whose power-sum support contains an even part are rejected.
    """
    xp = basis_convert(x, "p").terms
    yp = basis_convert(y, "p").terms
    for d in (xp, yp):
        for k in d:
            if any(part % 2 == 0 for part in k):
                raise ValueError("element lies outside the odd power-sum span")
    return _pair_p(xp, yp)


def skew_Q(nu, mu) -> Element:
    """Skew Q element nu/mu expanded in the Q basis."""
    return skew_expand(tuple(nu), tuple(mu), q_spec())


def skew_product_Q(lam, mu, sigma, tau, p_side=False) -> SkewSum:
    """Signed skew expansion of (mu/lam) * (tau/sigma) on the Q side, or
    on the P side when p_side is set."""
    spec = p_spec() if p_side else q_spec()
    return skew_product_theorem(tuple(lam), tuple(mu), tuple(sigma), tuple(tau), spec)
