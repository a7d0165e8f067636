"""Batch verification sweeps shared by the test suite and the CLI."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import kschur, qfunctions, ribbons, schur
from .hopf import (Element, comultiply, evaluate_skew_sum, multiply,
                   skew_product_oracle, skew_product_theorem, verify_hopf_axioms,
                   verify_lemma_one)
from .shapes import enumerate_compositions, enumerate_partitions, subpartitions


ALGEBRAS = ("schur", "q", "p", "ribbon", "fundamental", "kschur")


def get_spec(name, k=None):
    if name == "schur":
        return schur.schur_spec()
    if name == "q":
        return qfunctions.q_spec()
    if name == "p":
        return qfunctions.p_spec()
    if name == "ribbon":
        return ribbons.ribbon_spec()
    if name == "fundamental":
        return ribbons.fundamental_spec()
    if name == "kschur":
        if k is None:
            raise ValueError("the kschur algebra needs k")
        return kschur.kschur_spec(k)
    raise ValueError("unknown algebra %r" % name)


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""


def containment_pairs(name, max_outer, k=None):
    """Pairs (inner, outer) with the inner shape inside the outer one.

    For compositions the inner candidates are the trailing pieces of the
    outer ribbon's cuts.
    """
    pairs = []
    if name in ("ribbon", "fundamental"):
        for n in range(max_outer + 1):
            for outer in enumerate_compositions(n):
                seen = set()
                for _, tail in ribbons.ribbon_factorizations(outer):
                    if tail not in seen:
                        seen.add(tail)
                        pairs.append((tail, outer))
        return pairs
    for n in range(max_outer + 1):
        if name == "schur":
            outers = enumerate_partitions(n)
        elif name in ("q", "p"):
            outers = enumerate_partitions(n, strict=True)
        elif name == "kschur":
            outers = enumerate_partitions(n, max_part=k)
        else:
            raise ValueError(name)
        for outer in outers:
            for inner in subpartitions(outer):
                if name in ("q", "p") and any(
                        a == b for a, b in zip(inner, inner[1:])):
                    continue
                pairs.append((inner, outer))
    return pairs


def check_skew_products(name, max_degree, k=None, pairs=None) -> CheckResult:
    """Engine-against-oracle sweep over quadruples of contained shapes."""
    spec = get_spec(name, k)
    if pairs is None:
        pairs = containment_pairs(name, max_degree, k)
    checked = 0
    for lam, mu in pairs:
        for sigma, tau in pairs:
            got = evaluate_skew_sum(skew_product_theorem(lam, mu, sigma, tau, spec), spec)
            want = skew_product_oracle(lam, mu, sigma, tau, spec)
            checked += 1
            if got != want:
                return CheckResult(
                    "skew-products[%s]" % name, False, checked,
                    "mismatch at %s/%s * %s/%s" % (mu, lam, tau, sigma))
    return CheckResult("skew-products[%s]" % name, True, checked)


def check_axioms(name, max_degree, k=None) -> CheckResult:
    spec = get_spec(name, k)
    report = verify_hopf_axioms(spec, max_degree)
    return CheckResult("axioms[%s]" % name, report.passed, report.checks,
                       report.failure or "")


def random_element(rng, degrees, basis_of, max_terms=3) -> Element:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        n = rng.choice(degrees)
        pool = basis_of(n)
        idx = pool[rng.randrange(len(pool))]
        c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
        if c:
            terms[idx] = terms.get(idx, 0) + c
    return Element(terms)


def check_lemma_one(max_total_degree=5, n_random=100, seed=20240901) -> CheckResult:
    """The two crossed identities on Schur basis triples and on random
    rational combinations."""
    spec = schur.schur_spec()
    dual = spec.dual()
    checked = 0
    for n1 in range(max_total_degree + 1):
        for g in enumerate_partitions(n1):
            for n2 in range(max_total_degree + 1 - n1):
                for h in enumerate_partitions(n2):
                    for n3 in range(max_total_degree + 1 - n1 - n2):
                        for a in enumerate_partitions(n3):
                            checked += 1
                            if not verify_lemma_one(g, h, a, spec, dual):
                                return CheckResult(
                                    "lemma-one", False, checked,
                                    "fails at g=%s h=%s a=%s" % (g, h, a))
    rng = random.Random(seed)
    degrees = (0, 1, 2, 3, 4)
    for _ in range(n_random):
        g = random_element(rng, degrees, spec.basis)
        h = random_element(rng, degrees, spec.basis)
        a = random_element(rng, degrees, spec.basis)
        checked += 1
        if not verify_lemma_one(g, h, a, spec, dual):
            return CheckResult("lemma-one", False, checked,
                               "fails on a random combination (seed %d)" % seed)
    return CheckResult("lemma-one", True, checked)


def check_duality(max_degree) -> CheckResult:
    """Orthogonality of P against Q, the two Q constructions, and the
    power-of-two scaling between the two families of constants."""
    checked = 0
    for n in range(max_degree + 1):
        parts = enumerate_partitions(n, strict=True)
        built = {lam: qfunctions.build_Q(lam) for lam in parts}
        for lam in parts:
            p_elem = built[lam].scaled(Fraction(1, 2 ** len(lam)))
            for mu in parts:
                checked += 1
                want = 1 if lam == mu else 0
                if qfunctions.omega_pair(p_elem, built[mu]) != want:
                    return CheckResult("duality[q]", False, checked,
                                       "pairing fails at %s, %s" % (lam, mu))
    for total in range(max_degree + 1):
        for n1 in range(total + 1):
            for lam in enumerate_partitions(n1, strict=True):
                for mu in enumerate_partitions(total - n1, strict=True):
                    g = qfunctions.g_constants(lam, mu)
                    f = qfunctions.f_constants(lam, mu)
                    checked += 1
                    names = set(g) | set(f)
                    for nu in names:
                        scale = 2 ** (len(lam) + len(mu) - len(nu))
                        if g.get(nu, 0) != scale * f.get(nu, 0):
                            return CheckResult(
                                "duality[q]", False, checked,
                                "scaling fails at %s, %s -> %s" % (lam, mu, nu))
    return CheckResult("duality[q]", True, checked)


def check_pieri(k, max_degree) -> CheckResult:
    """Product constants against single row indices reproduce the weak
    Pieri rule with multiplicity one."""
    spec = kschur.kschur_spec(k)
    checked = 0
    for n in range(max_degree + 1):
        for lam in enumerate_partitions(n, max_part=k):
            for r in range(0, min(k, max_degree - n) + 1):
                row = (r,) if r else ()
                got = spec.product_constants(lam, row)
                want = {mu: 1 for mu in kschur.k_pieri(lam, r, k)}
                checked += 1
                if got != want:
                    return CheckResult(
                        "pieri[k=%d]" % k, False, checked,
                        "mismatch at %s * h_%d" % (lam, r))
    return CheckResult("pieri[k=%d]" % k, True, checked)


def check_module_action(name, max_degree, k=None, seed=20240902, trials=60) -> CheckResult:
    """The action distributes over products the twisted way: acting on a
    product equals acting with the two tensor legs separately."""
    from .hopf import harpoon
    spec = get_spec(name, k)
    dual = spec.dual()
    rng = random.Random(seed)
    degrees = tuple(range(max_degree + 1))
    checked = 0
    for _ in range(trials):
        h = random_element(rng, degrees, spec.basis, max_terms=2)
        a = random_element(rng, degrees, dual.basis, max_terms=2)
        b = random_element(rng, degrees, dual.basis, max_terms=2)
        lhs = harpoon(h, multiply(a, b, dual), dual)
        rhs = Element()
        for (h1, h2), c in comultiply(h, spec).items():
            rhs = rhs + multiply(harpoon(Element.basis(h1), a, dual),
                                 harpoon(Element.basis(h2), b, dual), dual).scaled(c)
        checked += 1
        if lhs != rhs:
            return CheckResult("module-action[%s]" % name, False, checked,
                               "fails on a random triple (seed %d)" % seed)
    return CheckResult("module-action[%s]" % name, True, checked)


def run_checks(name, checks, max_degree, k=None):
    """Run the named checks for one algebra; returns a list of results."""
    out = []
    for tag in checks:
        if tag == "axioms":
            out.append(check_axioms(name, max_degree, k))
        elif tag == "skew-lr":
            out.append(check_skew_products(name, max_degree, k))
        elif tag == "lemma1":
            if name == "schur":
                out.append(check_lemma_one(max_total_degree=max_degree))
            else:
                out.append(CheckResult("lemma-one", True, 0,
                                       "only run for the schur algebra"))
        elif tag == "duality":
            if name in ("q", "p"):
                out.append(check_duality(max_degree))
            else:
                out.append(CheckResult("duality", True, 0,
                                       "only run for the q and p algebras"))
        elif tag == "pieri":
            if name == "kschur":
                out.append(check_pieri(k, max_degree))
            else:
                out.append(CheckResult("pieri", True, 0,
                                       "only run for the kschur algebra"))
        else:
            raise ValueError("unknown check %r" % tag)
    return out
