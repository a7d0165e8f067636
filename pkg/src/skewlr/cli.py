"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 resource guard tripped.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import schur
from .hopf import Element, evaluate_skew_sum, multiply, skew_product_theorem
from .shapes import (composition_str, is_partition, is_strict_partition,
                     partition_str)
from .verify import get_spec, run_checks

USAGE_ERROR = 2
GUARD_ERROR = 3

_TOKEN = re.compile(r"^(?:s|Q|P|R|F|sk\d+)?([\[\(])([0-9,\s]*)([\]\)])$")


class UsageError(Exception):
    pass


def parse_shape(token, algebra, k=None):
    m = _TOKEN.match(token.strip())
    if not m:
        raise UsageError("cannot parse shape %r" % token)
    opener, body, closer = m.groups()
    if (opener, closer) not in (("[", "]"), ("(", ")")):
        raise UsageError("mismatched brackets in %r" % token)
    body = body.strip()
    try:
        parts = tuple(int(x) for x in body.split(",")) if body else ()
    except ValueError:
        raise UsageError("cannot parse shape %r" % token)
    if any(x < 1 for x in parts):
        raise UsageError("parts must be positive in %r" % token)
    if algebra in ("ribbon", "fundamental"):
        return parts
    if not is_partition(parts):
        raise UsageError("%r is not a partition" % token)
    if algebra in ("q", "p") and not is_strict_partition(parts):
        raise UsageError("%r is not strict" % token)
    if algebra == "kschur" and parts and parts[0] > k:
        raise UsageError("%r is not %d-bounded" % (token, k))
    return parts


def parse_skew(token, algebra, k=None):
    if "/" not in token:
        raise UsageError("expected outer/inner, got %r" % token)
    outer, inner = token.split("/", 1)
    return parse_shape(outer, algebra, k), parse_shape(inner, algebra, k)


def _shape_str(idx, algebra):
    if algebra in ("ribbon", "fundamental"):
        return composition_str(idx)
    return partition_str(idx)


def _coeff_str(c):
    return str(c)


def print_element(elem, spec, fmt):
    terms = elem.sorted_terms()
    if fmt == "json":
        payload = {"terms": [{"coeff": _coeff_str(c), "index": spec.index_str(i)}
                             for i, c in terms]}
        print(json.dumps(payload))
    else:
        for i, c in terms:
            print("%s\t%s" % (_coeff_str(c), spec.index_str(i)))


def print_skew_sum(ssum, elem, algebra, spec, fmt):
    sterms = ssum.sorted_terms()
    if fmt == "json":
        payload = {
            "skew_terms": [{"coeff": _coeff_str(c),
                            "outer": _shape_str(o, algebra),
                            "inner": _shape_str(i, algebra)}
                           for (o, i), c in sterms],
            "terms": [{"coeff": _coeff_str(c), "index": spec.index_str(i)}
                      for i, c in elem.sorted_terms()],
        }
        print(json.dumps(payload))
    else:
        for (o, i), c in sterms:
            print("%s\t%s/%s" % (_coeff_str(c), _shape_str(o, algebra),
                                 _shape_str(i, algebra)))
        print("--")
        for i, c in elem.sorted_terms():
            print("%s\t%s" % (_coeff_str(c), spec.index_str(i)))


def _spec_for(args):
    if args.algebra == "kschur" and args.k is None:
        raise UsageError("--k is required with --algebra kschur")
    return get_spec(args.algebra, args.k)


def cmd_product(args):
    spec = _spec_for(args)
    x = parse_shape(args.x, args.algebra, args.k)
    y = parse_shape(args.y, args.algebra, args.k)
    if sum(x) + sum(y) > args.max_degree:
        print("total degree %d above the guard %d" % (sum(x) + sum(y), args.max_degree),
              file=sys.stderr)
        return GUARD_ERROR
    print_element(multiply(Element.basis(x), Element.basis(y), spec), spec, args.format)
    return 0


def cmd_skew_product(args):
    spec = _spec_for(args)
    lam_mu = parse_skew(args.x, args.algebra, args.k)
    sig_tau = parse_skew(args.y, args.algebra, args.k)
    (mu, lam), (tau, sigma) = lam_mu, sig_tau
    if sum(mu) + sum(tau) > args.max_degree:
        print("total degree %d above the guard %d" % (sum(mu) + sum(tau), args.max_degree),
              file=sys.stderr)
        return GUARD_ERROR
    if args.combinatorial:
        if args.algebra != "schur":
            raise UsageError("--combinatorial only applies to the schur algebra")
        ssum = schur.skew_lr_combinatorial(lam, mu, sigma, tau)
    else:
        ssum = skew_product_theorem(lam, mu, sigma, tau, spec)
    print_skew_sum(ssum, evaluate_skew_sum(ssum, spec), args.algebra, spec, args.format)
    return 0


def cmd_lr(args):
    spec = _spec_for(args)
    lam = parse_shape(args.lam, args.algebra, args.k)
    mu = parse_shape(args.mu, args.algebra, args.k)
    nu = parse_shape(args.nu, args.algebra, args.k)
    if sum(nu) > args.max_degree:
        print("degree %d above the guard %d" % (sum(nu), args.max_degree),
              file=sys.stderr)
        return GUARD_ERROR
    c = spec.product_constants(lam, mu).get(nu, 0)
    if args.format == "json":
        print(json.dumps({"coeff": _coeff_str(c)}))
    else:
        print(c)
    return 0


def cmd_verify(args):
    if args.algebra == "kschur" and args.k is None:
        raise UsageError("--k is required with --algebra kschur")
    checks = ["axioms", "lemma1", "skew-lr", "duality", "pieri"] \
        if args.check == "all" else [args.check]
    results = run_checks(args.algebra, checks, args.max_degree, args.k)
    failed = False
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        extra = " (%d cases)" % r.checked if r.passed else ": %s" % r.detail
        if r.passed and r.detail:
            extra += " [%s]" % r.detail
        print("%s %s%s" % (status, r.name, extra))
        failed = failed or not r.passed
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="skewlr",
        description="Skew products, structure constants, and verification "
                    "sweeps for several dual graded bases.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k_default=True):
        p.add_argument("--algebra", required=True,
                       choices=["schur", "q", "p", "ribbon", "fundamental", "kschur"])
        p.add_argument("--k", type=int, default=None,
                       help="bound for the kschur algebra")
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.add_argument("--max-degree", type=int, default=14,
                       help="resource guard on the total degree")

    p = sub.add_parser("product", help="expand a product of two basis elements")
    common(p)
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("skew-product",
                       help="expand a product of two skew elements as skew terms")
    common(p)
    p.add_argument("--combinatorial", action="store_true",
                   help="use tableau counting instead of the generic expansion "
                            "(schur only)")
    p.add_argument("x", help="outer/inner")
    p.add_argument("y", help="outer/inner")
    p.set_defaults(func=cmd_skew_product)

    p = sub.add_parser("lr", help="print one structure constant")
    common(p)
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("nu")
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("verify", help="run verification sweeps")
    p.add_argument("--algebra", required=True,
                   choices=["schur", "q", "p", "ribbon", "fundamental", "kschur"])
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--check", default="all",
                   choices=["axioms", "lemma1", "skew-lr", "duality", "pieri", "all"])
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        return exc.code if exc.code is not None else USAGE_ERROR
    try:
        return args.func(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
