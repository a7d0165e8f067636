"""Skew products in dual graded bases: Schur, Schur Q/P, ribbon,
fundamental, and k-Schur, with a shared structure-constant engine."""

from .hopf import (AxiomReport, DualSpec, Element, HopfBasisSpec, SkewSum,
                   antipode, comultiply, counit, evaluate_skew_sum, harpoon,
                   multiply, skew_expand, skew_product_oracle,
                   skew_product_theorem, triple_coproduct_constant,
                   verify_hopf_axioms, verify_lemma_one)
from .kschur import kschur_spec
from .qfunctions import p_spec, q_spec
from .ribbons import fundamental_spec, ribbon_spec
from .schur import ClassicalBasisElement, basis_convert, hall_pair, schur_spec

__version__ = "0.1.0"

__all__ = [
    "AxiomReport", "ClassicalBasisElement", "DualSpec", "Element",
    "HopfBasisSpec", "SkewSum", "antipode", "basis_convert", "comultiply",
    "counit", "evaluate_skew_sum", "fundamental_spec", "hall_pair", "harpoon",
    "kschur_spec", "multiply", "p_spec", "q_spec", "ribbon_spec", "schur_spec",
    "skew_expand", "skew_product_oracle", "skew_product_theorem",
    "triple_coproduct_constant", "verify_hopf_axioms", "verify_lemma_one",
    "__version__",
]
