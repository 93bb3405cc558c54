"""Exact computations around the Hessian map g -> det(Hess(g)) on homogeneous
polynomials: monomial Hessians, its differential, binary forms, invariants
and smoothness.  Variables are 0-based in the API and named x1..xn in text."""

from .binary import (
    BinaryForm,
    SingularClassification,
    brute_force_singular_search,
    classify_singular_monomial_hessian,
    gamma,
    hessian_coefficient,
    is_singular,
    lattice_factor,
    sylvester_resultant,
    symbolic_binary_hessian,
)
from .differential import KernelReport, dhessian, dhessian_matrix, dhessian_oracle, kernel
from .errors import (
    ArityMismatch,
    BudgetExceeded,
    DomainError,
    HessmapError,
    OrderMismatch,
    ParseError,
    ScalarMismatch,
    SingularMatrix,
    SpecError,
    ZeroInput,
)
from .exact import Cyc, cyclotomic_polynomial
from .families import (
    CounterexampleSpec,
    VerificationRecord,
    block_hessian_constant,
    counterexample_poly,
    valid_specs,
    verify_counterexample,
)
from .groups import (
    GenPermElement,
    GroupSpec,
    enumerate_group,
    gdnn_obstruction,
    group_generators,
    invariant_space_degree_d,
    is_invariant,
    reynolds,
    stabilizer_membership_monomial,
)
from .hessian import MonomialHessianReport, PolyMatrix, hessian_det, hessian_matrix, monomial_hessian_analyze, poly_det
from .jacobian import (
    MonomialIdeal,
    SmoothnessReport,
    amgm_equality_scan,
    is_smooth,
    jacobian_ideal,
    standard_monomial_count,
)
from .pipeline import ExplorationHit, KayalResult, explore_monomial_hessian, kayal_check
from .poly import MultiPoly, monomials, parse
from .report import render_markdown, verify_paper

__version__ = "0.1.0"

__all__ = [
    "ArityMismatch",
    "BinaryForm",
    "BudgetExceeded",
    "CounterexampleSpec",
    "Cyc",
    "DomainError",
    "ExplorationHit",
    "GenPermElement",
    "GroupSpec",
    "HessmapError",
    "KayalResult",
    "KernelReport",
    "MonomialHessianReport",
    "MonomialIdeal",
    "MultiPoly",
    "OrderMismatch",
    "ParseError",
    "PolyMatrix",
    "ScalarMismatch",
    "SingularClassification",
    "SingularMatrix",
    "SmoothnessReport",
    "SpecError",
    "VerificationRecord",
    "ZeroInput",
    "amgm_equality_scan",
    "block_hessian_constant",
    "brute_force_singular_search",
    "classify_singular_monomial_hessian",
    "counterexample_poly",
    "cyclotomic_polynomial",
    "dhessian",
    "dhessian_matrix",
    "dhessian_oracle",
    "enumerate_group",
    "explore_monomial_hessian",
    "gamma",
    "gdnn_obstruction",
    "group_generators",
    "hessian_coefficient",
    "hessian_det",
    "hessian_matrix",
    "invariant_space_degree_d",
    "is_invariant",
    "is_singular",
    "is_smooth",
    "jacobian_ideal",
    "kayal_check",
    "kernel",
    "lattice_factor",
    "monomial_hessian_analyze",
    "monomials",
    "parse",
    "poly_det",
    "render_markdown",
    "reynolds",
    "stabilizer_membership_monomial",
    "standard_monomial_count",
    "sylvester_resultant",
    "symbolic_binary_hessian",
    "valid_specs",
    "verify_counterexample",
    "verify_paper",
]
