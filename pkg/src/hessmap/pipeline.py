"""Kayal's three-step test for equivalence to a Fermat form, at desk scale,
and an exhaustive search for forms with monomial Hessians.

Step (1) asks H(g) to factor as alpha * prod h_i^(d-2) over linear forms.
Factorisation is only attempted in three situations: H(g) a monomial,
binary forms with rational linear factors, and caller-supplied candidate
forms.  Anything else ends as Inconclusive.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from math import comb

from . import univariate as up
from .errors import BudgetExceeded, DomainError
from .exact import format_rational
from .hessian import MonomialHessianReport, hessian_det, monomial_hessian_analyze
from .jacobian import is_smooth
from .linalg import rank, solve
from .poly import MultiPoly, monomials

__all__ = [
    "EQUIVALENT",
    "INCONCLUSIVE",
    "REJECTED",
    "ExplorationHit",
    "KayalResult",
    "explore_monomial_hessian",
    "factor_binary_linear",
    "kayal_check",
]

EQUIVALENT, REJECTED, INCONCLUSIVE = "Equivalent", "Rejected", "Inconclusive"
EXPLORE_BUDGET = 10 ** 7


@dataclass
class KayalResult:
    status: str
    stage: str
    forms: list = field(default_factory=list)  # (alpha_i, h_i)
    note: str = ""

    def to_json(self):
        return {
            "status": self.status,
            "stage": self.stage,
            "forms": [{"alpha": format_rational(a), "h": str(h)} for a, h in self.forms],
            "note": self.note,
        }


def factor_binary_linear(h):
    """Rational linear factors of a binary form.

    Returns ``[(linear form, multiplicity), ...]`` or ``None`` if some
    irreducible factor of degree >= 2 (or an unmanageable coefficient)
    remains.
    """
    D = h.degree()
    coeffs = [h.coefficient((i, D - i)) for i in range(D + 1)]
    u = up.trim(coeffs)
    out = []
    for sqf, mult in up.squarefree_decomposition(u):
        roots = up.rational_roots(sqf)
        if roots is None or len(roots) != len(sqf) - 1:
            return None
        for r in roots:
            out.append((MultiPoly(2, {(1, 0): 1, (0, 1): -r}), mult, r))
    out.sort(key=lambda t: t[2])
    factors = [(form, m) for form, m, _ in out]
    at_infinity = D - (len(u) - 1)
    if at_infinity:
        factors.append((MultiPoly.var(2, 1), at_infinity))
    return factors


def _linear_coeffs(h, n):
    return [h.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)]


def _step_one(g, H, d, candidates):
    """Linear forms h_1..h_n with H = alpha * prod h_i^(d-2), or a failing KayalResult."""
    n = g.nvars
    form = H.monomial_form()
    if form is not None:
        _, exps = form
        if exps != (d - 2,) * n:
            return KayalResult(REJECTED, "FactorizationFailed",
                               note=f"H(g) is the monomial with exponents {list(exps)}, not (d-2,...,d-2)")
        return [MultiPoly.var(n, i) for i in range(n)]
    if candidates:
        forms = list(candidates)
        if len(forms) != n or any(f.nvars != n or f.degree() != 1 or not f.is_homogeneous() for f in forms):
            raise DomainError("candidates must be n linear forms in the same ring as g")
        P = MultiPoly.one(n)
        for f in forms:
            P = P * f ** (d - 2)
        lead = P.leading_term()
        alpha = H.coefficient(lead[0]) / Fraction(lead[1])
        if alpha == 0 or H != P * alpha:
            return KayalResult(INCONCLUSIVE, "FactorizationIncomplete",
                               note="H(g) is not a multiple of the product of the candidate forms")
        return forms
    if n == 2:
        factors = factor_binary_linear(H)
        if factors is None:
            return KayalResult(INCONCLUSIVE, "FactorizationIncomplete",
                               note="H(g) has a factor without rational roots")
        forms = []
        for f, m in factors:
            if d > 2 and m % (d - 2):
                return KayalResult(REJECTED, "FactorizationFailed",
                                   note=f"linear factor {f} has multiplicity {m}, not a multiple of d-2")
            forms.extend([f] * (m // (d - 2)))
        if len(forms) != n:
            return KayalResult(REJECTED, "FactorizationFailed", note="wrong number of linear factors")
        return forms
    return KayalResult(INCONCLUSIVE, "FactorizationIncomplete",
                       note="no factorisation strategy applies (n > 2, non-monomial H, no candidates)")


def kayal_check(g, candidates=None):
    d = g.degree()
    if d is None or not g.is_homogeneous():
        raise DomainError("Kayal's test needs a nonzero homogeneous form")
    if d < 3:
        raise DomainError("Kayal's test needs degree >= 3")
    if not g.is_rational():
        raise DomainError("Kayal's test runs over Q")
    n = g.nvars
    H = hessian_det(g)
    if H.is_zero():
        return KayalResult(REJECTED, "HessianZero", note="H(g) = 0")
    forms = _step_one(g, H, d, candidates)
    if isinstance(forms, KayalResult):
        return forms
    if rank([_linear_coeffs(h, n) for h in forms], n) < n:
        return KayalResult(REJECTED, "FactorizationFailed", note="linear factors are dependent")
    # step (2): g = sum alpha_i h_i^d
    powers = [h ** d for h in forms]
    support = sorted({e for p in powers + [g] for e in p.as_dict()}, reverse=True)
    A = [[p.coefficient(e) for p in powers] for e in support]
    b = [g.coefficient(e) for e in support]
    alphas = solve(A, b)
    if alphas is None:
        return KayalResult(REJECTED, "LinearSolveFailed",
                           note="g is not a combination of d-th powers of the Hessian's factors")
    recon = MultiPoly.zero(n)
    for a, p in zip(alphas, powers):
        recon = recon + p * a
    assert recon == g
    return KayalResult(EQUIVALENT, "Success", list(zip(alphas, forms)),
                       note="g = sum alpha_i h_i^d; l_i = beta_i h_i with beta_i^d = alpha_i")


@dataclass
class ExplorationHit:
    poly: MultiPoly
    hessian_report: MonomialHessianReport
    smooth: bool

    @property
    def is_diagonal(self):
        """True when the form is a sum of pure powers x_i^d."""
        return all(sum(1 for k in e if k) == 1 for e in self.poly.as_dict())

    def to_json(self):
        return {
            "poly": str(self.poly),
            "hessian": self.hessian_report.to_json(),
            "smooth": self.smooth,
            "diagonal": self.is_diagonal,
        }


def explore_monomial_hessian(n, d, coeff_set, support_budget, budget=EXPLORE_BUDGET):
    """Every form with coefficients in ``coeff_set`` and at most ``support_budget``
    terms whose Hessian is a single nonzero term, annotated with smoothness."""
    values = sorted({Fraction(c) for c in coeff_set} - {0})
    if not values:
        return []
    monos = monomials(n, d)
    top = min(support_budget, len(monos))
    total = sum(comb(len(monos), s) * len(values) ** s for s in range(1, top + 1))
    if total > budget:
        raise BudgetExceeded(f"{total} candidates exceed the budget of {budget}")
    hits = []
    for s in range(1, top + 1):
        for supp in combinations(monos, s):
            for cs in product(values, repeat=s):
                g = MultiPoly(n, dict(zip(supp, cs)))
                report = monomial_hessian_analyze(g)
                if report.is_monomial:
                    hits.append(ExplorationHit(g, report, is_smooth(g).is_smooth))
    return hits
