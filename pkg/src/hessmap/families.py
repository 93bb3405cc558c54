"""Explicit forms with monomial Hessians: the product-monomial counterexamples
``(x1...xq)^k + x_{q+1}^d + ... + x_n^d`` and two further examples whose
Hessians are monomials of other shapes.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, SpecError
from .exact import format_rational
from .hessian import hessian_det, monomial_hessian_analyze
from .jacobian import is_smooth
from .linalg import det
from .poly import MultiPoly

__all__ = [
    "CounterexampleSpec",
    "VerificationRecord",
    "block_hessian_constant",
    "block_matrix",
    "check_block_constant",
    "counterexample_poly",
    "family_alpha",
    "remark_example",
    "valid_specs",
    "verify_counterexample",
    "waring_rank_family",
]


@dataclass(frozen=True)
class CounterexampleSpec:
    n: int
    d: int
    q: int

    def __post_init__(self):
        n, d, q = self.n, self.d, self.q
        if not 2 <= q <= n:
            raise SpecError("need 2 <= q <= n")
        if d < 3:
            raise SpecError("need d >= 3")
        if d % q:
            raise SpecError(f"q={q} does not divide d={d}")
        if q == 2 and d // q < 2:
            raise SpecError("q = 2 needs k = d/2 >= 2")

    @property
    def k(self):
        return self.d // self.q

    def to_json(self):
        return {"n": self.n, "d": self.d, "q": self.q, "k": self.k}


def valid_specs(max_n, max_d):
    out = []
    for n in range(2, max_n + 1):
        for d in range(3, max_d + 1):
            for q in range(2, n + 1):
                try:
                    out.append(CounterexampleSpec(n, d, q))
                except SpecError:
                    pass
    return out


def counterexample_poly(spec):
    n, d, q, k = spec.n, spec.d, spec.q, spec.k
    block = MultiPoly.monomial([k] * q + [0] * (n - q))
    rest = [MultiPoly.var(n, i, d) for i in range(q, n)]
    return sum(rest, block)


def block_matrix(q, k):
    """Coefficient matrix of Hess((x1...xq)^k): k(k-1) on the diagonal, k^2 elsewhere."""
    return [[k * (k - 1) if i == j else k * k for j in range(q)] for i in range(q)]


def block_hessian_constant(q, k):
    """(1 - qk)(-k)^q, the coefficient of H((x1...xq)^k)."""
    if q < 2 or k < 1:
        raise DomainError("need q >= 2 and k >= 1")
    return (1 - q * k) * (-k) ** q


def family_alpha(spec):
    """Coefficient alpha of H(g) = alpha*(x1...xn)^(d-2): block constant times the Fermat block."""
    d = spec.d
    return block_hessian_constant(spec.q, spec.k) * (d * (d - 1)) ** (spec.n - spec.q)


@dataclass(frozen=True)
class VerificationRecord:
    spec: CounterexampleSpec
    alpha: Fraction
    hessian_shape_ok: bool
    singular: bool

    @property
    def passed(self):
        return self.hessian_shape_ok and self.singular

    def to_json(self):
        return {
            "spec": self.spec.to_json(),
            "alpha": format_rational(self.alpha) if self.alpha is not None else None,
            "hessian_shape_ok": self.hessian_shape_ok,
            "singular": self.singular,
            "pass": self.passed,
        }


def verify_counterexample(spec):
    g = counterexample_poly(spec)
    report = monomial_hessian_analyze(g)
    expected = family_alpha(spec)
    shape_ok = report.is_question1_shape and report.alpha == expected and expected != 0
    singular = not is_smooth(g).is_smooth
    return VerificationRecord(spec, report.alpha, shape_ok, singular)


def remark_example(kind, param):
    """Example form and its expected Hessian.

    ``"tangent-cone"`` (param k >= 2): x1^2 x2^(k-1) - x3^(k+1), with Hessian
    2k^2(k+1)(k-1) x1^2 x2^(2(k-2)) x3^(k-1).
    ``"quadric-tangent"`` (param n >= 3): x1(x2^2 + x1 x3 + x4^2 + ... + xn^2),
    with Hessian -2^n x1^n.
    """
    if kind == "tangent-cone":
        k = param
        if k < 2:
            raise DomainError("tangent-cone example needs k >= 2")
        f = MultiPoly.monomial((2, k - 1, 0)) - MultiPoly.var(3, 2, k + 1)
        expected = MultiPoly.monomial((2, 2 * (k - 2), k - 1), 2 * k * k * (k + 1) * (k - 1))
        return f, expected
    if kind == "quadric-tangent":
        n = param
        if n < 3:
            raise DomainError("quadric-tangent example needs n >= 3")
        x = MultiPoly.variables(n)
        quad = x[1] ** 2 + x[0] * x[2]
        for i in range(3, n):
            quad = quad + x[i] ** 2
        f = x[0] * quad
        expected = MultiPoly.monomial((n,) + (0,) * (n - 1), -(2 ** n))
        return f, expected
    raise DomainError(f"unknown example kind {kind!r}")


def waring_rank_family(n, q, k):
    """(k+1)^(q-1) + (n-q): complex Waring rank of the counterexample form."""
    if not 2 <= q <= n or k < 1:
        raise DomainError("need 2 <= q <= n and k >= 1")
    return (k + 1) ** (q - 1) + (n - q)


def check_block_constant(q, k):
    """The block constant three ways: closed form, det of the coefficient matrix, H itself."""
    closed = block_hessian_constant(q, k)
    via_matrix = det(block_matrix(q, k))
    h = hessian_det(MultiPoly.monomial([k] * q))
    form = h.monomial_form()
    via_hessian = form[0] if form and form[1] == (q * k - 2,) * q else None
    return closed, via_matrix, via_hessian
