"""The differential dH_f of the Hessian map and its kernel.

``dH_f(g)`` is the derivative of ``H(f + t g)`` at ``t = 0``.  It is computed
row-wise (sum over i of det of Hess(f) with row i taken from Hess(g)) and,
independently, by extracting the coefficient of ``t`` from ``H(f + t g)``.
"""

from dataclasses import dataclass, field
from math import comb, isqrt

from .errors import ArityMismatch, DomainError
from .hessian import hessian_det, hessian_matrix, poly_det
from .linalg import LinearMapMatrix
from .poly import MultiPoly, monomials

__all__ = [
    "KernelReport",
    "dhessian",
    "dhessian_matrix",
    "dhessian_oracle",
    "g_coefficient",
    "kernel",
    "predicted_binary_monomial_kernel_dim",
    "predicted_fermat_kernel_dim",
]


def _check_pair(f, g):
    if f.nvars != g.nvars:
        raise ArityMismatch(f"{f.nvars} vs {g.nvars} variables")
    if not f.is_homogeneous() or not g.is_homogeneous():
        raise ArityMismatch("dH_f is defined on homogeneous forms")
    if f.degree() is not None and g.degree() is not None and f.degree() != g.degree():
        raise ArityMismatch(f"degree {f.degree()} vs {g.degree()}")


def dhessian(f, g):
    """Sum over rows i of det(Hess(f) with its i-th row replaced by that of Hess(g))."""
    _check_pair(f, g)
    if g.is_zero():
        return MultiPoly.zero(f.nvars)
    hf = hessian_matrix(f)
    hg = hessian_matrix(g)
    total = MultiPoly.zero(f.nvars)
    for i in range(f.nvars):
        if any(hg.entries[i]):
            total = total + poly_det(hf.replace_row(i, hg.entries[i]))
    return total


def dhessian_oracle(f, g):
    """Coefficient of t in H(f + t*g), with t adjoined as an extra variable."""
    _check_pair(f, g)
    n = f.nvars
    t = MultiPoly.var(n + 1, n)
    F = f.extend(n + 1) + t * g.extend(n + 1)
    H = hessian_det(F, variables=range(n))
    return H.coefficient_of_power(n, 1)


def dhessian_matrix(f, degree=None):
    """Matrix of dH_f from degree-d forms to degree n(d-2) forms, monomial bases."""
    d = f.degree() if degree is None else degree
    if d is None:
        raise DomainError("the degree of the zero form must be given explicitly")
    if not f.is_homogeneous() or (f.degree() is not None and f.degree() != d):
        raise DomainError("dH_f needs a homogeneous form of the stated degree")
    if d < 2:
        raise DomainError("dH_f needs degree >= 2")
    n = f.nvars
    cols = monomials(n, d)
    rows = monomials(n, n * (d - 2))
    index = {e: i for i, e in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    if not f.is_zero():
        for j, m in enumerate(cols):
            img = dhessian(f, MultiPoly.monomial(m))
            for e, c in img.as_dict().items():
                entries[index[e]][j] = c
    return LinearMapMatrix(rows, cols, entries)


@dataclass
class KernelReport:
    dim: int
    basis: list = field(default_factory=list)

    def to_json(self):
        return {"dim": self.dim, "basis": [b.to_json() for b in self.basis]}


def kernel(f, degree=None):
    """Exact kernel of dH_f as a list of forms in canonical echelon form."""
    d = f.degree() if degree is None else degree
    if d is None or d < 2:
        raise DomainError("kernel of dH_f needs degree >= 2")
    M = dhessian_matrix(f, d)
    basis = []
    for vec in M.kernel():
        basis.append(MultiPoly(f.nvars, {m: c for m, c in zip(M.col_basis, vec) if c}))
    return KernelReport(len(basis), basis)


def g_coefficient(d, k, j):
    """Coefficient of a_j x1^(k+j-2) x2^(2d-k-j-2) in dH at the monomial x1^k x2^(d-k)."""
    return (d - 1) * (d * (k - j) ** 2 - d * (k + j) + 2 * k * j)


def predicted_fermat_kernel_dim(n, d):
    """Kernel dimension of dH at x1^d + ... + xn^d, by the two regimes d > n and d <= n."""
    if d >= n + 1:
        return n - 1
    return n - 1 + comb(n, d)


def predicted_binary_monomial_kernel_dim(d, k):
    """Kernel dimension of dH at x1^k x2^(d-k), following the case split on k."""
    if not 0 < k <= d or d < 2:
        raise DomainError("need 0 < k <= d and d >= 2")
    if k == d:
        return 2
    if k == d - 1:
        return 2 if d == 2 else 1
    return sum(1 for j in range(d + 1) if g_coefficient(d, k, j) == 0)


def binary_monomial_exceptional_kernel(k):
    """For d = 2k with k a perfect square: the two kernel monomials as exponent tuples."""
    r = isqrt(k)
    if r * r != k:
        raise DomainError("k must be a perfect square")
    return [(k + r, k - r), (k - r, k + r)]
