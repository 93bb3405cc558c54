"""Generalised permutation groups G(d, e, n) acting on polynomials.

An element ``(sigma, a)`` sends ``x_i`` to ``theta^a_i * x_sigma(i)`` with
``theta`` a primitive d-th root of unity; G(d, e, n) consists of those with
``sum(a) = 0 mod e``.  Only e = 1 and e = n are supported.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .errors import ArityMismatch, BudgetExceeded, SingularMatrix, SpecError
from .exact import Cyc, canonical
from .hessian import hessian_det
from .linalg import det, field_rref
from .poly import MultiPoly, monomials

__all__ = [
    "GenPermElement",
    "GroupSpec",
    "apply",
    "compose",
    "enumerate_group",
    "gdnn_obstruction",
    "gdnn_obstruction_constant",
    "gdnn_family",
    "group_generators",
    "invariant_space_degree_d",
    "is_invariant",
    "reynolds",
    "stabilizer_membership_monomial",
    "stabilizer_tests",
]

GROUP_BUDGET = 10 ** 4


@dataclass(frozen=True)
class GenPermElement:
    n: int
    d: int
    sigma: tuple  # 0-based images
    a: tuple

    def __post_init__(self):
        sigma = tuple(self.sigma)
        a = tuple(int(x) % self.d for x in self.a)
        if sorted(sigma) != list(range(self.n)) or len(a) != self.n:
            raise ValueError("sigma must be a permutation of range(n) and a must have length n")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "a", a)

    @classmethod
    def identity(cls, n, d):
        return cls(n, d, tuple(range(n)), (0,) * n)

    @classmethod
    def diagonal(cls, d, a):
        return cls(len(a), d, tuple(range(len(a))), tuple(a))

    @classmethod
    def transposition(cls, n, d, i, j):
        s = list(range(n))
        s[i], s[j] = s[j], s[i]
        return cls(n, d, tuple(s), (0,) * n)

    def is_identity(self):
        return self.sigma == tuple(range(self.n)) and not any(self.a)

    def to_matrix(self):
        """Matrix A with A x giving the substitution (row i: theta^a_i at column sigma(i))."""
        rows = []
        for i in range(self.n):
            row = [0] * self.n
            row[self.sigma[i]] = canonical(Cyc.theta(self.d, self.a[i]))
            rows.append(row)
        return rows


def compose(g, h):
    """The element acting as ``apply(g, apply(h, .))``."""
    if (g.n, g.d) != (h.n, h.d):
        raise ArityMismatch("elements of different groups")
    sigma = tuple(g.sigma[h.sigma[i]] for i in range(g.n))
    a = tuple(h.a[i] + g.a[h.sigma[i]] for i in range(g.n))
    return GenPermElement(g.n, g.d, sigma, a)


def apply(el, f):
    """Substitute x_i -> theta^a_i x_sigma(i) in f."""
    if f.nvars != el.n:
        raise ArityMismatch(f"element acts on {el.n} variables, polynomial has {f.nvars}")
    terms = {}
    for e, c in f.as_dict().items():
        ne = [0] * el.n
        shift = 0
        for i, k in enumerate(e):
            ne[el.sigma[i]] = k
            shift += el.a[i] * k
        shift %= el.d
        terms[tuple(ne)] = c * Cyc.theta(el.d, shift) if shift else c
    return MultiPoly(el.n, terms)


@dataclass(frozen=True)
class GroupSpec:
    d: int
    e: int
    n: int

    def __post_init__(self):
        if self.n < 1 or self.d < 1:
            raise SpecError("need n >= 1 and d >= 1")
        if self.e not in (1, self.n):
            raise SpecError("only e = 1 or e = n is supported")
        if self.e == self.n and self.d % self.n:
            raise SpecError(f"G(d, n, n) needs n | d (n={self.n}, d={self.d})")

    def order(self):
        from math import factorial
        return self.d ** self.n * factorial(self.n) // self.e

    def contains(self, el):
        return (el.n, el.d) == (self.n, self.d) and sum(el.a) % self.e == 0

    def to_json(self):
        return {"d": self.d, "e": self.e, "n": self.n}


def group_generators(spec):
    n, d = spec.n, spec.d
    gens = []
    if spec.e == 1:
        gens.append(GenPermElement.diagonal(d, (1,) + (0,) * (n - 1)))
    else:
        if n >= 2:
            gens.append(GenPermElement.diagonal(d, (1, d - 1) + (0,) * (n - 2)))
        if d != n:
            # with theta^n on one coordinate the diagonal part reaches every sum = 0 mod n
            gens.append(GenPermElement.diagonal(d, (n,) + (0,) * (n - 1)))
    for i in range(n - 1):
        gens.append(GenPermElement.transposition(n, d, i, i + 1))
    return [g for g in gens if not g.is_identity()]


def enumerate_group(generators, n=None, d=None, budget=GROUP_BUDGET):
    """All elements of the group generated by ``generators`` (BFS order)."""
    if not generators:
        return [GenPermElement.identity(n, d)]
    start = GenPermElement.identity(generators[0].n, generators[0].d)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        g = queue.popleft()
        for s in generators:
            h = compose(s, g)
            if h not in seen:
                seen.add(h)
                order.append(h)
                if len(order) > budget:
                    raise BudgetExceeded(f"group order exceeds {budget}")
                queue.append(h)
    return order


def is_invariant(f, generators):
    return all(apply(g, f) == f for g in generators)


def reynolds(f, elements):
    """Average of f over the given (finite group of) elements."""
    total = MultiPoly.zero(f.nvars)
    for g in elements:
        total = total + apply(g, f)
    return total / len(elements)


def invariant_space_degree_d(spec, degree, budget=GROUP_BUDGET):
    """Canonical basis of the degree-``degree`` forms fixed by G(d, e, n)."""
    elements = enumerate_group(group_generators(spec), spec.n, spec.d, budget)
    basis_monos = monomials(spec.n, degree)
    rows = []
    for m in basis_monos:
        p = reynolds(MultiPoly.monomial(m), elements)
        if p:
            rows.append([p.coefficient(e) for e in basis_monos])
    return [MultiPoly(spec.n, {e: c for e, c in zip(basis_monos, row) if c != 0})
            for row in field_rref(rows)]


def stabilizer_tests(A, d):
    """(substitution test, structural test) for A fixing (x1...xn)^(d-2)."""
    n = len(A)
    if det(A) == 0:
        raise SingularMatrix("stabiliser test needs an invertible matrix")
    h = MultiPoly.monomial((d - 2,) * n)
    by_substitution = h.substitute_linear(A) == h
    structural = False
    nonzero = [[j for j, a in enumerate(row) if canonical(a) != 0] for row in A]
    if all(len(cols) == 1 for cols in nonzero):
        targets = [cols[0] for cols in nonzero]
        if sorted(targets) == list(range(n)):
            gamma = 1
            for i, j in enumerate(targets):
                gamma = gamma * canonical(A[i][j])
            structural = canonical(gamma ** (d - 2)) == 1
    return by_substitution, structural


def stabilizer_membership_monomial(A, d):
    """Whether A stabilises (x1...xn)^(d-2); both tests are run and must agree."""
    sub, struct = stabilizer_tests(A, d)
    if sub != struct:
        raise ArithmeticError("substitution and structural stabiliser tests disagree")
    return sub


def gdnn_family(n, d):
    """alpha1*(x1^d + ... + xn^d) + alpha2*(x1...xn)^(d/n) with alpha1, alpha2 as variables n, n+1."""
    if n < 2 or d < 3:
        raise SpecError("need n >= 2 and d >= 3")
    if d % n:
        raise SpecError(f"n={n} does not divide d={d}")
    N = n + 2
    a1, a2 = MultiPoly.var(N, n), MultiPoly.var(N, n + 1)
    fermat = sum((MultiPoly.var(N, i, d) for i in range(1, n)), MultiPoly.var(N, 0, d))
    prod_mono = MultiPoly.monomial((d // n,) * n + (0, 0))
    return a1 * fermat + a2 * prod_mono


def gdnn_obstruction(n, d):
    """Coefficient (a polynomial in alpha1, alpha2) of
    (x1...x_{n-2})^(d-2+2d/n) x_{n-1}^(2d/n-2) x_n^(2d/n-2) in H of the invariant family."""
    f = gdnn_family(n, d)
    H = hessian_det(f, variables=range(n))
    r = d // n
    target = (d - 2 + 2 * r,) * (n - 2) + (2 * r - 2, 2 * r - 2)
    return H.collect(range(n)).get(target, MultiPoly.zero(2))


def gdnn_obstruction_constant(n, d):
    """(d(d-1))^(n-2) (d/n)^2 (1 - 2d/n): the alpha1^(n-2) alpha2^2 coefficient."""
    r = Fraction(d, n)
    return canonical((d * (d - 1)) ** (n - 2) * r * r * (1 - 2 * r))
