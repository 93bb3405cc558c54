"""Binary forms: gamma coefficients, resultants, singularity, and the
classification of singular binary forms with Hessian alpha*(x1*x2)^(d-2).

A binary form of degree d is ``f = sum_i a_i x1^i x2^(d-i)``.  The Hessian
coefficient of ``x1^j x2^(2d-4-j)`` is a quadratic form in the ``a_i``:
``sum over k <= l, k + l = j + 2`` of ``gamma(d, k, l) a_k a_l``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .errors import BudgetExceeded, DomainError, ZeroInput
from .exact import canonical, format_rational
from .hessian import hessian_det
from .linalg import det
from .poly import MultiPoly

__all__ = [
    "BinaryForm",
    "SingularClassification",
    "brute_force_singular_search",
    "classify_singular_monomial_hessian",
    "gamma",
    "hessian_coefficient",
    "is_singular",
    "lattice_factor",
    "symbolic_binary_hessian",
    "sylvester_resultant",
]


@dataclass(frozen=True)
class BinaryForm:
    coeffs: tuple  # a_0 .. a_d

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(canonical(c) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a binary form needs at least one coefficient")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def to_poly(self):
        d = self.degree
        return MultiPoly(2, {(i, d - i): a for i, a in enumerate(self.coeffs) if a != 0})

    @classmethod
    def from_poly(cls, p, degree=None):
        if p.nvars != 2:
            raise DomainError("binary forms have two variables")
        d = p.degree() if degree is None else degree
        if d is None:
            raise DomainError("degree of the zero form must be given")
        if not p.is_homogeneous() or (p.degree() is not None and p.degree() != d):
            raise DomainError("not a homogeneous binary form of the stated degree")
        return cls(tuple(p.coefficient((i, d - i)) for i in range(d + 1)))

    def partials(self):
        """(df/dx1, df/dx2) as binary forms of degree d-1."""
        d = self.degree
        a = self.coeffs
        fx1 = BinaryForm(tuple((i + 1) * a[i + 1] for i in range(d)))
        fx2 = BinaryForm(tuple((d - i) * a[i] for i in range(d)))
        return fx1, fx2

    def __str__(self):
        return str(self.to_poly())


def _as_binary(f):
    return f if isinstance(f, BinaryForm) else BinaryForm.from_poly(f)


def gamma(d, k, l):
    """Coefficient of a_k*a_l (or a_k^2 when k == l) in the Hessian of a binary form."""
    if not (0 <= k <= d and 0 <= l <= d):
        raise DomainError("indices must lie in [0, d]")
    if k == l:
        return -k * (d - 1) * (d - k)
    return (k * (k - 1) * (d - l) * (d - l - 1)
            + l * (l - 1) * (d - k) * (d - k - 1)
            - 2 * k * (d - k) * l * (d - l))


def lattice_factor(p, s, r):
    """p(s-r)^2 + sr - p: gamma at (p + s*sqrt(p), p + r*sqrt(p)) over 2p(2p-1)."""
    return p * (s - r) ** 2 + s * r - p


def symbolic_binary_hessian(d):
    """H of the generic binary form, with a_0..a_d as variables 3..d+3 (x1, x2 first)."""
    n = d + 3
    f = MultiPoly.zero(n)
    for i in range(d + 1):
        e = [0] * n
        e[0], e[1], e[2 + i] = i, d - i, 1
        f = f + MultiPoly.monomial(e)
    return hessian_det(f, variables=[0, 1])


def _gamma_sum(f, j):
    d = f.degree
    a = f.coeffs
    s = j + 2
    total = 0
    for k in range(max(0, s - d), s // 2 + 1):
        l = s - k
        if l > d:
            continue
        total += gamma(d, k, l) * a[k] * a[l]
    return canonical(total)


def hessian_coefficient(f, j):
    """Coefficient of x1^j x2^(2d-4-j) in H(f), by the gamma sum and checked directly."""
    f = _as_binary(f)
    d = f.degree
    if not 0 <= j <= 2 * d - 4:
        raise DomainError("j must lie in [0, 2d-4]")
    via_gamma = _gamma_sum(f, j)
    direct = hessian_det(f.to_poly()).coefficient((j, 2 * d - 4 - j))
    if via_gamma != direct:
        raise ArithmeticError(f"gamma sum {via_gamma} disagrees with determinant {direct}")
    return via_gamma


def _descending(f):
    return list(reversed(f.coeffs))


def sylvester_resultant(p, q):
    """Homogeneous resultant of two binary forms.

    The Sylvester matrix holds the coefficients of ``p`` and ``q`` in
    descending powers of ``x1`` (rows of ``p`` first); leading zeros are kept,
    so roots at infinity are accounted for.  Zero iff ``p`` and ``q`` share a
    projective root.
    """
    p, q = _as_binary(p), _as_binary(q)
    if p.is_zero() or q.is_zero():
        raise ZeroInput("resultant of a zero form")
    m, n = p.degree, q.degree
    size = m + n
    if size == 0:
        return 1
    pc, qc = _descending(p), _descending(q)
    rows = []
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return det(rows)


def is_singular(f):
    """True iff the partials have a common projective zero."""
    f = _as_binary(f)
    if f.is_zero():
        raise ZeroInput("the zero form has no singular locus")
    if f.degree < 2:
        raise DomainError("singularity test needs degree >= 2")
    fx1, fx2 = f.partials()
    if fx1.is_zero() or fx2.is_zero():
        return True
    return sylvester_resultant(fx1, fx2) == 0


# ---------------------------------------------------------------------------
# classification by coefficient forcing

ZERO, NONZERO, UNKNOWN = "zero", "nonzero", "unknown"


@dataclass
class SingularClassification:
    d: int
    verdict: str  # "NoSingularSolutions" or "CentralMonomialFamily"
    family: str = None
    trace: list = field(default_factory=list, repr=False)

    def to_json(self):
        return {"d": self.d, "verdict": self.verdict, "family": self.family}

    def contains(self, f):
        """Whether a (normalised, a0 = a1 = 0) binary form lies in the classified family."""
        f = _as_binary(f)
        if self.verdict == "NoSingularSolutions" or f.degree != self.d:
            return False
        p = self.d // 2
        return all((a != 0) == (i == p) for i, a in enumerate(f.coeffs))


class _Contradiction(Exception):
    pass


def _equations(d):
    # (j, target_nonzero, [(k, l, gamma)]) with gamma != 0
    eqs = []
    for j in range(2 * d - 3):
        s = j + 2
        pairs = []
        for k in range(max(0, s - d), s // 2 + 1):
            l = s - k
            g = gamma(d, k, l)
            if g != 0:
                pairs.append((k, l, g))
        eqs.append((j, j == d - 2, pairs))
    return eqs


def _propagate(state, eqs, trace):
    changed = True
    while changed:
        changed = False
        for j, want_nonzero, pairs in eqs:
            live = [(k, l, g) for k, l, g in pairs if state[k] != ZERO and state[l] != ZERO]
            if want_nonzero:
                if not live:
                    trace.append(f"coefficient of x1^{j}: every term vanishes, but it must be nonzero")
                    raise _Contradiction
                if len(live) == 1:
                    k, l, g = live[0]
                    for i in {k, l}:
                        if state[i] == UNKNOWN:
                            state[i] = NONZERO
                            trace.append(f"coefficient of x1^{j}: only gamma({k},{l})={g} survives, so a_{i} != 0")
                            changed = True
                continue
            if len(live) != 1:
                continue
            k, l, g = live[0]
            if k == l:
                if state[k] == NONZERO:
                    trace.append(f"coefficient of x1^{j}: gamma({k},{k})={g} with a_{k} != 0 cannot vanish")
                    raise _Contradiction
                state[k] = ZERO
                trace.append(f"coefficient of x1^{j}: only gamma({k},{k})={g} survives, so a_{k} = 0")
                changed = True
            elif state[k] == NONZERO and state[l] == NONZERO:
                trace.append(f"coefficient of x1^{j}: gamma({k},{l})={g} with a_{k}, a_{l} != 0 cannot vanish")
                raise _Contradiction
            elif state[k] == NONZERO or state[l] == NONZERO:
                i = l if state[k] == NONZERO else k
                state[i] = ZERO
                other = k if i == l else l
                trace.append(f"coefficient of x1^{j}: only gamma({k},{l})={g} survives and a_{other} != 0, so a_{i} = 0")
                changed = True


def _check_leaf(state, eqs):
    for j, want_nonzero, pairs in eqs:
        live = [(k, l) for k, l, _ in pairs if state[k] == NONZERO and state[l] == NONZERO]
        if len(live) > 1:
            # several nonzero products could cancel; flags alone cannot decide
            raise ArithmeticError(f"forcing is inconclusive at the coefficient of x1^{j}")


def _search(state, eqs, trace, leaves, depth=0):
    try:
        _propagate(state, eqs, trace)
    except _Contradiction:
        return
    unknown = [i for i, s in enumerate(state) if s == UNKNOWN]
    if not unknown:
        _check_leaf(state, eqs)
        leaves.append(tuple(state))
        return
    i = unknown[0]
    for choice in (ZERO, NONZERO):
        trace.append(f"{'  ' * depth}case a_{i} {'= 0' if choice == ZERO else '!= 0'}")
        branch = list(state)
        branch[i] = choice
        _search(branch, eqs, trace, leaves, depth + 1)


def classify_singular_monomial_hessian(d):
    """Singular binary forms of degree d whose Hessian is alpha*(x1*x2)^(d-2), alpha != 0.

    The singular point is normalised to (0:1), i.e. a_0 = a_1 = 0.  Each
    Hessian coefficient other than that of (x1*x2)^(d-2) must vanish; the
    gamma coefficients force coefficients of f to vanish one at a time,
    branching on a zero/nonzero split only when the forcing stalls.  A
    surviving assignment in which every equation is decided by a single
    product is a family of solutions.
    """
    if not isinstance(d, int) or d < 3:
        raise DomainError("classification needs d >= 3")
    eqs = _equations(d)
    state = [UNKNOWN] * (d + 1)
    state[0] = state[1] = ZERO
    trace = ["normalise the singular point to (0:1): a_0 = a_1 = 0"]
    leaves = []
    _search(state, eqs, trace, leaves)
    if not leaves:
        return SingularClassification(d, "NoSingularSolutions", None, trace)
    p = d // 2
    central = tuple(NONZERO if i == p else ZERO for i in range(d + 1))
    if d % 2 == 0 and leaves == [central]:
        return SingularClassification(d, "CentralMonomialFamily", f"a*x1^{p}*x2^{p}", trace)
    raise ArithmeticError(f"unexpected surviving supports for d={d}: {leaves}")


def brute_force_singular_search(d, coeff_set):
    """All f with a_0 = a_1 = 0 and a_2..a_d in ``coeff_set`` whose Hessian is a
    nonzero multiple of (x1*x2)^(d-2)."""
    coeff_set = sorted({Fraction(c) for c in coeff_set})
    if len(coeff_set) > 5 or d > 8:
        raise BudgetExceeded("brute force is limited to |coeff_set| <= 5 and d <= 8")
    if d < 3:
        raise DomainError("brute force needs d >= 3")
    target = (d - 2, d - 2)
    hits = []
    for tail in product(coeff_set, repeat=d - 1):
        f = BinaryForm((0, 0) + tail)
        if f.is_zero():
            continue
        form = hessian_det(f.to_poly()).monomial_form()
        if form is not None and form[1] == target:
            hits.append(f)
    return hits


def describe(f):
    return " ".join(format_rational(c) for c in _as_binary(f).coeffs)
