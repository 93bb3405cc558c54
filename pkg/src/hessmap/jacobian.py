"""Jacobian ideals, smoothness via a graded rank test, and monomial ideals."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb, gcd, inf, prod

from .errors import DomainError
from .linalg import sparse_rank
from .poly import monomials

__all__ = [
    "INFINITE",
    "MonomialIdeal",
    "SmoothnessReport",
    "amgm_equality_scan",
    "is_smooth",
    "jacobian_ideal",
    "macaulay_annihilator_of_monomial",
    "membership_monomial",
    "monomial_jacobian_ideal",
    "standard_monomial_count",
    "verify_propmons_balance",
]

INFINITE = inf


def jacobian_ideal(g):
    """The n first partials of g."""
    return [g.diff(i) for i in range(g.nvars)]


@dataclass(frozen=True)
class SmoothnessReport:
    is_smooth: bool
    witness_degree: int
    rank: int
    full_rank_needed: int

    def to_json(self):
        return {
            "is_smooth": self.is_smooth,
            "witness_degree": self.witness_degree,
            "rank": self.rank,
            "full_rank_needed": self.full_rank_needed,
        }


def _integer_terms(p):
    den = 1
    for c in p.as_dict().values():
        if not isinstance(c, (int, Fraction)):
            raise DomainError("smoothness test needs rational coefficients")
        q = Fraction(c).denominator
        den = den * q // gcd(den, q)
    return {e: int(c * den) for e, c in p.as_dict().items()}


def is_smooth(g):
    """Smoothness of the hypersurface g = 0 by checking J(g)_D = S_D at D = n(d-2)+1.

    For smooth g the Jacobian ring is artinian with socle in degree n(d-2),
    so it vanishes one degree higher; otherwise it is nonzero in every degree.
    """
    d = g.degree()
    if d is None or not g.is_homogeneous() or d < 2:
        raise DomainError("smoothness test needs a homogeneous form of degree >= 2")
    n = g.nvars
    D = n * (d - 2) + 1
    full = comb(D + n - 1, n - 1)
    multipliers = monomials(n, D - (d - 1))
    vectors = []
    for part in jacobian_ideal(g):
        if part.is_zero():
            continue
        terms = _integer_terms(part)
        for m in multipliers:
            vectors.append({tuple(a + b for a, b in zip(e, m)): c for e, c in terms.items()})
    r = sparse_rank(vectors)
    return SmoothnessReport(r == full, D, r, full)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators."""

    def __init__(self, nvars, generators):
        gens = sorted({tuple(int(e) for e in g) for g in generators}, reverse=True)
        if any(len(g) != nvars for g in gens):
            raise ValueError("generator length does not match nvars")
        minimal = [g for g in gens if not any(h != g and _divides(h, g) for h in gens)]
        self.nvars = nvars
        self.generators = tuple(minimal)

    def is_artinian(self):
        return all(self._pure_power(i) is not None for i in range(self.nvars))

    def _pure_power(self, i):
        best = None
        for g in self.generators:
            if all(e == 0 for j, e in enumerate(g) if j != i) and g[i] > 0:
                best = g[i] if best is None else min(best, g[i])
        return best

    def contains(self, m):
        return any(_divides(g, m) for g in self.generators)

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and (self.nvars, self.generators) == (other.nvars, other.generators)

    def __hash__(self):
        return hash((self.nvars, self.generators))

    def __repr__(self):
        return f"MonomialIdeal({self.nvars}, {list(self.generators)})"

    def to_json(self):
        return {"nvars": self.nvars, "gens": [list(g) for g in self.generators]}

    @classmethod
    def from_json(cls, obj):
        return cls(int(obj["nvars"]), obj["gens"])


def standard_monomial_count(I):
    """Number of monomials outside I (``INFINITE`` unless I is artinian)."""
    if any(all(e == 0 for e in g) for g in I.generators):
        return 0
    if not I.is_artinian():
        return INFINITE
    box = [range(I._pure_power(i)) for i in range(I.nvars)]
    return sum(1 for m in product(*box) if not I.contains(m))


def membership_monomial(I, m):
    return I.contains(tuple(m))


def macaulay_annihilator_of_monomial(b):
    """Ann of y^b under differentiation: (x_i^(b_i + 1))."""
    n = len(b)
    gens = []
    for i, bi in enumerate(b):
        e = [0] * n
        e[i] = bi + 1
        gens.append(e)
    return MonomialIdeal(n, gens)


def monomial_jacobian_ideal(g):
    """J(g) as a MonomialIdeal when every partial is a single term, else None."""
    gens = []
    for part in jacobian_ideal(g):
        if part.is_zero():
            continue
        form = part.monomial_form()
        if form is None:
            return None
        gens.append(form[1])
    return MonomialIdeal(g.nvars, gens)


def verify_propmons_balance(n, d, b):
    """If sum(b_i+1) = n(d-1) and prod(b_i+1) = (d-1)^n then every b_i = d-2."""
    if len(b) != n or any(x < 0 for x in b):
        raise DomainError("b must be n nonnegative integers")
    constrained = sum(x + 1 for x in b) == n * (d - 1) and prod(x + 1 for x in b) == (d - 1) ** n
    return not constrained or all(x == d - 2 for x in b)


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def amgm_equality_scan(n, d):
    """Every b with sum(b_i+1) = n(d-1) and prod(b_i+1) = (d-1)^n."""
    return [b for b in _compositions(n * (d - 2), n) if prod(x + 1 for x in b) == (d - 1) ** n]
