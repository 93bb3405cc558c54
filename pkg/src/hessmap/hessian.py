"""Hessian matrices, polynomial determinants and the monomial-Hessian test."""

from dataclasses import dataclass

from .errors import DomainError
from .exact import scalar_to_json
from .poly import MultiPoly

__all__ = [
    "MonomialHessianReport",
    "PolyMatrix",
    "hessian_det",
    "hessian_matrix",
    "monomial_hessian_analyze",
    "poly_det",
]


class PolyMatrix:
    """Square matrix of :class:`MultiPoly` entries sharing one ring."""

    def __init__(self, entries, nvars=None):
        entries = [list(row) for row in entries]
        m = len(entries)
        if any(len(row) != m for row in entries):
            raise ValueError("PolyMatrix must be square")
        if nvars is None:
            if m == 0:
                raise ValueError("nvars is required for an empty matrix")
            nvars = entries[0][0].nvars
        if any(e.nvars != nvars for row in entries for e in row):
            raise ValueError("entries live in different rings")
        self.entries = entries
        self.nvars = nvars

    @property
    def size(self):
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def transpose(self):
        m = self.size
        return PolyMatrix([[self.entries[j][i] for j in range(m)] for i in range(m)], self.nvars)

    def is_symmetric(self):
        return self == self.transpose()

    def replace_row(self, i, row):
        entries = [list(r) for r in self.entries]
        entries[i] = list(row)
        return PolyMatrix(entries, self.nvars)

    def coefficient_matrix(self):
        """Scalar matrix when every entry is a constant or a single term (its coefficient)."""
        out = []
        for row in self.entries:
            out.append([e.monomial_form()[0] if e.is_monomial() else 0 for e in row])
        return out

    def det(self):
        return poly_det(self)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self):
        rows = ", ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"PolyMatrix([{rows}])"


def hessian_matrix(f, variables=None):
    """Matrix of second partials of ``f``.

    ``variables`` restricts differentiation to a subset of the ring's
    variables (the rest act as parameters); by default all are used.
    """
    if variables is None:
        variables = range(f.nvars)
    variables = list(variables)
    first = [f.diff(i) for i in variables]
    m = len(variables)
    entries = [[None] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            entries[a][b] = entries[b][a] = first[a].diff(variables[b])
    return PolyMatrix(entries, f.nvars)


def poly_det(M):
    """Exact determinant by memoised Laplace expansion over column subsets."""
    if isinstance(M, PolyMatrix):
        entries, nvars = M.entries, M.nvars
    else:
        entries = [list(r) for r in M]
        nvars = entries[0][0].nvars
    m = len(entries)
    if m == 0:
        return MultiPoly.one(nvars)
    memo = {}
    full = (1 << m) - 1

    def minor(mask):
        # determinant of rows (m - popcount(mask)) .. m-1 restricted to columns in mask
        if mask == 0:
            return MultiPoly.one(nvars)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        r = m - bin(mask).count("1")
        row = entries[r]
        total = MultiPoly.zero(nvars)
        sign = 1
        for j in range(m):
            bit = 1 << j
            if not mask & bit:
                continue
            e = row[j]
            if e:
                sub = minor(mask & ~bit)
                if sub:
                    term = e * sub
                    total = total + term if sign > 0 else total - term
            sign = -sign
        memo[mask] = total
        return total

    return minor(full)


def hessian_det(f, variables=None):
    """H(f) = det Hess(f)."""
    return poly_det(hessian_matrix(f, variables))


@dataclass(frozen=True)
class MonomialHessianReport:
    is_monomial: bool
    alpha: object = None
    exponents: tuple = None
    is_question1_shape: bool = False
    zero_hessian: bool = False
    hessian: MultiPoly = None

    def to_json(self):
        return {
            "is_monomial": self.is_monomial,
            "alpha": None if self.alpha is None else scalar_to_json(self.alpha),
            "exponents": None if self.exponents is None else list(self.exponents),
            "is_question1_shape": self.is_question1_shape,
            "zero_hessian": self.zero_hessian,
        }


def monomial_hessian_analyze(f):
    """Decide whether H(f) is a single term, and whether it is alpha*(x1...xn)^(d-2)."""
    d = f.degree()
    if d is None or not f.is_homogeneous():
        raise DomainError("monomial Hessian analysis needs a nonzero homogeneous form")
    if d < 3:
        raise DomainError("monomial Hessian analysis needs degree >= 3")
    h = hessian_det(f)
    if h.is_zero():
        return MonomialHessianReport(False, zero_hessian=True, hessian=h)
    form = h.monomial_form()
    if form is None:
        return MonomialHessianReport(False, hessian=h)
    alpha, exps = form
    shape = exps == (d - 2,) * f.nvars
    return MonomialHessianReport(True, alpha, exps, shape, hessian=h)
