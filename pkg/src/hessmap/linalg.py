"""Exact linear algebra over Q and over cyclotomic fields.

Rational kernels and ranks go through fraction-free (integer) Gauss-Jordan
elimination with content removal; anything involving :class:`Cyc` entries
uses plain field elimination.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .exact import Cyc, canonical
from .errors import SingularMatrix

__all__ = [
    "LinearMapMatrix",
    "det",
    "field_rref",
    "integer_rows",
    "kernel_basis",
    "rank",
    "rref",
    "solve",
    "sparse_rank",
]


def _lcm(a, b):
    return a * b // gcd(a, b)


def integer_rows(matrix):
    """Scale each row of a rational matrix to a primitive integer row."""
    out = []
    for row in matrix:
        den = 1
        for a in row:
            den = _lcm(den, Fraction(a).denominator)
        ints = [int(Fraction(a) * den) for a in row]
        out.append(_primitive(ints))
    return out


def _primitive(row):
    g = 0
    for a in row:
        if a:
            g = gcd(g, a)
            if g == 1:
                return row
    if g > 1:
        return [a // g for a in row]
    return row


def _ff_gauss_jordan(matrix, ncols):
    """Fraction-free Gauss-Jordan; returns (reduced integer rows, pivot columns)."""
    rows = [r for r in integer_rows(matrix) if any(r)]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pv = prow[c]
        for i in range(len(rows)):
            if i == r:
                continue
            a = rows[i][c]
            if a:
                rows[i] = _primitive([pv * x - a * y for x, y in zip(rows[i], prow)])
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix, ncols=None):
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    if not matrix or ncols == 0:
        return 0
    return len(_ff_gauss_jordan(matrix, ncols)[1])


def kernel_basis(matrix, ncols):
    """Canonical basis of the right kernel of a rational matrix.

    The basis is returned in reduced row echelon form, so each vector's first
    nonzero coordinate is 1 and the result does not depend on the
    elimination path.
    """
    if not matrix:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    rows, pivots = _ff_gauss_jordan(matrix, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            v[c] = Fraction(-row[f], row[c])
        basis.append(v)
    return rref(basis)


def field_rref(rows):
    """Reduced row echelon form over any exact field (Fraction or Cyc entries).

    Zero rows are dropped.
    """
    rows = [[canonical(a) for a in r] for r in rows]
    if not rows:
        return []
    ncols = len(rows[0])
    out = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = _inverse(rows[r][c])
        rows[r] = [canonical(a * inv) for a in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                a = rows[i][c]
                rows[i] = [canonical(x - a * y) for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    for row in rows[:r]:
        out.append(row)
    return out


def rref(rows):
    """Exact RREF of a rational matrix with Fraction entries."""
    return [[Fraction(a) if not isinstance(a, Cyc) else a for a in row] for row in field_rref(rows)]


def _inverse(a):
    if isinstance(a, Cyc):
        return a.inverse()
    return 1 / Fraction(a)


def det(matrix):
    """Determinant of a square matrix over Q or a cyclotomic field."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    m = [[canonical(a) for a in row] for row in matrix]
    result = 1
    for c in range(n):
        p = next((i for i in range(c, n) if m[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            result = -result
        pv = m[c][c]
        result = result * pv
        inv = _inverse(pv)
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] * inv
                m[i] = [canonical(x - f * y) for x, y in zip(m[i], m[c])]
    return canonical(result)


def inverse(matrix):
    n = len(matrix)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(matrix)]
    red = field_rref(aug)
    if len(red) < n or any(red[i][i] != 1 for i in range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in red]


def solve(A, b):
    """One exact solution of ``A x = b`` (rational), or ``None`` if inconsistent."""
    ncols = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    red = field_rref(aug)
    x = [Fraction(0)] * ncols
    for row in red:
        lead = next(i for i, a in enumerate(row) if a != 0)
        if lead == ncols:
            return None
        x[lead] = Fraction(row[ncols])
    return x


def sparse_rank(vectors, key=None):
    """Rank of integer-valued sparse vectors given as ``{coordinate: value}`` dicts."""
    pivots = {}
    for v in vectors:
        v = {k: int(a) for k, a in v.items() if a}
        while v:
            lead = max(v, key=key) if key else max(v)
            p = pivots.get(lead)
            if p is None:
                pivots[lead] = _primitive_dict(v)
                break
            a, b = p[lead], v[lead]
            g = gcd(a, b)
            a, b = a // g, b // g
            new = {k: a * x for k, x in v.items()}
            for k, y in p.items():
                val = new.get(k, 0) - b * y
                if val:
                    new[k] = val
                else:
                    new.pop(k, None)
            v = _primitive_dict(new)
    return len(pivots)


def _primitive_dict(v):
    g = 0
    for a in v.values():
        g = gcd(g, a)
        if g == 1:
            return v
    if g > 1:
        return {k: a // g for k, a in v.items()}
    return v


@dataclass
class LinearMapMatrix:
    """Matrix of a linear map between spaces of forms, in monomial bases.

    Column ``j`` holds the coefficients of the image of ``col_basis[j]``
    written in ``row_basis``.
    """

    row_basis: list
    col_basis: list
    entries: list = field(repr=False)

    @property
    def rows(self):
        return len(self.row_basis)

    @property
    def cols(self):
        return len(self.col_basis)

    def rank(self):
        return rank(self.entries, self.cols)

    def kernel(self):
        return kernel_basis(self.entries, self.cols)
