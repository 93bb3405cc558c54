"""Dense univariate polynomials over Q.

A polynomial is a list of coefficients, lowest degree first, with no trailing
zeros; the zero polynomial is the empty list.  These helpers back the
cyclotomic field arithmetic and the binary-form factorisation in the Kayal
pipeline.
"""

from fractions import Fraction
from math import gcd, isqrt


def trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1 if p else None


def add(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def sub(p, q):
    n = max(len(p), len(q))
    return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])


def mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def scale(p, c):
    return trim([c * a for a in p])


def divmod_poly(p, q):
    """Quotient and remainder of ``p`` by nonzero ``q``."""
    if not q:
        raise ZeroDivisionError("division by the zero polynomial")
    r = [Fraction(a) for a in p]
    lead = Fraction(q[-1])
    dq = len(q) - 1
    quo = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(r) - 1, dq - 1, -1):
        c = r[i] / lead
        if c == 0:
            continue
        quo[i - dq] = c
        for j, b in enumerate(q):
            r[i - dq + j] -= c * b
    return trim(quo), trim(r[:dq])


def rem(p, q):
    return divmod_poly(p, q)[1]


def monic(p):
    if not p:
        return []
    lead = Fraction(p[-1])
    return [Fraction(a) / lead for a in p]


def gcd_poly(p, q):
    """Monic gcd (zero if both inputs are zero)."""
    p, q = trim(p), trim(q)
    while q:
        p, q = q, rem(p, q)
    return monic(p)


def ext_gcd(p, q):
    """Return ``(g, u, v)`` with ``u*p + v*q = g`` and ``g`` monic."""
    r0, r1 = trim(p), trim(q)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        quo, r2 = divmod_poly(r0, r1)
        r0, r1 = r1, r2
        s0, s1 = s1, sub(s0, mul(quo, s1))
        t0, t1 = t1, sub(t0, mul(quo, t1))
    if not r0:
        return [], s0, t0
    lead = Fraction(r0[-1])
    return monic(r0), scale(s0, 1 / lead), scale(t0, 1 / lead)


def derivative(p):
    return trim([i * p[i] for i in range(1, len(p))])


def exact_div(p, q):
    quo, r = divmod_poly(p, q)
    if r:
        raise ArithmeticError("division is not exact")
    return quo


def squarefree_decomposition(p):
    """Yun's algorithm: list of ``(factor, multiplicity)`` with monic squarefree factors."""
    p = monic(trim(p))
    if len(p) <= 1:
        return []
    out = []
    a = gcd_poly(p, derivative(p))
    b = exact_div(p, a)
    c = exact_div(derivative(p), a)
    d = sub(c, derivative(b))
    i = 1
    while len(b) > 1:
        a = gcd_poly(b, d)
        b = exact_div(b, a)
        c = exact_div(d, a)
        d = sub(c, derivative(b))
        if len(a) > 1:
            out.append((a, i))
        i += 1
    return out


def evaluate(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def _divisors(n, limit):
    n = abs(n)
    if n > limit:
        return None
    small, large = [], []
    for k in range(1, isqrt(n) + 1):
        if n % k == 0:
            small.append(k)
            if k != n // k:
                large.append(n // k)
    return small + large[::-1]


def primitive_integer(p):
    """Scale a rational polynomial to a primitive integer polynomial with positive lead."""
    den = 1
    for a in p:
        den = den * Fraction(a).denominator // gcd(den, Fraction(a).denominator)
    ints = [int(Fraction(a) * den) for a in p]
    g = 0
    for a in ints:
        g = gcd(g, a)
    ints = [a // g for a in ints]
    if ints[-1] < 0:
        ints = [-a for a in ints]
    return ints


def rational_roots(p, divisor_limit=10**12):
    """Distinct rational roots of ``p`` (sorted), by the rational root theorem.

    Returns ``None`` when the constant/leading coefficients are too large to
    enumerate divisors of within ``divisor_limit``.
    """
    p = trim(p)
    roots = []
    if not p:
        raise ValueError("zero polynomial has every root")
    shift = 0
    while shift < len(p) and p[shift] == 0:
        shift += 1
    if shift:
        roots.append(Fraction(0))
    q = primitive_integer(p[shift:])
    if len(q) <= 1:
        return roots
    nums = _divisors(q[0], divisor_limit)
    dens = _divisors(q[-1], divisor_limit)
    if nums is None or dens is None:
        return None
    found = set()
    for a in nums:
        for b in dens:
            for cand in (Fraction(a, b), Fraction(-a, b)):
                if cand not in found and evaluate(q, cand) == 0:
                    found.add(cand)
    return sorted(roots + list(found))
