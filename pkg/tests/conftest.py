import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hessmap.poly import MultiPoly, monomials

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

small_rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, nvars=None, max_degree=3, max_terms=5, homogeneous=False, degree=None):
    n = draw(st.integers(1, 3)) if nvars is None else nvars
    if homogeneous:
        d = draw(st.integers(1, max_degree)) if degree is None else degree
        pool = monomials(n, d)
    else:
        pool = [m for k in range(max_degree + 1) for m in monomials(n, k)]
    supp = draw(st.lists(st.sampled_from(pool), max_size=max_terms, unique=True))
    coeffs = draw(st.lists(small_rationals, min_size=len(supp), max_size=len(supp)))
    return MultiPoly(n, dict(zip(supp, coeffs)))


def sym_vars(n):
    return sympy.symbols(f"x1:{n + 1}")


def to_sympy(p, xs=None):
    xs = sym_vars(p.nvars) if xs is None else xs
    expr = sympy.Integer(0)
    for e, c in p.terms():
        c = Fraction(c)
        term = sympy.Rational(c.numerator, c.denominator)
        for x, k in zip(xs, e):
            term *= x ** k
        expr += term
    return sympy.expand(expr)


def from_sympy(expr, n):
    xs = sym_vars(n)
    poly = sympy.Poly(sympy.expand(expr), *xs)
    terms = {}
    for mono, c in poly.terms():
        c = sympy.Rational(c)
        terms[tuple(mono)] = Fraction(int(c.p), int(c.q))
    return MultiPoly(n, terms)


def random_form(rng, n, d, density=0.6, lo=-3, hi=3):
    """A random nonzero homogeneous form with integer coefficients."""
    while True:
        terms = {m: rng.randint(lo, hi) for m in monomials(n, d) if rng.random() < density}
        p = MultiPoly(n, terms)
        if p:
            return p


def random_matrix(rng, n, lo=-3, hi=3, invertible=True):
    from hessmap.linalg import det
    while True:
        A = [[Fraction(rng.randint(lo, hi), rng.randint(1, 2)) for _ in range(n)] for _ in range(n)]
        if not invertible or det(A) != 0:
            return A


@pytest.fixture
def rng():
    return random.Random(20241014)


_criteria = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    tag = getattr(getattr(item, "function", None), "criterion", None)
    if tag and (rep.when == "call" or (rep.when == "setup" and not rep.passed)):
        _criteria[tag] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), result in sorted(_criteria.items()):
        terminalreporter.write_line(f"criterion {number:2d} {result}  {title}")
