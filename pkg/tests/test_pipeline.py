import random
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hessmap.errors import BudgetExceeded, DomainError
from hessmap.linalg import rank
from hessmap.pipeline import explore_monomial_hessian, factor_binary_linear, kayal_check
from hessmap.poly import MultiPoly, parse

from conftest import random_form


def _check_success(g, r):
    d = g.degree()
    n = g.nvars
    total = MultiPoly.zero(n)
    for a, h in r.forms:
        total = total + h ** d * a
    assert total == g
    coeffs = [[h.coefficient(tuple(int(i == j) for j in range(n))) for i in range(n)] for _, h in r.forms]
    assert rank(coeffs, n) == n


def test_binary_cubic_equivalent():
    g = parse("2*x1^3 + 6*x1*x2^2")
    r = kayal_check(g)
    assert (r.status, r.stage) == ("Equivalent", "Success")
    assert [a for a, _ in r.forms] == [1, 1]
    assert sorted(str(h) for _, h in r.forms) == ["x1 + x2", "x1 - x2"]
    _check_success(g, r)


def test_counterexample_rejected_at_solve():
    r = kayal_check(parse("x1^2*x2^2 + x3^4"))
    assert (r.status, r.stage) == ("Rejected", "LinearSolveFailed")


@pytest.mark.parametrize("text,n", [("x1^3", 2), ("x1^2*x2 + x1^3", 3), ("x1^4", 3)])
def test_zero_hessian_rejected(text, n):
    r = kayal_check(parse(text, n))
    assert (r.status, r.stage) == ("Rejected", "HessianZero")


def test_other_outcomes():
    r = kayal_check(parse("x1^3 + x1*x2^2 + x2^3"))
    assert (r.status, r.stage) == ("Inconclusive", "FactorizationIncomplete")
    r = kayal_check(parse("x1^3*x2"))  # monomial H with the wrong exponents
    assert (r.status, r.stage) == ("Rejected", "FactorizationFailed")
    r = kayal_check(parse("x1^3 + x2^3 + x3^3 + x1*x2*x3"))
    assert r.status == "Inconclusive"
    with pytest.raises(DomainError):
        kayal_check(parse("x1^3 + x2"))
    with pytest.raises(DomainError):
        kayal_check(parse("x1*x2"))


def test_candidates_route():
    x = MultiPoly.variables(3)
    h = [x[0] + x[1], x[1] - x[2], x[0] + x[1] + x[2]]
    g = h[0] ** 3 * 2 + h[1] ** 3 - h[2] ** 3
    r = kayal_check(g, candidates=h)
    assert r.status == "Equivalent"
    assert [a for a, _ in r.forms] == [2, 1, -1]
    _check_success(g, r)
    r = kayal_check(g, candidates=[x[0], x[1], x[2]])
    assert r.status == "Inconclusive"


@given(st.integers(0, 2**32))
def test_random_binary_waring_sums(seed):
    rnd = random.Random(seed)
    d = rnd.randint(3, 6)
    x1, x2 = MultiPoly.variables(2)
    while True:
        a, b, c, e = (rnd.randint(-3, 3) for _ in range(4))
        if a * e - b * c:
            break
    l1, l2 = x1 * a + x2 * b, x1 * c + x2 * e
    g = l1 ** d * rnd.choice([1, 2, -3]) + l2 ** d * rnd.choice([1, -1, 5])
    r = kayal_check(g)
    assert r.status == "Equivalent"
    _check_success(g, r)


@given(st.integers(0, 2**32))
def test_permutation_invariance(seed):
    rnd = random.Random(seed)
    n = rnd.choice([2, 3])
    g = random_form(rnd, n, 3, density=0.5) if rnd.random() < 0.5 else (
        sum((MultiPoly.var(n, i, 3) * rnd.randint(1, 3) for i in range(n)), MultiPoly.zero(n)))
    base = kayal_check(g).status
    for perm in permutations(range(n)):
        A = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
        assert kayal_check(g.substitute_linear(A)).status == base


def test_factor_binary_linear():
    x1, x2 = MultiPoly.variables(2)
    h = (x1 - x2 * 2) ** 2 * x2 ** 3 * (x1 * 3 + x2)
    factors = factor_binary_linear(h)
    assert [(str(f), m) for f, m in factors] == [("x1 + 1/3*x2", 1), ("x1 - 2*x2", 2), ("x2", 3)]
    assert factor_binary_linear(x1 * x1 + x2 * x2) is None


def test_explorer_examples():
    hits = explore_monomial_hessian(2, 4, {-1, 0, 1}, 5)
    smooth = sorted(str(h.poly) for h in hits if h.smooth)
    assert smooth == ["-x1^4 + x2^4", "-x1^4 - x2^4", "x1^4 + x2^4", "x1^4 - x2^4"]
    assert all(h.is_diagonal for h in hits if h.smooth)
    assert {"x1^2*x2^2", "-x1^2*x2^2"} <= {str(h.poly) for h in hits if not h.smooth}
    assert all(h.hessian_report.is_monomial for h in hits)
    assert [str(h.poly) for h in hits] == [str(h.poly) for h in explore_monomial_hessian(2, 4, [1, -1, 0], 5)]
    hits = explore_monomial_hessian(3, 3, {0, 1}, 4)
    found = {str(h.poly) for h in hits}
    assert {"x1^3 + x2^3 + x3^3", "x1*x2*x3"} <= found
    assert explore_monomial_hessian(2, 4, set(), 3) == []
    with pytest.raises(BudgetExceeded):
        explore_monomial_hessian(4, 6, {-1, 1}, 10)
