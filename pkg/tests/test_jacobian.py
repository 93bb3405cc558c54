import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from hessmap.errors import DomainError
from hessmap.jacobian import (
    INFINITE,
    MonomialIdeal,
    amgm_equality_scan,
    is_smooth,
    macaulay_annihilator_of_monomial,
    membership_monomial,
    monomial_jacobian_ideal,
    standard_monomial_count,
    verify_propmons_balance,
)
from hessmap.poly import MultiPoly, parse

from conftest import polys, to_sympy, sym_vars


def _smooth_oracle(g):
    xs = sym_vars(g.nvars)
    expr = to_sympy(g, xs)
    G = sympy.groebner([sympy.diff(expr, x) for x in xs], *xs, order="grevlex")
    return G.is_zero_dimensional


@given(st.integers(2, 3).flatmap(lambda n: st.integers(2, 4).flatmap(
    lambda d: polys(nvars=n, homogeneous=True, degree=d, max_terms=6))))
def test_smoothness_matches_groebner(g):
    if not g or g.degree() < 2:
        return
    assert is_smooth(g).is_smooth == _smooth_oracle(g)


def test_smoothness_examples():
    assert is_smooth(parse("x1^3 + x2^3 + x3^3")).is_smooth
    assert not is_smooth(parse("x1^2*x2^2 + x3^4")).is_smooth
    assert not is_smooth(parse("x1*x2*x3")).is_smooth
    assert is_smooth(parse("x1^2 + x2^2")).is_smooth
    with pytest.raises(DomainError):
        is_smooth(parse("x1^3 + x2"))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_fermat_jacobian_ring_dimension(n, d):
    gens = [tuple(d - 1 if j == i else 0 for j in range(n)) for i in range(n)]
    assert standard_monomial_count(MonomialIdeal(n, gens)) == (d - 1) ** n


def test_monomial_ideal_basics():
    I = MonomialIdeal(2, [(2, 0), (1, 1), (2, 1), (0, 3)])
    assert I.generators == ((2, 0), (1, 1), (0, 3))
    assert I.is_artinian() and standard_monomial_count(I) == 4
    assert membership_monomial(I, (3, 0)) and not membership_monomial(I, (0, 2))
    assert standard_monomial_count(MonomialIdeal(2, [(1, 0)])) == INFINITE
    assert standard_monomial_count(MonomialIdeal(2, [(0, 0)])) == 0
    assert MonomialIdeal.from_json(I.to_json()) == I


def test_socle_not_in_jacobian_ideal():
    for n in range(2, 5):
        for d in range(3, 7):
            f = sum((MultiPoly.var(n, i, d) for i in range(1, n)), MultiPoly.var(n, 0, d))
            J = monomial_jacobian_ideal(f)
            assert not J.contains((d - 2,) * n)
            assert all(J.contains(m) for m in [(d - 1,) + (0,) * (n - 1)])


def test_macaulay_annihilator():
    ann = macaulay_annihilator_of_monomial((2, 1))
    assert set(ann.generators) == {(3, 0), (0, 2)}


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("d", [3, 4, 5, 6])
def test_amgm_scan(n, d):
    assert amgm_equality_scan(n, d) == [(d - 2,) * n]


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.integers(3, 6),
                                                    st.lists(st.integers(0, 8), min_size=n, max_size=n))))
def test_propmons_balance(args):
    n, d, b = args
    assert verify_propmons_balance(n, d, b)


def test_non_monomial_jacobian():
    assert monomial_jacobian_ideal(parse("x1^3 + x1*x2^2")) is None


def test_smoothness_agrees_with_binary_singularity():
    import random
    from hessmap.binary import BinaryForm, is_singular
    rnd = random.Random(11)
    done = 0
    while done < 100:
        d = rnd.randint(2, 7)
        coeffs = [rnd.randint(-2, 2) for _ in range(d + 1)]
        f = BinaryForm(coeffs)
        if f.is_zero():
            continue
        assert is_smooth(f.to_poly()).is_smooth == (not is_singular(f))
        done += 1
