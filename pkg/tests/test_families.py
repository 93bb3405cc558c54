import pytest
import sympy

from hessmap.errors import DomainError, SpecError
from hessmap.families import (
    CounterexampleSpec,
    block_hessian_constant,
    block_matrix,
    check_block_constant,
    counterexample_poly,
    family_alpha,
    remark_example,
    valid_specs,
    verify_counterexample,
    waring_rank_family,
)
from hessmap.hessian import hessian_det

from conftest import from_sympy, sym_vars, to_sympy


@pytest.mark.parametrize("n,d,q", [(1, 3, 1), (3, 2, 2), (3, 5, 2), (2, 2, 2), (2, 3, 3), (3, 3, 2)])
def test_spec_validation(n, d, q):
    with pytest.raises(SpecError):
        CounterexampleSpec(n, d, q)


def test_valid_specs_grid():
    specs = valid_specs(4, 8)
    assert len(specs) == 15
    assert CounterexampleSpec(3, 6, 3) in specs
    assert all(s.d % s.q == 0 for s in specs)


@pytest.mark.parametrize("spec", valid_specs(4, 6), ids=str)
def test_counterexamples_pass(spec):
    rec = verify_counterexample(spec)
    assert rec.passed and rec.alpha == family_alpha(spec) != 0
    assert rec.to_json()["pass"] is True


def test_counterexample_against_sympy():
    spec = CounterexampleSpec(3, 4, 2)
    g = counterexample_poly(spec)
    xs = sym_vars(3)
    expected = sympy.hessian(to_sympy(g, xs), xs).det()
    assert hessian_det(g) == from_sympy(expected, 3)


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_block_constant_three_ways(q, k):
    if q * k < 3:
        return
    closed, via_matrix, via_h = check_block_constant(q, k)
    assert closed == via_matrix == via_h
    assert sympy.Matrix(block_matrix(q, k)).det() == closed


def test_block_constant_example():
    assert block_hessian_constant(3, 2) == 40
    with pytest.raises(DomainError):
        block_hessian_constant(1, 2)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_tangent_cone_example(k):
    f, expected = remark_example("tangent-cone", k)
    xs = sym_vars(3)
    assert hessian_det(f) == expected == from_sympy(sympy.hessian(to_sympy(f, xs), xs).det(), 3)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_quadric_tangent_example(n):
    f, expected = remark_example("quadric-tangent", n)
    assert hessian_det(f) == expected


def test_waring_rank_formula():
    assert waring_rank_family(2, 2, 1) == 2
    assert waring_rank_family(4, 3, 2) == 10
    with pytest.raises(DomainError):
        remark_example("nope", 3)


def test_waring_rank_exceeds_n_on_grid():
    for spec in valid_specs(4, 8):
        if spec.k >= 2:
            assert waring_rank_family(spec.n, spec.q, spec.k) > spec.n
