"""Reproduction report: every closed-form identity the library is built around,
recomputed and compared, as a list of JSON-ready items."""

import json
from fractions import Fraction

from .binary import (
    brute_force_singular_search,
    classify_singular_monomial_hessian,
    lattice_factor,
    symbolic_binary_hessian,
)
from .differential import (
    binary_monomial_exceptional_kernel,
    kernel,
    predicted_binary_monomial_kernel_dim,
    predicted_fermat_kernel_dim,
)
from .exact import format_rational
from .families import (
    check_block_constant,
    family_alpha,
    remark_example,
    valid_specs,
    verify_counterexample,
)
from .groups import (
    GroupSpec,
    enumerate_group,
    gdnn_obstruction,
    gdnn_obstruction_constant,
    group_generators,
    invariant_space_degree_d,
    is_invariant,
)
from .hessian import hessian_det
from .jacobian import (
    MonomialIdeal,
    amgm_equality_scan,
    monomial_jacobian_ideal,
    standard_monomial_count,
)
from .pipeline import explore_monomial_hessian, kayal_check
from .poly import MultiPoly, parse

__all__ = ["render_markdown", "report_json", "verify_paper"]


def _plain(x):
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return format_rational(x)
    if isinstance(x, MultiPoly):
        return str(x)
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    return str(x)


def _item(ident, ref, expected, computed, ok=None):
    if ok is None:
        ok = expected == computed
    return {"id": ident, "paper_ref": ref, "expected": _plain(expected),
            "computed": _plain(computed), "pass": bool(ok)}


def _fermat(n, d):
    return sum((MultiPoly.var(n, i, d) for i in range(1, n)), MultiPoly.var(n, 0, d))


def _block_constants():
    for q in range(2, 5):
        for k in range(1, 5):
            if q * k < 3:
                continue
            closed, via_matrix, via_h = check_block_constant(q, k)
            yield _item(f"block-hessian q={q} k={k}", "Hessian of (x1...xq)^k",
                        closed, [via_matrix, via_h], via_matrix == closed == via_h)


def _counterexamples():
    for spec in valid_specs(4, 8):
        rec = verify_counterexample(spec)
        yield _item(f"counterexample n={spec.n} d={spec.d} q={spec.q}",
                    "Hessian c*(x1...xn)^(d-2), c != 0, yet singular",
                    {"question1_shape": True, "singular": True, "alpha": family_alpha(spec)},
                    {"question1_shape": rec.hessian_shape_ok, "singular": rec.singular,
                     "alpha": rec.alpha})


def _binary_cubic():
    a0, a1, a2, a3 = (MultiPoly.var(6, 2 + i) for i in range(4))
    x1, x2 = MultiPoly.var(6, 0), MultiPoly.var(6, 1)
    expected = ((a3 * a1 * 12 - a2 * a2 * 4) * x1 * x1 + (a3 * a0 * 36 - a2 * a1 * 4) * x1 * x2
                + (a2 * a0 * 12 - a1 * a1 * 4) * x2 * x2)
    computed = symbolic_binary_hessian(3)
    yield _item("binary-cubic symbolic Hessian", "H of a3 x1^3 + a2 x1^2 x2 + a1 x1 x2^2 + a0 x2^3",
                expected, computed)


def _binary_classification():
    for d in range(3, 10):
        c = classify_singular_monomial_hessian(d)
        expected = "NoSingularSolutions" if d % 2 else "CentralMonomialFamily"
        yield _item(f"binary-classify d={d}", "singular binary forms with monomial Hessian",
                    expected, c.verdict)
    for d, cs in [(3, (-1, 0, 1)), (4, (-1, 0, 1)), (5, (-1, 0, 1)), (6, (-1, 0, 1)), (8, (0, 1))]:
        hits = brute_force_singular_search(d, cs)
        cls = classify_singular_monomial_hessian(d)
        inside = all(cls.contains(f) for f in hits)
        expect_nonempty = d % 2 == 0
        yield _item(f"binary-brute-force d={d} coeffs={list(cs)}",
                    "exhaustive search agrees with the classification",
                    {"nonempty": expect_nonempty, "inside_family": True},
                    {"nonempty": bool(hits), "inside_family": inside},
                    ) | {"hits": [str(f.to_poly()) for f in hits]}


def _lattice_table():
    for r0 in range(1, 5):
        p = r0 * r0
        zeros, neg_ok, pos_ok = [], True, True
        for s in range(0, 2 * r0 + 1):
            for r in range(0, 2 * r0 + 1):
                # exponent bound: 2p + (s+r)sqrt(p) - 2 <= 4p - 4
                if (s, r) == (0, 0) or (s + r) * r0 > 2 * p - 2:
                    continue
                F = lattice_factor(p, s, r)
                if F == 0:
                    zeros.append(sorted((s, r)))
                if s == r and not F < 0:
                    neg_ok = False
                if s >= 1 and r >= 1 and s != r and not F > 0:
                    pos_ok = False
        zero_set = sorted({tuple(z) for z in zeros})
        expected_zero = [(0, 1)] if p > 1 else []
        yield _item(f"lattice-sign p={p}", "sign of p(s-r)^2 + sr - p on admissible (s,r)",
                    {"zeros": expected_zero, "diagonal_negative": True, "off_diagonal_positive": True},
                    {"zeros": zero_set, "diagonal_negative": neg_ok, "off_diagonal_positive": pos_ok})


def _fermat_kernels():
    for n in range(2, 5):
        for d in range(2, 7):
            yield _item(f"fermat-kernel n={n} d={d}", "kernel of dH at the Fermat form",
                        predicted_fermat_kernel_dim(n, d), kernel(_fermat(n, d)).dim)


def _binary_monomial_kernels():
    for d in range(2, 11):
        dims = []
        expected = []
        for k in range(1, d + 1):
            dims.append(kernel(MultiPoly.monomial((k, d - k))).dim)
            expected.append(predicted_binary_monomial_kernel_dim(d, k))
        yield _item(f"binary-monomial-kernels d={d}", "kernel of dH at x1^k x2^(d-k), k = 1..d",
                    expected, dims)
    rep = kernel(MultiPoly.monomial((4, 4)))
    basis = sorted(b.monomial_form()[1] for b in rep.basis if b.is_monomial())
    expected = sorted(binary_monomial_exceptional_kernel(4))
    yield _item("binary-monomial-kernel-basis d=8 k=4", "exceptional two-dimensional kernel",
                expected, basis, len(rep.basis) == 2 and basis == expected)


def _gdnn():
    for n, d in [(2, 4), (2, 6), (3, 3), (3, 6), (4, 4)]:
        obs = gdnn_obstruction(n, d)
        coeff = obs.coefficient((n - 2, 2))
        yield _item(f"invariant-family-obstruction n={n} d={d}",
                    "alpha1^(n-2) alpha2^2 coefficient of the obstructing monomial",
                    gdnn_obstruction_constant(n, d), coeff)


def _stabilisers():
    for n, d in [(2, 4), (3, 3), (3, 6)]:
        g1 = group_generators(GroupSpec(d, 1, n))
        gn = group_generators(GroupSpec(d, n, n))
        prod_form = MultiPoly.monomial((d // n,) * n)
        yield _item(f"stabiliser n={n} d={d}", "Fermat fixed by G(d,1,n); product fixed by G(d,n,n)",
                    [True, True], [is_invariant(_fermat(n, d), g1), is_invariant(prod_form, gn)])
    for spec in [GroupSpec(3, 1, 2), GroupSpec(4, 2, 2), GroupSpec(4, 1, 2), GroupSpec(3, 3, 3),
                 GroupSpec(6, 3, 3)]:
        size = len(enumerate_group(group_generators(spec), spec.n, spec.d))
        yield _item(f"group-order G({spec.d},{spec.e},{spec.n})", "d^n n!/e", spec.order(), size)
    basis = invariant_space_degree_d(GroupSpec(4, 2, 2), 4)
    yield _item("invariants G(4,2,2) degree 4", "basis of degree-4 invariants",
                ["x1^4 + x2^4", "x1^2*x2^2"], [str(b) for b in basis])


def _jacobian():
    for n in range(1, 5):
        for d in range(2, 7):
            gens = [tuple(d - 1 if j == i else 0 for j in range(n)) for i in range(n)]
            yield _item(f"jacobian-count n={n} d={d}", "dim of C[x]/(x_i^(d-1))",
                        (d - 1) ** n, standard_monomial_count(MonomialIdeal(n, gens)))
    for n in range(2, 5):
        for d in range(3, 7):
            J = monomial_jacobian_ideal(_fermat(n, d))
            socle = (d - 2,) * n
            yield _item(f"fermat-socle n={n} d={d}", "socle monomial outside the Jacobian ideal",
                        False, J.contains(socle))
            yield _item(f"amgm-scan n={n} d={d}", "only the balanced exponent vector",
                        [socle], amgm_equality_scan(n, d))


def _example_hessians():
    for k in range(2, 6):
        f, expected = remark_example("tangent-cone", k)
        yield _item(f"tangent-cone k={k}", "Hessian of x1^2 x2^(k-1) - x3^(k+1)",
                    expected, hessian_det(f))
    for n in range(3, 6):
        f, expected = remark_example("quadric-tangent", n)
        yield _item(f"quadric-tangent n={n}", "Hessian is a power of one variable",
                    expected, hessian_det(f))


def _kayal():
    cases = [("2*x1^3 + 6*x1*x2^2", None, ("Equivalent", "Success")),
             ("x1^2*x2^2 + x3^4", None, ("Rejected", "LinearSolveFailed")),
             ("x1^3", 2, ("Rejected", "HessianZero"))]
    for text, nv, expected in cases:
        r = kayal_check(parse(text, nv))
        yield _item(f"kayal {text}", "three-step equivalence test", list(expected),
                    [r.status, r.stage]) | {"forms": _plain(r.to_json()["forms"])}


def _explorer():
    hits = explore_monomial_hessian(2, 4, (-1, 0, 1), 5)
    bad = [str(h.poly) for h in hits if h.smooth and not h.is_diagonal]
    yield _item("explore n=2 d=4", "no smooth non-Fermat form with monomial Hessian",
                [], bad)
    hits = explore_monomial_hessian(3, 3, (0, 1), 4)
    found = {str(h.poly) for h in hits}
    want = ["x1*x2*x3", "x1^3 + x2^3 + x3^3"]
    bad = [str(h.poly) for h in hits if h.smooth and not h.is_diagonal]
    yield _item("explore n=3 d=3", "plane cubics with monomial Hessian include the two normal forms",
                {"present": want, "smooth_non_fermat": []},
                {"present": [w for w in want if w in found], "smooth_non_fermat": bad})


def _record_only():
    f = _fermat(2, 4) + (MultiPoly.var(2, 0) + MultiPoly.var(2, 1)) ** 4
    rep = kernel(f)
    yield {"id": "record kernel at x1^4 + x2^4 + (x1+x2)^4",
           "paper_ref": "recorded for reference, not asserted",
           "expected": None, "computed": rep.dim, "pass": True}


SECTIONS = [
    _block_constants, _counterexamples, _binary_cubic, _binary_classification, _lattice_table,
    _fermat_kernels, _binary_monomial_kernels, _gdnn, _stabilisers, _jacobian, _example_hessians,
    _kayal, _explorer, _record_only,
]


def verify_paper():
    """Run every check; the list is in a fixed order and contains only JSON types."""
    items = []
    for section in SECTIONS:
        items.extend(section())
    return items


def report_json(items=None):
    items = verify_paper() if items is None else items
    return json.dumps(items, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_markdown(items=None):
    items = verify_paper() if items is None else items
    passed = sum(it["pass"] for it in items)
    lines = [f"# Verification report: {passed}/{len(items)} pass", "",
             "| id | expected | computed | result |", "|---|---|---|---|"]
    for it in items:
        e = json.dumps(it["expected"], sort_keys=True)
        c = json.dumps(it["computed"], sort_keys=True)
        lines.append(f"| {it['id']} | `{e}` | `{c}` | {'pass' if it['pass'] else 'FAIL'} |")
    return "\n".join(lines) + "\n"
