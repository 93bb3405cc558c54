"""
Symmetry groups and invariant forms
===================================

Generalised permutation groups G(d, e, n) act by x_i -> theta^a_i x_sigma(i).
Averaging monomials over the group gives its invariant forms; for the
two-parameter family of G(d, n, n)-invariants, one Hessian coefficient shows
that mixing the two invariants destroys the monomial-Hessian shape.
"""

from hessmap import GroupSpec, enumerate_group, gdnn_obstruction, group_generators, invariant_space_degree_d

for spec in [GroupSpec(4, 1, 2), GroupSpec(4, 2, 2), GroupSpec(3, 3, 3)]:
    elements = enumerate_group(group_generators(spec), spec.n, spec.d)
    basis = invariant_space_degree_d(spec, spec.d)
    print(f"G({spec.d},{spec.e},{spec.n}): order {len(elements):3d}, degree-{spec.d} invariants:",
          [str(b) for b in basis])

# alpha1, alpha2 print as x1, x2 here
for n, d in [(3, 3), (3, 6), (4, 4)]:
    print(f"n={n} d={d}: obstructing coefficient =", gdnn_obstruction(n, d))
