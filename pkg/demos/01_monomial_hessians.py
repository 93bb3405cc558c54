"""
A singular form whose Hessian looks like a Fermat Hessian
=========================================================

Every Fermat form x1^d + ... + xn^d has Hessian c*(x1...xn)^(d-2).  The
converse fails: replacing a block of the Fermat form by a monomial keeps the
Hessian a single term of that shape, but the hypersurface becomes singular.
"""

from hessmap import CounterexampleSpec, counterexample_poly, hessian_det, is_smooth, parse

fermat = parse("x1^4 + x2^4 + x3^4")
print("Fermat form       :", fermat)
print("  H               :", hessian_det(fermat))
print("  smooth          :", is_smooth(fermat).is_smooth)

# n = 3 variables, degree 4, block of size q = 2: (x1*x2)^2 + x3^4
g = counterexample_poly(CounterexampleSpec(n=3, d=4, q=2))
print("block form        :", g)
print("  H               :", hessian_det(g))
rep = is_smooth(g)
print("  smooth          :", rep.is_smooth, f"(rank {rep.rank} of {rep.full_rank_needed} in degree {rep.witness_degree})")

# the same phenomenon down the grid
for spec in [CounterexampleSpec(3, 6, 3), CounterexampleSpec(4, 8, 4)]:
    g = counterexample_poly(spec)
    print(f"{str(g):28s} H = {hessian_det(g)}")
