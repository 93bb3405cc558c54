"""
Linearising the Hessian map
===========================

dH_f(g) is the t-coefficient of H(f + t*g).  Its kernel on degree-d forms
measures how far H is from being locally injective at f.
"""

from math import comb

from hessmap import MultiPoly, dhessian, dhessian_oracle, kernel, parse

f = parse("x1^3 + x2^3 + x3^3")
for g in [parse("x1^2*x2", 3), parse("x1*x2*x3")]:
    print(f"g = {g}")
    print("  dH_f(g)        :", dhessian(f, g))
    print("  via H(f + t g) :", dhessian_oracle(f, g))
# x1*x2*x3 lies in the kernel: it is one of the C(3,3) extra directions below

print("\nkernel dimension at the Fermat form (n, d):")
for n in range(2, 5):
    row = []
    for d in range(2, 7):
        fermat = sum((MultiPoly.var(n, i, d) for i in range(1, n)), MultiPoly.var(n, 0, d))
        predicted = n - 1 if d > n else n - 1 + comb(n, d)
        row.append(f"{kernel(fermat).dim}/{predicted}")
    print(f"  n={n}:", "  ".join(row))

print("\nbinary monomials x1^k x2^(8-k):")
for k in range(1, 9):
    rep = kernel(MultiPoly.monomial((k, 8 - k)))
    print(f"  k={k}: dim {rep.dim}", [str(b) for b in rep.basis] if k == 4 else "")
