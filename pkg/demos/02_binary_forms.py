"""
Binary forms with a monomial Hessian
====================================

For binary forms the question is settled by coefficient forcing: with the
singular point moved to (0:1), each Hessian coefficient that must vanish is
a quadratic in the coefficients of f, and the nonzero diagonal terms force
coefficients to vanish one at a time.
"""

from hessmap import (
    brute_force_singular_search,
    classify_singular_monomial_hessian,
    symbolic_binary_hessian,
)

# the general cubic, coefficients a0..a3 shown as x3..x6
print("H(a3 x1^3 + a2 x1^2 x2 + a1 x1 x2^2 + a0 x2^3) =")
print("   ", symbolic_binary_hessian(3))

for d in range(3, 11):
    c = classify_singular_monomial_hessian(d)
    print(f"d={d:2d}: {c.verdict:22s} {c.family or ''}")

# an independent check by enumeration
for d in (4, 5, 6):
    hits = brute_force_singular_search(d, (-1, 0, 1))
    print(f"d={d}: brute force over {{-1,0,1}} ->", [str(f.to_poly()) for f in hits])

print("\nforcing trace at d=8:")
for line in classify_singular_monomial_hessian(8).trace[:12]:
    print("  ", line)
