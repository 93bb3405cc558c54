"""
Testing equivalence to a Fermat form
====================================

Step 1 factors H(g) into d-2 powers of linear forms; step 2 solves for g as
a combination of their d-th powers.  The block form from the first demo gets
through step 1 and is caught by step 2.
"""

from hessmap import explore_monomial_hessian, kayal_check, parse

for text in ["2*x1^3 + 6*x1*x2^2", "x1^2*x2^2 + x3^4", "x1^3 + x1*x2^2 + x2^3"]:
    r = kayal_check(parse(text))
    print(f"{text:24s} -> {r.status} ({r.stage})")
    for a, h in r.forms:
        print(f"{'':28s}{a} * ({h})^3")

# Small search: quartic binary forms with coefficients in {-1,0,1} and a
# single-term Hessian.  The smooth ones are exactly the diagonal forms.
hits = explore_monomial_hessian(2, 4, (-1, 0, 1), 5)
print(f"\n{len(hits)} quartics with monomial Hessian; smooth ones:")
for h in hits:
    if h.smooth:
        print("  ", h.poly, " diagonal:", h.is_diagonal)
