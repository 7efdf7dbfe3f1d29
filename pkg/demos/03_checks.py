"""
Casimir, primitivity and the oscillator picture
===============================================

The same bounded module seen three ways: through its central character,
through its highest-weight tableau and against the Weyl-algebra model.
"""

from fractions import Fraction as F

from gtsp import Bounded, compare_degree1, highest_weight_tableau, is_primitive, verify_casimir
from gtsp.verification import casimir_polynomial, evaluate_polynomial

H = F(1, 2)
spec = Bounded((F(1, 3), F(2, 5)), (-H, -H))

# eigenvalue polynomial fitted on finite-dimensional modules
poly = casimir_polynomial(2)
print(poly)
print("predicted", evaluate_polynomial(poly, tuple(l + 1 for l in spec.lam)))

report = verify_casimir(spec, samples=20, seed=0)
print("observed", report["scalars"], "failures", len(report["failures"]))

# T(W_lambda) is killed by all raising generators
for lam in [(-H, -H), (-H, -H, -3 * H)]:
    hw = highest_weight_tableau(lam)
    print(lam, is_primitive(hw, Bounded((H,) * len(lam), lam)))

# differential test against the oscillator realization
for sigma in [(), (1,), (1, 2)]:
    r = compare_degree1((H, H), (-H, -H), sigma, radius=4)
    print(sigma, r["fibers"], "fibers", len(r["mismatches"]), "mismatches")
