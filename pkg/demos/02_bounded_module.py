"""
A bounded module of degree one
==============================

Bounded(mu, lambda) lives on infinitely many tableaux. Every weight space is
finite, and for lambda = (-1/2, -1/2) each one is a line.
"""

from fractions import Fraction as F

from gtsp import Bounded, LinComb, degree, parse_symbol, special_upper, weight_C, weight_space_basis
from gtsp.modules import support_window

H = F(1, 2)
spec = Bounded((F(1, 3), F(2, 5)), (-H, -H))
print("degree", degree(spec))

# the special upper tableau is a convenient starting vector
t = special_upper(spec.mu, spec.lam)
print(t)
print("weight", [str(x) for x in weight_C(t)])

# act with a raising and a lowering generator
m = spec.module()
for name in ["F(1,-1)", "F(-1,1)", "F(2,-1)"]:
    image = m.apply(parse_symbol(name), LinComb.basis(t))
    for b, c in image:
        print(name, c, [str(x) for x in weight_C(b)])

# weight multiplicities in a small window
dims = {len(weight_space_basis(spec, g)) for g in support_window(spec, 2)}
print("fiber dimensions", dims)

# lambda = (-1/2, -3/2) has degree 3
wide = Bounded((F(1, 3), F(2, 5)), (-H, -3 * H))
print("degree", degree(wide), {len(weight_space_basis(wide, g)) for g in support_window(wide, 2)})
