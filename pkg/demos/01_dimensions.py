"""
Counting standard tableaux
==========================

Standard tableaux index a basis of the finite-dimensional modules, so their
number has to agree with the Weyl dimension formula.
"""

from fractions import Fraction as F

from gtsp import enumerate_standard, weyl_dimension

H = F(1, 2)

# the trivial module has a single tableau
std = enumerate_standard("C", (0, 0))
print(len(std), std.tableaux[0])

# a few small modules of sp(4)
for lam in [(0, -1), (-1, -1), (-1, -2), (0, -3)]:
    print("C", lam, len(enumerate_standard("C", lam)), weyl_dimension("C", lam))

# type D spinor weights use half-integers
for lam in [(-H, -H), (-H, -3 * H), (-H, -H, -H), (-H, -H, -3 * H)]:
    print("D", [str(x) for x in lam], len(enumerate_standard("D", lam)), weyl_dimension("D", lam))
