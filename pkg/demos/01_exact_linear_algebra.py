"""
Exact linear algebra over the rationals
=======================================

Everything in this package reduces, sooner or later, to row reduction of
matrices with Fraction entries.  This walk-through shows the primitives.
"""

from fractions import Fraction

from cising import Mat, cokernel_presentation, kernel_basis, rank, rref, solve

F = Fraction

# A matrix is a list of rows; entries can be ints, strings, or Fractions.
# Empty matrices need an explicit column count, so shapes always compose.
a = Mat([[2, 4, 0], [1, 2, 1]])
print("matrix:")
print(a)
print("rank:", rank(a))

# Reduced row echelon form, exactly -- no pivots lost to rounding.
r, pivots = rref(a)
print("rref pivots:", pivots)
print(r)

# The kernel comes back as a list of basis vectors with the free coordinate
# normalized to 1, so results are reproducible.
print("kernel basis:", kernel_basis(a))

# The cokernel is presented as a projection matrix onto complementary
# coordinates: apply it to any vector to read off its class.
proj = cokernel_presentation(a)
print("cokernel projection:")
print(proj)

# solve() inverts the matrix action on its image and reports None otherwise.
print("solve a*v = (4, 3):", solve(a, [F(4), F(3)]))
print("solve a*v = (1, 0):", solve(a, [F(1), F(0)]))

# Half-rational input is fine; everything stays exact.
b = Mat([["1/2", "1/3"], ["1/5", "1/7"]])
print("tiny denominators, rank:", rank(b))
