"""
Cochain models and their cohomology
===================================

A two-step Lie algebra with symmetric bracket has a cochain model: a free
graded-commutative algebra on even generators (degree 1 duals) and odd
generators (degree 2 duals), with the differential sending each odd
generator to the quadratic form of the bracket.  Its cohomology is computed
slice by slice, exactly.
"""

from fractions import Fraction

from cising import (
    PolyRing,
    RingPresentation,
    ce_cohomology,
    chevalley_cochain,
    extract_bracket,
    hilbert_function,
    tangent_lie,
)

F = Fraction

ring = PolyRing(["x", "y"])
lie = tangent_lie([ring.parse("x^2 + y^2")], [F(0), F(0)])

# The model has one even generator per kernel direction and one odd
# generator per cokernel direction; the differential is the quadric.
ce = chevalley_cochain(lie)
print("even generators:", ce.even_count)
print("odd generators:", ce.odd_count)
print("differential:", ce.differentials[0])

# Round trip: the bracket can be read back off the quadric, diagonal doubled.
print("round trip ok:", extract_bracket(ce) == lie.bracket)

# Cohomology dimensions, one row per exterior degree.  For a regular
# quadric the positive rows vanish and row zero is a Hilbert function.
dims = ce_cohomology(ce, 8)
for p in range(ce.odd_count + 1):
    print(f"H^{p}:", dims.row(p))

# Independent check: row zero equals the Hilbert function of the quotient
# by the quadric itself, computed through Groebner bases instead.
quotient = RingPresentation(ring, [ring.parse("x^2 + y^2")])
print("hilbert match:", dims.row(0) == hilbert_function(quotient, 8))
