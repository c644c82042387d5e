"""
Minimal resolutions and the degree-2 operators
==============================================

Over a graded quotient by a regular sequence, any finitely presented graded
module has a minimal free resolution, computed here step by step through
module syzygies.  Squaring the lifted differential produces one operator
per equation; on Ext these act as honest commuting endomorphisms of
degree 2, and their constant parts are plain rational matrices.
"""

from cising import (
    PolyRing,
    RingPresentation,
    ext_module,
    minimal_resolution,
    residue_field_module,
)

ring = PolyRing(["x", "y"])
rp = RingPresentation(ring, [ring.parse("x^2"), ring.parse("y^2")])
k = residue_field_module(rp)

# The residue field over the two-quadric quotient: Betti numbers grow
# linearly, one new generator per step.
res = minimal_resolution(rp, k, 6)
print("betti numbers:", res.betti)
print("generator twists:", res.twists)

# Differentials are stored column by column; entries are normal forms.
print("first differential columns:",
      [[str(p) for p in col] for col in res.differential(1)])

# Ext against the residue field: dimensions equal Betti numbers because the
# resolution is minimal, and each quadric contributes one operator.
ext = ext_module(rp, k, 6)
print("ext dimensions:", ext.dims)
print("operator 1 at step 0:")
print(ext.operators[0][0])
print("operator 2 at step 0:")
print(ext.operators[1][0])

# Over a single quadric the resolution becomes periodic: the same matrix
# repeats forever, and the operator action is an isomorphism.
hyper = RingPresentation(ring, [ring.parse("x^2 + y^2")])
hres = minimal_resolution(hyper, residue_field_module(hyper), 6)
print("hypersurface betti:", hres.betti)
print("d_3 equals d_5:",
      [[str(p) for p in c] for c in hres.differential(3)]
      == [[str(p) for p in c] for c in hres.differential(5)])
