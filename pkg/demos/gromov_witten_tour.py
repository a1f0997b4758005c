"""
Genus-0 invariants of projective space
======================================

A short walk through the one-component numbers everything else is built on:
primary invariants from the associativity recursion, invariants with a single
psi class, and the modified psi classes pulled back from the space without
constraint points.
"""
from rc_count import descendant_invariant, jfunction_onepoint, modified_descendant, nd_plane, primary_invariant

###############################################################################
# Rational plane curves
# ---------------------
# ``nd_plane(d)`` counts degree-d rational curves through 3d-1 general points.

for d in range(1, 7):
    print(f"n_{d} = {nd_plane(d)}")

###############################################################################
# Other targets work the same way.  Lines in P^3 meeting four general lines:

print("lines meeting four lines:", primary_invariant(3, 1, [2, 2, 2, 2]))

# and conics in P^3 through three points meeting two lines
print("conics:", primary_invariant(3, 2, [3, 3, 3, 2, 2]))

###############################################################################
# One psi class
# -------------
# With nothing but the descendant insertion the answer has a closed form,
# which makes a convenient independent check.

for c in range(3):
    j = 3 + 2 - 2 - c
    print(f"<tau_{j}(H^{c})>_1 on P^2 = {descendant_invariant(2, 1, (j, c), [])}"
          f"  (series: {jfunction_onepoint(2, 1, j, c)})")

###############################################################################
# Modified classes
# ----------------
# On lines through two points the pulled-back psi class has degree -2, while
# its square on lines through one point vanishes.

print(modified_descendant(2, 1, 0, 1, 0, [2, 2]), modified_descendant(2, 1, 0, 2, 0, [2]))
