"""
Cuspidal curves in any P^n
==========================

The cusp formula sums brackets over spaces of k components sharing a node.
It can be evaluated with the modified node classes directly, or with ordinary
classes after moving m constraints onto the node.  Both routes are shown, and
the second is checked against the fact that adding a hyperplane constraint
multiplies the count by d.
"""
from rc_count import ConstraintTuple, cusp_count
from rc_count.counts import cusp_raw_route_a, cusp_raw_route_b

###############################################################################
# Cuspidal cubics through seven points, in the plane and in P^4
# -------------------------------------------------------------

print(cusp_count(2, 3, ConstraintTuple.points_lines(2, 7)).count)
print(cusp_count(4, 3, ConstraintTuple.points_lines(4, 3, 0, 4)).count)

###############################################################################
# Degree-four curves in P^4

for pqr in [(6, 0, 0), (5, 1, 1), (5, 0, 3), (4, 1, 4)]:
    mu = ConstraintTuple.points_lines(4, *pqr)
    print(pqr, cusp_count(4, 4, mu, route="A").count, cusp_count(4, 4, mu, route="B").count)

###############################################################################
# Calibrating the second route
# ----------------------------
# Three hyperplanes can be merged onto the node in P^4.  Only one choice of
# coefficient keeps the multiplicativity in d.

base = (4, 4, 4, 2, 2, 2, 2)
print("base", cusp_raw_route_a(4, 3, ConstraintTuple(4, base)))
mu = ConstraintTuple(4, base + (1, 1, 1))
for convention in ("derived", "printed"):
    print(convention, cusp_raw_route_b(4, 3, mu, convention), "expected", 27 * 24)
