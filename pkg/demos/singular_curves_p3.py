"""
Triple points and tacnodes in P^3
=================================

Counts of one-component rational curves in P^3 with a triple point or a
tacnode, through p points and q lines with 2p + q = 4d - 3.  Each count is
the raw intersection number divided by the number of orderings of the branches.
"""
from rc_count import tacnode_count_P2, tacnode_count_P3, triple_point_count_P2, triple_point_count_P3

print(f"{'d':>2} {'(p,q)':>8} {'triple':>14} {'tacnode':>16}")
for d in (4, 5):
    for p in range((4 * d - 3) // 2, -1, -1):
        q = 4 * d - 3 - 2 * p
        t = triple_point_count_P3(d, p, q)
        s = tacnode_count_P3(d, p, q)
        print(f"{d:>2} {f'({p},{q})':>8} {str(t.count):>14} {str(s.count):>16}")

###############################################################################
# Planar specialization
# ---------------------
# Three points and seven lines force a quartic into the plane of the points,
# where the lines become seven more points: the plane numbers come back.

print(triple_point_count_P3(4, 3, 7).count, triple_point_count_P2(4).count)
print(tacnode_count_P3(4, 3, 7).count, tacnode_count_P2(4).count)

###############################################################################
# Raw numbers and divisors travel with the count.

r = triple_point_count_P3(5, 8, 1)
print(f"raw {r.raw} / {r.divisor} = {r.count}")
