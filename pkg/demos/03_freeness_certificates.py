"""Freeness certificates for two-sided actions.

An element of the acting torus fixes a point of a group factor exactly when
its left and right images have equal eigenvalue multisets, so each possible
eigenvalue matching cuts out an integer lattice of characters.  The action
is free precisely when every such lattice contains the kernel lattice; a
failure produces a finite-order witness element.
"""

from biquot import is_free, brute_force_free, kernel_lattice, SU, Sp, G2
from biquot.constructions import (
    gromoll_meyer_action, su2_pair_action, g2_pair_action,
    torus_squared_sphere_action, circle_su2_sphere_action,
    sp4_su2xsu2_action, hp_sum_action,
)

print("the exotic 7-sphere pair on Sp(4):")
v = is_free(gromoll_meyer_action())
print("  (V+2C | 2V) free:", v.free,
      "| kernel lattice:", [list(b) for b in v.kernel.basis])

print()
print("the other Sp(4) pairs fail at small torsion:")
for left, right in (("S3V", "V+2C"), ("S3V", "2V")):
    v = is_free(su2_pair_action(Sp(4), left, right))
    print("  (%s | %s): witness %s of order %d"
          % (left, right, v.witness, v.witness_order))

print()
print("the SU(3) pair shares an order-3 element:")
v = is_free(su2_pair_action(SU(3), "V+C", "S2V"))
print("  (V+C | S2V): witness %s of order %d" % (v.witness, v.witness_order))

print()
print("all six unordered pairs of SU(2) classes on G2:")
for i, j in ((1, 3), (1, 4), (1, 28), (3, 4), (3, 28), (4, 28)):
    v = is_free(g2_pair_action(i, j))
    if v.free:
        print("  indices (%2d | %2d): free" % (i, j))
    else:
        print("  indices (%2d | %2d): witness %s of order %d"
              % (i, j, v.witness, v.witness_order))

print()
print("torus and circle-times-SU(2) actions on sphere products:")
for n in (2, 4, 6):
    act = torus_squared_sphere_action(n)
    print("  (S^1)^2 on S^3 x S^%d: free = %s" % (2 * n - 1,
                                                  is_free(act).free))
for e in (1, 3):
    act = circle_su2_sphere_action(e)
    print("  S^1 x SU(2) on S^5 x S^%d: free = %s" % (8 * e + 3,
                                                      is_free(act).free))

print()
print("SU(2) x SU(2) on Sp(4), both free classes with trivial kernel:")
for kind in ("block", "split"):
    v = is_free(sp4_su2xsu2_action(kind))
    print("  %-6s free = %s, kernel full = %s"
          % (kind, v.free, v.kernel.is_full()))

print()
print("a rank-3 action (group factor and sphere factor together):")
act = hp_sum_action(3)
print("  SU(2)^3 on Sp(4) x S^11: free =", is_free(act).free)

print()
print("the brute-force oracle agrees, element by element, through order 60:")
act = su2_pair_action(Sp(4), "S3V", "2V")
b = brute_force_free(act, 60)
print("  (S3V | 2V): witness %s of order %s (exhaustive = %s)"
      % (b.witness, b.witness_order, b.exhaustive))
