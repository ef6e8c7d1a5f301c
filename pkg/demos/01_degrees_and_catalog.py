"""Degrees of the simple compact groups, and the homogeneous-pair catalog.

Every simply connected simple compact group G has rational homotopy
concentrated in odd dimensions 2d - 1; the multiset of d's is the group's
degree multiset, and dim G = sum (2d - 1) over it.  The catalog lists the
conjugacy classes of homomorphisms H -> G whose quotients carry almost all
of G's degrees, each with its Dynkin index and degree bookkeeping.
"""

from biquot import (SU, Sp, Spin, G2, F4, degrees_of, group_dimension,
                    profile, homogeneous_catalog, catalog_lookup)

print("degree multisets:")
for g in (SU(4), Sp(6), Spin(8), Spin(9), G2, F4):
    print("  %-9s %-18s dim %3d  (= sum of 2d-1)"
          % (g, degrees_of(g), group_dimension(g)))

print()
print("the dimension identity holds for every profile up to rank 8:")
for g in (SU(8), Spin(17), Sp(16), Spin(16)):
    p = profile(g)
    assert p.dimension == sum(2 * d - 1 for d in p.degrees)
    print("  %-9s rank %d, center of order %d, reference rep: %s"
          % (g.name, p.rank, p.center_order, p.faithful_rep))

print()
print("catalog rows for the pair (Sp(4), SU(2)) - three conjugacy classes:")
for entry in catalog_lookup(Sp(4), SU(2)):
    print("  index %-3d via %-6s adds degrees %-6s -> %s"
          % (entry.dynkin_index, entry.hom_descriptor,
             entry.degrees_added, entry.quotient_name or "(no classical name)"))

print()
print("every instantiated row keeps the signed degree identity:")
count = 0
for entry in homogeneous_catalog(150):
    entry.validate()
    count += 1
print("  %d rows validated (dim G <= 150)" % count)
