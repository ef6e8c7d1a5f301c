"""Weight multisets and Dynkin indices.

A homomorphism of simply connected simple groups multiplies pi_3 = Z by an
integer, its Dynkin index.  On a rank-1 restriction the index is half the
sum of squared weights of the composed representation, divided by the
normalization of the target's defining representation (1 for SU/Sp, 2 for
Spin and for G2 through its 7-dimensional representation).
"""

from biquot import (SU, Sp, Spin, G2, standard_rep, spin_rep, su2_irrep,
                    su2_homs, dynkin_index, restrict_circle, restrict_coords,
                    rep_sum, clebsch_gordan, catalog_lookup,
                    catalog_dynkin_index)

print("the three SU(2) classes in Sp(4), by composed weights and index:")
for rep in su2_homs(Sp(4)):
    ws = sorted(w[0] for w in rep.weights)
    print("  %-6s weights %-18s index %d"
          % (rep.label, ws, dynkin_index(rep, 1)))

print()
print("the four SU(2) classes in G2 (7-dimensional eigenvalue patterns):")
for rep in su2_homs(G2):
    ws = sorted((w[0] for w in rep.weights), reverse=True)
    print("  %-8s exponents %-22s index %d"
          % (rep.label, ws, dynkin_index(rep, 2)))

print()
print("index of Sym^k V follows k(k+1)(k+2)/6:")
print("  ", [dynkin_index(su2_irrep(k), 1) for k in range(1, 7)])

print()
print("spin representations restrict as spin representations:")
nine = spin_rep(9)
eight = rep_sum(spin_rep(8, "plus"), spin_rep(8, "minus"))
print("  spin(9) restricted to Spin(8):",
      sorted(nine.weights) == sorted(eight.weights))
circle = restrict_coords(spin_rep(8, "minus"), (0,))
print("  spin-(8) restricted to a circle: weights",
      sorted(w[0] for w in circle.weights), "(scale 2)")

print()
print("the 7-dim representation of G2 on its principal index-28 circle:")
print("  exponents",
      sorted(w[0] for w in restrict_circle(standard_rep(G2), (2, 4)).weights))

print()
print("Clebsch-Gordan: Sym^2 V tensor Sym^1 V =",
      " + ".join("Sym^%d" % k for k in clebsch_gordan(2, 1)))

print()
print("catalog indices recomputed from weight data:")
rows = [catalog_lookup(Spin(9), Spin(7), "spin rep")[0],
        catalog_lookup(Sp(4), SU(2), "S3V")[0],
        catalog_lookup(SU(7), G2)[0]]
for entry in rows:
    print("  %s/%s via %s: table %d, recomputed %d"
          % (entry.g.name, entry.h.name, entry.hom_descriptor,
             entry.dynkin_index, catalog_dynkin_index(entry)))
