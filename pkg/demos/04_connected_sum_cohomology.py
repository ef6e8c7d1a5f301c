"""Cohomology rings of the sphere-product quotients.

The quotient of a product of spheres by a free torus-like action fibers
over the classifying space of the acting group, and its cohomology is the
classifying ring modulo the Euler classes of the sphere bundles.  The
resulting presentations are connected sums of projective spaces, checked
here by Betti tables, Poincare symmetry, and exact ideal identities with
integer cofactor certificates.
"""

from biquot import classifying_ring, ideal_identities
from biquot.constructions import (cp_sum_ring, hp_sum_full_quotient,
                                  hp_sum_ring, cp_hp_sum_ring,
                                  spin_bundle_ring, spin_bundle_sign_branches)

print("Z[u,v]/(uv, (u-v)(u+v)^(n-1)) for n = 2..5:")
for n in range(2, 6):
    q = cp_sum_ring(n)
    print("  n=%d betti %s symmetric=%s" % (n, q.betti(2 * n),
                                            q.poincare_symmetric()))

print()
print("the identity (u-v)(u+v)^(n-1) = u^n - v^n modulo (uv), certified:")
q = cp_sum_ring(4)
u, v = q.ring.gens()
cert = ideal_identities(q, (u - v) * (u + v) ** 3, u ** 4 - v ** 4)
print("  holds:", cert.holds, "| integer cofactors:",
      [str(c) for c in cert.cofactors])

print()
print("the three-generator presentation on Sp(4) and its elimination:")
full = hp_sum_full_quotient(3)
print("  relations:", [str(r) for r in full.relations])
red = hp_sum_ring(3)
print("  after eliminating z3:", red)
print("  betti:", red.betti(12))

print()
print("Z[x,z]/(xz, (x^2-z)^(2e+1)) for e = 1, 2:")
for e in (1, 2):
    q = cp_hp_sum_ring(e)
    print("  e=%d betti %s" % (e, q.betti(8 * e + 4)))
    x, z = q.ring.gens()
    cert = ideal_identities(q, (x * x - z) ** (2 * e + 1),
                            x ** (4 * e + 2) - z ** (2 * e + 1))
    print("      (x^2-z)^%d = x^%d - z^%d mod (xz): %s"
          % (2 * e + 1, 4 * e + 2, 2 * e + 1, cert.holds))

print()
print("the 16-dimensional spin-bundle quotient ring:")
q = spin_bundle_ring()
print("  %s" % q)
print("  betti:", q.betti(16))
print("  restriction kills the relation only on the sign branch:",
      spin_bundle_sign_branches())
