"""Graded polynomial quotient rings for classifying spaces and quotients,
Betti-rank extraction, pi_3 through Smith normal form, and the homotopy
Euler characteristic test.

H*(B(S^1)^a x BSU(2)^b) is a polynomial ring with one degree-2 generator
per circle and one degree-4 generator per SU(2).  A two-sided quotient of a
group G contributes one relation per polynomial generator of H*(BG)
(left pullback minus right pullback); a sphere bundle contributes its Euler
class.  Rank extraction runs over the rationals on a Groebner normal-form
basis; integral identities between presentations are certified separately
with explicit integer cofactors.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .lattices import smith_normal_form
from .polyring import GradedPolyRing, Poly, groebner_basis, reduce_poly


def classifying_ring(kinds, names=None):
    """Polynomial ring of B(product of circles and SU(2)s).

    kinds is a sequence of 'circle' / 'su2'.  Default names follow the
    usual conventions: a single circle is x, two circles are u, v; a single
    SU(2) is z, several are z1, z2, ...
    """
    kinds = list(kinds)
    for k in kinds:
        if k not in ("circle", "su2"):
            raise ValueError("kinds must be 'circle' or 'su2'")
    if names is None:
        n_circ = kinds.count("circle")
        n_su2 = kinds.count("su2")
        circ_names = {1: ["x"], 2: ["u", "v"]}.get(
            n_circ, ["x%d" % (i + 1) for i in range(n_circ)])
        su2_names = ["z"] if n_su2 == 1 else ["z%d" % (i + 1)
                                              for i in range(n_su2)]
        names = []
        ci = si = 0
        for k in kinds:
            if k == "circle":
                names.append(circ_names[ci])
                ci += 1
            else:
                names.append(su2_names[si])
                si += 1
    degrees = tuple(2 if k == "circle" else 4 for k in kinds)
    return GradedPolyRing(tuple(names), degrees)


class GradedQuotient:
    """Quotient of a graded polynomial ring by homogeneous relations.

    Normal forms come from a Groebner basis in the graded order; the
    normal-form monomial basis gives the rank of each graded piece.
    """

    def __init__(self, ring, relations):
        self.ring = ring
        rels = []
        for r in relations:
            if not isinstance(r, Poly):
                raise TypeError("relations must be polynomials")
            if r.is_zero():
                continue
            if not r.is_homogeneous():
                raise ValueError("inhomogeneous relation: %s" % (r,))
            rels.append(r)
        self.relations = tuple(rels)
        self.gb = tuple(groebner_basis(list(self.relations)))

    def reduce(self, p):
        """Canonical normal form modulo the relation ideal."""
        return reduce_poly(p, list(self.gb))

    def is_zero_in_quotient(self, p):
        return self.reduce(p).is_zero()

    def monomial_basis(self, max_degree):
        """Normal-form monomials (exponent tuples) up to the graded degree."""
        lead = [g.leading_monomial() for g in self.gb]
        out = []
        for deg in range(0, max_degree + 1):
            for m in self.ring.monomials_of_degree(deg):
                if not any(all(a <= b for a, b in zip(lm, m)) for lm in lead):
                    out.append(m)
        return out

    def betti(self, max_degree):
        """Rank of each graded piece, as a list indexed by degree 0..max."""
        ranks = [0] * (max_degree + 1)
        for m in self.monomial_basis(max_degree):
            ranks[self.ring.monomial_degree(m)] += 1
        return ranks

    def is_finite_dimensional(self):
        """A quotient is finite-dimensional iff every generator has a pure
        power among the Groebner leading monomials."""
        lead = [g.leading_monomial() for g in self.gb]
        for i in range(self.ring.ngens):
            if not any(all(e == 0 for j, e in enumerate(lm) if j != i)
                       and lm[i] > 0 for lm in lead):
                return False
        return True

    def top_degree(self):
        if not self.is_finite_dimensional():
            raise ValueError("quotient is not finite-dimensional")
        bound = sum((lm_max - 1) * d for lm_max, d in zip(
            self._pure_power_bounds(), self.ring.degrees))
        basis = self.monomial_basis(bound)
        return max(self.ring.monomial_degree(m) for m in basis)

    def _pure_power_bounds(self):
        lead = [g.leading_monomial() for g in self.gb]
        bounds = []
        for i in range(self.ring.ngens):
            powers = [lm[i] for lm in lead
                      if all(e == 0 for j, e in enumerate(lm) if j != i)
                      and lm[i] > 0]
            bounds.append(min(powers))
        return bounds

    def total_rank(self):
        return sum(self.betti(self.top_degree()))

    def expected_total_rank(self):
        """Poincare-series prediction when the relations form a regular
        sequence: the product of relation degrees over generator degrees."""
        if len(self.relations) != self.ring.ngens:
            raise ValueError("regular-sequence prediction needs as many "
                             "relations as generators")
        val = Fraction(prod(r.degree() for r in self.relations),
                       prod(self.ring.degrees))
        if val.denominator != 1:
            raise ValueError("degree product ratio is not an integer")
        return int(val)

    def poincare_symmetric(self):
        b = self.betti(self.top_degree())
        return b == b[::-1]

    def eliminate_linear(self, name):
        """Remove a generator using a relation of the form +-(gen - rest).

        Returns the presentation on the remaining generators with the other
        relations rewritten through the substitution.
        """
        i = self.ring.names.index(name)
        use = None
        for r in self.relations:
            unit = tuple(int(j == i) for j in range(self.ring.ngens))
            c = r.terms.get(unit)
            if c in (1, -1) and all(m == unit or m[i] == 0 for m in r.terms):
                use = (r, c)
                break
        if use is None:
            raise ValueError("no linear relation available for %s" % (name,))
        r, c = use
        new_ring = GradedPolyRing(
            tuple(n for j, n in enumerate(self.ring.names) if j != i),
            tuple(d for j, d in enumerate(self.ring.degrees) if j != i))
        rest = Poly(self.ring, {m: -Fraction(v, c) for m, v in r.terms.items()
                                if m[i] == 0})
        images = {}
        for j, n in enumerate(self.ring.names):
            if j == i:
                images[n] = rest.substitute(
                    new_ring, {nn: new_ring.gen(nn) for nn in new_ring.names})
            else:
                images[n] = new_ring.gen(n)
        # the substituted eliminated generator must not reference itself
        new_rels = []
        for other in self.relations:
            if other is r:
                continue
            img = other.substitute(new_ring, images)
            img = img.map_coeffs(lambda v: int(v) if Fraction(v).denominator == 1
                                 else v)
            new_rels.append(img)
        return GradedQuotient(new_ring, new_rels)

    def to_obj(self):
        return {
            "generators": [{"name": n, "degree": d}
                           for n, d in zip(self.ring.names, self.ring.degrees)],
            "relations": [r.to_obj() for r in self.relations],
        }

    def __str__(self):
        return "%s / (%s)" % (self.ring,
                              ", ".join(str(r) for r in self.relations))


def biquotient_ring(g_profile, ring, pullbacks):
    """Quotient presentation from one pullback pair per generator of H*(BG).

    g_profile fixes how many polynomial generators H*(BG) has (one per
    degree d of G, in cohomological degree 2d); pullbacks lists the (left,
    right) images in the classifying ring of H.
    """
    if len(pullbacks) != len(g_profile.degrees):
        raise ValueError(
            "need one pullback pair per degree of %s (%d), got %d"
            % (g_profile.id, len(g_profile.degrees), len(pullbacks)))
    expected = sorted(2 * d for d in g_profile.degrees)
    rels = []
    degs = []
    for left, right in pullbacks:
        rel = left - right
        if rel.is_zero():
            continue
        if not rel.is_homogeneous():
            raise ValueError("inhomogeneous pullback relation: %s" % (rel,))
        degs.append(rel.degree())
        rels.append(rel)
    for d in degs:
        if d not in expected:
            raise ValueError("relation degree %d is not a generator degree "
                             "of H*(BG) (expected %s)" % (d, expected))
    return GradedQuotient(ring, rels)


def bundle_quotient_ring(base, eulers):
    """Append sphere-bundle Euler-class relations to a quotient."""
    extra = [e for e in eulers if not e.is_zero()]
    return GradedQuotient(base.ring, list(base.relations) + extra)


# ---------------------------------------------------------------------------
# Integral ideal identities with cofactor certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IdentityCertificate:
    holds: bool
    cofactors: tuple = ()
    integral: bool = False

    def __bool__(self):
        return self.holds


def ideal_identities(quotient, lhs, rhs):
    """Check lhs = rhs modulo the relation ideal, over the integers.

    On success the certificate carries one integer-coefficient cofactor per
    relation with lhs - rhs = sum cofactor_i * relation_i, re-verified by
    expansion.  The Groebner elements stay integral with unit leading
    coefficients for every presentation in scope, which makes rational
    membership equivalent to integral membership here.
    """
    if lhs.degree() != rhs.degree():
        raise ValueError("sides have different degrees")
    diff = lhs - rhs
    if diff.is_zero():
        return IdentityCertificate(True, tuple(
            quotient.ring.zero() for _ in quotient.relations), True)
    gb, certs = _groebner_with_certs(list(quotient.relations))
    rem, quots = reduce_poly(diff, gb, with_quotients=True)
    if not rem.is_zero():
        return IdentityCertificate(False)
    n = len(quotient.relations)
    cof = [quotient.ring.zero() for _ in range(n)]
    for q, cert in zip(quots, certs):
        for i in range(n):
            cof[i] = cof[i] + q * cert[i]
    check = quotient.ring.zero()
    for c, r in zip(cof, quotient.relations):
        check = check + c * r
    if not (check - diff).is_zero():
        raise AssertionError("cofactor certificate failed to re-verify")
    integral = all(c.is_integral() for c in cof)
    cof = tuple(c.map_coeffs(lambda v: int(v)) if c.is_integral() else c
                for c in cof)
    return IdentityCertificate(True, cof, integral)


def _groebner_with_certs(relations):
    """Buchberger with membership certificates against the input relations."""
    from .polyring import _spoly, _monomial_mul  # shared conventions

    ring = relations[0].ring
    n = len(relations)
    basis = []
    for i, r in enumerate(relations):
        cert = [ring.one() if j == i else ring.zero() for j in range(n)]
        basis.append((r, cert))

    def tracked_reduce(p, cert):
        rem = ring.zero()
        work = p
        while not work.is_zero():
            m = work.leading_monomial()
            c = work.terms[m]
            hit = None
            for b, bc in basis:
                lm = b.leading_monomial()
                if all(a <= x for a, x in zip(lm, m)):
                    hit = (b, bc, lm)
                    break
            if hit is None:
                rem = rem + Poly(ring, {m: c})
                work = work - Poly(ring, {m: c})
                continue
            b, bc, lm = hit
            factor = Poly(ring, {tuple(x - a for a, x in zip(lm, m)):
                                 Fraction(c, 1) / b.leading_coeff()})
            work = work - factor * b
            cert = [ci - factor * bi for ci, bi in zip(cert, bc)]
        return rem, cert

    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, ful = basis[i]
        g, gul = basis[j]
        mf, mg = f.leading_monomial(), g.leading_monomial()
        if _monomial_mul(mf, mg) == tuple(max(a, b) for a, b in zip(mf, mg)):
            continue
        lcm = tuple(max(a, b) for a, b in zip(mf, mg))
        tf = Poly(ring, {tuple(x - a for a, x in zip(mf, lcm)):
                         Fraction(1, 1) / f.leading_coeff()})
        tg = Poly(ring, {tuple(x - a for a, x in zip(mg, lcm)):
                         Fraction(1, 1) / g.leading_coeff()})
        s = tf * f - tg * g
        scert = [tf * a - tg * b for a, b in zip(ful, gul)]
        rem, cert = tracked_reduce(s, scert)
        if not rem.is_zero():
            basis.append((rem, cert))
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    return [b for b, _ in basis], [c for _, c in basis]


# ---------------------------------------------------------------------------
# pi_3 and the homotopy Euler characteristic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant factors d1 | d2 | ...; a 0 encodes a free Z summand."""

    invariant_factors: tuple

    def __post_init__(self):
        factors = tuple(self.invariant_factors)
        torsion = [d for d in factors if d != 0]
        free = [d for d in factors if d == 0]
        for a, b in zip(torsion, torsion[1:]):
            if b % a != 0:
                raise ValueError("invariant factors must form a "
                                 "divisibility chain")
        if any(d == 1 for d in torsion):
            raise ValueError("unit factors should be dropped")
        object.__setattr__(self, "invariant_factors",
                           tuple(torsion) + tuple(free))

    @property
    def free_rank(self):
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d != 0)

    def is_trivial(self):
        return not self.invariant_factors

    @property
    def order(self):
        if self.free_rank:
            return 0
        p = 1
        for d in self.torsion:
            p *= d
        return p

    def __str__(self):
        if not self.invariant_factors:
            return "0"
        parts = ["Z/%d" % d for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts)

    def to_obj(self):
        return {"invariant_factors": list(self.invariant_factors),
                "name": str(self)}


def cokernel(matrix, cols=None):
    """Cokernel of Z^rows -> Z^cols with the matrix acting by row vectors."""
    if cols is None:
        if not matrix:
            raise ValueError("empty matrix needs an explicit column count")
        cols = len(matrix[0])
    if not matrix:
        return FiniteAbelianGroup((0,) * cols)
    d, _, _ = smith_normal_form(list(matrix), cols)
    k = min(len(matrix), cols)
    dias = [d[i][i] for i in range(k) if d[i][i] != 0]
    factors = [x for x in dias if x > 1] + [0] * (cols - len(dias))
    return FiniteAbelianGroup(tuple(factors))


def pi3_cokernel(index_matrix, cols=None):
    """pi_3 of the quotient from the matrix of net Dynkin indices.

    Rows index the simple factors of the acting group, columns the simple
    factors of the group acted on; each entry is the left index minus the
    right index of that factor's action (an outer twist on one side flips
    no sign in degree 2, so equal indices cancel to zero).
    """
    return cokernel(index_matrix, cols)


def chi_pi(even_degrees, odd_degrees):
    """dim pi_even - dim pi_odd from multisets of contributing degrees;
    finite-dimensional elliptic spaces need this to be <= 0."""
    return len(list(even_degrees)) - len(list(odd_degrees))
