import random
from fractions import Fraction

import pytest
import sympy

from biquot.polyring import GradedPolyRing, Poly, groebner_basis, reduce_poly, \
    poly_from_obj
from biquot.cohomology import (
    classifying_ring, GradedQuotient, biquotient_ring, bundle_quotient_ring,
    ideal_identities, pi3_cokernel, cokernel, chi_pi, FiniteAbelianGroup,
)
from biquot.groups import Sp, profile
from biquot import constructions as cons


# -- polynomial layer -----------------------------------------------------------


def test_ring_validation():
    with pytest.raises(ValueError):
        GradedPolyRing(("u", "u"), (2, 2))
    with pytest.raises(ValueError):
        GradedPolyRing(("u",), (3,))


def test_poly_arithmetic_and_order():
    ring = GradedPolyRing(("x", "z"), (2, 4))
    x, z = ring.gens()
    p = (x * x - z) ** 2
    assert p == x ** 4 - 2 * x * x * z + z * z
    assert p.degree() == 8
    # graded order: the degree-4 generator beats the square of the
    # degree-2 generator within the same grading
    assert (x * x - z).leading_monomial() == (0, 1)
    assert str(x * x - z) == "-z + x^2"


def test_homogeneity_checks():
    ring = GradedPolyRing(("u", "v"), (2, 2))
    u, v = ring.gens()
    assert (u + v).is_homogeneous()
    assert not (u + v * v).is_homogeneous()
    with pytest.raises(ValueError):
        (u + v * v).degree()


def test_substitute():
    ring = GradedPolyRing(("y",), (4,))
    y, = ring.gens()
    target = classifying_ring(["circle"])
    x, = target.gens()
    assert (y * y).substitute(target, {"y": -x ** 2}) == x ** 4


def test_poly_serialization_round_trip():
    ring = GradedPolyRing(("u", "v"), (2, 2))
    u, v = ring.gens()
    p = 3 * u * u - 2 * u * v + v * v
    assert poly_from_obj(ring, p.to_obj()) == p


def test_reduce_with_quotients():
    ring = classifying_ring(["circle", "circle"])
    u, v = ring.gens()
    basis = [u * v]
    p = u * u * v + v
    rem, quots = reduce_poly(p, basis, with_quotients=True)
    assert rem == v
    assert quots[0] * basis[0] + rem == p


def test_groebner_of_monomial_ideal_is_itself():
    ring = classifying_ring(["circle", "circle"])
    u, v = ring.gens()
    gb = groebner_basis([u * v])
    assert gb == [u * v]


def test_groebner_vs_sympy_random():
    rng = random.Random(17)
    x, y = sympy.symbols("x y")
    ring = GradedPolyRing(("u", "v"), (2, 2))
    u, v = ring.gens()
    for _ in range(15):
        rels = []
        srels = []
        for _ in range(2):
            deg = rng.randint(1, 3)
            coeffs = [rng.randint(-2, 2) for _ in range(deg + 1)]
            if not any(coeffs):
                coeffs[0] = 1
            p = ring.zero()
            sp = 0
            for i, c in enumerate(coeffs):
                p = p + c * u ** (deg - i) * v ** i
                sp += c * x ** (deg - i) * y ** i
            rels.append(p)
            srels.append(sp)
        if any(r.is_zero() for r in rels):
            continue
        q = GradedQuotient(ring, rels)
        # the rank of each graded piece equals the rank of the sympy
        # normal-form map on the degree's monomials
        gb = sympy.groebner(srels, y, x, order="grlex")
        for deg in range(0, 13, 2):
            k = deg // 2
            monos = [x ** (k - i) * y ** i for i in range(k + 1)]
            nfs = [sympy.Poly(gb.reduce(m)[1], x, y) for m in monos]
            all_monoms = sorted({mm for p in nfs for mm in p.monoms()})
            mat = sympy.Matrix([[p.coeff_monomial(mm) for mm in all_monoms]
                                for p in nfs])
            assert q.betti(deg)[deg] == mat.rank(), \
                (deg, [str(r) for r in rels])


# -- classifying rings ----------------------------------------------------------


def test_classifying_ring_names():
    assert classifying_ring(["circle"]).names == ("x",)
    assert classifying_ring(["circle", "circle"]).names == ("u", "v")
    assert classifying_ring(["su2"]).names == ("z",)
    assert classifying_ring(["su2"] * 3).names == ("z1", "z2", "z3")
    mixed = classifying_ring(["circle", "su2"])
    assert mixed.names == ("x", "z") and mixed.degrees == (2, 4)
    assert classifying_ring([]).ngens == 0
    with pytest.raises(ValueError):
        classifying_ring(["torus"])


# -- quotient machinery ----------------------------------------------------------


def test_normal_form_idempotent_and_relations_vanish():
    for q in (cons.cp_sum_ring(4), cons.cp_hp_sum_ring(1),
              cons.hp_sum_full_quotient(3), cons.spin_bundle_ring()):
        for r in q.relations:
            assert q.reduce(r).is_zero()
        probe = q.ring.one()
        for g in q.ring.gens():
            probe = probe + g ** 2
        nf = q.reduce(probe)
        assert q.reduce(nf) == nf


def test_inhomogeneous_relation_rejected():
    ring = classifying_ring(["circle", "circle"])
    u, v = ring.gens()
    with pytest.raises(ValueError):
        GradedQuotient(ring, [u + v * v])


def test_biquotient_ring_validates_pullback_count():
    ring = classifying_ring(["su2"])
    z, = ring.gens()
    with pytest.raises(ValueError):
        biquotient_ring(profile(Sp(4)), ring, [(z, ring.zero())])


def test_biquotient_ring_trivial_group_degenerate():
    # trivial acting group: empty classifying ring, all pullbacks vanish,
    # and the quotient presentation is the integers in degree zero
    ring = classifying_ring([])
    zero = ring.zero()
    q = biquotient_ring(profile(Sp(4)), ring, [(zero, zero), (zero, zero)])
    assert q.relations == ()
    assert q.betti(0) == [1]


def test_bundle_quotient_appends_and_ignores_zero():
    q = cons.cp_sum_ring(2)
    u, v = q.ring.gens()
    same = bundle_quotient_ring(q, [q.ring.zero()])
    assert same.relations == q.relations
    more = bundle_quotient_ring(q, [u ** 2])
    assert len(more.relations) == len(q.relations) + 1


def test_trivial_quotients():
    ring = classifying_ring(["circle", "circle"])
    u, v = ring.gens()
    q = GradedQuotient(ring, [u, v])
    assert q.betti(6) == [1, 0, 0, 0, 0, 0, 0]
    empty = GradedQuotient(classifying_ring([]), [])
    assert empty.betti(0) == [1]


def test_betti_cp_sums():
    from biquot.refchecks import cp_sum_expected_betti
    for n in range(2, 7):
        assert cons.cp_sum_ring(n).betti(2 * n) == cp_sum_expected_betti(n)


def test_betti_hp_sums_and_elimination():
    from biquot.refchecks import hp_sum_expected_betti
    for n in range(2, 5):
        red = cons.hp_sum_ring(n)
        assert red.betti(4 * n) == hp_sum_expected_betti(n)
        a, b = red.ring.gens()
        target = GradedQuotient(red.ring, [a * b, a ** n - b ** n])
        assert list(red.gb) == list(target.gb)


def test_betti_cp_hp_sums():
    from biquot.refchecks import cp_hp_expected_betti
    for e in (1, 2):
        assert cons.cp_hp_sum_ring(e).betti(8 * e + 4) \
            == cp_hp_expected_betti(e)


def test_eliminate_linear_requires_linear_relation():
    q = cons.cp_sum_ring(2)
    with pytest.raises(ValueError):
        q.eliminate_linear("u")


def test_finite_dimensionality_detection():
    q = cons.cp_sum_ring(3)
    assert q.is_finite_dimensional()
    assert q.top_degree() == 6
    ring = classifying_ring(["circle", "circle"])
    u, v = ring.gens()
    open_q = GradedQuotient(ring, [u * v])
    assert not open_q.is_finite_dimensional()
    # ranks still available through any requested degree
    assert open_q.betti(8)[8] == 2


def test_poincare_symmetry_of_stock_rings():
    rings = [cons.cp_sum_ring(n) for n in range(2, 7)]
    rings += [cons.hp_sum_ring(n) for n in range(2, 5)]
    rings += [cons.cp_hp_sum_ring(e) for e in (1, 2)]
    rings.append(cons.spin_bundle_ring())
    for q in rings:
        assert q.poincare_symmetric()


def test_regular_sequence_rank_prediction():
    for q in [cons.cp_sum_ring(n) for n in range(2, 7)] + \
             [cons.cp_hp_sum_ring(e) for e in (1, 2)]:
        assert q.total_rank() == q.expected_total_rank()


def test_complete_intersection_top_degree():
    # socle degree = sum of relation degrees - sum of generator degrees
    for q in [cons.cp_sum_ring(n) for n in range(2, 7)] + \
             [cons.cp_hp_sum_ring(e) for e in (1, 2)] + \
             [cons.spin_bundle_ring()]:
        predicted = sum(r.degree() for r in q.relations) \
            - sum(q.ring.degrees)
        assert q.top_degree() == predicted


def test_spin_bundle_ring_and_sign():
    assert cons.spin_bundle_sign_branches() == [-1]
    q = cons.spin_bundle_ring()
    b = q.betti(16)
    assert [b[0], b[4], b[8], b[12], b[16]] == [1, 1, 2, 1, 1]


# -- identity certificates -------------------------------------------------------


def test_identity_certificates_integral():
    for n in range(2, 9):
        q = cons.cp_sum_ring(n)
        u, v = q.ring.gens()
        lhs = (u - v) * (u + v) ** (n - 1)
        rhs = u ** n - v ** n
        cert = ideal_identities(q, lhs, rhs)
        assert cert.holds and cert.integral
        total = q.ring.zero()
        for c, r in zip(cert.cofactors, q.relations):
            assert c.is_integral()
            total = total + c * r
        assert total == lhs - rhs
    for e in range(1, 5):
        q = cons.cp_hp_sum_ring(e)
        x, z = q.ring.gens()
        cert = ideal_identities(
            q, (x * x - z) ** (2 * e + 1), x ** (4 * e + 2) - z ** (2 * e + 1))
        assert cert.holds and cert.integral


def test_identity_negative_and_degree_checks():
    q = cons.cp_sum_ring(2)
    u, v = q.ring.gens()
    assert not ideal_identities(q, u, v).holds
    with pytest.raises(ValueError):
        ideal_identities(q, u, v * v)


# -- finite abelian groups -------------------------------------------------------


def test_finite_abelian_group_invariants():
    g = FiniteAbelianGroup((2, 4, 0))
    assert g.free_rank == 1 and g.torsion == (2, 4)
    assert str(g) == "Z/2 + Z/4 + Z"
    with pytest.raises(ValueError):
        FiniteAbelianGroup((4, 2))
    with pytest.raises(ValueError):
        FiniteAbelianGroup((1, 2))
    assert FiniteAbelianGroup(()).is_trivial()


def test_cokernel_examples():
    assert str(pi3_cokernel([[10]])) == "Z/10"
    assert str(pi3_cokernel([[-1]])) == "0"
    assert str(pi3_cokernel([[4]])) == "Z/4"
    assert str(pi3_cokernel([[28]])) == "Z/28"
    assert str(pi3_cokernel([[1], [1]])) == "0"
    assert str(pi3_cokernel([[1, -2]])) == "Z"
    assert str(cokernel([], cols=2)) == "Z + Z"


def test_cokernel_diagonal_and_invariance():
    assert pi3_cokernel([[2, 0], [0, 3]]).torsion == (6,)
    rng = random.Random(23)
    for _ in range(40):
        m = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(2)]
        base = pi3_cokernel(m)
        # row operation: add a multiple of one row to the other
        m2 = [list(m[0]), [a + 2 * b for a, b in zip(m[1], m[0])]]
        # column operation
        m3 = [[r[0], r[1] + 3 * r[0], r[2]] for r in m]
        assert pi3_cokernel(m2).invariant_factors == base.invariant_factors
        assert pi3_cokernel(m3).invariant_factors == base.invariant_factors


def test_chi_pi():
    assert chi_pi([4], [7]) == 0
    assert chi_pi([], [2 * 5 - 1]) == -1
    assert chi_pi([2, 2, 4], [3]) == 2
