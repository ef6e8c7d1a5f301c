"""Randomized cross-validation of the exact decision paths.

The lattice-based freeness decision is fuzzed against element-by-element
eigenvalue evaluation; Groebner-based Betti ranks are fuzzed against sympy
normal forms under a different monomial order (graded ranks are intrinsic,
so any correct Groebner basis must produce the same numbers); torsion
generators of annihilators are checked by direct pairing.
"""

import random
from fractions import Fraction

import sympy

from biquot.freeness import (GroupFactor, SphereFactor, TwoSidedAction,
                             TorusElement, kernel_lattice, is_free,
                             brute_force_free, _torsion_generators)
from biquot.lattices import LatticeSubgroup
from biquot.polyring import GradedPolyRing
from biquot.cohomology import GradedQuotient


def random_group_factor(rng, rank):
    n = rng.choice([2, 3, 4])
    left = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(n)]
    right = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(n)]
    return GroupFactor(left, right)


def random_sphere_factor(rng, rank):
    n = rng.choice([1, 2, 3])
    ws = [tuple(rng.randint(-3, 3) for _ in range(rank)) for _ in range(n)]
    return SphereFactor(ws)


def random_action(rng):
    rank = rng.choice([1, 1, 2])
    nf = rng.choice([1, 1, 2])
    factors = []
    for _ in range(nf):
        if rng.random() < 0.7:
            factors.append(random_group_factor(rng, rank))
        else:
            factors.append(random_sphere_factor(rng, rank))
    return TwoSidedAction(rank, factors)


def test_freeness_matches_oracle_on_random_actions():
    rng = random.Random(424242)
    checked_free = checked_witness = 0
    for _ in range(250):
        act = random_action(rng)
        exact = is_free(act)
        brute = brute_force_free(act, 24)
        assert brute.exhaustive
        if exact.free:
            # no witness may exist at any order the oracle can reach
            assert not brute.found_witness, act.to_obj()
            checked_free += 1
        else:
            if exact.witness_order <= 24:
                assert brute.found_witness, act.to_obj()
                assert brute.witness_order == exact.witness_order, act.to_obj()
            checked_witness += 1
    assert checked_free > 20 and checked_witness > 50


def test_kernel_elements_act_trivially_randomized():
    rng = random.Random(77)
    for _ in range(150):
        act = random_action(rng)
        kernel = kernel_lattice(act)
        # enumerate some torsion elements of the kernel subgroup
        for q in (2, 3, 4):
            for coords, order in _torsion_generators(
                    list(kernel.basis), q, act.rank):
                t = TorusElement(coords)
                for f in act.factors:
                    if isinstance(f, GroupFactor):
                        left = sorted(t.pair(w) for w in f.left)
                        right = sorted(t.pair(w) for w in f.right)
                        assert left == right
                        # equal scalars on both sides: a single eigenvalue
                        assert len(set(left)) == 1 and left == right
                    else:
                        assert all(t.pair(w) == 0 for w in f.weights)


def test_torsion_generators_pair_integrally():
    rng = random.Random(5150)
    for _ in range(120):
        n = rng.randint(1, 4)
        rows = [tuple(rng.randint(-4, 4) for _ in range(n))
                for _ in range(rng.randint(0, n))]
        q = rng.choice([2, 3, 4, 5, 6])
        for coords, order in _torsion_generators(rows, q, n):
            t = TorusElement(coords)
            assert q % order == 0 and t.order == order
            for w in rows:
                assert t.pair(w) == 0


def sympy_graded_rank(srels, syms, weights, degree):
    """Rank of the weighted-degree-d piece from a sympy Groebner basis."""
    monos = []

    def gen(i, exps, rem):
        if i == len(syms):
            if rem == 0:
                monos.append(tuple(exps))
            return
        e = 0
        while e * weights[i] <= rem:
            gen(i + 1, exps + [e], rem - e * weights[i])
            e += 1

    gen(0, [], degree)
    if not monos:
        return 0
    gb = sympy.groebner(srels, *syms, order="grevlex") if srels else None
    nfs = []
    for exps in monos:
        m = sympy.prod([s ** e for s, e in zip(syms, exps)])
        nfs.append(sympy.Poly(gb.reduce(m)[1] if gb is not None else m, *syms))
    monoms = sorted({mm for p in nfs for mm in p.monoms()})
    mat = sympy.Matrix([[p.coeff_monomial(mm) for mm in monoms] for p in nfs])
    return mat.rank()


def test_betti_matches_sympy_on_mixed_degree_rings():
    rng = random.Random(99)
    x, z = sympy.symbols("x z")
    ring = GradedPolyRing(("x", "z"), (2, 4))
    xg, zg = ring.gens()
    for _ in range(12):
        rels, srels = [], []
        for _ in range(rng.randint(1, 2)):
            # homogeneous in the weighted grading: monomials x^a z^b with
            # 2a + 4b = d
            d = rng.choice([4, 6, 8])
            p = ring.zero()
            sp = sympy.Integer(0)
            for a in range(0, d // 2 + 1):
                rem = d - 2 * a
                if rem % 4:
                    continue
                b = rem // 4
                c = rng.randint(-2, 2)
                p = p + c * xg ** a * zg ** b
                sp += c * x ** a * z ** b
            if p.is_zero():
                continue
            rels.append(p)
            srels.append(sp)
        if not rels:
            continue
        q = GradedQuotient(ring, rels)
        ours = q.betti(16)
        for deg in range(0, 17, 2):
            theirs = sympy_graded_rank(srels, (x, z), (2, 4), deg)
            assert ours[deg] == theirs, (deg, [str(r) for r in rels])


def test_witness_is_minimal_via_exhaustion():
    # independent minimality check: no smaller-order element has a fixed
    # point outside the kernel
    rng = random.Random(31337)
    found = 0
    for _ in range(120):
        act = random_action(rng)
        v = is_free(act)
        if v.free or v.witness_order > 12:
            continue
        found += 1
        b = brute_force_free(act, v.witness_order)
        assert b.found_witness and b.witness_order == v.witness_order
        if v.witness_order > 2:
            b_small = brute_force_free(act, v.witness_order - 1)
            assert not b_small.found_witness
    assert found > 40
