import random

import pytest
import sympy
from sympy.matrices.normalforms import invariant_factors as sympy_invariants

from biquot.lattices import (
    hnf, smith_normal_form, invariant_factors, LatticeSubgroup,
    lattice_contains, det_unimodular, invert_unimodular,
)


def random_matrix(rng, rows, cols, bound=6):
    return [tuple(rng.randint(-bound, bound) for _ in range(cols))
            for _ in range(rows)]


def test_snf_examples():
    d, _, _ = smith_normal_form([[1, -2]])
    assert d[0][0] == 1
    d, _, _ = smith_normal_form([[10]])
    assert d == [[10]]
    d, _, _ = smith_normal_form([[2, 0], [0, 3]])
    assert [d[0][0], d[1][1]] == [1, 6]


def test_snf_transform_contract():
    rng = random.Random(7)
    for _ in range(150):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = random_matrix(rng, m, n)
        d, u, v = smith_normal_form(a, n)
        # D = U A V exactly
        ua = [[sum(u[i][k] * a[k][j] for k in range(m)) for j in range(n)]
              for i in range(m)]
        uav = [[sum(ua[i][k] * v[k][j] for k in range(n)) for j in range(n)]
               for i in range(m)]
        assert uav == d
        assert abs(det_unimodular(u)) == 1
        assert abs(det_unimodular(v)) == 1
        # divisibility chain
        dias = [d[i][i] for i in range(min(m, n))]
        nz = [x for x in dias if x]
        assert all(x >= 0 for x in dias)
        for a1, a2 in zip(nz, nz[1:]):
            assert a2 % a1 == 0


def test_invariant_factors_match_sympy():
    rng = random.Random(11)
    for _ in range(80):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        a = random_matrix(rng, m, n)
        ours = invariant_factors(a, n)
        theirs = [int(x) for x in sympy_invariants(sympy.Matrix(a)) if x != 0]
        assert ours == theirs


def test_hnf_canonical_for_equal_lattices():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 4)
        rows = random_matrix(rng, rng.randint(1, 4), n)
        basis = hnf(rows, n)
        # shuffling and adding integer combinations leaves the HNF fixed
        combo = list(rows)
        if len(rows) >= 2:
            combo.append(tuple(3 * a - 2 * b for a, b in zip(rows[0], rows[1])))
        rng.shuffle(combo)
        assert hnf(combo, n) == basis
        # idempotent
        assert hnf(basis, n) == basis


def test_membership_agrees_with_exact_solving():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.randint(1, 4)
        rows = random_matrix(rng, rng.randint(1, n), n)
        lat = LatticeSubgroup.from_rows(n, rows)
        coeffs = [rng.randint(-3, 3) for _ in rows]
        vec = tuple(sum(c * r[j] for c, r in zip(coeffs, rows))
                    for j in range(n))
        assert lat.contains_vector(vec)
        # a vector escaping mod a prime cannot be a member
        if lat.basis:
            probe = tuple(x + 1 for x in lat.basis[0])
            member = lat.contains_vector(probe)
            d, u, v = smith_normal_form(list(lat.basis), n)
            # compare against solving over Q + integrality of the solution
            mat = sympy.Matrix(list(lat.basis)).T
            sol = mat.gauss_jordan_solve(sympy.Matrix(probe))[0] \
                if mat.rank() == sympy.Matrix(
                    list(lat.basis) + [probe]).T.rank() else None
            if sol is None:
                assert not member
            else:
                feasible = all(x.is_integer for x in sol) \
                    if not sol.free_symbols else None
                if feasible is not None:
                    assert member == feasible


def test_lattice_contains_examples():
    l1 = LatticeSubgroup.from_rows(2, [(2, 0), (0, 2)])
    assert lattice_contains(l1, LatticeSubgroup.from_rows(2, [(2, 2)]))
    assert not lattice_contains(l1, LatticeSubgroup.from_rows(2, [(1, 1)]))
    l2 = LatticeSubgroup.from_rows(2, [(1, -2)])
    assert lattice_contains(l2, LatticeSubgroup.from_rows(2, [(3, -6)]))


def test_annihilator_double_duality_200_random_lattices():
    rng = random.Random(2024)
    for _ in range(200):
        n = rng.randint(1, 4)
        k = rng.randint(0, n)
        rows = random_matrix(rng, k, n, bound=5) if k else []
        lat = LatticeSubgroup.from_rows(n, rows) if rows \
            else LatticeSubgroup.zero(n)
        assert lat.double_dual() == lat


def test_invert_unimodular():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(1, 4)
        a = random_matrix(rng, rng.randint(1, 3), n)
        _, u, v = smith_normal_form(a, n)
        for mat in (u, v):
            inv = invert_unimodular(mat)
            m = len(mat)
            prod = [[sum(mat[i][k] * inv[k][j] for k in range(m))
                     for j in range(m)] for i in range(m)]
            assert prod == [[int(i == j) for j in range(m)] for i in range(m)]
    with pytest.raises(ValueError):
        invert_unimodular([[2, 0], [0, 1]])


def test_sum_and_full():
    a = LatticeSubgroup.from_rows(2, [(2, 0)])
    b = LatticeSubgroup.from_rows(2, [(0, 3), (1, 1)])
    assert (a + b).rank == 2
    assert (a + b).contains(a) and (a + b).contains(b)
    assert LatticeSubgroup.full(3).contains(
        LatticeSubgroup.from_rows(3, [(5, -7, 11)]))
