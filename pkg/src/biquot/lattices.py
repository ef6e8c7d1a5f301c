"""Exact integer lattice algorithms: Hermite and Smith normal forms.

Lattices here are subgroups of Z^r presented by generator row vectors.
Everything runs on arbitrary-precision Python ints.  The Smith form also
returns the unimodular transforms, which the freeness machinery needs to
build torsion elements of the dual torus.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def hnf(rows, rank=None):
    """Row Hermite normal form of the lattice spanned by the given rows.

    Returns a canonical basis: echelon rows with positive pivots and entries
    above each pivot reduced into [0, pivot).  The result depends only on
    the spanned lattice, making it a lattice-equality certificate.
    """
    if rank is None:
        if not rows:
            raise ValueError("empty generator list needs an explicit rank")
        rank = len(rows[0])
    work = [list(r) for r in rows if any(r)]
    for r in work:
        if len(r) != rank:
            raise ValueError("generator length does not match ambient rank")
    basis = []
    col = 0
    while col < rank and work:
        # gcd elimination on the current column
        while True:
            nonzero = [r for r in work if r[col] != 0]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda r: abs(r[col]))
            piv = nonzero[0]
            for r in nonzero[1:]:
                q = r[col] // piv[col]
                for k in range(rank):
                    r[k] -= q * piv[k]
        pivs = [r for r in work if r[col] != 0]
        if pivs:
            piv = pivs[0]
            work.remove(piv)
            if piv[col] < 0:
                piv = [-x for x in piv]
            basis.append(piv)
        work = [r for r in work if any(r)]
        col += 1
    # reduce entries above pivots, in ascending pivot order so that later
    # reductions (touching only later columns) cannot undo earlier ones
    for i in range(len(basis)):
        pcol = next(k for k in range(rank) if basis[i][k] != 0)
        p = basis[i][pcol]
        for j in range(i):
            q = basis[j][pcol] // p
            if q:
                for k in range(rank):
                    basis[j][k] -= q * basis[i][k]
    return [tuple(r) for r in basis]


def smith_normal_form(rows, rank=None):
    """Smith normal form with transforms: returns (D, U, V), D = U*M*V.

    D is diagonal with d1 | d2 | ... >= 0; U and V are unimodular.  M is the
    input matrix (list of rows); empty inputs need an explicit column count.
    """
    if rank is None:
        if not rows:
            raise ValueError("empty matrix needs an explicit rank")
        rank = len(rows[0])
    m = len(rows)
    a = [list(r) for r in rows]
    u = _identity(m)
    v = _identity(rank)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def addmul_row(dst, src, q):
        for k in range(rank):
            a[dst][k] += q * a[src][k]
        for k in range(m):
            u[dst][k] += q * u[src][k]

    def addmul_col(dst, src, q):
        for r in a:
            r[dst] += q * r[src]
        for r in v:
            r[dst] += q * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, rank):
        # find a pivot
        piv = None
        for i in range(t, m):
            for j in range(t, rank):
                if a[i][j] != 0:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            # clear column t
            dirty = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(i, t)
                        dirty = True
            for j in range(t + 1, rank):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(j, t)
                        dirty = True
            if not dirty:
                break
        if a[t][t] < 0:
            negate_row(t)
        t += 1
    # enforce the divisibility chain
    changed = True
    while changed:
        changed = False
        for i in range(t - 1):
            if a[i + 1][i + 1] % a[i][i] != 0:
                # standard trick: add column i+1 to column i, then redo the
                # local elimination
                addmul_col(i, i + 1, 1)
                g, x, y = _xgcd(a[i][i], a[i + 1][i])
                # row combination bringing gcd to position (i, i)
                _combine_rows(a, u, i, i + 1, x, y,
                              a[i][i] // g, a[i + 1][i] // g)
                # clear the off-diagonal remainders
                q = a[i + 1][i] // a[i][i]
                addmul_row(i + 1, i, -q)
                q = a[i][i + 1] // a[i][i]
                addmul_col(i + 1, i, -q)
                if a[i][i] < 0:
                    negate_row(i)
                if a[i + 1][i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    d = [[a[i][j] if i == j else 0 for j in range(rank)] for i in range(m)]
    # a should already be diagonal; assert cheaply
    for i in range(m):
        for j in range(rank):
            if i != j and a[i][j] != 0:
                raise AssertionError("Smith reduction left a nonzero entry")
    return d, u, v


def _xgcd(p, q):
    if q == 0:
        return (abs(p), 1 if p >= 0 else -1, 0)
    g, x, y = _xgcd(q, p % q)
    return (g, y, x - (p // q) * y)


def _combine_rows(a, u, i, j, x, y, alpha, beta):
    """Unimodular [x y; -beta alpha] acting on rows i, j (x*alpha+y*beta=1)."""
    ai, aj = a[i][:], a[j][:]
    ui, uj = u[i][:], u[j][:]
    a[i] = [x * p + y * q for p, q in zip(ai, aj)]
    a[j] = [-beta * p + alpha * q for p, q in zip(ai, aj)]
    u[i] = [x * p + y * q for p, q in zip(ui, uj)]
    u[j] = [-beta * p + alpha * q for p, q in zip(ui, uj)]


def invariant_factors(rows, rank=None):
    d, _, _ = smith_normal_form(rows, rank)
    n = min(len(d), rank if rank is not None else len(d[0]))
    return [d[i][i] for i in range(n) if d[i][i] != 0]


def det_unimodular(mat):
    """Determinant via fraction-free Gaussian elimination (Bareiss)."""
    n = len(mat)
    a = [list(r) for r in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def invert_unimodular(mat):
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(i for i in range(col, n) if aug[i][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = [[x for x in row[n:]] for row in aug]
    for row in inv:
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


@dataclass(frozen=True)
class LatticeSubgroup:
    """Subgroup of Z^rank given by generator rows, canonicalized by HNF."""

    rank: int
    basis: tuple

    @staticmethod
    def from_rows(rank, rows):
        return LatticeSubgroup(rank, tuple(hnf(rows, rank)))

    @staticmethod
    def full(rank):
        return LatticeSubgroup.from_rows(
            rank, [tuple(int(i == j) for j in range(rank)) for i in range(rank)])

    @staticmethod
    def zero(rank):
        return LatticeSubgroup(rank, ())

    @property
    def generators(self):
        return self.basis

    def lattice_rank(self):
        return len(self.basis)

    def contains_vector(self, v):
        """Exact membership by back-substitution against the HNF basis."""
        if len(v) != self.rank:
            raise ValueError("ambient rank mismatch")
        v = list(v)
        for row in self.basis:
            pcol = next(k for k in range(self.rank) if row[k] != 0)
            if v[pcol] % row[pcol] == 0:
                q = v[pcol] // row[pcol]
                if q:
                    v = [a - q * b for a, b in zip(v, row)]
        return not any(v)

    def contains(self, other):
        if other.rank != self.rank:
            raise ValueError("ambient rank mismatch")
        return all(self.contains_vector(g) for g in other.basis)

    def __add__(self, other):
        if other.rank != self.rank:
            raise ValueError("ambient rank mismatch")
        return LatticeSubgroup.from_rows(self.rank, list(self.basis) + list(other.basis))

    def is_full(self):
        return self == LatticeSubgroup.full(self.rank)

    def double_dual(self):
        """The lattice of characters vanishing on this lattice's annihilator.

        Computed through the Smith form; equals the lattice itself (subgroups
        of Z^r are closed under this duality).
        """
        if not self.basis:
            return LatticeSubgroup.zero(self.rank)
        d, _, v = smith_normal_form(list(self.basis), self.rank)
        vinv = invert_unimodular(v)
        k = min(len(self.basis), self.rank)
        rows = []
        for i in range(self.rank):
            di = d[i][i] if i < k else 0
            if di != 0:
                rows.append(tuple(di * x for x in vinv[i]))
        return LatticeSubgroup.from_rows(self.rank, rows)

    def to_obj(self):
        return {"rank": self.rank, "generators": [list(r) for r in self.basis]}


def lattice_contains(outer, inner):
    """True iff every generator of inner lies in outer (same ambient Z^r)."""
    return outer.contains(inner)
