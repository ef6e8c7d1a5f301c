"""Exact freeness decisions for two-sided actions of a torus-covered group.

The acting group H is a product of circles and SU(2)s (or a finite quotient
of one), so every element is conjugate into the maximal torus T = R^r/Z^r
and it suffices to test torus elements.  H acts on a product of group
factors (two-sided translation on a group G through a pair of weight
multisets of G's defining representation) and sphere factors (the unit
sphere of a linear representation).

A torus element t fixes a point of a group factor iff its left and right
images have equal eigenvalue multisets, i.e. iff some bijection sigma
between the weight multisets has all differences w - w' pairing integrally
with t.  It fixes a point of a sphere factor iff some weight pairs
integrally (always, if the representation has a trivial summand).  Every
such condition cuts out the annihilator of an integer lattice, so the
effective action is free iff for every choice of sigma/weight per factor
the resulting difference lattice contains the kernel lattice.  Witnesses
for non-free actions are produced from the Smith normal form of the
violating lattice, at the smallest possible element order.

For Spin(2n) group factors the eigenvalue test is coarser than conjugacy
in the group itself; Free verdicts remain sound, and NotFree verdicts are
flagged with a caveat.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
import random

from .lattices import LatticeSubgroup, smith_normal_form

D_FAMILY_CAVEAT = ("D-family factor present: eigenvalue conjugacy is coarser "
                   "than Spin conjugacy, so this witness may not be sharp")


@dataclass(frozen=True)
class GroupFactor:
    """Two-sided translation on one simple group factor.

    left and right are the weight multisets of the composed representations
    H -> G -> U(defining rep), as integer vectors on H's torus lattice.
    """

    left: tuple
    right: tuple
    d_family: bool = False

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(tuple(w) for w in self.left))
        object.__setattr__(self, "right", tuple(tuple(w) for w in self.right))
        if len(self.left) != len(self.right):
            raise ValueError("left and right weight multisets must have "
                             "equal size (same defining representation)")

    @property
    def rank(self):
        return len(self.left[0])


@dataclass(frozen=True)
class SphereFactor:
    """Unit sphere of a linear representation, one weight per rotation plane.

    A trivial summand (or an explicit flag) means every element fixes a
    point, so the factor never constrains freeness.
    """

    weights: tuple
    has_trivial_summand: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(tuple(w) for w in self.weights))
        if any(all(x == 0 for x in w) for w in self.weights):
            object.__setattr__(self, "has_trivial_summand", True)

    @property
    def rank(self):
        return len(self.weights[0])


@dataclass(frozen=True)
class TwoSidedAction:
    rank: int
    factors: tuple
    trivial_lattice: LatticeSubgroup = None
    # auto_center derives the trivially-acting subgroup from the weights;
    # an explicit lattice overrides it (for declared central subgroups).

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        for f in self.factors:
            if f.rank != self.rank:
                raise ValueError("factor rank disagrees with action rank")

    def group_factors(self):
        return [f for f in self.factors if isinstance(f, GroupFactor)]

    def to_obj(self):
        factors = []
        for f in self.factors:
            if isinstance(f, GroupFactor):
                factors.append({"type": "group",
                                "left": [list(w) for w in f.left],
                                "right": [list(w) for w in f.right],
                                "d_family": f.d_family})
            else:
                factors.append({"type": "sphere",
                                "weights": [list(w) for w in f.weights],
                                "trivial_summand": f.has_trivial_summand})
        obj = {"rank": self.rank, "factors": factors}
        if self.trivial_lattice is not None:
            obj["trivial_lattice"] = self.trivial_lattice.to_obj()
        return obj


def action_from_obj(obj):
    factors = []
    for f in obj["factors"]:
        if f["type"] == "group":
            factors.append(GroupFactor(tuple(map(tuple, f["left"])),
                                       tuple(map(tuple, f["right"])),
                                       bool(f.get("d_family", False))))
        elif f["type"] == "sphere":
            factors.append(SphereFactor(tuple(map(tuple, f["weights"])),
                                        bool(f.get("trivial_summand", False))))
        else:
            raise ValueError("unknown factor type %r" % (f["type"],))
    trivial = None
    if obj.get("trivial_lattice"):
        t = obj["trivial_lattice"]
        trivial = LatticeSubgroup.from_rows(t["rank"], t["generators"])
    return TwoSidedAction(int(obj["rank"]), tuple(factors), trivial)


@dataclass(frozen=True)
class TorusElement:
    coords: tuple

    def __post_init__(self):
        object.__setattr__(
            self, "coords", tuple(Fraction(c) % 1 for c in self.coords))

    @property
    def order(self):
        return lcm(*(c.denominator for c in self.coords)) if self.coords else 1

    def pair(self, weight):
        return sum(w * c for w, c in zip(weight, self.coords)) % 1

    def is_identity(self):
        return all(c == 0 for c in self.coords)

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_obj(self):
        return {"coords": [str(c) for c in self.coords], "order": self.order}


@dataclass(frozen=True)
class Verdict:
    free: bool
    kernel: LatticeSubgroup
    witness: TorusElement = None
    witness_order: int = None
    choice: tuple = None
    caveats: tuple = ()

    def to_obj(self):
        obj = {"verdict": "free" if self.free else "not_free",
               "kernel_lattice": self.kernel.to_obj(),
               "caveats": list(self.caveats)}
        if not self.free:
            obj["witness"] = self.witness.to_obj()
            obj["choice"] = [_describe_choice(c) for c in self.choice]
        return obj


def _describe_choice(per_factor):
    if per_factor and per_factor[0] == "sphere weight":
        return "sphere weight %s" % (list(per_factor[1]),)
    if per_factor and isinstance(per_factor[0], str):
        return per_factor[0]
    return ["%s -> %s (x%d)" % (list(l), list(r), m)
            for l, r, m in per_factor]


def kernel_lattice(action):
    """Characters vanishing exactly on the trivially-acting subgroup of T.

    Per group factor: all left differences, all right differences, and one
    left-right cross difference (the element must map to equal scalars on
    both sides).  Per sphere factor: the full weight lattice (the element
    must rotate every plane trivially).  An action with no factors leaves
    the whole torus acting trivially.
    """
    if action.trivial_lattice is not None:
        return action.trivial_lattice
    rows = []
    for f in action.factors:
        if isinstance(f, GroupFactor):
            l0, r0 = f.left[0], f.right[0]
            rows.extend(tuple(a - b for a, b in zip(w, l0)) for w in f.left[1:])
            rows.extend(tuple(a - b for a, b in zip(w, r0)) for w in f.right[1:])
            rows.append(tuple(a - b for a, b in zip(l0, r0)))
        else:
            rows.extend(f.weights)
    return LatticeSubgroup.from_rows(action.rank, rows)


# ---------------------------------------------------------------------------
# Choice enumeration (multiset bijections per group factor, one weight per
# sphere factor), with monotone pruning: once the accumulated difference
# lattice contains the kernel lattice, every completion is safe.
# ---------------------------------------------------------------------------


def _distributions(total, caps):
    if not caps:
        if total == 0:
            yield ()
        return
    for first in range(min(total, caps[0]), -1, -1):
        for rest in _distributions(total - first, caps[1:]):
            yield (first,) + rest


def _group_assignments(factor):
    """Yield (generators, description) per class of multiset bijections."""
    lclasses = sorted(Counter(factor.left).items())
    rclasses = sorted(Counter(factor.right).items())
    rvals = [v for v, _ in rclasses]

    def rec(i, remaining, gens, desc):
        if i == len(lclasses):
            yield gens, tuple(desc)
            return
        lval, lcount = lclasses[i]
        for dist in _distributions(lcount, remaining):
            new_gens = list(gens)
            new_desc = list(desc)
            for j, d in enumerate(dist):
                if d > 0:
                    new_gens.append(tuple(a - b for a, b in zip(lval, rvals[j])))
                    new_desc.append((lval, rvals[j], d))
            yield from rec(i + 1,
                           [r - d for r, d in zip(remaining, dist)],
                           new_gens, new_desc)

    yield from rec(0, [c for _, c in rclasses], [], [])


def _factor_choices(f):
    if isinstance(f, GroupFactor):
        yield from _group_assignments(f)
    else:
        if f.has_trivial_summand:
            yield [], ("sphere: trivial summand, no constraint",)
            return
        for w in sorted(set(f.weights)):
            yield [w], ("sphere weight", w)


def _violating_choices(action, kernel):
    """All full choices whose difference lattice fails to contain the kernel."""
    rank = action.rank
    out = []

    def covered(rows):
        return LatticeSubgroup.from_rows(rank, rows).contains(kernel)

    def rec(fi, rows, desc):
        if covered(rows):
            return
        if fi == len(action.factors):
            out.append((rows, tuple(desc)))
            return
        for gens, d in _factor_choices(action.factors[fi]):
            rec(fi + 1, rows + list(gens), desc + [d])

    rec(0, [], [])
    return out


# ---------------------------------------------------------------------------
# Witness construction
# ---------------------------------------------------------------------------


def _membership_data(rows, rank):
    """(diag, V, k) such that w in L iff (wV)_i = 0 mod d_i and = 0 beyond k."""
    if not rows:
        ident = [[int(i == j) for j in range(rank)] for i in range(rank)]
        return [], ident, 0
    d, _, v = smith_normal_form(list(rows), rank)
    k = min(len(rows), rank)
    diag = [d[i][i] for i in range(k) if d[i][i] != 0]
    return diag, v, len(diag)


def _apply_v(w, v):
    return [sum(w[i] * v[i][j] for i in range(len(w))) for j in range(len(v[0]))]


def _min_order_outside(rows, kernel, rank):
    """Smallest q >= 2 such that some kernel generator escapes L + q*Z^rank."""
    diag, v, k = _membership_data(rows, rank)
    lat = LatticeSubgroup.from_rows(rank, rows)
    best = None
    for kg in kernel.basis:
        if lat.contains_vector(kg):
            continue
        y = _apply_v(kg, v)
        bound = 2
        for i in range(k):
            if y[i] % diag[i] != 0:
                bound = max(bound, diag[i])
        for j in range(k, rank):
            if y[j] != 0:
                bound = max(bound, abs(y[j]) + 1)
        for q in range(2, bound + 1):
            escaped = any(y[i] % gcd(diag[i], q) != 0 for i in range(k)) or \
                any(y[j] % q != 0 for j in range(k, rank))
            if escaped:
                if best is None or q < best:
                    best = q
                break
    return best


def _torsion_generators(rows, q, rank):
    """Generators of the q-torsion of the annihilator of the row lattice."""
    stacked = list(rows) + [tuple(q * int(i == j) for j in range(rank))
                            for i in range(rank)]
    d, _, v = smith_normal_form(stacked, rank)
    gens = []
    for i in range(rank):
        di = d[i][i]
        if di > 1:
            gens.append((tuple(Fraction(v[j][i], di) % 1 for j in range(rank)),
                         di))
    return gens


def _in_annihilator(t, lattice):
    return all(t.pair(g) == 0 for g in lattice.basis)


def _best_witness(rows, kernel, rank):
    """Minimal-order element of Ann(rows) outside Ann(kernel), lex-least."""
    q = _min_order_outside(rows, kernel, rank)
    if q is None:
        return None
    candidates = []
    for coords, order in _torsion_generators(rows, q, rank):
        t = TorusElement(coords)
        if _in_annihilator(t, kernel):
            continue
        # minimality of q forces full order on any escaping generator
        assert order == q, "torsion generator order %d below minimum %d" % (order, q)
        for c in range(1, q):
            if gcd(c, q) != 1:
                continue
            tc = TorusElement(tuple(c * x for x in coords))
            if not _in_annihilator(tc, kernel):
                candidates.append(tc)
    if not candidates:
        raise AssertionError("no witness generator found despite escape")
    return q, min(candidates, key=lambda t: t.coords)


def is_free(action):
    """Decide effective freeness of the action, with an exact certificate.

    The verdict concerns H modulo its trivially-acting subgroup (read off
    the kernel lattice: a full kernel lattice means H itself acts
    effectively).  NotFree verdicts carry a minimal-order witness, the
    violating choice, and a caveat when a D-family factor is involved.
    """
    kernel = kernel_lattice(action)
    violations = _violating_choices(action, kernel)
    caveats = tuple([D_FAMILY_CAVEAT] if any(
        isinstance(f, GroupFactor) and f.d_family for f in action.factors)
        else [])
    if not violations:
        return Verdict(free=True, kernel=kernel)
    best = None
    for rows, desc in violations:
        q, t = _best_witness(rows, kernel, action.rank)
        key = (q, t.coords)
        if best is None or key < best[0]:
            best = (key, t, q, desc)
    _, witness, order, choice = best
    return Verdict(free=False, kernel=kernel, witness=witness,
                   witness_order=order, choice=choice, caveats=caveats)


# ---------------------------------------------------------------------------
# Brute-force oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BruteVerdict:
    found_witness: bool
    max_order: int
    exhaustive: bool
    witness: TorusElement = None
    witness_order: int = None

    @property
    def free(self):
        # only meaningful as "no witness up to max_order" unless exhaustive
        # over the whole torsion range of interest
        return not self.found_witness

    def to_obj(self):
        obj = {"found_witness": self.found_witness,
               "max_order": self.max_order,
               "exhaustive": self.exhaustive}
        if self.found_witness:
            obj["witness"] = self.witness.to_obj()
        return obj


def has_fixed_point(action, t):
    """Direct evaluation: equal eigenvalue multisets on every group factor,
    and a unit eigenvalue on every sphere factor."""
    for f in action.factors:
        if isinstance(f, GroupFactor):
            left = sorted(t.pair(w) for w in f.left)
            right = sorted(t.pair(w) for w in f.right)
            if left != right:
                return False
        else:
            if f.has_trivial_summand:
                continue
            if all(t.pair(w) != 0 for w in f.weights):
                return False
    return True


def acts_trivially(action, t):
    return _in_annihilator(t, kernel_lattice(action))


def _numerators_of_order(q, rank):
    # g tracks gcd(q, numerators so far); exact order q means final g == 1
    def rec(i, acc, g):
        if i == rank:
            if g == 1:
                yield tuple(acc)
            return
        for a in range(q):
            yield from rec(i + 1, acc + (a,), gcd(g, a))

    yield from rec(0, (), q)


def _fixed_point_mod(action, nums, q):
    """has_fixed_point for t = nums/q, in integer arithmetic mod q."""
    for f in action.factors:
        if isinstance(f, GroupFactor):
            left = sorted(sum(w[i] * nums[i] for i in range(len(nums))) % q
                          for w in f.left)
            right = sorted(sum(w[i] * nums[i] for i in range(len(nums))) % q
                           for w in f.right)
            if left != right:
                return False
        else:
            if f.has_trivial_summand:
                continue
            if all(sum(w[i] * nums[i] for i in range(len(nums))) % q
                   for w in f.weights):
                return False
    return True


def brute_force_free(action, max_order, samples=20000, seed=0):
    """Independent oracle: evaluate eigenvalue multisets element by element.

    Exhaustive over all torus elements of order <= max_order when the rank
    is at most 2; documented random sampling otherwise.  A clean pass is
    reported as "no witness up to max_order", never as a proof of freeness.
    """
    kernel = kernel_lattice(action)
    exhaustive = action.rank <= 2
    if exhaustive:
        for q in range(2, max_order + 1):
            hits = []
            for nums in _numerators_of_order(q, action.rank):
                if all(sum(g[i] * nums[i] for i in range(len(nums))) % q == 0
                       for g in kernel.basis):
                    continue  # acts trivially
                if _fixed_point_mod(action, nums, q):
                    hits.append(nums)
            if hits:
                w = TorusElement(tuple(Fraction(a, q) for a in min(hits)))
                return BruteVerdict(True, max_order, True, w, q)
        return BruteVerdict(False, max_order, True)
    rng = random.Random(seed)
    for _ in range(samples):
        q = rng.randint(2, max_order)
        nums = tuple(rng.randrange(q) for _ in range(action.rank))
        if all(a == 0 for a in nums):
            continue
        if all(sum(g[i] * nums[i] for i in range(len(nums))) % q == 0
               for g in kernel.basis):
            continue
        if _fixed_point_mod(action, nums, q):
            t = TorusElement(tuple(Fraction(a, q) for a in nums))
            return BruteVerdict(True, max_order, False, t, t.order)
    return BruteVerdict(False, max_order, False)


def rescale_action(action, basis):
    """Reparameterize the torus along an integer basis matrix (rows are the
    new coordinate directions): weights w become w . basis^T entries.

    Used for sources given as finite quotients of a product: callers supply
    the finite-index sublattice and keep any congruence bookkeeping.
    """
    def remap(w):
        return tuple(sum(w[i] * row[i] for i in range(len(w))) for row in basis)

    factors = []
    for f in action.factors:
        if isinstance(f, GroupFactor):
            factors.append(GroupFactor(tuple(remap(w) for w in f.left),
                                       tuple(remap(w) for w in f.right),
                                       f.d_family))
        else:
            factors.append(SphereFactor(tuple(remap(w) for w in f.weights),
                                        f.has_trivial_summand))
    return TwoSidedAction(len(basis), tuple(factors), None)
