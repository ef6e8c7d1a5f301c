"""Degree-ledger bookkeeping and classification searches.

A presentation sketch records simple factors of G and H with the conjugacy
class of each action edge (a catalog entry, an explicit SU(2) weight class,
an isomorphism, or a transpose twist).  The ledger tracks which degrees of
G survive into the quotient (odd rational homotopy) and which degrees of H
go unused (even rational homotopy); a rational homology sphere needs
exactly one surviving degree, with at most one unused degree d paired as
added = {2d}.

The searches enumerate the candidate structures the degree bounds allow:
homogeneous catalog pairs, two-sided SU(2) actions on the rank-2 groups,
and SU(2) x SU(2) actions on Sp(4), with freeness decided exactly by the
lattice method and pi_3 read off the net Dynkin index matrix.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .groups import (SimpleGroupId, SU, Sp, G2, CatalogEntry,
                     degrees_of, group_dimension, max_degree, profile,
                     catalog_rules)
from .weights import su2_homs, dynkin_index
from .freeness import GroupFactor, TwoSidedAction, is_free
from .cohomology import pi3_cokernel, chi_pi, FiniteAbelianGroup


@dataclass(frozen=True)
class HomEdge:
    """Action of H-factor h on G-factor g from one side.

    kind 'iso' is an isomorphism onto the factor; 'catalog' carries a
    CatalogEntry; 'su2' carries the composed weight class of an SU(2)
    factor; 'transpose' is the outer twist g -> (g^t)^-1 paired with an
    identity on the other side.
    """

    h: int
    g: int
    side: str
    kind: str
    entry: CatalogEntry = None
    rep: object = None
    index_value: int = None

    def __post_init__(self):
        if self.side not in ("L", "R"):
            raise ValueError("side must be 'L' or 'R'")
        if self.kind not in ("iso", "catalog", "su2", "transpose"):
            raise ValueError("unknown edge kind %r" % (self.kind,))
        if self.kind == "su2" and self.index_value is None:
            raise ValueError("su2 edges carry their Dynkin index explicitly")

    def index(self):
        """Dynkin index of the edge homomorphism."""
        if self.kind in ("iso", "transpose"):
            return 1
        if self.kind == "catalog":
            return self.entry.dynkin_index
        return self.index_value


@dataclass(frozen=True)
class PresentationSketch:
    g_factors: tuple
    h_factors: tuple  # SimpleGroupId entries or the string 'circle'
    edges: tuple

    def __post_init__(self):
        for e in self.edges:
            if not (0 <= e.g < len(self.g_factors)):
                raise ValueError("edge references missing G factor")
            if not (0 <= e.h < len(self.h_factors)):
                raise ValueError("edge references missing H factor")

    def edges_on_g(self, j):
        return [e for e in self.edges if e.g == j]

    def edges_of_h(self, i):
        return [e for e in self.edges if e.h == i]

    def describe(self):
        g = " x ".join(x.name for x in self.g_factors)
        h = " x ".join(x.name if isinstance(x, SimpleGroupId) else x
                       for x in self.h_factors) or "1"
        return "(%s)/(%s)" % (g, h)


# ---------------------------------------------------------------------------
# Presentation normalization
# ---------------------------------------------------------------------------


def _kill_degrees(entry_or_kind, g):
    """Degrees of the G-factor killed by one edge (multiset)."""
    degs = Counter(degrees_of(g))
    if isinstance(entry_or_kind, CatalogEntry):
        degs.subtract(Counter(entry_or_kind.degrees_added))
        return +degs
    return degs  # iso kills everything


def normalize_presentation(sketch):
    """Delete G-factors acted on transitively, rewiring through stabilizers.

    A one-sided isomorphism edge is consumed exactly: the stabilizer of a
    point identifies the acting H-factor with whatever acts on the other
    side, so that factor's other edges pass through unchanged and opposite
    edges transfer to their owners.  Non-isomorphism transitivity (the
    union of edges killing every degree of the factor) is detected and
    flagged, but the stabilizer is not computed.  Returns (sketch, trace).
    """
    trace = []
    while True:
        fired = False
        for j in range(len(sketch.g_factors)):
            on_j = sketch.edges_on_g(j)
            iso = next((e for e in on_j
                        if e.kind == "iso"
                        and sketch.h_factors[e.h] == sketch.g_factors[j]
                        and all(o is e for o in sketch.edges_of_h(e.h)
                                if o.g == j and o.side == e.side)), None)
            if iso is None:
                continue
            sketch = _consume_iso(sketch, j, iso, trace)
            fired = True
            break
        if not fired:
            break
    for j in range(len(sketch.g_factors)):
        killed = Counter()
        for e in sketch.edges_on_g(j):
            if e.kind == "iso":
                killed |= Counter(degrees_of(sketch.g_factors[j]))
            elif e.kind == "catalog":
                killed |= _kill_degrees(e.entry, sketch.g_factors[j])
        if killed == Counter(degrees_of(sketch.g_factors[j])):
            trace.append("warning: H acts transitively on factor %s "
                         "(all degrees killed); stabilizer rewrite not "
                         "catalogued" % sketch.g_factors[j].name)
    return sketch, trace


def _consume_iso(sketch, j, iso, trace):
    """Apply the stabilizer rewrite for an isomorphism edge onto factor j."""
    opposite = [e for e in sketch.edges_on_g(j) if e.h != iso.h]
    own_other = [e for e in sketch.edges_of_h(iso.h) if e.g != j]
    new_edges = []
    for e in sketch.edges:
        if e.g == j or e.h == iso.h:
            continue
        new_edges.append(e)
    # the stabilizer identifies iso.h with the opposite-side actors: their
    # homomorphisms replace iso.h wherever it acted elsewhere
    for other in own_other:
        for opp in opposite:
            if opp.kind == "iso":
                new_edges.append(HomEdge(opp.h, other.g, other.side,
                                         other.kind, other.entry, other.rep))
            elif other.kind == "iso":
                new_edges.append(HomEdge(opp.h, other.g, other.side,
                                         opp.kind, opp.entry, opp.rep))
            else:
                trace.append("warning: unresolvable composite action on "
                             "factor %d left in place" % other.g)
                new_edges.append(other)
    trace.append("removed factor %s (transitive action of factor %s)"
                 % (sketch.g_factors[j].name, _h_name(sketch, iso.h)))
    g_factors = tuple(x for k, x in enumerate(sketch.g_factors) if k != j)
    h_factors = tuple(x for k, x in enumerate(sketch.h_factors) if k != iso.h)

    def remap_g(k):
        return k - 1 if k > j else k

    def remap_h(k):
        return k - 1 if k > iso.h else k

    edges = tuple(HomEdge(remap_h(e.h), remap_g(e.g), e.side, e.kind,
                          e.entry, e.rep) for e in new_edges)
    return PresentationSketch(g_factors, h_factors, edges)


def _h_name(sketch, i):
    x = sketch.h_factors[i]
    return x.name if isinstance(x, SimpleGroupId) else x


# ---------------------------------------------------------------------------
# Degree ledger
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeLedger:
    added: tuple
    removed: tuple
    net: tuple          # sorted (degree, multiplicity) pairs, zeros dropped
    pi3: FiniteAbelianGroup
    flags: tuple

    def net_dict(self):
        return dict(self.net)

    def to_obj(self):
        return {"added": list(self.added), "removed": list(self.removed),
                "net": [list(x) for x in self.net], "pi3": str(self.pi3),
                "flags": list(self.flags)}


def ledger(sketch):
    """Degree bookkeeping for a normalized presentation.

    Returns the multisets of degrees contributed to the quotient (added)
    and of H-degrees left unused (removed), the signed net, and pi_3 from
    the matrix of net Dynkin indices; the degree-2 count is cross-checked
    against the free rank of that cokernel.
    """
    added = Counter()
    removed = Counter()
    flags = []
    nh = len(sketch.h_factors)
    ng = len(sketch.g_factors)
    simple_h = [i for i in range(nh)
                if isinstance(sketch.h_factors[i], SimpleGroupId)]
    pi3_matrix = [[0] * ng for _ in simple_h]
    row_of = {h: r for r, h in enumerate(simple_h)}

    for j, g in enumerate(sketch.g_factors):
        on_j = sketch.edges_on_g(j)
        if not on_j:
            added.update(degrees_of(g))
            continue
        by_h = {}
        for e in on_j:
            by_h.setdefault(e.h, []).append(e)
        if len(by_h) == 1:
            (hi, es), = by_h.items()
            if len(es) == 1:
                e = es[0]
                if e.kind == "catalog":
                    added.update(e.entry.degrees_added)
                    removed.update(e.entry.degrees_removed)
                elif e.kind == "su2":
                    degs = Counter(degrees_of(g))
                    degs[2] -= 1
                    added.update(+degs)
                elif e.kind == "iso":
                    flags.append("factor %d: one-sided isomorphism should "
                                 "have been normalized away" % j)
                else:
                    flags.append("factor %d: transpose edge without its "
                                 "identity partner" % j)
                _add_pi3(pi3_matrix, row_of, e, j)
                continue
            if len(es) == 2 and {e.side for e in es} == {"L", "R"}:
                kinds = {e.kind for e in es}
                if kinds == {"su2"}:
                    if g.rank != 2:
                        flags.append("factor %d: two-sided SU(2) ledger "
                                     "rule needs a rank-2 factor" % j)
                    added[max_degree(g)] += 1
                    il = next(e.index() for e in es if e.side == "L")
                    ir = next(e.index() for e in es if e.side == "R")
                    if il == ir:
                        added[2] += 1
                    for e in es:
                        _add_pi3(pi3_matrix, row_of, e, j)
                    continue
                if kinds <= {"iso", "transpose"}:
                    evens = [d for d in degrees_of(g) if d % 2 == 0]
                    added.update(evens)
                    removed.update(evens)
                    continue
        # several H-factors: combine killed degrees conservatively
        killed = Counter()
        for e in on_j:
            if e.kind == "catalog":
                killed |= _kill_degrees(e.entry, g)
            elif e.kind == "iso":
                killed |= Counter(degrees_of(g))
            elif e.kind == "su2":
                killed |= Counter({2: 1})
            _add_pi3(pi3_matrix, row_of, e, j)
            if e.kind == "catalog":
                removed.update(e.entry.degrees_removed)
        surviving = Counter(degrees_of(g))
        surviving.subtract(killed)
        neg = {d: m for d, m in surviving.items() if m < 0}
        if neg:
            flags.append("factor %d: killed degrees exceed available "
                         "degrees at %s" % (j, sorted(neg)))
        added.update(+surviving)
        flags.append("factor %d: multi-factor overlap resolved by "
                     "multiset union of killed degrees" % j)

    for i in range(nh):
        if isinstance(sketch.h_factors[i], SimpleGroupId) \
                and not sketch.edges_of_h(i):
            removed.update(degrees_of(sketch.h_factors[i]))

    pi3 = pi3_cokernel(pi3_matrix, cols=ng) if simple_h else \
        pi3_cokernel([], cols=ng)
    if added.get(2, 0) != pi3.free_rank:
        flags.append("degree-2 count %d disagrees with pi3 free rank %d"
                     % (added.get(2, 0), pi3.free_rank))
    net = Counter(added)
    net.subtract(removed)
    for d, m in net.items():
        if m < 0 and removed[d] < abs(m):
            flags.append("negative net multiplicity at degree %d" % d)
    return DegreeLedger(
        added=tuple(sorted(added.elements())),
        removed=tuple(sorted(removed.elements())),
        net=tuple(sorted((d, m) for d, m in net.items() if m)),
        pi3=pi3,
        flags=tuple(flags),
    )


def _add_pi3(matrix, row_of, edge, j):
    if edge.h not in row_of:
        return
    r = row_of[edge.h]
    if edge.kind == "transpose":
        return  # identity and transpose have equal index in degree 2
    sign = 1 if edge.side == "L" else -1
    matrix[r][j] += sign * edge.index()


# ---------------------------------------------------------------------------
# Searches
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PairVerdict:
    left_label: str
    right_label: str
    free: bool
    mode: str                            # 'SU(2)' or 'SO(3)' effective group
    witness_order: int = None
    witness: str = ""
    pi3: FiniteAbelianGroup = None

    def to_obj(self):
        obj = {"pair": [self.left_label, self.right_label],
               "free": self.free, "mode": self.mode}
        if not self.free:
            obj["witness_order"] = self.witness_order
            obj["witness"] = self.witness
        if self.pi3 is not None:
            obj["pi3"] = str(self.pi3)
        return obj


def _su2_action_on(g, left_rep, right_rep):
    d_family = g.family == "D"
    return TwoSidedAction(1, [GroupFactor(left_rep.weights, right_rep.weights,
                                          d_family)])


def rank1_two_sided_search(g):
    """All unordered pairs of distinct SU(2) classes acting on both sides
    of a rank-2 group, with exact verdicts; returns (all, free)."""
    if g not in (SU(3), Sp(4), G2):
        raise ValueError("two-sided rank-1 search runs on the rank-2 groups "
                         "SU(3), Sp(4), G2")
    norm = profile(g).vector_index_norm
    homs = su2_homs(g)
    results = []
    for a, b in combinations(homs, 2):
        action = _su2_action_on(g, a, b)
        verdict = is_free(action)
        kernel_full = verdict.kernel.is_full()
        mode = "SU(2)" if kernel_full else "SO(3)"
        ia, ib = dynkin_index(a, norm), dynkin_index(b, norm)
        pi3 = pi3_cokernel([[ia - ib]]) if verdict.free else None
        results.append(PairVerdict(
            a.label, b.label, verdict.free, mode,
            verdict.witness_order if not verdict.free else None,
            str(verdict.witness) if not verdict.free else "",
            pi3))
    free = [r for r in results if r.free]
    return results, free


def _su2xsu2_sp4_homs():
    """Nontrivial homomorphisms SU(2)^2 -> Sp(4) by 4-dim quaternionic data.

    Irreducibles Sym^a x Sym^b embed symplectically iff a + b is odd;
    orthogonal irreducibles (a + b even) need even multiplicity.
    """
    irreps = []
    for a in range(4):
        for b in range(4):
            if (a + 1) * (b + 1) <= 4:
                irreps.append((a, b))

    def weights_of(a, b):
        return [(a - 2 * i, b - 2 * j) for i in range(a + 1)
                for j in range(b + 1)]

    homs = {}

    def rec(pool, total, acc):
        if total == 4:
            c = Counter(acc)
            if all((a + b) % 2 == 1 or m % 2 == 0
                   for (a, b), m in c.items()):
                ws = []
                for (a, b) in acc:
                    ws.extend(weights_of(a, b))
                label = _su2xsu2_label(acc)
                homs[tuple(sorted(ws))] = (label, tuple(sorted(acc)))
            return
        if total > 4 or not pool:
            return
        head, rest = pool[0], pool[1:]
        dim = (head[0] + 1) * (head[1] + 1)
        rec(rest, total, acc)
        if total + dim <= 4:
            rec(pool, total + dim, acc + [head])

    rec(irreps, 0, [])
    out = []
    for ws, (label, parts) in sorted(homs.items()):
        nontrivial = any(p != (0, 0) for p in parts)
        out.append((label, ws, nontrivial))
    return out


def _pair_label(a, b):
    if (a, b) == (0, 0):
        return "C"
    parts = []
    if a:
        parts.append("V1" if a == 1 else "S%dV1" % a)
    if b:
        parts.append("V2" if b == 1 else "S%dV2" % b)
    return "*".join(parts) if parts else "C"


def _su2xsu2_label(acc):
    c = Counter(acc)
    out = []
    for (a, b) in sorted(c, key=lambda p: (-p[0], -p[1])):
        lab = _pair_label(a, b)
        out.append(lab if c[(a, b)] == 1 else "%d%s" % (c[(a, b)], lab))
    return "+".join(out)


def sp4_su2squared_search():
    """Free SU(2)^2 actions on Sp(4), up to swapping sides and factors.

    A genuine action of the full SU(2)^2 needs a full kernel lattice (no
    subgroup acting trivially).  Expected: the one-sided standard block
    embedding and the split standard/doubled-standard pair.
    """
    homs = _su2xsu2_sp4_homs()
    seen = {}
    results = []
    for (ll, lw, lnt) in homs:
        for (rl, rw, rnt) in homs:
            if not (lnt or rnt):
                continue
            key = _sp4_pair_key(lw, rw)
            if key in seen:
                continue
            seen[key] = True
            action = TwoSidedAction(2, [GroupFactor(lw, rw)])
            verdict = is_free(action)
            genuine = verdict.kernel.is_full()
            matrix = [[_factor_energy(lw, k) - _factor_energy(rw, k)]
                      for k in range(2)]
            results.append({
                "pair": (ll, rl),
                "free": bool(verdict.free and genuine),
                "effective_free": verdict.free,
                "genuine_su2xsu2": genuine,
                "witness_order": verdict.witness_order,
                "one_sided": all(all(x == 0 for x in w) for w in rw)
                or all(all(x == 0 for x in w) for w in lw),
                "pi3": pi3_cokernel(matrix) if verdict.free else None,
            })
    free = [r for r in results if r["free"]]
    return results, free


def _factor_energy(weights, k):
    """Dynkin index of the restriction to the k-th SU(2) factor."""
    val = sum(w[k] * w[k] for w in weights)
    if val % 2 != 0:
        raise AssertionError("odd weight-square sum on an SU(2) factor")
    return val // 2


def _sp4_pair_key(lw, rw):
    def swap(ws):
        return tuple(sorted((b, a) for a, b in ws))

    variants = []
    for l, r in ((lw, rw), (rw, lw)):
        variants.append((tuple(sorted(l)), tuple(sorted(r))))
        variants.append((swap(l), swap(r)))
    return min(variants)


def finiteness_bounds(n):
    """Bounds forcing finiteness in a given quotient dimension n: at most n
    simple factors, top degree at most 2n, odd rational homotopy at most n
    dimensions in total."""
    if n < 2:
        raise ValueError("bounds need n >= 2")
    return {"max_factors": n, "max_degree": 2 * n, "max_pi_odd": n}


def candidate_g_factors(n):
    """All simple groups usable as factors in dimension n: top degree <= 2n."""
    bound = 2 * n
    out = []
    l = 1
    while l + 1 <= bound:
        out.append(SimpleGroupId("A", l))
        l += 1
    for fam, lo in (("B", 3), ("C", 2)):
        l = lo
        while 2 * l <= bound:
            out.append(SimpleGroupId(fam, l))
            l += 1
    l = 4
    while 2 * l - 2 <= bound:
        out.append(SimpleGroupId("D", l))
        l += 1
    for gid in (G2, SimpleGroupId("F4", 4), SimpleGroupId("E6", 6),
                SimpleGroupId("E7", 7), SimpleGroupId("E8", 8)):
        if max_degree(gid) <= bound:
            out.append(gid)
    return out


# ---------------------------------------------------------------------------
# Rational homology sphere search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RHSEntry:
    label: str
    presentation: str
    dim: int
    pi3: FiniteAbelianGroup
    added: tuple
    removed: tuple
    homogeneous: bool

    def chi_pi(self):
        return chi_pi([2 * d for d in self.removed],
                      [2 * d - 1 for d in self.added])

    def to_obj(self):
        return {"label": self.label, "presentation": self.presentation,
                "dim": self.dim, "pi3": str(self.pi3),
                "added": list(self.added), "removed": list(self.removed),
                "homogeneous": self.homogeneous,
                "chi_pi": self.chi_pi()}


def _rhs_profile_ok(added, removed):
    if len(added) != 1:
        return False
    if len(removed) == 0:
        return True
    return len(removed) == 1 and added[0] == 2 * removed[0]


_KNOWN_QUOTIENT_LABELS = {
    "Berger^7": "Berger^7",
    "Wu^5": "Wu^5",
    "CaP^2": "CaP^2",
}


def _entry_label(entry):
    if entry.quotient_name:
        return entry.quotient_name
    return "%s/%s[%d]" % (entry.g.name,
                          "SO(3)" if entry.h == SU(2)
                          and entry.dynkin_index in (4, 28)
                          else entry.h.name,
                          entry.dynkin_index)


def rhs_search(max_dim):
    """Biquotients that are simply connected rational homology spheres of
    dimension 3..max_dim, up to relabeling presentations.

    G must be simple (each simple factor contributes odd homotopy), and H
    is semisimple (dimension at least 3 forces trivial pi_2).  Candidates:
    H trivial; one-sided homogeneous pairs from the catalog; two-sided
    SU(2) classes on the rank-2 groups; SU(2) x SU(2) on Sp(4).  Two-sided
    candidates run through the exact freeness decision.
    """
    if max_dim < 3:
        raise ValueError("search needs max_dim >= 3")
    entries = []

    # G = SU(2) with H trivial is the 3-sphere
    entries.append(RHSEntry("S^3", "SU(2)", 3,
                            pi3_cokernel([], cols=1), (2,), (), True))

    # homogeneous pairs
    for rule in catalog_rules():
        ns = [0] if rule.max_n == 0 else None
        n = rule.min_n
        while True:
            if ns is not None:
                entry = rule.instantiate(0)
            else:
                entry = rule.instantiate(n)
            dim = entry.dimension_of_quotient()
            if dim > max_dim:
                if ns is not None:
                    break
                else:
                    break
            if dim >= 3 and _rhs_profile_ok(entry.degrees_added,
                                            entry.degrees_removed):
                sign = 1
                pi3 = pi3_cokernel([[sign * entry.dynkin_index]])
                entries.append(RHSEntry(
                    _entry_label(entry),
                    "%s/%s via %s" % (entry.g.name, entry.h.name,
                                      entry.hom_descriptor),
                    dim, pi3, entry.degrees_added, entry.degrees_removed,
                    True))
            if ns is not None:
                break
            n += 1

    # two-sided SU(2) on the rank-2 groups
    for g in (SU(3), Sp(4), G2):
        dim = group_dimension(g) - 3
        if dim > max_dim:
            continue
        _, free = rank1_two_sided_search(g)
        for pv in free:
            entries.append(RHSEntry(
                "%s//(%s|%s)" % (g.name, pv.left_label, pv.right_label),
                "%s two-sided SU(2) (%s, %s)" % (g.name, pv.left_label,
                                                 pv.right_label),
                dim, pv.pi3, (max_degree(g),), (), False))

    # SU(2) x SU(2) on Sp(4): quotient is rationally the 4-sphere
    if 4 <= max_dim:
        _, free = sp4_su2squared_search()
        for r in free:
            left, right = r["pair"]
            entries.append(RHSEntry(
                "S^4", "Sp(4)/(SU(2)xSU(2)) (%s | %s)" % (left, right),
                4, r["pi3"], (4,), (2,), r["one_sided"]))

    return sorted(entries, key=lambda e: (e.dim, e.label, e.presentation))


def rhs_manifold_classes(entries):
    """Collapse presentations of the same manifold class to one label."""
    by_label = {}
    for e in entries:
        by_label.setdefault(e.label, []).append(e)
    return by_label
