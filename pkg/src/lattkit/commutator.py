"""Commutator lattices: a finite lattice with a binary operation [x, y] below the meet
that distributes over joins.  Primes, radicals, the same-radical congruence and its
quotient frame, residuation, and the Stone-type theory built on them.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

from .conditions import (ALL_CONDITIONS, GRADED, ConditionId, Family, Kappa, all_annihilators,
                         ann_masks, ann_of, boolean_center, ideal_center, is_stone,
                         is_strongly_stone, verdicts)
from .lattice import (FiniteLattice, LatticeCongruence, bits, congruence_generated,
                      enumerate_congruences, irreducibles, is_0_regular, is_distributive,
                      mask_of, quotient_lattice, upper_cover)
from .report import Report, first_failure


class CommutatorError(ValueError):
    pass


class NotCommutative(CommutatorError):
    def __init__(self, x, y):
        super().__init__(f"[{x},{y}] != [{y},{x}]")
        self.x, self.y = x, y


class ExceedsMeet(CommutatorError):
    def __init__(self, x, y):
        super().__init__(f"[{x},{y}] is not below {x} ∧ {y}")
        self.x, self.y = x, y


class NotJoinDistributive(CommutatorError):
    def __init__(self, x, y, z):
        super().__init__(f"[{x}, {y} ∨ {z}] != [{x},{y}] ∨ [{x},{z}]")
        self.x, self.y, self.z = x, y, z


class NotNullaryDistributive(CommutatorError):
    def __init__(self, x):
        super().__init__(f"[{x}, 0] != 0")
        self.x = x


class QuotientNotDistributive(ValueError):
    pass


def commutator_violations(L: FiniteLattice, table, limit: int | None = None) -> list[CommutatorError]:
    """Every axiom violation of ``table`` on ``L`` (up to ``limit``)."""
    out: list[CommutatorError] = []
    lab = L.labels
    n = L.n

    def add(err):
        out.append(err)
        return limit is not None and len(out) >= limit

    for x in range(n):
        if table[x][L.bottom] != L.bottom and add(NotNullaryDistributive(lab[x])):
            return out
        for y in range(n):
            if table[x][y] != table[y][x] and x < y and add(NotCommutative(lab[x], lab[y])):
                return out
            if not L.leq[table[x][y]][L.meet[x][y]] and add(ExceedsMeet(lab[x], lab[y])):
                return out
    for x in range(n):
        row = table[x]
        for y in range(n):
            for z in range(y + 1, n):
                if row[L.join[y][z]] != L.join[row[y]][row[z]] and add(NotJoinDistributive(lab[x], lab[y], lab[z])):
                    return out
    return out


class CommutatorLattice:
    """A validated finite commutator lattice; build with :func:`validate_commutator`."""

    def __init__(self, base: FiniteLattice, comm):
        self.base = base
        self.comm = tuple(tuple(r) for r in comm)
        self.n = base.n

    def __repr__(self):
        return f"CommutatorLattice({self.base!r}, meet={self.is_meet})"

    def __call__(self, x: int, y: int) -> int:
        return self.comm[x][y]

    @cached_property
    def is_meet(self) -> bool:
        return self.comm == tuple(tuple(r) for r in self.base.meet)

    def power(self, x: int, k: int) -> int:
        """x^1 = x, x^(k+1) = [x, x^k]."""
        p = x
        for _ in range(k - 1):
            p = self.comm[x][p]
        return p

    def powers(self, x: int) -> list[int]:
        """x, x^2, ... up to and including the first repeated value."""
        seq = [x]
        while True:
            nxt = self.comm[x][seq[-1]]
            seq.append(nxt)
            if nxt == seq[-2]:
                return seq

    def to_json(self) -> dict:
        L = self.base
        out = L.to_json()
        out["commutator"] = [[L.labels[x], L.labels[y], L.labels[self.comm[x][y]]]
                             for x in range(L.n) for y in range(x, L.n)
                             if self.comm[x][y] != L.meet[x][y]]
        return out


def validate_commutator(base: FiniteLattice, comm) -> CommutatorLattice:
    errors = commutator_violations(base, comm, limit=1)
    if errors:
        raise errors[0]
    return CommutatorLattice(base, comm)


def meet_commutator(L: FiniteLattice) -> CommutatorLattice:
    return CommutatorLattice(L, L.meet)


# -- primes and radicals ---------------------------------------------------------------

@dataclass(frozen=True)
class SpectrumData:
    spec: frozenset
    v: tuple            # x -> mask of primes above x
    rho: tuple          # x -> meet of the primes above x
    radicals: frozenset

    def to_json(self, L: FiniteLattice) -> dict:
        return {"spec": L.names(self.spec),
                "rho": {L.labels[x]: L.labels[r] for x, r in enumerate(self.rho)},
                "radicals": L.names(self.radicals)}


def primes(CL: CommutatorLattice) -> frozenset:
    L, c = CL.base, CL.comm
    out = []
    for p in range(L.n):
        if p == L.top:
            continue
        below = L.down[p]
        if all(not below >> c[a][b] & 1 or below >> a & 1 or below >> b & 1
               for a in range(L.n) for b in range(a, L.n)):
            out.append(p)
    return frozenset(out)


def spectrum(CL: CommutatorLattice) -> SpectrumData:
    got = CL.__dict__.get("_spectrum")
    if got is not None:
        return got
    L = CL.base
    spec = primes(CL)
    sm = mask_of(spec)
    v = tuple(L.up[x] & sm for x in range(L.n))
    rho = tuple(L.meet_of(m) for m in v)
    got = SpectrumData(spec, v, rho, frozenset(x for x in range(L.n) if rho[x] == x))
    CL.__dict__["_spectrum"] = got
    return got


def spectrum_by_squares(CL: CommutatorLattice) -> frozenset:
    """Meet-irreducibles x < 1 such that [a, a] <= x forces a <= x."""
    L, c = CL.base, CL.comm
    mi = irreducibles(L).mi
    return frozenset(x for x in mi if x != L.top
                     and all(not L.leq[c[a][a]][x] or L.leq[a][x] for a in range(L.n)))


def spectrum_by_covers(CL: CommutatorLattice) -> frozenset:
    """Strictly meet-irreducibles x with [x⁺, x⁺] not below x."""
    L, c = CL.base, CL.comm
    out = []
    for x in irreducibles(L).smi:
        up = upper_cover(L, x)
        if not L.leq[c[up][up]][x]:
            out.append(x)
    return frozenset(out)


# -- the same-radical congruence ------------------------------------------------------------

@dataclass(frozen=True)
class EquivCongruence:
    congruence: LatticeCongruence
    rho: tuple
    proj: tuple         # element -> block of the quotient

    def class_min(self, x: int) -> int:
        return self.congruence.lattice.meet_of(self.congruence.class_mask(x))

    def class_max(self, x: int) -> int:
        return self.congruence.lattice.join_of(self.congruence.class_mask(x))


def equiv_congruence(CL: CommutatorLattice) -> EquivCongruence:
    sd = spectrum(CL)
    theta = LatticeCongruence.from_labels(CL.base, sd.rho)
    return EquivCongruence(theta, sd.rho, theta.block_of)


def _induced_table(L: FiniteLattice, table, theta: LatticeCongruence):
    """[x/θ, y/θ] = [x, y]/θ computed on class representatives, plus whether it is well defined."""
    bo = theta.block_of
    k = len(theta.blocks)
    out = [[None] * k for _ in range(k)]
    ok = True
    for x in range(L.n):
        for y in range(L.n):
            v = bo[table[x][y]]
            cell = out[bo[x]][bo[y]]
            if cell is None:
                out[bo[x]][bo[y]] = v
            elif cell != v:
                ok = False
    return tuple(tuple(r) for r in out), ok


def quotient_mod_equiv(CL: CommutatorLattice) -> CommutatorLattice:
    """L/≡ with the induced operation [x/≡, y/≡] = [x, y]/≡."""
    eq = equiv_congruence(CL)
    Q = quotient_lattice(CL.base, eq.congruence).lattice
    table, _ = _induced_table(CL.base, CL.comm, eq.congruence)
    return CommutatorLattice(Q, table)


def reticulation(CL: CommutatorLattice) -> FiniteLattice:
    """On a finite carrier every element is compact, so this is L/≡ itself."""
    return quotient_mod_equiv(CL).base


def _cg(L, pairs):
    return congruence_generated(L, pairs)


def radical_congruence_checks(CL: CommutatorLattice) -> Report:
    L, c = CL.base, CL.comm
    sd = spectrum(CL)
    eq = equiv_congruence(CL)
    theta = eq.congruence
    n = range(L.n)
    rep = Report()

    rep.claim("spectrum_characterizations", True,
              lambda: (sd.spec == spectrum_by_squares(CL) == spectrum_by_covers(CL),
                       {"spec": L.names(sd.spec)}))
    rep.claim("meet_spectrum_is_meet_irreducibles", CL.is_meet,
              lambda: sd.spec == irreducibles(L).mi - {L.top})
    coatoms = irreducibles(L).max
    rep.claim("coatoms_prime_when_top_idempotent", c[L.top][L.top] == L.top, coatoms <= sd.spec)
    rep.claim("coatom_above_each_element", True,
              all(x == L.top or any(L.leq[x][p] for p in coatoms) for x in n))
    rep.claim("prime_above_each_element_when_top_idempotent", c[L.top][L.top] == L.top,
              lambda: all(x == L.top or sd.v[x] for x in n))

    def closure():
        r = sd.rho
        return first_failure(n, lambda x: L.leq[x][r[x]] and r[r[x]] == r[x]
                             and all(not L.leq[x][y] or L.leq[r[x]][r[y]] for y in n))

    def meet_identities():
        r, v = sd.rho, sd.v
        for a in n:
            for b in n:
                m, k = L.meet[a][b], c[a][b]
                if not (r[m] == r[k] == L.meet[r[a]][r[b]] == r[L.meet[r[a]][r[b]]] == r[c[r[a]][r[b]]]):
                    return False, {"a": L.labels[a], "b": L.labels[b]}
                if not (v[m] == v[k] == v[a] | v[b]):
                    return False, {"a": L.labels[a], "b": L.labels[b]}
                if r[L.join[a][b]] != r[L.join[r[a]][r[b]]]:
                    return False, {"a": L.labels[a], "b": L.labels[b]}
        return True

    rep.claim("radical_is_closure", True, closure)
    rep.claim("radical_meet_join_identities", True, meet_identities)
    rep.claim("primes_are_radical", True, sd.spec <= sd.radicals)

    one_trivial = theta.class_mask(L.top) == 1 << L.top
    rep.claim("trivial_top_class_iff_top_idempotent", True,
              (one_trivial == (c[L.top][L.top] == L.top),
               {"top_class": L.names(theta.class_mask(L.top))}))

    def congruence_props():
        from .lattice import is_compatible
        if not is_compatible(L, theta.block_of):
            return False, {"reason": "not compatible"}
        for x in n:
            for y in n:
                if not theta.related(c[x][y], L.meet[x][y]):
                    return False, {"reason": "[x,y] not related to x∧y", "x": L.labels[x], "y": L.labels[y]}
        for blk in theta.blocks:
            for x, x2 in itertools.product(bits(blk), repeat=2):
                for y in n:
                    if not theta.related(c[x][y], c[x2][y]):
                        return False, {"reason": "commutator not preserved"}
        radicals_as_max = frozenset(eq.class_max(x) for x in n)
        if radicals_as_max != sd.radicals:
            return False, {"reason": "radicals are not the class maxima"}
        if theta.class_mask(L.bottom) != L.down[sd.rho[L.bottom]]:
            return False, {"reason": "0-class is not (ρ(0)]"}
        rmask = mask_of(sd.radicals)
        for x in n:
            if sd.rho[x] != eq.class_max(x) or sd.rho[x] != L.meet_of(L.up[x] & rmask):
                return False, {"reason": "ρ(x) is not the class maximum", "x": L.labels[x]}
        return True

    rep.claim("equiv_is_commutator_congruence", True, congruence_props)
    rep.claim("one_radical_per_class", True,
              all(len(set(bits(blk)) & sd.radicals) == 1 for blk in theta.blocks))

    by_rho = _cg(L, [(x, sd.rho[x]) for x in n])
    by_meet = _cg(L, [(L.meet[x][y], c[x][y]) for x in n for y in n])
    by_square = _cg(L, [(x, c[x][x]) for x in n])
    rep.claim("generated_congruence_chain", True,
              (theta == by_rho and by_meet <= by_rho and by_square <= by_meet,
               {"equiv": theta.to_json(), "from_meets": by_meet.to_json(), "from_squares": by_square.to_json()}))

    def min_absorbs():
        for x in n:
            m = eq.class_min(x)
            for a in bits(L.up[m]):
                if c[a][m] != m:
                    return False, {"x": L.labels[x], "a": L.labels[a]}
        return True

    rep.claim("class_minimum_absorbs", True, min_absorbs)

    stable = {}
    for x in n:
        seq = CL.powers(sd.rho[x])
        m = eq.class_min(x)
        if m in seq:
            stable[x] = seq.index(m) + 1
    power_hyp = len(stable) == L.n

    def powers_claim():
        if theta != by_meet:
            return False, {"reason": "≡ differs from the congruence generated by (x∧y, [x,y])"}
        for x in n:
            m = eq.class_min(x)
            for a in bits(theta.class_mask(x)):
                seq = CL.powers(a)
                tail = seq[stable[x] - 1:] if stable[x] <= len(seq) else [seq[-1]]
                if any(p != m for p in tail):
                    return False, {"x": L.labels[x], "a": L.labels[a], "powers": L.names(seq)}
        return True

    rep.claim("power_stabilization", power_hyp, powers_claim)
    return rep


# -- the radical frame ----------------------------------------------------------------------

@dataclass(frozen=True)
class RadicalFrame:
    lattice: FiniteLattice
    elements: tuple         # frame index -> element of L
    iso: tuple              # block of L/≡ -> frame index


def radical_frame(CL: CommutatorLattice) -> RadicalFrame:
    L = CL.base
    sd = spectrum(CL)
    elems = tuple(sorted(sd.radicals))
    pos = {x: i for i, x in enumerate(elems)}
    leq = tuple(tuple(L.leq[x][y] for y in elems) for x in elems)
    meet = tuple(tuple(pos[L.meet[x][y]] for y in elems) for x in elems)
    join = tuple(tuple(pos[sd.rho[L.join[x][y]]] for y in elems) for x in elems)
    F = FiniteLattice(leq, meet, join, [L.labels[x] for x in elems], pos[sd.rho[L.bottom]], pos[L.top])
    eq = equiv_congruence(CL)
    iso = [None] * len(eq.congruence.blocks)
    for x in range(L.n):
        iso[eq.proj[x]] = pos[sd.rho[x]]
    return RadicalFrame(F, elems, tuple(iso))


def frame_checks(CL: CommutatorLattice) -> Report:
    L = CL.base
    sd = spectrum(CL)
    eq = equiv_congruence(CL)
    q = quotient_lattice(L, eq.congruence)
    Q = q.lattice
    induced, well_defined = _induced_table(L, CL.comm, eq.congruence)
    rep = Report()
    rep.claim("quotient_is_meet_commutator_frame", True,
              (well_defined and induced == Q.meet and is_distributive(Q),
               {"well_defined": well_defined}))

    rf = radical_frame(CL)
    F = rf.lattice

    def iso_ok():
        if sorted(rf.iso) != list(range(F.n)):
            return False, {"reason": "not a bijection"}
        for a in range(Q.n):
            for b in range(Q.n):
                if rf.iso[Q.meet[a][b]] != F.meet[rf.iso[a]][rf.iso[b]] or \
                        rf.iso[Q.join[a][b]] != F.join[rf.iso[a]][rf.iso[b]]:
                    return False, {"reason": "not a morphism"}
        # F must itself be a lattice under the inherited order
        check = FiniteLattice.from_leq(F.leq)
        return check.meet == F.meet and check.join == F.join and is_distributive(F)

    rep.claim("radical_frame_isomorphic_to_quotient", True, iso_ok)
    fsd = spectrum(meet_commutator(F))
    rep.claim("radical_frame_spectrum", True,
              (frozenset(rf.elements[p] for p in fsd.spec) == sd.spec and len(fsd.radicals) == F.n,
               {"frame_spec": [rf.elements[p] for p in sorted(fsd.spec)]}))
    qsd = spectrum(meet_commutator(Q))
    rep.claim("quotient_spectrum_is_image", True,
              (qsd.spec == frozenset(q.proj[p] for p in bits(sd.v[sd.rho[L.bottom]]))
               and len(qsd.radicals) == Q.n, {}))

    fq = all_annihilators(Q)
    rep.claim("quotient_annihilators_principal", True,
              fq.all == fq.pann and all(Q.is_ideal(a) for a in fq.all)
              and is_stone(Q) == is_strongly_stone(Q))
    return rep


# -- residuation ------------------------------------------------------------------------------

def residuation(CL: CommutatorLattice, x: int, y: int) -> int:
    """x → y, the largest a with [x, a] <= y."""
    L, row = CL.base, CL.comm[x]
    return L.join_of(mask_of(a for a in range(L.n) if L.leq[row[a]][y]))


def negation(CL: CommutatorLattice, x: int) -> int:
    return residuation(CL, x, CL.base.bottom)


def residuation_checks(CL: CommutatorLattice) -> Report:
    L, c = CL.base, CL.comm
    n = range(L.n)
    sd = spectrum(CL)
    rep = Report()
    res = [[residuation(CL, x, y) for y in n] for x in n]

    def maximum():
        return first_failure(itertools.product(n, n), lambda p: L.leq[c[p[0]][res[p[0]][p[1]]]][p[1]])

    def adjunction():
        return first_failure(itertools.product(n, n, n),
                             lambda t: L.leq[c[t[0]][t[1]]][t[2]] == L.leq[t[0]][res[t[1]][t[2]]])

    qualifying = [y for y in n if c[y][L.top] == y]

    def top_test():
        return first_failure(itertools.product(qualifying, n),
                             lambda p: (res[p[0]][p[1]] == L.top) == L.leq[p[0]][p[1]])

    rep.claim("residuation_attains_maximum", True, maximum)
    rep.claim("residuation_adjunction", True, adjunction)
    rep.claim("residuation_to_top", True, all(res[x][L.top] == L.top for x in n))
    rep.claim("residuation_top_iff_below", bool(qualifying), top_test)
    ann = ann_masks(L)
    rep.claim("negation_is_max_annihilator", sd.rho[L.bottom] == L.bottom,
              lambda: first_failure(n, lambda x: res[x][L.bottom] == L.join_of(ann[x])
                                    and ann[x] == L.down[res[x][L.bottom]]))
    return rep


# -- Boolean center ---------------------------------------------------------------------------------

def _subsets(L: FiniteLattice):
    if L.n <= 10:
        return range(1 << L.n)
    fam = all_annihilators(L)
    return sorted({0, *fam.sources.values(), *(1 << a for a in range(L.n))})


def boolean_center_theory(CL: CommutatorLattice) -> Report:
    L, c = CL.base, CL.comm
    n = range(L.n)
    sd = spectrum(CL)
    eq = equiv_congruence(CL)
    theta = eq.congruence
    q = quotient_lattice(L, theta)
    Q = q.lattice
    center, qcenter = boolean_center(L), boolean_center(Q)
    B = sorted(center.elements)
    ann = ann_masks(L)
    fam = all_annihilators(L)

    top_law = all(c[x][L.top] == x for x in n)
    rho0 = sd.rho[L.bottom] == L.bottom
    one = theta.class_mask(L.top) == 1 << L.top
    neg = [negation(CL, x) for x in n]
    rep = Report()

    def central_meets():
        for e in B:
            for a in n:
                m = L.meet[e][a]
                if c[L.top][m] == m and c[e][a] != m:
                    return False, {"e": L.labels[e], "a": L.labels[a]}
        return True

    rep.claim("central_meet_is_commutator", True, central_meets)

    def center_sublattice():
        for e in B:
            for a in n:
                if c[e][a] != L.meet[e][a]:
                    return False, {"e": L.labels[e], "a": L.labels[a]}
        if not center.boolean:
            return False, {"reason": "center is not a Boolean sublattice"}
        for e in B:
            f = neg[e]
            if f != L.join_of(ann[e]) or L.meet[e][f] != L.bottom or L.join[e][f] != L.top:
                return False, {"e": L.labels[e], "negation": L.labels[f]}
        return True

    rep.claim("center_is_boolean_sublattice", top_law, center_sublattice)
    rep.claim("central_principal_is_negation_ann", rho0 and top_law,
              lambda: first_failure(B, lambda e: L.down[e] == ann[neg[e]]))

    rep.claim("negation_generates_ann", rho0, lambda: first_failure(n, lambda x: ann[x] == L.down[neg[x]]))
    rep.claim("stone_iff_negations_central", rho0,
              lambda: is_stone(L) == all(neg[x] in center.elements for x in n))
    rep.claim("central_principal_in_pann", rho0 and top_law,
              lambda: first_failure(B, lambda e: L.down[e] in fam.pann))

    icenter = ideal_center(L)
    downs = frozenset(L.down[e] for e in B)
    rep.claim("ideal_center_is_central_principal", rho0 and top_law,
              lambda: (icenter == downs and downs <= fam.pann,
                       {"ideal_center": [L.names(i) for i in sorted(icenter)]}))
    rep.claim("stone_iff_pann_is_ideal_center", rho0 and top_law, lambda: is_stone(L) == (fam.pann == icenter))
    rep.claim("stone_iff_strongly_stone_when_zero_radical", rho0, lambda: is_stone(L) == is_strongly_stone(L))

    # compactness statements collapse on a finite carrier: every element is compact
    qsd = spectrum(meet_commutator(Q))
    rep.claim("quotient_primes_cover_when_top_class_trivial", one,
              lambda: all(y == Q.top or qsd.v[y] for y in range(Q.n)))

    image = [q.proj[e] for e in B]
    lam_injective = len(set(image)) == len(B)
    lam_onto = frozenset(image) == qcenter.elements
    rep.claim("center_lifts_through_equiv", one and rho0,
              lambda: lam_onto and all((q.proj[x] in qcenter.elements) == (x in center.elements) for x in n))

    def boolean_morphism():
        if not set(image) <= qcenter.elements:
            return False, {"reason": "image leaves the quotient center"}
        for e in B:
            for f in B:
                if q.proj[L.meet[e][f]] != Q.meet[q.proj[e]][q.proj[f]] or \
                        q.proj[L.join[e][f]] != Q.join[q.proj[e]][q.proj[f]]:
                    return False, {"e": L.labels[e], "f": L.labels[f]}
        return True

    zero_meets = theta.class_mask(L.bottom) & center.mask == 1 << L.bottom
    one_meets = theta.class_mask(L.top) & center.mask == 1 << L.top
    rep.claim("center_projection_is_boolean_morphism", top_law, boolean_morphism)
    rep.claim("center_projection_injectivity_tests", top_law,
              (lam_injective == zero_meets == one_meets,
               {"injective": lam_injective, "zero_class": zero_meets, "one_class": one_meets}))
    rep.claim("center_projection_injective", top_law and (rho0 or one), lam_injective)
    rep.claim("center_projection_injective_compact_top", top_law, lam_injective)
    rep.claim("center_projection_isomorphism", top_law and rho0 and one, lam_injective and lam_onto)
    rep.claim("center_projection_isomorphism_compact_top", top_law and rho0, lam_injective and lam_onto)

    full = top_law and rho0 and one

    def order_reflect():
        return first_failure(itertools.product(n, B),
                             lambda p: Q.leq[q.proj[p[0]]][q.proj[p[1]]] == L.leq[p[0]][p[1]])

    def central_radical():
        return first_failure(B, lambda e: eq.class_max(e) == e == sd.rho[e])

    def complemented_collapse():
        if len(center.elements) != L.n:
            return True
        return (len(sd.radicals) == L.n and CL.is_meet and is_distributive(L), {})

    def ann_reflect():
        values = sorted(fam.all)
        for e in n:
            for a in values:
                for generator in ({e} & center.elements, {sd.rho[e]}):
                    for g in generator:
                        dg = L.down[g]
                        if (q.image(dg) == q.image(a)) != (dg == a):
                            return False, {"e": L.labels[g], "annihilator": L.names(a)}
        return True

    rep.claim("central_order_reflected", full, order_reflect)
    rep.claim("central_elements_are_radical_class_maxima", full, central_radical)
    rep.claim("complemented_forces_meet_commutator", full, complemented_collapse)
    rep.claim("central_and_radical_principals_reflected", full, ann_reflect)

    def zero_meets_iff():
        for a in n:
            for b in n:
                if (L.meet[a][b] == L.bottom) != (c[a][b] == L.bottom):
                    return False, {"a": L.labels[a], "b": L.labels[b]}
        for u in _subsets(L):
            alt = mask_of(x for x in n if all(c[x][y] == L.bottom for y in bits(u)))
            if alt != ann_of(L, u):
                return False, {"U": L.names(u)}
        return True

    def ann_principal():
        for u in _subsets(L):
            a = ann_of(L, u)
            j = L.join_of(u)
            if a != ann_of(L, L.down[j]) or a != ann[j]:
                return False, {"U": L.names(u)}
        if fam.all != fam.pann or not all(L.is_ideal(a) for a in fam.all):
            return False, {"reason": "annihilators are not principal"}
        return True

    rep.claim("zero_meet_iff_zero_commutator", rho0, zero_meets_iff)
    rep.claim("annihilators_principal_when_zero_radical", rho0, ann_principal)
    return rep


def center_lifting(CL: CommutatorLattice) -> dict:
    eq = equiv_congruence(CL)
    q = quotient_lattice(CL.base, eq.congruence)
    center, qcenter = boolean_center(CL.base), boolean_center(q.lattice)
    image = frozenset(q.proj[e] for e in center.elements)
    return {"blp": image == qcenter.elements, "injective": len(image) == len(center.elements)}


def commutator_annihilator_view(CL: CommutatorLattice) -> FiniteLattice:
    """A copy of the base lattice whose annihilators are {x : [x, a] = 0}.

    The condition checks read annihilators through the lattice cache, so
    running them on this copy evaluates every condition with the commutator
    in place of the meet.
    """
    L = CL.base
    V = FiniteLattice(L.leq, L.meet, L.join, L.labels, L.bottom, L.top)
    V._cache["ann"] = tuple(mask_of(x for x in range(L.n) if CL.comm[x][a] == L.bottom)
                            for a in range(L.n))
    return V

# -- radicals everywhere ---------------------------------------------------------------------------

def all_radical_checks(CL: CommutatorLattice) -> Report:
    L = CL.base
    sd = spectrum(CL)
    eq = equiv_congruence(CL)
    all_rad = len(sd.radicals) == L.n
    rep = Report()
    rep.claim("all_radical_iff_equiv_trivial", True, all_rad == eq.congruence.is_identity())
    rep.claim("all_radical_forces_meet", all_rad, lambda: CL.is_meet and is_distributive(L))
    rep.claim("all_radical_iff_meet", True, all_rad == CL.is_meet)
    rep.claim("zero_regular_forces_all_radical", sd.rho[L.bottom] == L.bottom and is_0_regular(L),
              lambda: all_rad and CL.is_meet and is_distributive(L))
    return rep


# -- Davey-type equivalences ------------------------------------------------------------------------

@dataclass
class CommutatorGridReport:
    hypotheses: dict
    source: dict
    quotient: dict
    checks: Report = field(default_factory=Report)

    @property
    def hypotheses_met(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def ok(self) -> bool:
        return self.checks.ok

    def to_json(self) -> dict:
        return {"hypotheses": self.hypotheses,
                "verdicts": {str(c): {"L": self.source[c], "quotient": self.quotient[c]} for c in ALL_CONDITIONS},
                "checks": self.checks.to_json()}


def commutator_grid_report(CL: CommutatorLattice) -> CommutatorGridReport:
    L, c = CL.base, CL.comm
    sd = spectrum(CL)
    eq = equiv_congruence(CL)
    Q = quotient_lattice(L, eq.congruence).lattice
    rho0 = sd.rho[L.bottom] == L.bottom
    one = eq.congruence.class_mask(L.top) == 1 << L.top
    top_law = all(c[x][L.top] == x for x in range(L.n))
    vl, vq = verdicts(L), verdicts(Q)
    rep = CommutatorGridReport({"zero_is_radical": rho0, "top_class_trivial": one, "top_is_unit": top_law},
                         vl, vq, Report())
    ck = rep.checks
    iv = ConditionId(Family.IV)

    for k in Kappa:
        tag = f"[{k.value}]"

        def cid(f):
            return ConditionId(f, k)

        def same(f):
            x = cid(f)
            return vl[x] == vq[x], {"L": vl[x], "quotient": vq[x]}

        def down(f):
            x = cid(f)
            return not vl[x] or vq[x], {"L": vl[x], "quotient": vq[x]}

        ck.claim("c1_descends" + tag, rho0, down(Family.C1))
        ck.claim("c1_equivalent" + tag, rho0 and one and top_law, same(Family.C1))
        ck.claim("c2_descends" + tag, rho0 and one, down(Family.C2))
        ck.claim("c2_equivalent" + tag, rho0 and one and top_law, same(Family.C2))
        ck.claim("c3_equivalent" + tag, rho0, same(Family.C3))
        ck.claim("c4_iff_iv" + tag, rho0, vl[cid(Family.C4)] == vl[iv])
        ck.claim("quotient_c4_iff_iv" + tag, True, vq[cid(Family.C4)] == vq[iv])
        ck.claim("c4_equivalent" + tag, rho0, same(Family.C4))
        ck.claim("c5_descends" + tag, True, down(Family.C5))
        ck.claim("c5_equivalent" + tag, rho0 and one, same(Family.C5))

    stones = {"L_stone": is_stone(L), "L_strongly_stone": is_strongly_stone(L),
              "quotient_stone": is_stone(Q), "quotient_strongly_stone": is_strongly_stone(Q)}
    ck.claim("stone_variants_agree", rho0 and one and top_law, (len(set(stones.values())) == 1, stones))
    ck.claim("all_conditions_agree", rep.hypotheses_met,
              (len({vl[x] for x in ALL_CONDITIONS}) == 1, {str(x): vl[x] for x in ALL_CONDITIONS}))
    threes = {vl[ConditionId(Family.C3, k)] for k in Kappa}
    fives = {vl[ConditionId(Family.C5, k)] for k in Kappa}
    ck.claim("c3_iff_c5_across_kappa", rho0, (len(threes | fives) == 1, {"c3": sorted(threes), "c5": sorted(fives)}))
    return rep


# -- commutators induced by a congruence ------------------------------------------------------------

def commutator_from_congruence(M: FiniteLattice, theta: LatticeCongruence) -> CommutatorLattice:
    """[x, y] = min((x ∧ y)/θ), valid whenever M/θ is distributive."""
    Q = quotient_lattice(M, theta).lattice
    if not is_distributive(Q):
        raise QuotientNotDistributive("the quotient is not distributive")
    mins = [M.meet_of(theta.class_mask(x)) for x in range(M.n)]
    table = tuple(tuple(mins[M.meet[x][y]] for y in range(M.n)) for x in range(M.n))
    return validate_commutator(M, table)


def congruence_commutator_table(M: FiniteLattice, theta: LatticeCongruence) -> tuple:
    """The table min((x ∧ y)/θ), without any validity requirement."""
    mins = [M.meet_of(theta.class_mask(x)) for x in range(M.n)]
    return tuple(tuple(mins[M.meet[x][y]] for y in range(M.n)) for x in range(M.n))


def induced_commutator_checks(M: FiniteLattice, theta: LatticeCongruence) -> Report:
    rep = Report()
    table = congruence_commutator_table(M, theta)
    violations = commutator_violations(M, table, limit=1)
    rep.claim("constructed_table_valid", True, (not violations, {"error": str(violations[0]) if violations else None}))
    if violations:
        return rep
    CL = CommutatorLattice(M, table)
    n = range(M.n)
    cmax = [M.join_of(theta.class_mask(x)) for x in n]
    cmin = [M.meet_of(theta.class_mask(x)) for x in n]
    gens = {
        "meets": _cg(M, [(M.meet[x][y], table[x][y]) for x in n for y in n]),
        "squares": _cg(M, [(x, table[x][x]) for x in n]),
        "class_bounds": _cg(M, [(cmin[x], cmax[x]) for x in n]),
        "class_max": _cg(M, [(x, cmax[x]) for x in n]),
    }
    rep.claim("regenerates_congruence", True,
              (all(g == theta for g in gens.values()), {k: g.to_json() for k, g in gens.items()}))
    sd = spectrum(CL)
    mi = irreducibles(M).mi
    top_class = theta.class_mask(M.top)
    expected = frozenset(x for x in mi if x == cmax[x] and not top_class >> x & 1)
    rep.claim("spectrum_is_irreducible_class_maxima", True,
              (sd.spec == expected, {"spec": M.names(sd.spec), "expected": M.names(expected)}))
    maxima = frozenset(cmax)
    rep.claim("radicals_are_class_maxima", True,
              (sd.radicals == maxima and all(sd.rho[y] == cmax[y] for y in n)
               and _cg(M, [(x, sd.rho[x]) for x in n]) == theta,
               {"radicals": M.names(sd.radicals), "class_maxima": M.names(maxima)}))
    return rep


def _table_join(L, s, t):
    return tuple(tuple(L.join[s[x][y]][t[x][y]] for y in range(L.n)) for x in range(L.n))


def _table_leq(L, s, t) -> bool:
    return all(L.leq[s[x][y]][t[x][y]] for x in range(L.n) for y in range(L.n))


def induced_table_identity_checks(M: FiniteLattice, tables=()) -> Report:
    """Pairwise identities for congruence-induced tables; ``tables`` feeds the lower-bound claim."""
    cons = enumerate_congruences(M)
    induced = {t: congruence_commutator_table(M, t) for t in cons}
    n = range(M.n)
    rep = Report()

    def pairwise():
        for t, z in itertools.product(cons, repeat=2):
            both = t.meet(z)
            for x in n:
                lhs = M.meet_of(both.class_mask(x))
                rhs = M.join[M.meet_of(t.class_mask(x))][M.meet_of(z.class_mask(x))]
                if lhs != rhs:
                    return False, {"theta": t.to_json(), "zeta": z.to_json(), "x": M.labels[x]}
            if induced[both] != _table_join(M, induced[t], induced[z]):
                return False, {"theta": t.to_json(), "zeta": z.to_json()}
        return True

    def antitone():
        for t, z in itertools.product(cons, repeat=2):
            if z <= t and not _table_leq(M, induced[t], induced[z]):
                return False, {"theta": t.to_json(), "zeta": z.to_json()}
        return True

    def lower_bound():
        for tab in tables:
            gamma = _cg(M, [(M.meet[x][y], tab[x][y]) for x in n for y in n])
            if not _table_leq(M, congruence_commutator_table(M, gamma), tab):
                return False, {"table": [list(r) for r in tab]}
        return True

    rep.claim("intersection_gives_join_of_tables", True, pairwise)
    rep.claim("larger_congruence_smaller_table", True, antitone)
    rep.claim("generated_congruence_table_is_lower_bound", bool(tables), lower_bound)
    return rep


def commutator_report(CL: CommutatorLattice) -> Report:
    """Every single-structure claim in one list."""
    rep = Report()
    for part in (radical_congruence_checks, frame_checks, residuation_checks, boolean_center_theory,
                 all_radical_checks):
        rep.extend(part(CL))
    rep.extend(commutator_grid_report(CL).checks)
    return rep


# names under which these checks are also exported
thecong_checks = radical_congruence_checks
commsofcgs_checks = induced_table_identity_checks
ourdavey_report = commutator_grid_report
allradical_checks = all_radical_checks
