"""Annihilators, the Boolean center and the Stone-type conditions on a finite lattice.

Six condition families are checked (five graded ones plus the ungraded
``IV``), each at three scopes for the annihilated subset: singletons, finite
subsets and arbitrary subsets. On a finite carrier the last two scopes
range over the same sets; they are still evaluated separately, and the
report checks that they agree.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable

from .lattice import FiniteLattice, bits, direct_product, is_distributive, mask_of
from .report import Report, first_failure


class Family(str, enum.Enum):
    C1 = "1"
    C2 = "2"
    C3 = "3"
    C4 = "4"
    C5 = "5"
    IV = "iv"


class Kappa(str, enum.Enum):
    ONE = "one"
    FINITE = "fin"
    ALL = "all"


@dataclass(frozen=True, order=True)
class ConditionId:
    family: Family
    kappa: Kappa | None = None

    def __post_init__(self):
        if (self.family is Family.IV) != (self.kappa is None):
            raise ValueError("IV takes no kappa; every other family needs one")

    def __str__(self):
        if self.kappa is None:
            return "(iv)"
        return f"({self.family.value})_{self.kappa.value}"

    @classmethod
    def parse(cls, family: str, kappa: str | None = None) -> "ConditionId":
        fam = Family(str(family).lower())
        if fam is Family.IV:
            return cls(fam)
        return cls(fam, Kappa(kappa or "one"))


GRADED = (Family.C1, Family.C2, Family.C3, Family.C4, Family.C5)
ALL_CONDITIONS = tuple(ConditionId(f, k) for f in GRADED for k in Kappa) + (ConditionId(Family.IV),)


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    witness: dict | None = None

    def __bool__(self):
        return self.holds


# -- annihilators --------------------------------------------------------------

@dataclass(frozen=True)
class AnnSet:
    """Ann(U) together with the subset U it came from."""

    lattice: FiniteLattice
    mask: int
    source: int

    @property
    def members(self) -> frozenset:
        return frozenset(bits(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __repr__(self):
        return "Ann({" + ",".join(self.lattice.names(self.source)) + "}) = {" + \
            ",".join(self.lattice.names(self.mask)) + "}"


def ann_masks(L: FiniteLattice) -> tuple:
    """ann[a] = {x : x ∧ a = 0} as masks."""
    got = L._cache.get("ann")
    if got is None:
        z = L.bottom
        got = tuple(mask_of(x for x in range(L.n) if L.meet[x][a] == z) for a in range(L.n))
        L._cache["ann"] = got
    return got


def ann_of(L: FiniteLattice, mask: int) -> int:
    """Ann of a subset given as a mask; the empty set annihilates to the full carrier."""
    ann = ann_masks(L)
    acc = L.full
    for u in bits(mask):
        acc &= ann[u]
        if acc == 1 << L.bottom:
            break
    return acc


def annihilator(L: FiniteLattice, elements: Iterable[int]) -> AnnSet:
    src = mask_of(elements)
    return AnnSet(L, ann_of(L, src), src)


def double_annihilator(L: FiniteLattice, elements: Iterable[int]) -> AnnSet:
    src = mask_of(elements)
    return AnnSet(L, ann_of(L, ann_of(L, src)), src)


@dataclass(frozen=True)
class AnnFamily:
    """All annihilators (mask -> one generating subset) and the principal sub-families."""

    sources: dict          # annihilator mask -> a subset mask producing it
    pann: frozenset        # {Ann(a)}
    p2ann: frozenset       # {Ann(Ann(a))}

    @property
    def all(self) -> frozenset:
        return frozenset(self.sources)


def all_annihilators(L: FiniteLattice) -> AnnFamily:
    got = L._cache.get("annfamily")
    if got is not None:
        return got
    ann = ann_masks(L)
    sources = {L.full: 0}
    for a in range(L.n):
        sources.setdefault(ann[a], 1 << a)
    frontier = list(sources)
    # Ann(U ∪ V) = Ann(U) ∩ Ann(V): closing under intersection with the
    # single-element annihilators reaches every Ann(U)
    while frontier:
        nxt = []
        for f in frontier:
            src = sources[f]
            for a in range(L.n):
                g = f & ann[a]
                if g not in sources:
                    sources[g] = src | 1 << a
                    nxt.append(g)
        frontier = nxt
    fam = AnnFamily(sources, frozenset(ann), frozenset(ann_of(L, m) for m in ann))
    L._cache["annfamily"] = fam
    return fam


def all_annihilators_brute(L: FiniteLattice) -> frozenset:
    """Oracle: Ann(U) for each of the 2^n subsets U."""
    ann = ann_masks(L)
    table = [L.full] * (1 << L.n)
    for s in range(1, 1 << L.n):
        low = s & -s
        table[s] = table[s ^ low] & ann[low.bit_length() - 1]
    return frozenset(table)


# -- Boolean center ------------------------------------------------------------

@dataclass(frozen=True)
class BooleanCenter:
    elements: frozenset
    complements: dict          # element -> tuple of all complements
    sublattice: bool
    boolean: bool              # a sublattice that is a Boolean lattice

    @property
    def mask(self) -> int:
        return mask_of(self.elements)

    def witness(self, e: int) -> int:
        return self.complements[e][0]


def boolean_center(L: FiniteLattice) -> BooleanCenter:
    got = L._cache.get("center")
    if got is not None:
        return got
    comps = {}
    for e in range(L.n):
        cs = tuple(f for f in range(L.n) if L.join[e][f] == L.top and L.meet[e][f] == L.bottom)
        if cs:
            comps[e] = cs
    elems = sorted(comps)
    s = mask_of(elems)
    sub = all(s >> L.meet[x][y] & 1 and s >> L.join[x][y] & 1 for x in elems for y in elems)
    boolean = sub and all(
        L.meet[x][L.join[y][z]] == L.join[L.meet[x][y]][L.meet[x][z]]
        for x in elems for y in elems for z in elems)
    got = BooleanCenter(frozenset(elems), comps, sub, boolean)
    L._cache["center"] = got
    return got


def ideal_center(L: FiniteLattice) -> frozenset:
    """Complemented members of Id(L), as masks, computed on the ideals themselves."""
    ideals = sorted({L.down[x] for x in range(L.n)})
    zero, full = 1 << L.bottom, L.full
    out = set()
    for i in ideals:
        for j in ideals:
            if i & j == zero and L.down[L.join_of(i | j)] == full:
                out.add(i)
                break
    return frozenset(out)


# -- condition checks ------------------------------------------------------------

def _scope(L: FiniteLattice, kappa: Kappa) -> list[tuple[int, int]]:
    """(U, Ann(U)) pairs covering every annihilator value in scope."""
    ann = ann_masks(L)
    if kappa is Kappa.ONE:
        return [(0, L.full)] + [(1 << a, ann[a]) for a in range(L.n)]
    fam = all_annihilators(L)
    return [(src, m) for m, src in sorted(fam.sources.items())]


def _principal_center_element(L: FiniteLattice, m: int, center: BooleanCenter):
    top = L.join_of(m)
    if L.down[top] == m and top in center.elements:
        return top
    return None


def _check_c1(L, kappa):
    center = boolean_center(L)
    for src, m in _scope(L, kappa):
        if _principal_center_element(L, m, center) is None:
            return ConditionResult(False, {"U": L.names(src), "annihilator": L.names(m)})
    return ConditionResult(True)


def _check_c2(L, kappa):
    stone = _check_c1(L, Kappa.ONE)
    if not stone:
        return ConditionResult(False, {"reason": "not Stone", **stone.witness})
    center = boolean_center(L)
    if not center.sublattice:
        elems = sorted(center.elements)
        for x, y in itertools.product(elems, repeat=2):
            if L.meet[x][y] not in center.elements or L.join[x][y] not in center.elements:
                return ConditionResult(False, {"reason": "center not a sublattice", "pair": L.names([x, y])})
    if not center.boolean:
        return ConditionResult(False, {"reason": "center not distributive"})
    return ConditionResult(True)


def p2ann_check(L: FiniteLattice) -> ConditionResult:
    """The double-annihilator condition; independent of the scope."""
    ann = ann_masks(L)
    dd = [ann_of(L, ann[a]) for a in range(L.n)]
    for a in range(L.n):
        if not L.is_ideal(dd[a]):
            return ConditionResult(False, {"reason": "Ann(Ann(a)) is not an ideal", "a": L.labels[a]})
    tops = [L.join_of(m) for m in dd]
    members = set(tops)
    if L.bottom not in members or L.top not in members:
        return ConditionResult(False, {"reason": "bounds of Id(L) missing"})
    elems = sorted(members)
    for x, y in itertools.product(elems, repeat=2):
        if L.meet[x][y] not in members or L.join[x][y] not in members:
            return ConditionResult(False, {"reason": "not a sublattice of Id(L)",
                                           "ideals": [L.names(L.down[x]), L.names(L.down[y])]})
    for x, y, z in itertools.product(elems, repeat=3):
        if L.meet[x][L.join[y][z]] != L.join[L.meet[x][y]][L.meet[x][z]]:
            return ConditionResult(False, {"reason": "not distributive",
                                           "ideals": [L.names(L.down[t]) for t in (x, y, z)]})
    for x in elems:
        if not any(L.meet[x][y] == L.bottom and L.join[x][y] == L.top for y in elems):
            return ConditionResult(False, {"reason": "not complemented", "ideal": L.names(L.down[x])})
    for a in range(L.n):
        for b in range(a, L.n):
            if tops[L.meet[a][b]] != L.meet[tops[a]][tops[b]] or tops[L.join[a][b]] != L.join[tops[a]][tops[b]]:
                return ConditionResult(False, {"reason": "a -> Ann(Ann(a)) is not a lattice morphism",
                                               "a": L.labels[a], "b": L.labels[b]})
    return ConditionResult(True)


def iv_check(L: FiniteLattice) -> ConditionResult:
    ann = ann_masks(L)
    for a in range(L.n):
        for b in range(a, L.n):
            lhs = ann[L.meet[a][b]]
            rhs = L.down[L.join_of(ann[a] | ann[b])]
            if lhs != rhs:
                return ConditionResult(False, {"a": L.labels[a], "b": L.labels[b],
                                               "Ann(a^b)": L.names(lhs), "generated": L.names(rhs)})
    return ConditionResult(True)


def _check_c4(L, kappa):
    first = iv_check(L)
    if not first:
        return first
    pann = set(ann_masks(L))
    for src, m in _scope(L, kappa):
        dd = ann_of(L, m)
        if dd not in pann:
            return ConditionResult(False, {"U": L.names(src), "Ann(Ann(U))": L.names(dd)})
    return ConditionResult(True)


def _check_c5(L, kappa):
    for src, m in _scope(L, kappa):
        if L.join_of(m | ann_of(L, m)) != L.top:
            return ConditionResult(False, {"U": L.names(src)})
    return ConditionResult(True)


def check_condition(L: FiniteLattice, c: ConditionId) -> ConditionResult:
    cache = L._cache.setdefault("verdicts", {})
    if c in cache:
        return cache[c]
    if c.family is Family.C1:
        r = _check_c1(L, c.kappa)
    elif c.family is Family.C2:
        r = _check_c2(L, c.kappa)
    elif c.family is Family.C3:
        r = p2ann_check(L)
    elif c.family is Family.C4:
        r = _check_c4(L, c.kappa)
    elif c.family is Family.C5:
        r = _check_c5(L, c.kappa)
    else:
        r = iv_check(L)
    cache[c] = r
    return r


def verdicts(L: FiniteLattice) -> dict:
    return {c: check_condition(L, c).holds for c in ALL_CONDITIONS}


def is_stone(L: FiniteLattice) -> bool:
    return check_condition(L, ConditionId(Family.C1, Kappa.ONE)).holds


def is_strongly_stone(L: FiniteLattice) -> bool:
    return check_condition(L, ConditionId(Family.C1, Kappa.ALL)).holds


@dataclass
class DaveyReport:
    verdicts: dict
    distributive: bool
    agree_per_kappa: dict = field(default_factory=dict)
    finite_equals_all: bool = True
    one_equals_finite: bool = True
    all_agree: bool = True

    @property
    def hypothesis_violated(self) -> bool:
        return not self.distributive

    @property
    def equivalent(self) -> bool:
        return all(self.agree_per_kappa.values())

    def to_json(self) -> dict:
        return {"distributive": self.distributive,
                "hypothesis_violated": self.hypothesis_violated,
                "verdicts": {str(c): v for c, v in self.verdicts.items()},
                "agree_per_kappa": {k.value: v for k, v in self.agree_per_kappa.items()},
                "finite_equals_all": self.finite_equals_all,
                "one_equals_finite": self.one_equals_finite,
                "all_agree": self.all_agree}


def davey_report(L: FiniteLattice) -> DaveyReport:
    v = verdicts(L)
    rep = DaveyReport(v, is_distributive(L))
    for k in Kappa:
        rep.agree_per_kappa[k] = len({v[ConditionId(f, k)] for f in GRADED}) == 1
    rep.finite_equals_all = all(v[ConditionId(f, Kappa.FINITE)] == v[ConditionId(f, Kappa.ALL)] for f in GRADED)
    rep.one_equals_finite = all(v[ConditionId(f, Kappa.ONE)] == v[ConditionId(f, Kappa.FINITE)] for f in GRADED)
    rep.all_agree = len(set(v.values())) == 1
    return rep


def davey_checks(L: FiniteLattice) -> Report:
    """The Davey equivalences as gated claims; distributivity is the hypothesis."""
    rep = davey_report(L)
    dist = rep.distributive
    grid = {str(c): x for c, x in rep.verdicts.items()}
    ck = Report()
    for k in Kappa:
        ck.claim(f"families_agree[{k.value}]", dist, (rep.agree_per_kappa[k], grid))
    ck.claim("finite_equals_all", True, (rep.finite_equals_all, grid))
    ck.claim("one_equals_finite", dist, (rep.one_equals_finite, grid))
    ck.claim("iv_agrees_with_families", dist, (rep.all_agree, grid))
    # outside distributive lattices the families may separate; record where
    ck.claim("families_agree_without_distributivity", not dist, (rep.all_agree, grid), asserted=False)
    return ck


def c5_instance(L: FiniteLattice, u: int) -> bool:
    """Ann(U) ∨ Ann(Ann(U)) generates the whole lattice."""
    m = ann_of(L, u)
    return L.join_of(m | ann_of(L, m)) == L.top


def product_preservation_checks(L1: FiniteLattice, L2: FiniteLattice) -> Report:
    """Conditions, centers and annihilators of L1 x L2 computed componentwise."""
    P = direct_product(L1, L2)
    n2 = L2.n
    a1, a2, ap = ann_masks(L1), ann_masks(L2), ann_masks(P)
    c1, c2 = boolean_center(L1).elements, boolean_center(L2).elements
    v1, v2, vp = verdicts(L1), verdicts(L2), verdicts(P)
    rep = Report()
    rep.claim("center_of_product", True,
              boolean_center(P).elements == frozenset(x * n2 + y for x in c1 for y in c2))

    def ann_ok(p):
        x, y = divmod(p, n2)
        return ap[p] == mask_of(i * n2 + j for i in bits(a1[x]) for j in bits(a2[y]))

    rep.claim("annihilator_of_product", True, lambda: first_failure(range(P.n), ann_ok))
    for c in ALL_CONDITIONS:
        tag = "iv" if c.kappa is None else f"c{c.family.value}[{c.kappa.value}]"
        rep.claim("product_condition_" + tag, True,
                  (vp[c] == (v1[c] and v2[c]), {"factors": [v1[c], v2[c]], "product": vp[c]}))
    return rep


def sublattice_c5_checks(L: FiniteLattice, elems) -> Report:
    """Condition (5) passing from a distributive lattice to a bounded sublattice."""
    elems = tuple(elems)
    M = L.induced(elems)
    dist = is_distributive(L)

    def embed(u):
        return mask_of(elems[i] for i in bits(u))

    def instance():
        ok, u = first_failure(range(1 << M.n), lambda u: not c5_instance(L, embed(u)) or c5_instance(M, u))
        return ok, None if ok else {"U": M.names(u)}

    def scoped(c):
        in_m = check_condition(M, c)
        return not check_condition(L, c).holds or in_m.holds, in_m.witness

    rep = Report()
    rep.claim("c5_instance_passes_to_sublattice", dist, instance)
    for k in Kappa:
        rep.claim(f"c5_passes_to_sublattice[{k.value}]", dist, lambda k=k: scoped(ConditionId(Family.C5, k)))
    return rep
