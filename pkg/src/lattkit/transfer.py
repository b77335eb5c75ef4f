"""Moving annihilators, Boolean centers and the Stone-type conditions along a quotient M -> M/θ.

Every claim is recorded with its hypothesis so that vacuous passes stay
visible.  Claims flagged ``asserted=False`` are logged only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .conditions import (ALL_CONDITIONS, GRADED, ConditionId, Family, Kappa, all_annihilators,
                         ann_of, boolean_center, ideal_center, is_stone, is_strongly_stone, verdicts)
from .lattice import FiniteLattice, LatticeCongruence, bits, is_distributive, quotient_lattice
from .report import Report

SUBSET_LIMIT = 10


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TransferContext:
    M: FiniteLattice
    theta: LatticeCongruence
    quotient: FiniteLattice
    proj: tuple

    def image(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.proj[x]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for x, b in enumerate(self.proj):
            if mask >> b & 1:
                out |= 1 << x
        return out

    def class_max(self, x: int) -> int:
        return self.M.join_of(self.theta.class_mask(x))

    @cached_property
    def zero_trivial(self) -> bool:
        return self.theta.class_mask(self.M.bottom) == 1 << self.M.bottom

    @cached_property
    def one_trivial(self) -> bool:
        return self.theta.class_mask(self.M.top) == 1 << self.M.top

    @cached_property
    def center_is_class_max(self) -> bool:
        """e = max(e/θ) for every central e."""
        return all(self.class_max(e) == e for e in boolean_center(self.M).elements)

    def side_condition(self, e: int) -> bool:
        return self.class_max(e) == e or self.M.down[e] in all_annihilators(self.M).sources

    @cached_property
    def side_condition_all(self) -> bool:
        return all(self.side_condition(e) for e in boolean_center(self.M).elements)

    def to_json(self) -> dict:
        return {"lattice": self.M.to_json(), "congruence": self.theta.to_json()}


def make_context(M: FiniteLattice, theta: LatticeCongruence) -> TransferContext:
    q = quotient_lattice(M, theta)
    return TransferContext(M, theta, q.lattice, q.proj)


def zero_class_trivial(ctx: TransferContext) -> bool:
    return ctx.zero_trivial


def one_class_trivial(ctx: TransferContext) -> bool:
    return ctx.one_trivial


def _subsets(L: FiniteLattice):
    if L.n <= SUBSET_LIMIT:
        return range(1 << L.n)
    fam = all_annihilators(L)
    return sorted({0, *fam.sources.values(), *(1 << a for a in range(L.n))})


def _names(L, mask):
    return L.names(mask)


# -- annihilators across the quotient ------------------------------------------------

def _ann_checks(ctx: TransferContext, rep: Report):
    M, Q = ctx.M, ctx.quotient
    subsets = _subsets(M)
    z0 = ctx.zero_trivial

    def included():
        for u in subsets:
            if ctx.image(ann_of(M, u)) & ~ann_of(Q, ctx.image(u)):
                return False, {"U": _names(M, u)}
        return True

    def membership():
        for u in subsets:
            a, qa = ann_of(M, u), ann_of(Q, ctx.image(u))
            if ctx.preimage(qa) != a or ctx.preimage(ann_of(Q, qa)) != ann_of(M, a):
                return False, {"U": _names(M, u)}
        return True

    def exact():
        for u in subsets:
            a, qa = ann_of(M, u), ann_of(Q, ctx.image(u))
            if ctx.image(a) != qa or ctx.image(ann_of(M, a)) != ann_of(Q, qa):
                return False, {"U": _names(M, u)}
        return True

    def inclusion():
        family = sorted(all_annihilators(M).all)
        for u in subsets:
            for a in family:
                if (ctx.image(u) & ~ctx.image(a) == 0) != (u & ~a == 0):
                    return False, {"U": _names(M, u), "annihilator": _names(M, a)}
        for a in family:
            for b in family:
                if (ctx.image(a) == ctx.image(b)) != (a == b):
                    return False, {"annihilators": [_names(M, a), _names(M, b)]}
        return True

    def class_closed():
        for u in subsets:
            a = ann_of(M, u)
            for x in bits(a):
                if ctx.theta.class_mask(x) & ~a:
                    return False, {"U": _names(M, u), "x": M.labels[x]}
        return True

    rep.claim("ann_image_included", True, included)
    rep.claim("ann_membership_reflected", z0, membership)
    rep.claim("ann_image_exact", z0, exact)
    rep.claim("ann_inclusion_reflected", z0, inclusion)
    rep.claim("ann_closed_under_classes", z0, class_closed)


def verify_ann_quotient(ctx: TransferContext) -> Report:
    """Annihilators of M and of M/θ correspond exactly when 0/θ = {0}."""
    if not ctx.zero_trivial:
        raise PreconditionViolated("the class of 0 is not a singleton")
    rep = Report()
    _ann_checks(ctx, rep)
    return rep


def _ann_families(ctx: TransferContext, rep: Report):
    M, Q = ctx.M, ctx.quotient
    z0 = ctx.zero_trivial
    qdist = is_distributive(Q)
    fm, fq = all_annihilators(M), all_annihilators(Q)

    def ideals_and_join_reduction():
        for src, a in ((s, m) for m, s in fm.sources.items()):
            if not M.is_ideal(a):
                return False, {"U": _names(M, src), "annihilator": _names(M, a)}
        for u in _subsets(M):
            if ann_of(M, u) != ann_of(M, M.down[M.join_of(u)]):
                return False, {"U": _names(M, u)}
        return True

    def principal():
        if fm.all != fm.pann:
            extra = sorted(fm.all - fm.pann)[0]
            return False, {"annihilator": _names(M, extra)}
        for u in _subsets(M):
            a = ann_of(M, u)
            if a != ann_of(M, 1 << M.join_of(u)) or M.down[M.join_of(a)] != a:
                return False, {"U": _names(M, u)}
        return True

    def order_isos():
        for name, pm, pq in (("all", fm.all, fq.all), ("principal", fm.pann, fq.pann),
                             ("double", fm.p2ann, fq.p2ann)):
            imgs = {a: ctx.image(a) for a in pm}
            if set(imgs.values()) != set(pq) or len(set(imgs.values())) != len(pm):
                return False, {"family": name}
            for a in pm:
                for b in pm:
                    if (a & ~b == 0) != (imgs[a] & ~imgs[b] == 0):
                        return False, {"family": name, "pair": [_names(M, a), _names(M, b)]}
        return True

    def ideal_reflected():
        for u in _subsets(M):
            a, qa = ann_of(M, u), ann_of(Q, ctx.image(u))
            if M.is_ideal(a) != Q.is_ideal(qa) or M.is_ideal(ann_of(M, a)) != Q.is_ideal(ann_of(Q, qa)):
                return False, {"U": _names(M, u)}
        return True

    def families_ideal_reflected():
        for name, pm, pq in (("all", fm.all, fq.all), ("principal", fm.pann, fq.pann),
                             ("double", fm.p2ann, fq.p2ann)):
            if all(map(M.is_ideal, pm)) != all(map(Q.is_ideal, pq)):
                return False, {"family": name}
        return True

    def meet_join_reflected():
        # the binary (iv)-shaped identity, reflected along the quotient
        ann_m = [ann_of(M, 1 << a) for a in range(M.n)]
        ann_q = [ann_of(Q, 1 << a) for a in range(Q.n)]
        for a in range(M.n):
            for b in range(a, M.n):
                if not (M.is_ideal(ann_m[a]) and M.is_ideal(ann_m[b])):
                    continue
                lhs = ann_m[M.meet[a][b]] == M.down[M.join_of(ann_m[a] | ann_m[b])]
                pa, pb = ctx.proj[a], ctx.proj[b]
                rhs = ann_q[Q.meet[pa][pb]] == Q.down[Q.join_of(ann_q[pa] | ann_q[pb])]
                if lhs != rhs:
                    return False, {"a": M.labels[a], "b": M.labels[b]}
        return True

    rep.claim("ann_ideals_when_quotient_distributive", z0 and qdist, ideals_and_join_reduction)
    rep.claim("ann_principal_when_quotient_distributive", z0 and qdist, principal)
    rep.claim("ann_family_order_isomorphisms", z0, order_isos)
    rep.claim("ann_ideal_membership_reflected", z0, ideal_reflected)
    rep.claim("ann_families_ideal_reflected", z0, families_ideal_reflected)
    rep.claim("meet_ann_join_reflected", z0, meet_join_reflected, asserted=False)


# -- class maxima and central elements --------------------------------------------------

def _center_checks(ctx: TransferContext, rep: Report):
    M, Q = ctx.M, ctx.quotient
    z0 = ctx.zero_trivial
    cm, cq = boolean_center(M), boolean_center(Q)
    fam = all_annihilators(M)
    qdist = is_distributive(Q)

    def order_reflection():
        for e in range(M.n):
            is_max = ctx.class_max(e) == e
            reflects = all((Q.leq[ctx.proj[x]][ctx.proj[e]]) == M.leq[x][e] for x in range(M.n))
            if is_max != reflects:
                return False, {"e": M.labels[e]}
            if ctx.image(M.down[e]) != Q.down[ctx.proj[e]]:
                return False, {"e": M.labels[e], "reason": "(e]/θ differs from (e/θ]"}
            if is_max:
                for u in _subsets(M):
                    if (ctx.image(u) & ~ctx.image(M.down[e]) == 0) != (u & ~M.down[e] == 0):
                        return False, {"e": M.labels[e], "U": _names(M, u)}
        return True

    qualifying = [e for e in range(M.n) if ctx.side_condition(e)]

    def principal_ann_reflected():
        for e in qualifying:
            de = M.down[e]
            for a in fam.all:
                if (ctx.image(de) == ctx.image(a)) != (de == a):
                    return False, {"e": M.labels[e], "annihilator": _names(M, a)}
        return True

    rep.claim("class_max_order_reflection", True, order_reflection)
    rep.claim("principal_ann_reflected", z0 and bool(qualifying), principal_ann_reflected)

    def complement_ann():
        for e in sorted(cm.elements):
            if not ctx.side_condition(e):
                continue
            f = cm.witness(e)
            if M.down[e] != ann_of(M, 1 << f):
                return False, {"e": M.labels[e], "complement": M.labels[f]}
        return True

    rep.claim("central_principal_is_complement_ann", z0 and qdist and cm.boolean, complement_ann)

    principal_central = z0 and cm.boolean and all(
        M.down[e] == ann_of(M, 1 << cm.witness(e)) for e in cm.elements)
    icenter = ideal_center(M)
    downs = frozenset(M.down[e] for e in cm.elements)

    def ideal_center_principal():
        if icenter != downs:
            return False, {"ideal_center": [_names(M, i) for i in sorted(icenter)]}
        if not downs <= fam.pann <= fam.all:
            return False, {"reason": "central ideals are not all principal annihilators"}
        return True

    rep.claim("ideal_center_is_central_principal", principal_central, ideal_center_principal)
    rep.claim("stone_iff_pann_is_ideal_center", principal_central,
              lambda: is_stone(M) == (fam.pann == icenter))
    rep.claim("strongly_stone_iff_ann_is_ideal_center", principal_central,
              lambda: is_strongly_stone(M) == (fam.all == icenter))

    image = frozenset(ctx.proj[e] for e in cm.elements)
    blp = image == cq.elements
    injective = len(image) == len(cm.elements)
    zero_meets = ctx.theta.class_mask(M.bottom) & cm.mask == 1 << M.bottom
    one_meets = ctx.theta.class_mask(M.top) & cm.mask == 1 << M.top

    rep.claim("center_maps_into_center", True, image <= cq.elements)
    rep.claim("center_injectivity_tests", cm.boolean and cq.boolean,
              lambda: (injective == zero_meets == one_meets,
                       {"injective": injective, "zero_class": zero_meets, "one_class": one_meets}))
    rep.claim("lifting_transports_boolean_center", blp and cm.boolean, cq.boolean)
    rep.claim("injective_projection_lifts_boolean_center", injective and cq.boolean, cm.boolean)

    def trivial_bounds():
        if not blp:
            return False, {"reason": "no lifting"}
        for x in range(M.n):
            if (ctx.proj[x] in cq.elements) != (x in cm.elements):
                return False, {"x": M.labels[x]}
        if cm.boolean and not (cq.boolean and injective):
            return False, {"reason": "not an isomorphism"}
        return True

    rep.claim("trivial_bound_classes_give_lifting", z0 and ctx.one_trivial, trivial_bounds)
    rep.claim("class_max_center_injective", ctx.center_is_class_max, injective)
    rep.claim("class_max_center_isomorphism", z0 and ctx.one_trivial and ctx.center_is_class_max,
              lambda: blp and cm.boolean == cq.boolean and (not cm.boolean or injective))


def blp_check(ctx: TransferContext) -> dict:
    cm, cq = boolean_center(ctx.M), boolean_center(ctx.quotient)
    image = frozenset(ctx.proj[e] for e in cm.elements)
    blp = image == cq.elements
    injective = len(image) == len(cm.elements)
    return {"blp": blp, "injective": injective, "isomorphism": blp and injective and cm.boolean}


# -- the conditions ------------------------------------------------------------------------

def _condition_checks(ctx: TransferContext, rep: Report, vm: dict, vq: dict):
    z0, z1 = ctx.zero_trivial, ctx.one_trivial
    bool_m = boolean_center(ctx.M).boolean
    qdist = is_distributive(ctx.quotient)

    def c(f, k=None):
        return ConditionId(f, k)

    for k in Kappa:
        tag = f"[{k.value}]"
        one, two = c(Family.C1, k), c(Family.C2, k)
        three, four, five = c(Family.C3, k), c(Family.C4, k), c(Family.C5, k)
        w = {f.value: {"M": vm[x], "quotient": vq[x]} for f, x in
             ((Family.C1, one), (Family.C2, two), (Family.C3, three), (Family.C4, four), (Family.C5, five))}
        rep.claim("c1_descends" + tag, z0, not vm[one] or vq[one], w["1"])
        rep.claim("c1_equivalent" + tag, z0 and z1 and ctx.side_condition_all, vm[one] == vq[one], w["1"])
        rep.claim("c2_descends" + tag, z0 and z1, not vm[two] or vq[two], w["2"])
        rep.claim("c2_equivalent_class_max" + tag, z0 and z1 and ctx.center_is_class_max, vm[two] == vq[two], w["2"])
        rep.claim("c2_equivalent_side" + tag, z0 and z1 and bool_m and ctx.side_condition_all,
                  vm[two] == vq[two], w["2"])
        rep.claim("c3_equivalent" + tag, z0, vm[three] == vq[three], w["3"])
        rep.claim("c4_equivalent" + tag, z0, vm[four] == vq[four], w["4"])
        rep.claim("c5_descends" + tag, True, not vm[five] or vq[five], w["5"])
        rep.claim("c5_equivalent" + tag, z0 and z1, vm[five] == vq[five], w["5"])

    lifted = z0 and z1 and (ctx.center_is_class_max or (bool_m and ctx.side_condition_all)) and qdist
    for k in Kappa:
        vals = {f.value: vm[c(f, k)] for f in GRADED}
        rep.claim(f"families_agree_on_source[{k.value}]", lifted, (len(set(vals.values())) == 1, vals))
    rep.claim("all_conditions_agree_on_source", lifted,
              (len({vm[x] for x in ALL_CONDITIONS}) == 1, {str(x): vm[x] for x in ALL_CONDITIONS}))

    gate = z0 and qdist
    for k in Kappa:
        rep.claim(f"c3_iff_c5_on_source[{k.value}]", gate,
                  vm[c(Family.C3, k)] == vm[c(Family.C5, k)], asserted=False)
    rep.claim("c3_iff_c5_on_source_across_kappa", gate,
              len({vm[c(Family.C3, k)] for k in Kappa} | {vm[c(Family.C5, k)] for k in Kappa}) == 1,
              asserted=False)


@dataclass
class TransferReport:
    ctx: TransferContext
    source: dict
    target: dict
    checks: Report = field(default_factory=Report)
    blp: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.checks.ok

    def to_json(self) -> dict:
        return {"zero_class_trivial": self.ctx.zero_trivial,
                "one_class_trivial": self.ctx.one_trivial,
                "verdicts": {str(c): {"M": self.source[c], "quotient": self.target[c]} for c in ALL_CONDITIONS},
                "blp": self.blp,
                "checks": self.checks.to_json()}


def transfer_report(ctx: TransferContext) -> TransferReport:
    vm, vq = verdicts(ctx.M), verdicts(ctx.quotient)
    rep = TransferReport(ctx, vm, vq, Report(), blp_check(ctx))
    _ann_checks(ctx, rep.checks)
    _ann_families(ctx, rep.checks)
    _center_checks(ctx, rep.checks)
    _condition_checks(ctx, rep.checks, vm, vq)
    return rep
