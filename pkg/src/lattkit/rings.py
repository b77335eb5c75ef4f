"""Finite commutative unitary rings.

Elements are indices ``0..n-1`` into explicit addition and multiplication
tables; subsets (ideals, annihilators) are int bitmasks, as for lattices.
The ideal lattice comes with the ideal product as its commutator, which is
how ring-level conditions are tied back to the lattice-level checks.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .commutator import (CommutatorLattice, commutator_annihilator_view, equiv_congruence,
                         reticulation, spectrum, validate_commutator)
from .conditions import (ALL_CONDITIONS, ConditionId, ConditionResult, Family, Kappa,
                         boolean_center, iv_check, verdicts)
from .lattice import FiniteLattice, LatticeCongruence, bits, mask_of, popcount, quotient_lattice
from .report import Report, first_failure

MAX_TABLE_RING_SIZE = 64
MAX_CONGRUENCE_RING_SIZE = 16


class NotARing(ValueError):
    def __init__(self, axiom: str, witness):
        super().__init__(f"ring axiom violated: {axiom} at {witness}")
        self.axiom = axiom
        self.witness = witness


class FiniteCommRing:
    """A finite commutative ring with identity, given by its operation tables.

    Use :func:`build_zn`, :func:`build_product` or :func:`build_table`; the
    constructor itself trusts its input.
    """

    def __init__(self, add, mul, zero: int, one: int, labels: Sequence[str] | None = None,
                 provenance: dict | None = None, factors: Sequence["FiniteCommRing"] = ()):
        self.n = len(add)
        self.add = tuple(tuple(r) for r in add)
        self.mul = tuple(tuple(r) for r in mul)
        self.zero = zero
        self.one = one
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.n))
        self.provenance = provenance or {"type": "table"}
        self.factors = tuple(factors)
        self.neg = tuple(self.add[x].index(zero) for x in range(self.n))
        self.full = (1 << self.n) - 1
        self._cache: dict = {}

    def __repr__(self):
        return f"FiniteCommRing({describe(self)})"

    def __len__(self):
        return self.n

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]

    def names(self, mask_or_elements) -> list[str]:
        if isinstance(mask_or_elements, int):
            mask_or_elements = bits(mask_or_elements)
        return [self.labels[x] for x in mask_or_elements]

    def index(self, label) -> int:
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"no element labelled {label!r}") from None

    @property
    def principal(self) -> tuple:
        """principal[x] = xR as a mask."""
        got = self._cache.get("principal")
        if got is None:
            got = tuple(mask_of(self.mul[x]) for x in range(self.n))
            self._cache["principal"] = got
        return got

    @property
    def ann(self) -> tuple:
        """ann[x] = {y : xy = 0} as a mask."""
        got = self._cache.get("ann")
        if got is None:
            got = tuple(mask_of(y for y in range(self.n) if self.mul[x][y] == self.zero)
                        for x in range(self.n))
            self._cache["ann"] = got
        return got

    def ideal_sum(self, a: int, b: int) -> int:
        out = 0
        bs = list(bits(b))
        for x in bits(a):
            row = self.add[x]
            for y in bs:
                out |= 1 << row[y]
        return out

    def generated_ideal(self, mask: int) -> int:
        acc = 1 << self.zero
        for g in bits(mask):
            if not acc >> g & 1:
                acc = self.ideal_sum(acc, self.principal[g])
        return acc

    def ideal_product(self, a: int, b: int) -> int:
        prods = 0
        bs = list(bits(b))
        for x in bits(a):
            row = self.mul[x]
            for y in bs:
                prods |= 1 << row[y]
        return self.generated_ideal(prods)

    def annihilator_mask(self, mask: int) -> int:
        acc = self.full
        for u in bits(mask):
            acc &= self.ann[u]
        return acc

    def to_json(self) -> dict:
        if self.provenance["type"] != "table":
            return dict(self.provenance)
        out = {"type": "table", "add": [list(r) for r in self.add], "mul": [list(r) for r in self.mul]}
        if self.labels != tuple(str(i) for i in range(self.n)):
            out["labels"] = list(self.labels)
        if self.zero != 0 or self.one != 1:
            out["zero"], out["one"] = self.zero, self.one
        if "name" in self.provenance:
            out["name"] = self.provenance["name"]
        return out


def describe(R: FiniteCommRing) -> str:
    p = R.provenance
    if p["type"] == "Zn":
        return f"Z{p['n']}"
    if p["type"] == "product":
        return " x ".join(describe(f) for f in R.factors)
    return p.get("name", f"table ring of order {R.n}")


# -- construction -------------------------------------------------------------------

def validate_ring(add, mul, zero: int, one: int) -> None:
    """Check every ring axiom over all triples; raise :class:`NotARing` on the first failure."""
    n = len(add)
    if n == 0:
        raise NotARing("non-empty carrier", None)
    for name, t in (("add", add), ("mul", mul)):
        if len(t) != n or any(len(r) != n or any(not 0 <= v < n for v in r) for r in t):
            raise NotARing(f"{name} is an n x n table over the carrier", name)
    if not (0 <= zero < n and 0 <= one < n):
        raise NotARing("identities lie in the carrier", (zero, one))
    rng = range(n)
    for x in rng:
        if add[zero][x] != x:
            raise NotARing("additive identity", x)
        if mul[one][x] != x:
            raise NotARing("multiplicative identity", x)
        if zero not in add[x]:
            raise NotARing("additive inverse", x)
        for y in rng:
            if add[x][y] != add[y][x]:
                raise NotARing("additive commutativity", (x, y))
            if mul[x][y] != mul[y][x]:
                raise NotARing("multiplicative commutativity", (x, y))
    for x in rng:
        ax, mx = add[x], mul[x]
        for y in rng:
            axy, mxy = add[ax[y]], mul[mx[y]]
            ay, my = add[y], mul[y]
            for z in rng:
                if axy[z] != ax[ay[z]]:
                    raise NotARing("additive associativity", (x, y, z))
                if mxy[z] != mx[my[z]]:
                    raise NotARing("multiplicative associativity", (x, y, z))
                if mx[ay[z]] != add[mx[y]][mx[z]]:
                    raise NotARing("distributivity", (x, y, z))
    if n > 1 and zero == one:
        raise NotARing("one differs from zero", zero)


def build_table(add, mul, zero: int = 0, one: int = 1, labels: Sequence[str] | None = None,
                name: str | None = None) -> FiniteCommRing:
    n = len(add)
    if n > MAX_TABLE_RING_SIZE:
        raise NotARing(f"table rings are limited to {MAX_TABLE_RING_SIZE} elements", n)
    if labels is not None and len(set(map(str, labels))) != n:
        raise NotARing("one distinct label per element", list(labels))
    validate_ring(add, mul, zero, one)
    prov = {"type": "table"}
    if name:
        prov["name"] = name
    return FiniteCommRing(add, mul, zero, one, labels and [str(s) for s in labels], prov)


def build_zn(n: int) -> FiniteCommRing:
    if n < 1:
        raise NotARing("n >= 1", n)
    rng = range(n)
    add = [[(i + j) % n for j in rng] for i in rng]
    mul = [[(i * j) % n for j in rng] for i in rng]
    return FiniteCommRing(add, mul, 0, 1 % n, provenance={"type": "Zn", "n": n})


def build_product(rings: Sequence[FiniteCommRing]) -> FiniteCommRing:
    """Componentwise product; element index is the mixed-radix code of its coordinates."""
    rings = list(rings)
    if not rings:
        raise NotARing("at least one factor", rings)
    coords = list(itertools.product(*(range(r.n) for r in rings)))
    index = {c: i for i, c in enumerate(coords)}

    def table(op):
        return [[index[tuple(getattr(r, op)[a][b] for r, a, b in zip(rings, x, y))] for y in coords]
                for x in coords]

    labels = ["(" + ",".join(r.labels[a] for r, a in zip(rings, c)) + ")" for c in coords]
    zero = index[tuple(r.zero for r in rings)]
    one = index[tuple(r.one for r in rings)]
    prov = {"type": "product", "factors": [r.to_json() for r in rings]}
    return FiniteCommRing(table("add"), table("mul"), zero, one, labels, prov, rings)


def structure_constant_ring(p: int, basis: Sequence[str], products: dict, name: str) -> FiniteCommRing:
    """The Z_p-algebra with the given basis (first element the identity).

    ``products[(i, j)]`` is the coefficient vector of basis_i * basis_j for
    i <= j > 0; missing pairs multiply to zero.  The tables are then built
    and validated like any table ring.
    """
    d = len(basis)
    vecs = list(itertools.product(range(p), repeat=d))
    index = {v: i for i, v in enumerate(vecs)}
    struct = [[(0,) * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        struct[0][i] = struct[i][0] = tuple(int(k == i) for k in range(d))
    for (i, j), v in products.items():
        struct[i][j] = struct[j][i] = tuple(v)

    def times(u, v):
        acc = [0] * d
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        for k, c in enumerate(struct[i][j]):
                            acc[k] = (acc[k] + a * b * c) % p
        return tuple(acc)

    def label(v):
        terms = []
        for c, b in zip(v, basis):
            if c:
                terms.append(b if b != "1" and c == 1 else (str(c) if b == "1" else f"{c}{b}"))
        return "+".join(terms) or "0"

    add = [[index[tuple((a + b) % p for a, b in zip(u, v))] for v in vecs] for u in vecs]
    mul = [[index[times(u, v)] for v in vecs] for u in vecs]
    one = index[tuple(int(k == 0) for k in range(d))]
    return build_table(add, mul, 0, one, [label(v) for v in vecs], name)


def hand_rings() -> list[FiniteCommRing]:
    """Small non-cyclic rings given by explicit tables."""
    return [
        structure_constant_ring(2, ["1", "x"], {(1, 1): (1, 1)}, "F4"),
        structure_constant_ring(2, ["1", "x"], {}, "F2[x]/(x^2)"),
        structure_constant_ring(2, ["1", "x"], {(1, 1): (0, 1)}, "F2[x]/(x^2+x)"),
        structure_constant_ring(2, ["1", "x", "y"], {}, "F2[x,y]/(x,y)^2"),
        structure_constant_ring(2, ["1", "x", "x^2"], {(1, 1): (0, 0, 1)}, "F2[x]/(x^3)"),
        structure_constant_ring(3, ["1", "x"], {}, "F3[x]/(x^2)"),
    ]


# -- ideals ------------------------------------------------------------------------------

@dataclass(frozen=True)
class RingIdeal:
    ring: FiniteCommRing = field(repr=False, compare=False)
    mask: int

    @property
    def members(self) -> frozenset:
        return frozenset(bits(self.mask))

    def __contains__(self, x):
        return bool(self.mask >> x & 1)

    def __len__(self):
        return popcount(self.mask)

    @property
    def generators(self) -> list[int]:
        """A generating set, chosen greedily: each step adds the element that enlarges the span most."""
        R, acc, gens = self.ring, 1 << self.ring.zero, []
        while acc != self.mask:
            x = max(bits(self.mask & ~acc), key=lambda y: (popcount(R.ideal_sum(acc, R.principal[y])), y == R.one, -y))
            gens.append(x)
            acc = R.ideal_sum(acc, R.principal[x])
        return gens

    @property
    def label(self) -> str:
        return "(" + ",".join(sorted(self.ring.names(self.generators or [self.ring.zero]))) + ")"

    def to_json(self) -> list[str]:
        return self.ring.names(self.mask)


def is_ideal_mask(R: FiniteCommRing, mask: int) -> bool:
    if not mask >> R.zero & 1:
        return False
    members = list(bits(mask))
    return all(mask >> R.add[x][y] & 1 for x in members for y in members) and \
        all(mask >> R.mul[r][x] & 1 for x in members for r in range(R.n))


@dataclass(frozen=True, eq=False)
class IdealLattice:
    """Id(R): ideals ordered by inclusion, with the ideal product as commutator."""

    ring: FiniteCommRing
    ideals: tuple           # RingIdeal, sorted by size then mask
    index: dict             # mask -> position
    commutator: CommutatorLattice

    @property
    def lattice(self) -> FiniteLattice:
        return self.commutator.base

    def of(self, mask: int) -> int:
        return self.index[mask]

    def __len__(self):
        return len(self.ideals)


def _ideal_masks(R: FiniteCommRing) -> list[int]:
    """Close {0} under I -> I + xR; every ideal of a finite ring is reached."""
    seen = {1 << R.zero}
    frontier = list(seen)
    while frontier:
        nxt = []
        for I in frontier:
            for x in range(R.n):
                if I >> x & 1:
                    continue
                J = R.ideal_sum(I, R.principal[x])
                if J not in seen:
                    seen.add(J)
                    nxt.append(J)
        frontier = nxt
    return sorted(seen, key=lambda m: (popcount(m), m))


def enumerate_ideals(R: FiniteCommRing) -> IdealLattice:
    got = R._cache.get("ideals")
    if got is not None:
        return got
    masks = _ideal_masks(R)
    index = {m: i for i, m in enumerate(masks)}
    ideals = tuple(RingIdeal(R, m) for m in masks)
    leq = [[a & ~b == 0 for b in masks] for a in masks]
    L = FiniteLattice.from_leq(leq, [I.label for I in ideals])
    comm = [[index[R.ideal_product(a, b)] for b in masks] for a in masks]
    got = IdealLattice(R, ideals, index, validate_commutator(L, comm))
    R._cache["ideals"] = got
    return got


def enumerate_ideals_naive(R: FiniteCommRing) -> list[int]:
    """Oracle: filter all subsets of the carrier."""
    if R.n > 12:
        raise ValueError("the all-subsets ideal oracle is limited to 12 elements")
    return sorted((m for m in range(1 << R.n) if is_ideal_mask(R, m)), key=lambda m: (popcount(m), m))


# -- annihilators, primes, radicals ----------------------------------------------------------

def ring_annihilator(R: FiniteCommRing, elements: Iterable[int] | int) -> RingIdeal:
    mask = elements if isinstance(elements, int) else mask_of(elements)
    return RingIdeal(R, R.annihilator_mask(mask))


def ring_annihilator_family(R: FiniteCommRing) -> dict:
    """Every Ann(U), mapped to one subset U producing it."""
    got = R._cache.get("annfamily")
    if got is not None:
        return got
    sources = {R.full: 0}
    for a in range(R.n):
        sources.setdefault(R.ann[a], 1 << a)
    frontier = list(sources)
    while frontier:
        nxt = []
        for f in frontier:
            for a in range(R.n):
                g = f & R.ann[a]
                if g not in sources:
                    sources[g] = sources[f] | 1 << a
                    nxt.append(g)
        frontier = nxt
    R._cache["annfamily"] = sources
    return sources


def prime_ideals(R: FiniteCommRing) -> frozenset:
    """Prime elements of the ideal lattice under the ideal product."""
    IL = enumerate_ideals(R)
    return frozenset(IL.ideals[p] for p in spectrum(IL.commutator).spec)


def prime_ideals_elementwise(R: FiniteCommRing) -> frozenset:
    """Proper ideals P with ab in P forcing a in P or b in P."""
    IL = enumerate_ideals(R)
    out = []
    for I in IL.ideals:
        m = I.mask
        if m == R.full:
            continue
        if all(m >> a & 1 or m >> b & 1 or not m >> R.mul[a][b] & 1
               for a in range(R.n) for b in range(a, R.n)):
            out.append(I)
    return frozenset(out)


def radical_ideal(R: FiniteCommRing, ideal: RingIdeal | int) -> RingIdeal:
    mask = ideal.mask if isinstance(ideal, RingIdeal) else ideal
    acc = R.full
    for P in prime_ideals(R):
        if mask & ~P.mask == 0:
            acc &= P.mask
    return RingIdeal(R, acc)


def nilpotents(R: FiniteCommRing) -> int:
    out = 0
    for x in range(R.n):
        p, seen = x, set()
        while p not in seen and p != R.zero:
            seen.add(p)
            p = R.mul[p][x]
        if p == R.zero:
            out |= 1 << x
    return out


def is_semiprime(R: FiniteCommRing) -> bool:
    """The radical of the zero ideal is zero."""
    return radical_ideal(R, 1 << R.zero).mask == 1 << R.zero


def has_no_nonzero_nilpotents(R: FiniteCommRing) -> bool:
    return nilpotents(R) == 1 << R.zero


# -- idempotents -------------------------------------------------------------------------------

@dataclass(frozen=True)
class IdempotentAlgebra:
    """E(R) with e ∧ f = ef, e ∨ f = 1 - (1-e)(1-f) and ¬e = 1 - e."""

    ring: FiniteCommRing = field(repr=False)
    elements: tuple

    def meet(self, e: int, f: int) -> int:
        return self.ring.mul[e][f]

    def complement(self, e: int) -> int:
        return self.ring.sub(self.ring.one, e)

    def join(self, e: int, f: int) -> int:
        R = self.ring
        return self.complement(R.mul[self.complement(e)][self.complement(f)])

    def leq(self, e: int, f: int) -> bool:
        return self.ring.mul[e][f] == e

    def to_json(self) -> list[str]:
        return self.ring.names(self.elements)


def idempotents(R: FiniteCommRing) -> IdempotentAlgebra:
    got = R._cache.get("idempotents")
    if got is None:
        got = IdempotentAlgebra(R, tuple(x for x in range(R.n) if R.mul[x][x] == x))
        R._cache["idempotents"] = got
    return got


def idempotent_algebra_checks(E: IdempotentAlgebra) -> Report:
    R, els = E.ring, E.elements
    S = set(els)
    pairs = list(itertools.product(els, repeat=2))
    triples = list(itertools.product(els, repeat=3))
    rep = Report()
    rep.claim("idempotents_closed", True, lambda: first_failure(
        pairs, lambda p: {E.meet(*p), E.join(*p), E.complement(p[0])} <= S))
    rep.claim("idempotent_bounds", True, R.zero in S and R.one in S)
    rep.claim("idempotent_lattice_laws", True, lambda: first_failure(
        triples, lambda t: E.join(t[0], t[1]) == E.join(t[1], t[0])
        and E.join(t[0], E.join(t[1], t[2])) == E.join(E.join(t[0], t[1]), t[2])
        and E.meet(t[0], E.join(t[0], t[1])) == t[0]
        and E.join(t[0], E.meet(t[0], t[1])) == t[0]))
    rep.claim("idempotent_distributivity", True, lambda: first_failure(
        triples, lambda t: E.meet(t[0], E.join(t[1], t[2])) == E.join(E.meet(t[0], t[1]), E.meet(t[0], t[2]))))
    rep.claim("idempotent_complements", True, lambda: first_failure(
        els, lambda e: E.meet(e, E.complement(e)) == R.zero and E.join(e, E.complement(e)) == R.one))
    rep.claim("idempotent_order_is_divisibility", True, lambda: first_failure(
        pairs, lambda p: E.leq(*p) == (E.join(*p) == p[1])))
    return rep


# -- Baer-type conditions ------------------------------------------------------------------------

def _scope(R: FiniteCommRing, kappa: Kappa) -> list[tuple[int, int]]:
    if kappa is Kappa.ONE:
        return [(0, R.full)] + [(1 << a, R.ann[a]) for a in range(R.n)]
    return [(src, m) for m, src in sorted(ring_annihilator_family(R).items())]


def _idempotent_generated(R: FiniteCommRing) -> dict:
    """eR -> e for idempotent e; distinct idempotents generate distinct ideals."""
    return {R.principal[e]: e for e in idempotents(R).elements}


def _check_r1(R, kappa):
    gen = _idempotent_generated(R)
    for src, m in _scope(R, kappa):
        if m not in gen:
            return ConditionResult(False, {"U": R.names(src), "annihilator": R.names(m)})
    return ConditionResult(True)


def _check_r2(R, kappa):
    baer = _check_r1(R, Kappa.ONE)
    if not baer:
        return ConditionResult(False, {"reason": "not Baer", **baer.witness})
    bad = idempotent_algebra_checks(idempotents(R)).failures()
    if bad:
        return ConditionResult(False, {"reason": "idempotents are not a Boolean algebra", "claim": bad[0].claim})
    # completeness of every order is automatic for a finite Boolean algebra
    return ConditionResult(True)


def _double_annihilator_family(R: FiniteCommRing) -> set:
    return {R.annihilator_mask(m) for m in ring_annihilator_family(R)}


def _check_r3(R):
    IL = enumerate_ideals(R)
    fam = _double_annihilator_family(R)
    zero, full = 1 << R.zero, R.full
    if zero not in fam or full not in fam:
        return ConditionResult(False, {"reason": "bounds of Id(R) missing"})
    members = sorted(fam, key=lambda m: (popcount(m), m))
    for a, b in itertools.product(members, repeat=2):
        if a & b not in fam or R.ideal_sum(a, b) not in fam:
            return ConditionResult(False, {"reason": "not a sublattice of Id(R)",
                                           "ideals": [R.names(a), R.names(b)]})
    for a, b, c in itertools.product(members, repeat=3):
        if a & R.ideal_sum(b, c) != R.ideal_sum(a & b, a & c):
            return ConditionResult(False, {"reason": "not distributive",
                                           "ideals": [R.names(a), R.names(b), R.names(c)]})
    for a in members:
        if not any(a & b == zero and R.ideal_sum(a, b) == full for b in members):
            return ConditionResult(False, {"reason": "not complemented", "ideal": R.names(a)})
    masks = [I.mask for I in IL.ideals]
    dd = {m: R.annihilator_mask(R.annihilator_mask(m)) for m in masks}
    for a, b in itertools.combinations(masks, 2):
        if dd[a & b] != dd[a] & dd[b] or dd[R.ideal_sum(a, b)] != R.ideal_sum(dd[a], dd[b]):
            return ConditionResult(False, {"reason": "I -> Ann(Ann(I)) is not a lattice morphism",
                                           "ideals": [R.names(a), R.names(b)]})
    return ConditionResult(True)


def _check_riv(R):
    masks = [I.mask for I in enumerate_ideals(R).ideals]
    for a, b in itertools.combinations_with_replacement(masks, 2):
        lhs = R.annihilator_mask(a & b)
        rhs = R.ideal_sum(R.annihilator_mask(a), R.annihilator_mask(b))
        if lhs != rhs:
            return ConditionResult(False, {"I": R.names(a), "J": R.names(b),
                                           "Ann(I∩J)": R.names(lhs), "Ann(I)+Ann(J)": R.names(rhs)})
    return ConditionResult(True)


def _check_r4(R, kappa):
    first = _check_riv(R)
    if not first:
        return first
    # the finite-subset clause holds with S = Ann(U), which is finite here
    return ConditionResult(True)


def _check_r5(R, kappa):
    for src, m in _scope(R, kappa):
        if R.ideal_sum(m, R.annihilator_mask(m)) != R.full:
            return ConditionResult(False, {"U": R.names(src), "annihilator": R.names(m)})
    return ConditionResult(True)


def check_ring_condition(R: FiniteCommRing, c: ConditionId) -> ConditionResult:
    cache = R._cache.setdefault("verdicts", {})
    if c in cache:
        return cache[c]
    if c.family is Family.C1:
        r = _check_r1(R, c.kappa)
    elif c.family is Family.C2:
        r = _check_r2(R, c.kappa)
    elif c.family is Family.C3:
        r = _check_r3(R)
    elif c.family is Family.C4:
        r = _check_r4(R, c.kappa)
    elif c.family is Family.C5:
        r = _check_r5(R, c.kappa)
    else:
        r = _check_riv(R)
    cache[c] = r
    return r


def ring_verdicts(R: FiniteCommRing) -> dict:
    return {c: check_ring_condition(R, c).holds for c in ALL_CONDITIONS}


def is_baer(R: FiniteCommRing) -> bool:
    return check_ring_condition(R, ConditionId(Family.C1, Kappa.ONE)).holds


def is_strongly_baer(R: FiniteCommRing) -> bool:
    return check_ring_condition(R, ConditionId(Family.C1, Kappa.ALL)).holds


# -- reticulation and congruences ------------------------------------------------------------

def _radical_masks(R: FiniteCommRing) -> list[int]:
    """Radical of each ideal of Id(R), from the elementwise primes."""
    primes = [P.mask for P in prime_ideals_elementwise(R)]
    out = []
    for I in enumerate_ideals(R).ideals:
        acc = R.full
        for p in primes:
            if I.mask & ~p == 0:
                acc &= p
        out.append(acc)
    return out


def same_radical_congruence(R: FiniteCommRing) -> LatticeCongruence:
    IL = enumerate_ideals(R)
    rad = _radical_masks(R)
    return LatticeCongruence.from_labels(IL.lattice, [IL.of(m) for m in rad])


def reticulation_ring(R: FiniteCommRing) -> FiniteLattice:
    """Id(R) modulo having the same radical."""
    return quotient_lattice(enumerate_ideals(R).lattice, same_radical_congruence(R)).lattice


def _close_partition(R: FiniteCommRing, pairs) -> tuple:
    parent = list(range(R.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = list(pairs)
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        for z in range(R.n):
            queue.append((R.add[x][z], R.add[y][z]))
            queue.append((R.mul[x][z], R.mul[y][z]))
    roots, out = {}, []
    for x in range(R.n):
        out.append(roots.setdefault(find(x), len(roots)))
    return tuple(out)


def ring_congruences(R: FiniteCommRing) -> list[tuple]:
    """Every congruence of (R, +, ·) as a normalized block labelling.

    Principal congruences come from closing one pair under translation and
    multiplication; every congruence is a join of principal ones.
    """
    if R.n > MAX_CONGRUENCE_RING_SIZE:
        raise ValueError(f"ring congruences are enumerated for at most {MAX_CONGRUENCE_RING_SIZE} elements")
    principal = {_close_partition(R, [(x, y)]) for x in range(R.n) for y in range(x + 1, R.n)}
    identity = tuple(range(R.n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for t in frontier:
            for p in principal:
                j = _partition_join(R.n, t, p)
                if j not in seen:
                    seen.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(seen)


def _partition_join(n: int, a: tuple, b: tuple) -> tuple:
    pairs = [(x, y) for x in range(n) for y in range(x + 1, n) if a[x] == a[y] or b[x] == b[y]]
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for x, y in pairs:
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    roots, out = {}, []
    for x in range(n):
        out.append(roots.setdefault(find(x), len(roots)))
    return tuple(out)


def ideal_to_congruence(R: FiniteCommRing, mask: int) -> tuple:
    """x ~ y iff x - y lies in the ideal."""
    roots, out = {}, []
    for x in range(R.n):
        rep = next(y for y in range(R.n) if mask >> R.sub(x, y) & 1)
        out.append(roots.setdefault(rep, len(roots)))
    return tuple(out)


def _refines(a: tuple, b: tuple) -> bool:
    return all(b[x] == b[y] for x in range(len(a)) for y in range(x + 1, len(a)) if a[x] == a[y])


@dataclass
class CorrespondenceReport:
    ideals: int
    congruences: int
    checks: Report

    @property
    def ok(self) -> bool:
        return self.checks.ok

    def to_json(self) -> dict:
        return {"ideals": self.ideals, "congruences": self.congruences, "checks": self.checks.to_json()}


def ideal_congruence_correspondence(R: FiniteCommRing) -> CorrespondenceReport:
    IL = enumerate_ideals(R)
    cons = ring_congruences(R)
    masks = [I.mask for I in IL.ideals]
    image = [ideal_to_congruence(R, m) for m in masks]
    rep = Report()
    rep.claim("ideal_congruence_bijection", True,
              (sorted(set(image)) == cons and len(set(image)) == len(masks),
               {"ideals": len(masks), "congruences": len(cons)}))
    pairs = list(itertools.product(range(len(masks)), repeat=2))
    rep.claim("ideal_congruence_order_isomorphism", True, lambda: first_failure(
        pairs, lambda p: (masks[p[0]] & ~masks[p[1]] == 0) == _refines(image[p[0]], image[p[1]])))
    by_partition = {t: i for i, t in enumerate(image)}
    rep.claim("ideal_congruence_lattice_isomorphism", True, lambda: first_failure(
        pairs, lambda p: by_partition.get(_partition_join(R.n, image[p[0]], image[p[1]]))
        == IL.of(R.ideal_sum(masks[p[0]], masks[p[1]]))))
    rep.claim("zero_class_recovers_ideal", True, lambda: first_failure(
        cons, lambda t: ideal_to_congruence(R, mask_of(x for x in range(R.n) if t[x] == t[R.zero])) == t))
    return CorrespondenceReport(len(masks), len(cons), rep)


# -- the bridge to the ideal lattice -------------------------------------------------------------

@dataclass
class BaerBridgeReport:
    ring: str
    semiprime: bool
    ring_verdicts: dict
    ideal_verdicts: dict              # annihilators taken with the meet of Id(R)
    ideal_product_verdicts: dict      # annihilators taken with the ideal product
    checks: Report = field(default_factory=Report)

    @property
    def ok(self) -> bool:
        return self.checks.ok

    def to_json(self) -> dict:
        return {"ring": self.ring, "semiprime": self.semiprime,
                "verdicts": {str(c): {"ring": self.ring_verdicts[c], "ideals": self.ideal_verdicts[c],
                                      "ideals_product_annihilators": self.ideal_product_verdicts[c]}
                             for c in ALL_CONDITIONS},
                "checks": self.checks.to_json()}


def _sample_subsets(R: FiniteCommRing) -> list[int]:
    if R.n <= 10:
        return list(range(1 << R.n))
    out = {0, *ring_annihilator_family(R).values()}
    out.update(1 << a | 1 << b for a in range(R.n) for b in range(a, R.n))
    return sorted(out)


def baer_bridge_report(R: FiniteCommRing) -> BaerBridgeReport:
    IL = enumerate_ideals(R)
    L, CL = IL.lattice, IL.commutator
    masks = [I.mask for I in IL.ideals]
    zero = 1 << R.zero
    semi = is_semiprime(R)
    rv, lv, pv = ring_verdicts(R), verdicts(L), verdicts(commutator_annihilator_view(CL))
    rep = BaerBridgeReport(describe(R), semi, rv, lv, pv)
    ck = rep.checks
    iv = ConditionId(Family.IV)

    # structure
    ck.claim("semiprime_criteria_agree", True, semi == has_no_nonzero_nilpotents(R))
    ck.claim("prime_ideals_are_commutator_primes", True, prime_ideals(R) == prime_ideals_elementwise(R))
    ck.claim("ideal_lattice_operations", True, lambda: first_failure(
        itertools.product(range(len(masks)), repeat=2),
        lambda p: masks[L.meet[p[0]][p[1]]] == masks[p[0]] & masks[p[1]]
        and masks[L.join[p[0]][p[1]]] == R.ideal_sum(masks[p[0]], masks[p[1]])))
    ck.claim("annihilators_are_ideals", True, lambda: first_failure(
        ring_annihilator_family(R), lambda m: m in IL.index))
    subsets = _sample_subsets(R)
    spans = {u: R.generated_ideal(u) for u in subsets}
    ck.claim("annihilator_of_generated_ideal", True, lambda: first_failure(
        subsets, lambda u: R.annihilator_mask(u) == R.annihilator_mask(spans[u])))
    # S = U itself is a finite subset of the ideal it generates
    ck.claim("annihilators_finitely_generated", True, lambda: first_failure(
        subsets, lambda u: u & ~spans[u] == 0))

    # annihilators in Id(R) against ring annihilators
    prod_view = commutator_annihilator_view(CL)
    pann, mann = prod_view._cache["ann"], [
        mask_of(j for j in range(len(masks)) if L.meet[i][j] == L.bottom) for i in range(len(masks))]

    def down(m):
        return L.down[IL.of(m)]

    def double(ann_table, i):
        acc = L.full
        for j in bits(ann_table[i]):
            acc &= ann_table[j]
        return acc

    ring_ann = [R.annihilator_mask(m) for m in masks]
    ring_dd = [R.annihilator_mask(a) for a in ring_ann]
    idx = range(len(masks))

    def over_ideals(test):
        ok, i = first_failure(idx, test)
        return ok, None if ok else {"ideal": IL.ideals[i].label}

    ck.claim("ideal_annihilator_is_principal", True, lambda: over_ideals(
        lambda i: pann[i] == down(ring_ann[i]) and double(pann, i) == down(ring_dd[i])))
    ck.claim("ideal_meet_annihilator_is_principal", semi, lambda: over_ideals(
        lambda i: mann[i] == down(ring_ann[i]) and double(mann, i) == down(ring_dd[i])))
    ck.claim("ideal_meet_annihilator_is_principal_unconditional", True, lambda: over_ideals(
        lambda i: mann[i] == down(ring_ann[i])), asserted=False)
    ring_fam = set(ring_annihilator_family(R))
    id_fam = {pann[i] for i in idx}
    id_dd = {double(pann, i) for i in idx}
    ck.claim("annihilator_family_order_isomorphism", True,
             ({down(m) for m in ring_fam} == id_fam and len(id_fam) == len(ring_fam),
              {"ring": len(ring_fam), "ideals": len(id_fam)}))
    rdd = _double_annihilator_family(R)
    ck.claim("double_annihilator_family_order_isomorphism", True,
             ({down(m) for m in rdd} == id_dd and len(id_dd) == len(rdd),
              {"ring": len(rdd), "ideals": len(id_dd)}))
    ck.claim("annihilator_forms_agree", semi, (lv == pv, _disagreements(lv, pv)))

    # the equivalence grid
    ck.claim("ring_conditions_agree", semi, (len(set(rv.values())) == 1, _grid(rv)))
    ck.claim("ideal_conditions_agree", semi, (len(set(lv.values())) == 1, _grid(lv)))
    ck.claim("baer_iff_strongly_baer", semi, is_baer(R) == is_strongly_baer(R))
    ret = reticulation_ring(R)
    ret_iv = iv_check(ret).holds

    def bridge(c, ideal_side):
        return rv[c] == ideal_side[c], {"ring": rv[c], "ideals": ideal_side[c]}

    for k in Kappa:
        tag = f"[{k.value}]"

        def cid(f, kk=k):
            return ConditionId(f, kk)

        ck.claim("c1_bridge" + tag, semi, all(rv[cid(Family.C1)] == lv[cid(Family.C1, m)] for m in Kappa))
        ck.claim("c2_bridge" + tag, semi, bridge(cid(Family.C2), lv))
        ck.claim("c3_bridge" + tag, True, bridge(cid(Family.C3), pv))
        ck.claim("c3_bridge_meet_annihilators" + tag, semi, bridge(cid(Family.C3), lv))
        ck.claim("c3_bridge_meet_annihilators_unconditional" + tag, True, bridge(cid(Family.C3), lv),
                 asserted=False)
        ck.claim("c4_reduces_to_iv" + tag, semi, rv[cid(Family.C4)] == rv[iv])
        ck.claim("c4_bridge" + tag, semi, (rv[cid(Family.C4)] == ret_iv, {"ring": rv[cid(Family.C4)],
                                                                          "reticulation_iv": ret_iv}))
        ck.claim("c5_bridge" + tag, semi, all(rv[cid(Family.C5)] == lv[cid(Family.C5, m)] for m in Kappa))
    ck.claim("iv_bridge", True, bridge(iv, pv))
    ck.claim("iv_bridge_meet_annihilators", semi, bridge(iv, lv))
    ck.claim("iv_bridge_meet_annihilators_unconditional", True, bridge(iv, lv), asserted=False)

    # idempotents against the center of Id(R)
    E = idempotents(R)
    ck.claim("idempotents_form_boolean_algebra", True, idempotent_algebra_checks(E).ok)
    center = boolean_center(L)
    gen = [IL.of(R.principal[e]) for e in E.elements]
    ck.claim("idempotent_ideals_are_ideal_center", semi,
             (set(gen) == set(center.elements), {"idempotents": E.to_json(), "center": L.names(center.mask)}))
    pos = {e: g for e, g in zip(E.elements, gen)}
    ck.claim("idempotent_map_is_boolean_isomorphism", semi, lambda: (
        len(set(gen)) == len(gen) and first_failure(
            itertools.product(E.elements, repeat=2),
            lambda p: pos[E.meet(*p)] == L.meet[pos[p[0]]][pos[p[1]]]
            and pos[E.join(*p)] == L.join[pos[p[0]]][pos[p[1]]]
            and pos[E.complement(p[0])] in center.complements.get(pos[p[0]], ()))[0]))
    ck.claim("ideal_meets_own_annihilator_trivially", semi, lambda: first_failure(
        idx, lambda i: masks[i] & ring_ann[i] == zero))
    ck.claim("subset_meets_own_annihilator_trivially", semi, lambda: first_failure(
        subsets, lambda u: u & R.annihilator_mask(u) & ~zero == 0))
    gens = _idempotent_generated(R)
    ck.claim("complementary_annihilators_idempotent_generated", semi, lambda: first_failure(
        ring_fam, lambda m: R.ideal_sum(m, R.annihilator_mask(m)) != R.full or m in gens))

    # reticulation
    ck.claim("reticulation_matches_commutator", True,
             same_radical_congruence(R) == equiv_congruence(CL).congruence
             and reticulation(CL).n == ret.n)

    # products
    if R.factors:
        ck.claim("ideals_of_product_are_products", True, lambda: _product_ideals(R, IL))
        ck.claim("product_baer_iff_factors_baer", all(is_semiprime(f) for f in R.factors),
                 is_baer(R) == all(is_baer(f) for f in R.factors))
    return rep


def _product_ideals(R: FiniteCommRing, IL: IdealLattice):
    """Id(R1 x ... x Rk) consists exactly of the products I1 x ... x Ik, ordered componentwise."""
    coords = list(itertools.product(*(range(f.n) for f in R.factors)))
    parts = [[I.mask for I in enumerate_ideals(f).ideals] for f in R.factors]
    expected = set()
    for combo in itertools.product(*parts):
        expected.add(mask_of(i for i, c in enumerate(coords)
                             if all(m >> x & 1 for m, x in zip(combo, c))))
    got = set(IL.index)
    return got == expected, {"product_ideals": len(expected), "ideals": len(got)}


def _grid(v: dict) -> dict:
    return {str(c): x for c, x in v.items()}


def _disagreements(a: dict, b: dict) -> list[str]:
    return [str(c) for c in ALL_CONDITIONS if a[c] != b[c]]


def ring_report(R: FiniteCommRing) -> Report:
    """Every claim about R in one report."""
    rep = Report(baer_bridge_report(R).checks)
    rep.extend(idempotent_algebra_checks(idempotents(R)))
    if R.n <= MAX_CONGRUENCE_RING_SIZE:
        rep.extend(ideal_congruence_correspondence(R).checks)
    return rep
