"""Finite bounded lattices stored as dense order/meet/join tables.

Elements are the integers ``0..n-1``; labels exist only for display and I/O.
Subsets of the carrier are passed around as Python ints used as bitmasks,
which keeps the annihilator and congruence code fast on small carriers.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


class LatticeError(ValueError):
    """Base class for malformed lattice input."""


class NotALattice(LatticeError):
    def __init__(self, x, y, witness, kind="meet"):
        self.x, self.y, self.witness, self.kind = x, y, tuple(witness), kind
        bound = "lower" if kind == "meet" else "upper"
        super().__init__(
            f"{x!r} and {y!r} have no {kind}: maximal {bound} bounds {list(self.witness)!r}"
            if kind == "meet" else
            f"{x!r} and {y!r} have no {kind}: minimal {bound} bounds {list(self.witness)!r}")


class NoBounds(LatticeError):
    pass


class CyclicOrder(LatticeError):
    pass


# -- bitmask helpers ---------------------------------------------------------

def bits(mask: int):
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class FiniteLattice:
    """A finite bounded lattice.

    Build instances with :func:`build_lattice` or :meth:`from_leq`; both
    validate eagerly, so every method may assume the lattice laws.
    """

    def __init__(self, leq, meet, join, labels, bottom, top):
        self.n = len(leq)
        self.leq = leq
        self.meet = meet
        self.join = join
        self.labels = tuple(labels)
        self.bottom = bottom
        self.top = top
        self.down = tuple(mask_of(y for y in range(self.n) if leq[y][x]) for x in range(self.n))
        self.up = tuple(mask_of(y for y in range(self.n) if leq[x][y]) for x in range(self.n))
        self.full = (1 << self.n) - 1
        self._cache = {}

    # -- construction --------------------------------------------------------

    @classmethod
    def from_leq(cls, leq: Sequence[Sequence[bool]], labels: Sequence[str] | None = None):
        n = len(leq)
        if n == 0:
            raise NoBounds("empty carrier")
        leq = tuple(tuple(bool(v) for v in row) for row in leq)
        if labels is None:
            labels = default_labels(n)
        for x in range(n):
            if not leq[x][x]:
                raise LatticeError(f"order is not reflexive at {labels[x]!r}")
            for y in range(n):
                if x != y and leq[x][y] and leq[y][x]:
                    raise CyclicOrder(f"{labels[x]!r} and {labels[y]!r} are mutually below each other")
                if leq[x][y]:
                    for z in range(n):
                        if leq[y][z] and not leq[x][z]:
                            raise LatticeError("order is not transitive")
        bottoms = [x for x in range(n) if all(leq[x])]
        tops = [x for x in range(n) if all(leq[y][x] for y in range(n))]
        if not bottoms or not tops:
            raise NoBounds("no least element" if not bottoms else "no greatest element")
        down = [mask_of(y for y in range(n) if leq[y][x]) for x in range(n)]
        up = [mask_of(y for y in range(n) if leq[x][y]) for x in range(n)]
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                lower = down[x] & down[y]
                m = next((z for z in bits(lower) if down[z] == lower), None)
                if m is None:
                    maximal = [labels[z] for z in bits(lower) if up[z] & lower == 1 << z]
                    raise NotALattice(labels[x], labels[y], maximal, "meet")
                upper = up[x] & up[y]
                j = next((z for z in bits(upper) if up[z] == upper), None)
                if j is None:
                    minimal = [labels[z] for z in bits(upper) if down[z] & upper == 1 << z]
                    raise NotALattice(labels[x], labels[y], minimal, "join")
                meet[x][y] = meet[y][x] = m
                join[x][y] = join[y][x] = j
        return cls(leq, tuple(map(tuple, meet)), tuple(map(tuple, join)),
                   labels, bottoms[0], tops[0])

    # -- basic structure -----------------------------------------------------

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, labels={list(self.labels)})"

    def __eq__(self, other):
        return isinstance(other, FiniteLattice) and self.down == other.down

    def __hash__(self):
        return hash(self.down)

    def __len__(self):
        return self.n

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def names(self, mask_or_elements) -> list[str]:
        it = bits(mask_or_elements) if isinstance(mask_or_elements, int) else mask_or_elements
        return [self.labels[x] for x in sorted(it)]

    def join_of(self, mask: int) -> int:
        """Join of a subset given as a mask (bottom for the empty set)."""
        acc = self.bottom
        for x in bits(mask):
            acc = self.join[acc][x]
        return acc

    def meet_of(self, mask: int) -> int:
        acc = self.top
        for x in bits(mask):
            acc = self.meet[acc][x]
        return acc

    def is_down_set(self, mask: int) -> bool:
        return all(self.down[x] & ~mask == 0 for x in bits(mask))

    def is_ideal(self, mask: int) -> bool:
        """Nonempty down-set closed under binary joins (on a finite carrier: a principal ideal)."""
        if not mask:
            return False
        j = self.join_of(mask)
        return mask == self.down[j]

    def covers(self) -> list[tuple[int, int]]:
        """The Hasse diagram: pairs (x, y) with y covering x."""
        out = []
        for x in range(self.n):
            strict_up = self.up[x] & ~(1 << x)
            for y in bits(strict_up):
                between = strict_up & self.down[y] & ~(1 << y)
                if not between:
                    out.append((x, y))
        return out

    def upper_covers(self, x: int) -> list[int]:
        return [y for (a, y) in self.covers_by_lower[x]]

    @cached_property
    def covers_by_lower(self):
        table = [[] for _ in range(self.n)]
        for x, y in self.covers():
            table[x].append((x, y))
        return table

    def dual(self) -> "FiniteLattice":
        leq = tuple(tuple(self.leq[y][x] for y in range(self.n)) for x in range(self.n))
        return FiniteLattice(leq, self.join, self.meet, self.labels, self.top, self.bottom)

    def relabel(self, labels: Sequence[str]) -> "FiniteLattice":
        return FiniteLattice(self.leq, self.meet, self.join, labels, self.bottom, self.top)

    def induced(self, elements: Sequence[int], labels=None) -> "FiniteLattice":
        """Sublattice on ``elements`` (assumed closed under meet and join)."""
        pos = {x: i for i, x in enumerate(elements)}
        leq = tuple(tuple(self.leq[x][y] for y in elements) for x in elements)
        meet = tuple(tuple(pos[self.meet[x][y]] for y in elements) for x in elements)
        join = tuple(tuple(pos[self.join[x][y]] for y in elements) for x in elements)
        if labels is None:
            labels = [self.labels[x] for x in elements]
        s = mask_of(elements)
        return FiniteLattice(leq, meet, join, labels, pos[self.meet_of(s)], pos[self.join_of(s)])

    def to_json(self) -> dict:
        return {"labels": list(self.labels),
                "covers": [[self.labels[x], self.labels[y]] for x, y in self.covers()]}


def default_labels(n: int) -> list[str]:
    """0, a, b, ..., 1 for small carriers; numbered names past the alphabet."""
    if n == 1:
        return ["0"]
    inner = n - 2
    names = [chr(ord("a") + i) for i in range(inner)] if inner <= 26 else [f"x{i}" for i in range(inner)]
    return ["0", *names, "1"]


def build_lattice(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Lattice whose order is the reflexive-transitive closure of ``covers``.

    ``covers`` may name elements by label or by index.
    """
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        raise LatticeError("duplicate labels")
    pos = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)

    def resolve(v):
        if isinstance(v, int) and not isinstance(v, bool):
            if not 0 <= v < n:
                raise LatticeError(f"element index {v} out of range")
            return v
        if str(v) not in pos:
            raise LatticeError(f"unknown element {v!r}")
        return pos[str(v)]

    reach = [1 << x for x in range(n)]
    edges = [(resolve(a), resolve(b)) for a, b in covers]
    for a, b in edges:
        if a == b:
            raise CyclicOrder(f"self-loop at {labels[a]!r}")
    # Warshall-style closure over bitmasks
    for a, b in edges:
        reach[a] |= 1 << b
    for k in range(n):
        for x in range(n):
            if reach[x] >> k & 1:
                reach[x] |= reach[k]
    leq = [[bool(reach[x] >> y & 1) for y in range(n)] for x in range(n)]
    return FiniteLattice.from_leq(leq, labels)


def chain(n: int) -> FiniteLattice:
    return FiniteLattice.from_leq([[x <= y for y in range(n)] for x in range(n)])


def diamond(k: int = 3) -> FiniteLattice:
    """M_k: bottom, k pairwise incomparable atoms, top."""
    labels = default_labels(k + 2)
    covers = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    return build_lattice(labels, covers)


def pentagon() -> FiniteLattice:
    return build_lattice(["0", "a", "b", "c", "1"], [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])


def boolean_lattice(k: int) -> FiniteLattice:
    """The power set of a k-element set; labels are the subsets' bit strings."""
    n = 1 << k
    leq = [[x & ~y == 0 for y in range(n)] for x in range(n)]
    labels = ["0"] + [format(x, f"0{k}b") for x in range(1, n - 1)] + ["1"] if k else ["0"]
    return FiniteLattice.from_leq(leq, labels)


def divisor_lattice(m: int) -> FiniteLattice:
    divs = [d for d in range(1, m + 1) if m % d == 0]
    leq = [[b % a == 0 for b in divs] for a in divs]
    return FiniteLattice.from_leq(leq, [str(d) for d in divs])


# -- order properties ----------------------------------------------------------

def is_distributive(L: FiniteLattice) -> bool:
    meet, join, r = L.meet, L.join, range(L.n)
    return all(meet[x][join[y][z]] == join[meet[x][y]][meet[x][z]] for x in r for y in r for z in r)


def is_modular(L: FiniteLattice) -> bool:
    meet, join, r = L.meet, L.join, range(L.n)
    return all(join[x][meet[y][z]] == meet[join[x][y]][z]
               for x in r for z in r if L.leq[x][z] for y in r)


def _has_sublattice_like(L: FiniteLattice, pattern: FiniteLattice) -> bool:
    """Whether some 5-element subset is a sublattice isomorphic to ``pattern``."""
    target = canonical_form(pattern)[0]
    for sub in itertools.combinations(range(L.n), pattern.n):
        s = mask_of(sub)
        if all(s >> L.meet[x][y] & 1 and s >> L.join[x][y] & 1 for x in sub for y in sub):
            if canonical_form(L.induced(list(sub)))[0] == target:
                return True
    return False


def is_distributive_by_sublattices(L: FiniteLattice) -> bool:
    """Birkhoff's criterion: no M3 and no N5 sublattice (oracle for tests)."""
    return not (_has_sublattice_like(L, diamond(3)) or _has_sublattice_like(L, pentagon()))


def is_modular_by_sublattices(L: FiniteLattice) -> bool:
    return not _has_sublattice_like(L, pentagon())


@dataclass(frozen=True)
class Irreducibles:
    mi: frozenset
    smi: frozenset
    max: frozenset
    cp: frozenset


def irreducibles(L: FiniteLattice) -> Irreducibles:
    n = L.n
    mi = frozenset(x for x in range(n)
                   if all(L.meet[a][b] != x or x in (a, b) for a in range(n) for b in range(n)))
    smi = frozenset(x for x in range(n) if x != L.top and len(L.upper_covers(x)) == 1)
    coatoms = frozenset(x for x, y in L.covers() if y == L.top)
    return Irreducibles(mi, smi, coatoms, frozenset(range(n)))


def upper_cover(L: FiniteLattice, x: int) -> int:
    """x⁺ for a strictly meet-irreducible x."""
    (y,) = L.upper_covers(x)
    return y


def generated_ideal(L: FiniteLattice, elements: Iterable[int]) -> int:
    """Maximum of the ideal generated by ``elements``."""
    return L.join_of(mask_of(elements))


def generated_filter(L: FiniteLattice, elements: Iterable[int]) -> int:
    return L.meet_of(mask_of(elements))


# -- congruences ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class LatticeCongruence:
    """A partition of the carrier compatible with meet and join.

    ``block_of[x]`` is the block number of ``x``; blocks are numbered by their
    least element index, so equal congruences have equal ``block_of`` tuples.
    """

    lattice: FiniteLattice
    block_of: tuple

    @staticmethod
    def from_labels(L: FiniteLattice, block_of: Sequence[int]) -> "LatticeCongruence":
        return LatticeCongruence(L, _normalize(block_of))

    @cached_property
    def blocks(self) -> tuple:
        out = [0] * (max(self.block_of) + 1)
        for x, b in enumerate(self.block_of):
            out[b] |= 1 << x
        return tuple(out)

    def block_sets(self) -> list[frozenset]:
        return [frozenset(bits(b)) for b in self.blocks]

    def class_mask(self, x: int) -> int:
        return self.blocks[self.block_of[x]]

    def related(self, x: int, y: int) -> bool:
        return self.block_of[x] == self.block_of[y]

    def __eq__(self, other):
        return isinstance(other, LatticeCongruence) and self.block_of == other.block_of

    def __hash__(self):
        return hash(self.block_of)

    def __le__(self, other):
        """Inclusion as relations."""
        return all(other.block_of[x] == other.block_of[min(bits(self.blocks[b]))]
                   for x, b in enumerate(self.block_of))

    def __repr__(self):
        parts = ["{" + ",".join(self.lattice.names(b)) + "}" for b in self.blocks]
        return "Congruence(" + " ".join(parts) + ")"

    def meet(self, other: "LatticeCongruence") -> "LatticeCongruence":
        """Intersection of two congruences."""
        pairs = {}
        return LatticeCongruence(self.lattice, _normalize(
            [pairs.setdefault((a, b), len(pairs)) for a, b in zip(self.block_of, other.block_of)]))

    def is_identity(self) -> bool:
        return len(self.blocks) == self.lattice.n

    def to_json(self) -> list[list[str]]:
        return [self.lattice.names(b) for b in self.blocks]


def _normalize(block_of: Sequence) -> tuple:
    seen = {}
    return tuple(seen.setdefault(b, len(seen)) for b in block_of)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True


def congruence_generated(L: FiniteLattice, pairs: Iterable[tuple[int, int]]) -> LatticeCongruence:
    """Least congruence containing ``pairs``, by closing under both operations."""
    uf = _UnionFind(L.n)
    for x, y in pairs:
        uf.union(x, y)
    meet, join, r = L.meet, L.join, range(L.n)
    changed = True
    while changed:
        changed = False
        for x in r:
            root = uf.find(x)
            if root == x:
                continue
            mx, mr, jx, jr = meet[x], meet[root], join[x], join[root]
            for z in r:
                changed |= uf.union(mx[z], mr[z])
                changed |= uf.union(jx[z], jr[z])
    return LatticeCongruence(L, _normalize([uf.find(x) for x in r]))


def identity_congruence(L: FiniteLattice) -> LatticeCongruence:
    return LatticeCongruence(L, tuple(range(L.n)))


def total_congruence(L: FiniteLattice) -> LatticeCongruence:
    return LatticeCongruence(L, (0,) * L.n)


def congruence_join(a: LatticeCongruence, b: LatticeCongruence) -> LatticeCongruence:
    L = a.lattice
    uf = _UnionFind(L.n)
    for c in (a, b):
        for blk in c.blocks:
            first = (blk & -blk).bit_length() - 1
            for x in bits(blk):
                uf.union(first, x)
    # transitive closure of the union is already a congruence for lattices
    return LatticeCongruence(L, _normalize([uf.find(x) for x in range(L.n)]))


def enumerate_congruences(L: FiniteLattice) -> list[LatticeCongruence]:
    """All congruences: joins of principal congruences, closed under join."""
    if "congruences" in L._cache:
        return L._cache["congruences"]
    principal = {identity_congruence(L)}
    for x, y in L.covers():
        principal.add(congruence_generated(L, [(x, y)]))
    found = set(principal)
    frontier = list(found)
    basis = list(principal)
    while frontier:
        nxt = []
        for c in frontier:
            for p in basis:
                j = congruence_join(c, p)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    result = sorted(found, key=lambda c: (-len(c.blocks), c.block_of))
    L._cache["congruences"] = result
    return result


def set_partitions(n: int):
    """Restricted growth strings for all partitions of ``range(n)``."""
    if n == 0:
        yield ()
        return
    a = [0] * n

    def rec(i, m):
        if i == n:
            yield tuple(a)
            return
        for v in range(m + 2):
            a[i] = v
            yield from rec(i + 1, max(m, v))

    a[0] = 0
    yield from rec(1, 0)


def is_compatible(L: FiniteLattice, block_of: Sequence[int]) -> bool:
    r = range(L.n)
    for x in r:
        for y in r:
            if x < y and block_of[x] == block_of[y]:
                for z in r:
                    if block_of[L.meet[x][z]] != block_of[L.meet[y][z]]:
                        return False
                    if block_of[L.join[x][z]] != block_of[L.join[y][z]]:
                        return False
    return True


def enumerate_congruences_naive(L: FiniteLattice) -> list[LatticeCongruence]:
    """Oracle: filter every set partition of the carrier."""
    return [LatticeCongruence(L, p) for p in set_partitions(L.n) if is_compatible(L, p)]


@dataclass(frozen=True)
class Quotient:
    lattice: FiniteLattice
    proj: tuple          # element of L -> element of the quotient
    theta: LatticeCongruence

    def image(self, mask: int) -> int:
        return mask_of(self.proj[x] for x in bits(mask))

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, b in enumerate(self.proj) if mask >> b & 1)


def quotient_lattice(L: FiniteLattice, theta: LatticeCongruence) -> Quotient:
    if "quotients" not in L._cache:
        L._cache["quotients"] = {}
    cached = L._cache["quotients"].get(theta.block_of)
    if cached is not None:
        return cached
    blocks = theta.blocks
    reps = [(b & -b).bit_length() - 1 for b in blocks]
    k = len(blocks)
    bo = theta.block_of
    leq = [[bo[L.join[reps[i]][reps[j]]] == j for j in range(k)] for i in range(k)]
    meet = tuple(tuple(bo[L.meet[reps[i]][reps[j]]] for j in range(k)) for i in range(k))
    join = tuple(tuple(bo[L.join[reps[i]][reps[j]]] for j in range(k)) for i in range(k))
    labels = ["/".join(L.names(b)) if popcount(b) > 1 else L.labels[reps[i]] for i, b in enumerate(blocks)]
    Q = FiniteLattice(tuple(map(tuple, leq)), meet, join, labels, bo[L.bottom], bo[L.top])
    proj = tuple(bo)
    # the projection must be a bounded lattice morphism
    for x in range(L.n):
        for y in range(L.n):
            assert proj[L.meet[x][y]] == Q.meet[proj[x]][proj[y]]
            assert proj[L.join[x][y]] == Q.join[proj[x]][proj[y]]
    q = Quotient(Q, proj, theta)
    L._cache["quotients"][theta.block_of] = q
    return q


def class_extrema(L: FiniteLattice, theta: LatticeCongruence, x: int) -> tuple[int, int]:
    blk = theta.class_mask(x)
    return L.meet_of(blk), L.join_of(blk)


def direct_product(L1: FiniteLattice, L2: FiniteLattice) -> FiniteLattice:
    n1, n2 = L1.n, L2.n
    n = n1 * n2
    leq = tuple(tuple(L1.leq[a // n2][b // n2] and L2.leq[a % n2][b % n2] for b in range(n)) for a in range(n))
    meet = tuple(tuple(L1.meet[a // n2][b // n2] * n2 + L2.meet[a % n2][b % n2] for b in range(n)) for a in range(n))
    join = tuple(tuple(L1.join[a // n2][b // n2] * n2 + L2.join[a % n2][b % n2] for b in range(n)) for a in range(n))
    labels = [f"({p},{q})" for p in L1.labels for q in L2.labels]
    return FiniteLattice(leq, meet, join, labels, L1.bottom * n2 + L2.bottom, L1.top * n2 + L2.top)


def bounded_sublattices(L: FiniteLattice) -> list[tuple[FiniteLattice, tuple]]:
    """All sublattices containing both bounds, with their embeddings."""
    inner = [x for x in range(L.n) if x not in (L.bottom, L.top)]
    out = []
    for r in range(len(inner) + 1):
        for chosen in itertools.combinations(inner, r):
            elems = sorted({L.bottom, L.top, *chosen})
            s = mask_of(elems)
            if all(s >> L.meet[x][y] & 1 and s >> L.join[x][y] & 1 for x in elems for y in elems):
                out.append((L.induced(elems), tuple(elems)))
    return out


def is_0_regular(L: FiniteLattice) -> bool:
    zero_classes = [c.class_mask(L.bottom) for c in enumerate_congruences(L)]
    return len(set(zero_classes)) == len(zero_classes)


# -- canonical forms -------------------------------------------------------------

def canonical_form(L: FiniteLattice) -> tuple[tuple, tuple]:
    """Isomorphism-invariant code plus the relabelling that achieves it.

    The code lists, for each position of a linear extension, the set of
    earlier positions below it; the lexicographically least code over all
    linear extensions is returned. Only candidates producing the least next
    entry are explored, which keeps the search tiny for lattices up to 8.
    """
    n = L.n
    strict_down = [L.down[x] & ~(1 << x) for x in range(n)]
    best: list = [None, None]
    pos = [0] * n
    order: list[int] = []
    code: list[int] = []

    def rec(placed: int):
        k = len(order)
        if k == n:
            if best[0] is None or code < best[0]:
                best[0], best[1] = list(code), list(order)
            return
        cands = []
        for x in range(n):
            if not placed >> x & 1 and strict_down[x] & ~placed == 0:
                c = 0
                for y in bits(strict_down[x]):
                    c |= 1 << pos[y]
                cands.append((c, x))
        m = min(c for c, _ in cands)
        if best[0] is not None and code == best[0][:k] and m > best[0][k]:
            return
        for c, x in cands:
            if c != m:
                continue
            pos[x] = k
            order.append(x)
            code.append(c)
            rec(placed | 1 << x)
            order.pop()
            code.pop()

    rec(0)
    return tuple(best[0]), tuple(best[1])


def lattice_from_code(code: Sequence[int], labels=None) -> FiniteLattice:
    n = len(code)
    leq = [[x == y or bool(code[y] >> x & 1) for y in range(n)] for x in range(n)]
    return FiniteLattice.from_leq(leq, labels)


def canonical_lattice(L: FiniteLattice) -> FiniteLattice:
    return lattice_from_code(canonical_form(L)[0])


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return L1.n == L2.n and canonical_form(L1)[0] == canonical_form(L2)[0]
