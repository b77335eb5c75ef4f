"""Exhaustive generators: lattices up to isomorphism, commutator tables, the ring corpus."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

from .lattice import (FiniteLattice, bits, canonical_form, enumerate_congruences, is_distributive,
                      lattice_from_code, mask_of, quotient_lattice)

MAX_LATTICE_SIZE = 8
MAX_TABLE_LATTICE_SIZE = 5


class SizeTooLarge(ValueError):
    pass


# -- lattices ------------------------------------------------------------------

def _natural_posets(m: int) -> Iterator[list[int]]:
    """Naturally labelled posets on m points, as strict down-set masks.

    Point i picks a down-closed subset of {0..i-1} as its strict down-set,
    which yields each naturally labelled poset exactly once.
    """
    down: list[int] = []

    def rec(i):
        if i == m:
            yield list(down)
            return
        for s in range(1 << i):
            if all(down[y] & ~s == 0 for y in bits(s)):
                down.append(s)
                yield from rec(i + 1)
                down.pop()

    yield from rec(0)


def _bounded_is_lattice(n: int, strict_down: list[int]) -> bool:
    """Whether the poset on 0..n-1 (0 least, n-1 greatest) has all binary joins."""
    down = [strict_down[x] | 1 << x for x in range(n)]
    up = [mask_of(y for y in range(n) if down[y] >> x & 1) for x in range(n)]
    for x in range(1, n - 1):
        for y in range(x + 1, n - 1):
            ub = up[x] & up[y]
            if not any(up[z] == ub for z in bits(ub)):
                return False
    return True


def lattice_codes(n: int) -> list[tuple]:
    """Sorted canonical codes of all n-element lattices."""
    if not 1 <= n <= MAX_LATTICE_SIZE:
        raise SizeTooLarge(f"lattice enumeration supports 1..{MAX_LATTICE_SIZE}, got {n}")
    if n == 1:
        return [(0,)]
    if n == 2:
        return [(0, 1)]
    inner = n - 2
    codes = set()
    full_inner = (1 << inner) - 1
    for poset in _natural_posets(inner):
        # shift interior points up by one and insert the bounds
        strict = [0] + [(d << 1) | 1 for d in poset] + [((full_inner << 1) | 1)]
        if not _bounded_is_lattice(n, strict):
            continue
        leq = [[x == y or bool(strict[y] >> x & 1) for y in range(n)] for x in range(n)]
        L = FiniteLattice.from_leq(leq)
        codes.add(canonical_form(L)[0])
    return sorted(codes)


@dataclass
class InstanceStream:
    """A named, deterministic, re-iterable stream of instances."""

    kind: str
    params: dict
    canonical: bool
    factory: Callable[[], Iterator] = field(repr=False)

    def __iter__(self):
        return iter(self.factory())


def enumerate_lattices(n: int, canonical: bool = True) -> InstanceStream:
    """All n-element lattices; up to isomorphism when ``canonical``.

    The non-canonical stream lists every labelling of each isomorphism type
    with 0 first and 1 last (distinct order tables), which is mainly useful
    for checking that results do not depend on the labelling.
    """
    codes = lattice_codes(n)

    def canon():
        for c in codes:
            yield lattice_from_code(c)

    def labelled():
        for c in codes:
            base = lattice_from_code(c)
            seen = set()
            inner = list(range(1, n - 1)) if n > 2 else []
            for perm in itertools.permutations(inner):
                order = [0, *perm, n - 1] if n > 1 else [0]
                leq = tuple(tuple(base.leq[order[i]][order[j]] for j in range(n)) for i in range(n))
                if leq not in seen:
                    seen.add(leq)
                    yield FiniteLattice.from_leq(leq)

    return InstanceStream("lattices", {"n": n}, canonical, canon if canonical else labelled)


def lattices_up_to(n: int, distributive_only: bool = False) -> list[FiniteLattice]:
    out = []
    for k in range(1, n + 1):
        for L in enumerate_lattices(k):
            if not distributive_only or is_distributive(L):
                out.append(L)
    return out


def lattice_count_oracle(n: int) -> int:
    """Oracle: filter all relations on n points, dedupe by brute-force isomorphism.

    Every finite poset has a linear extension, so filtering relations that
    only point from lower to higher index loses nothing.
    """
    if n <= 2:
        return 1
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    seen = set()
    perms = list(itertools.permutations(range(n)))
    for chosen in range(1 << len(pairs)):
        leq = [[i == j for j in range(n)] for i in range(n)]
        for k, (i, j) in enumerate(pairs):
            if chosen >> k & 1:
                leq[i][j] = True
        if any(leq[i][j] and leq[j][k] and not leq[i][k]
               for i in range(n) for j in range(n) for k in range(n)):
            continue
        try:
            FiniteLattice.from_leq(leq)
        except ValueError:
            continue
        key = min(tuple(leq[p[i]][p[j]] for i in range(n) for j in range(n)) for p in perms)
        seen.add(key)
    return len(seen)


# -- commutator tables -----------------------------------------------------------

def enumerate_commutator_tables(L: FiniteLattice) -> InstanceStream:
    """All valid commutator tables on L, by backtracking over the upper triangle.

    Cells are filled in a fixed order; after each assignment, every binary
    join-distributivity constraint whose cells are all known is checked.
    """
    if L.n > MAX_TABLE_LATTICE_SIZE:
        raise SizeTooLarge(f"commutator tables are enumerated for |L| <= {MAX_TABLE_LATTICE_SIZE}")
    n, z = L.n, L.bottom
    cells = [(x, y) for x in range(n) for y in range(x, n) if x != z and y != z]
    index = {c: i for i, c in enumerate(cells)}

    def cell(x, y):
        if x == z or y == z:
            return None
        return index[(min(x, y), max(x, y))]

    # constraint: [x, y v w] = [x,y] v [x,w]; listed with the cells it needs
    constraints_at = [[] for _ in cells]
    for x in range(n):
        for y in range(n):
            for w in range(y, n):
                needed = [cell(x, L.join[y][w]), cell(x, y), cell(x, w)]
                known = [c for c in needed if c is not None]
                if not known:
                    continue
                constraints_at[max(known)].append((x, y, w))
    candidates = [[v for v in range(n) if L.leq[v][L.meet[x][y]]] for x, y in cells]

    def tables():
        table = [[z] * n for _ in range(n)]

        def ok(i):
            for x, y, w in constraints_at[i]:
                if table[x][L.join[y][w]] != L.join[table[x][y]][table[x][w]]:
                    return False
            return True

        def rec(i):
            if i == len(cells):
                yield tuple(tuple(r) for r in table)
                return
            x, y = cells[i]
            for v in candidates[i]:
                table[x][y] = table[y][x] = v
                if ok(i):
                    yield from rec(i + 1)
            table[x][y] = table[y][x] = z

        yield from rec(0)

    return InstanceStream("commutators", {"lattice": L.labels}, True, tables)


def commutator_tables_naive(L: FiniteLattice) -> list[tuple]:
    """Oracle: every symmetric meet-bounded table, filtered by the axioms."""
    from .commutator import commutator_violations
    n = L.n
    cells = [(x, y) for x in range(n) for y in range(x, n)]
    choices = [[v for v in range(n) if L.leq[v][L.meet[x][y]]] for x, y in cells]
    out = []
    for values in itertools.product(*choices):
        t = [[0] * n for _ in range(n)]
        for (x, y), v in zip(cells, values):
            t[x][y] = t[y][x] = v
        if not commutator_violations(L, t):
            out.append(tuple(tuple(r) for r in t))
    return out


# -- rings -------------------------------------------------------------------------

MAX_ZN = 100
MAX_PRODUCT_SIZE = 64


def is_squarefree(n: int) -> bool:
    return all(n % (p * p) for p in range(2, math.isqrt(n) + 1))


def ring_corpus(max_n: int = MAX_ZN, max_product: int = MAX_PRODUCT_SIZE) -> InstanceStream:
    """Zn for 2 <= n <= max_n, the hand-written table rings, then every product of
    two of those (unordered pairs) whose carrier has at most max_product elements."""
    from .rings import build_product, build_zn, hand_rings

    def rings():
        base = [build_zn(n) for n in range(2, max_n + 1)] + hand_rings()
        yield from base
        for i, a in enumerate(base):
            for b in base[i:]:
                if a.n * b.n <= max_product:
                    yield build_product([a, b])

    return InstanceStream("rings", {"max_n": max_n, "max_product": max_product}, False, rings)
