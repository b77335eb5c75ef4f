"""JSON formats for lattices, congruences, commutator tables and rings.

Every ``to_json`` in the package produces something these loaders accept,
so witnesses printed by the suites can be fed straight back to the CLI.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .commutator import CommutatorLattice, validate_commutator
from .lattice import FiniteLattice, LatticeCongruence, build_lattice, is_compatible
from .rings import FiniteCommRing, build_product, build_table, build_zn


class FormatError(ValueError):
    pass


def read_json(path: str | Path) -> Any:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _resolve(L: FiniteLattice, v) -> int:
    if isinstance(v, int) and not isinstance(v, bool):
        if not 0 <= v < L.n:
            raise FormatError(f"element index {v} out of range")
        return v
    try:
        return L.index(str(v))
    except (KeyError, ValueError):
        raise FormatError(f"unknown element {v!r}") from None


def load_lattice(obj: dict, dual: bool = False) -> FiniteLattice:
    if "labels" not in obj or "covers" not in obj:
        raise FormatError('a lattice needs "labels" and "covers"')
    L = build_lattice(obj["labels"], [tuple(c) for c in obj["covers"]])
    return L.dual() if dual else L


def load_commutator(obj: dict, dual: bool = False) -> CommutatorLattice:
    """The lattice with its "commutator" triples; unlisted pairs default to the meet.

    Triples are symmetric: listing [x, y, z] also sets [y, x] = z. A report
    from ``comm-from-cong``, which nests the commutator, is unwrapped.
    """
    if isinstance(obj.get("commutator"), dict):
        obj = obj["commutator"]
    L = load_lattice(obj, dual)
    table = [list(r) for r in L.meet]
    triples = obj.get("commutator", [])
    if triples and dual:
        raise FormatError("a commutator table cannot be dualized")
    seen = {}
    for t in triples:
        if len(t) != 3:
            raise FormatError(f"commutator entries are [x, y, value] triples, got {t!r}")
        x, y, v = (_resolve(L, s) for s in t)
        key = (min(x, y), max(x, y))
        if seen.setdefault(key, v) != v:
            raise FormatError(f"conflicting values for [{L.labels[x]}, {L.labels[y]}]")
        table[x][y] = table[y][x] = v
    return validate_commutator(L, table)


def load_congruence(L: FiniteLattice, obj) -> LatticeCongruence:
    """Blocks as lists of labels or indices; singleton blocks may be omitted."""
    blocks = obj["blocks"] if isinstance(obj, dict) else obj
    block_of = list(range(L.n))
    owner = {}
    for b in blocks:
        members = [_resolve(L, v) for v in b]
        if not members:
            continue
        for x in members:
            if x in owner:
                raise FormatError(f"element {L.labels[x]!r} appears in two blocks")
            owner[x] = members[0]
            block_of[x] = L.n + members[0]
    if not is_compatible(L, block_of):
        raise FormatError("the blocks are not compatible with meet and join")
    return LatticeCongruence.from_labels(L, block_of)


def load_ring(obj: dict) -> FiniteCommRing:
    kind = obj.get("type")
    if kind == "Zn":
        return build_zn(int(obj["n"]))
    if kind == "product":
        factors = obj.get("factors") or []
        if not factors:
            raise FormatError("a product ring needs at least one factor")
        return build_product([load_ring(f) for f in factors])
    if kind == "table":
        return build_table(obj["add"], obj["mul"], obj.get("zero", 0), obj.get("one", 1),
                           obj.get("labels"), obj.get("name"))
    raise FormatError(f'unknown ring type {kind!r}; expected "Zn", "product" or "table"')
