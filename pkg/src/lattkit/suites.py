"""Theorem suites: exhaustive instance streams paired with gated claim reports.

A suite is registered by name so worker processes can rebuild its stream
locally; instance ``i`` goes to worker ``i % jobs`` and the partial
summaries are merged with commutative counters.  Witness selection keeps
the least instance index per claim, so results do not depend on ``jobs``.
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator

from .commutator import (induced_commutator_checks, induced_table_identity_checks, commutator_report, equiv_congruence,
                         meet_commutator, commutator_grid_report, validate_commutator)
from .conditions import (ALL_CONDITIONS, all_annihilators, all_annihilators_brute, davey_checks,
                         product_preservation_checks, sublattice_c5_checks, verdicts)
from .enumeration import (enumerate_commutator_tables, enumerate_lattices, is_squarefree,
                          lattice_codes, lattice_count_oracle, ring_corpus)
from .lattice import (FiniteLattice, bounded_sublattices, boolean_lattice, chain,
                      diamond, direct_product, divisor_lattice, enumerate_congruences,
                      enumerate_congruences_naive, is_distributive, pentagon, quotient_lattice)
from .report import Report, Status
from .rings import (FiniteCommRing, build_product, build_zn, enumerate_ideals,
                    enumerate_ideals_naive, hand_rings, is_baer, is_semiprime, ring_report)
from .transfer import make_context, transfer_report

KNOWN_LATTICE_COUNTS = (1, 1, 1, 2, 5, 15, 53, 222)


# -- summaries -----------------------------------------------------------------------------

@dataclass
class ClaimCounter:
    asserted: bool = True
    hypothesis_met: int = 0
    held: int = 0
    failed: int = 0

    def to_json(self) -> dict:
        out = {"hypothesis_met": self.hypothesis_met, "held": self.held, "failed": self.failed}
        if not self.asserted:
            out["asserted"] = False
        return out


@dataclass
class SuiteSummary:
    """Counters over a stream.

    An instance counts as hypothesis-met when at least one of its claims had
    its hypothesis satisfied, as held when none of its asserted claims
    failed, and as failed otherwise.
    """

    suite: str
    params: dict
    tested: int = 0
    hypothesis_met: int = 0
    held: int = 0
    failed: int = 0
    claims: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)     # claim -> (index, payload)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    @property
    def logged_failures(self) -> dict:
        return {k: c.failed for k, c in self.claims.items() if not c.asserted and c.failed}

    def record(self, index: int, report: Report, serialize: Callable[[], Any]):
        self.tested += 1
        if any(c.status is not Status.NOT_MET for c in report):
            self.hypothesis_met += 1
        if report.failures():
            self.failed += 1
        else:
            self.held += 1
        for c in report:
            cc = self.claims.setdefault(c.claim, ClaimCounter(c.asserted))
            if c.status is Status.NOT_MET:
                continue
            cc.hypothesis_met += 1
            if c.failed:
                cc.failed += 1
                old = self.witnesses.get(c.claim)
                if old is None or index < old[0]:
                    self.witnesses[c.claim] = (index, {"instance": serialize(), "witness": c.witness})
            else:
                cc.held += 1

    def merge(self, other: "SuiteSummary") -> "SuiteSummary":
        self.tested += other.tested
        self.hypothesis_met += other.hypothesis_met
        self.held += other.held
        self.failed += other.failed
        self.seconds = max(self.seconds, other.seconds)
        for k, c in other.claims.items():
            mine = self.claims.setdefault(k, ClaimCounter(c.asserted))
            mine.hypothesis_met += c.hypothesis_met
            mine.held += c.held
            mine.failed += c.failed
        for k, w in other.witnesses.items():
            if k not in self.witnesses or w[0] < self.witnesses[k][0]:
                self.witnesses[k] = w
        return self

    def to_json(self) -> dict:
        return {"suite": self.suite, "params": self.params, "tested": self.tested,
                "hypothesis_met": self.hypothesis_met, "held": self.held, "failed": self.failed,
                "ok": self.ok, "seconds": round(self.seconds, 3),
                "claims": {k: self.claims[k].to_json() for k in sorted(self.claims)},
                "witnesses": {k: {"index": i, **w} for k, (i, w) in sorted(self.witnesses.items())}}


@dataclass(frozen=True)
class TheoremSuite:
    name: str
    description: str
    instances: Callable[..., Iterable]      # params -> deterministic stream
    evaluate: Callable[[Any], Report]
    serialize: Callable[[Any], Any]
    defaults: dict


# -- instance streams ----------------------------------------------------------------------------

def _lattices(n_max: int, distributive_only: bool = False) -> Iterator[FiniteLattice]:
    for n in range(1, n_max + 1):
        for L in enumerate_lattices(n):
            if not distributive_only or is_distributive(L):
                yield L


def _pairs(n_max: int) -> Iterator[tuple]:
    for M in _lattices(n_max):
        for theta in enumerate_congruences(M):
            yield M, theta


def _commutators(n_max: int = 4, meet_max: int = 7) -> Iterator:
    for L in _lattices(n_max):
        for table in enumerate_commutator_tables(L):
            yield validate_commutator(L, table)
    for n in range(n_max + 1, meet_max + 1):
        for L in enumerate_lattices(n):
            if is_distributive(L):
                yield meet_commutator(L)


def candidate_tables(M: FiniteLattice, sample: int = 200, seed: int = 0) -> list[tuple]:
    """Binary operation tables for the lower-bound claim.

    Every table when |M| <= 3; above that every symmetric table bounded by
    the meet, followed by a seeded sample of arbitrary tables.
    """
    import itertools
    n = M.n
    if n <= 3:
        return [tuple(tuple(v[x * n:(x + 1) * n]) for x in range(n))
                for v in itertools.product(range(n), repeat=n * n)]
    cells = [(x, y) for x in range(n) for y in range(x, n)]
    choices = [[v for v in range(n) if M.leq[v][M.meet[x][y]]] for x, y in cells]
    out = []
    for values in itertools.product(*choices):
        t = [[0] * n for _ in range(n)]
        for (x, y), v in zip(cells, values):
            t[x][y] = t[y][x] = v
        out.append(tuple(map(tuple, t)))
    rng = random.Random(seed + n)
    for _ in range(sample):
        out.append(tuple(tuple(rng.randrange(n) for _ in range(n)) for _ in range(n)))
    return out


def _induced_identity_instances(n_max: int = 5, tables_max: int = 4) -> Iterator[tuple]:
    for M in _lattices(n_max):
        yield M, candidate_tables(M) if M.n <= tables_max else ()


def _product_pairs(max_product: int = 36) -> Iterator[tuple]:
    by_size = {n: list(enumerate_lattices(n)) for n in range(1, min(max_product, 8) + 1)}
    flat = [L for n in sorted(by_size) for L in by_size[n]]
    for i, a in enumerate(flat):
        for b in flat[i:]:
            if a.n * b.n <= max_product:
                yield a, b


def _sublattice_pairs(n_max: int = 6) -> Iterator[tuple]:
    for L in _lattices(n_max, distributive_only=True):
        for _, elems in bounded_sublattices(L):
            yield L, elems


def _oracle_lattices() -> list[FiniteLattice]:
    extra = [boolean_lattice(3), chain(10), chain(12), divisor_lattice(60), divisor_lattice(72),
             direct_product(pentagon(), chain(2)), direct_product(diamond(), chain(2)),
             direct_product(chain(3), chain(4)), diamond(10), direct_product(pentagon(), boolean_lattice(1))]
    return list(_lattices(7)) + extra


def _small_rings(max_size: int = 8) -> list[FiniteCommRing]:
    base = [build_zn(n) for n in range(2, max_size + 1)] + [R for R in hand_rings() if R.n <= max_size]
    prods = [build_product([a, b]) for i, a in enumerate(base) for b in base[i:] if a.n * b.n <= max_size]
    return base + prods


def _oracle_tasks(cong_max: int = 6, count_oracle_max: int = 6) -> Iterator[tuple]:
    for n in range(1, len(KNOWN_LATTICE_COUNTS) + 1):
        yield "lattice_count", n, count_oracle_max
    for L in _lattices(cong_max):
        yield "congruences", L, None
    for L in _oracle_lattices():
        yield "annihilators", L, None
    for R in _small_rings():
        yield "ideals", R, None


# -- evaluators -----------------------------------------------------------------------------------

def _transfer(inst) -> Report:
    M, theta = inst
    return transfer_report(make_context(M, theta)).checks


def _induced_commutator(inst) -> Report:
    M, theta = inst
    q = quotient_lattice(M, theta).lattice
    if not is_distributive(q):
        rep = Report()
        rep.claim("constructed_table_valid", False, True)
        return rep
    return induced_commutator_checks(M, theta)


def _rings(R: FiniteCommRing) -> Report:
    rep = ring_report(R)
    if R.provenance["type"] == "Zn":
        sq = is_squarefree(R.n)
        rep.claim("zn_baer_iff_squarefree", True, (is_baer(R) == sq, {"n": R.n}))
        rep.claim("zn_semiprime_iff_squarefree", True, (is_semiprime(R) == sq, {"n": R.n}))
    return rep


def _oracle(task) -> Report:
    kind, obj, extra = task
    rep = Report()
    if kind == "lattice_count":
        got = len(lattice_codes(obj))
        rep.claim("lattice_count_matches_sequence", True,
                  (got == KNOWN_LATTICE_COUNTS[obj - 1], {"n": obj, "count": got}))
        rep.claim("lattice_count_matches_oracle", obj <= extra,
                  lambda: (got == lattice_count_oracle(obj), {"n": obj, "count": got}))
    elif kind == "congruences":
        fast = sorted(c.block_of for c in enumerate_congruences(obj))
        slow = sorted(c.block_of for c in enumerate_congruences_naive(obj))
        rep.claim("congruences_match_partition_filter", True, (fast == slow, {"closure": len(fast), "naive": len(slow)}))
    elif kind == "annihilators":
        rep.claim("annihilators_match_subset_scan", True, all_annihilators(obj).all == all_annihilators_brute(obj))
    else:
        fast = sorted(enumerate_ideals(obj).index)
        rep.claim("ideals_match_subset_filter", True, fast == sorted(enumerate_ideals_naive(obj)))
    return rep


def _commutator_grid(CL) -> Report:
    return commutator_grid_report(CL).checks


def _serialize_pair(inst):
    M, theta = inst
    return {"lattice": M.to_json(), "congruence": theta.to_json()}


def _serialize_oracle(task):
    kind, obj, _ = task
    if kind == "lattice_count":
        return {"task": kind, "n": obj}
    return {"task": kind, "instance": obj.to_json()}


SUITES: dict[str, TheoremSuite] = {s.name: s for s in [
    TheoremSuite("davey", "families (1)-(5) and (iv) agree on distributive lattices",
                 lambda n=7: _lattices(n), davey_checks, lambda L: L.to_json(), {"n": 7}),
    TheoremSuite("transfer", "conditions and annihilators across a quotient M -> M/θ",
                 lambda n=6: _pairs(n), _transfer, _serialize_pair, {"n": 6}),
    TheoremSuite("commutator", "spectrum, radicals, frames, centers and the Davey grid on commutator lattices",
                 lambda n=4, meet_max=7: _commutators(n, meet_max), commutator_report,
                 lambda CL: CL.to_json(), {"n": 4, "meet_max": 7}),
    TheoremSuite("grid", "the Davey grid on commutator lattices",
                 lambda n=4, meet_max=7: _commutators(n, meet_max), _commutator_grid,
                 lambda CL: CL.to_json(), {"n": 4, "meet_max": 7}),
    TheoremSuite("induced", "commutators built from a congruence with distributive quotient",
                 lambda n=6: _pairs(n), _induced_commutator, _serialize_pair, {"n": 6}),
    TheoremSuite("induced_identities", "identities between congruence-induced commutators",
                 lambda n=5, tables_max=4: _induced_identity_instances(n, tables_max),
                 lambda inst: induced_table_identity_checks(*inst), lambda inst: inst[0].to_json(),
                 {"n": 5, "tables_max": 4}),
    TheoremSuite("products", "conditions of a product are the conjunction over the factors",
                 lambda max_product=36: _product_pairs(max_product),
                 lambda inst: product_preservation_checks(*inst),
                 lambda inst: {"factors": [inst[0].to_json(), inst[1].to_json()]}, {"max_product": 36}),
    TheoremSuite("sublattices", "condition (5) descends to bounded sublattices of distributive lattices",
                 lambda n=6: _sublattice_pairs(n), lambda inst: sublattice_c5_checks(*inst),
                 lambda inst: {"lattice": inst[0].to_json(), "sublattice": inst[0].names(inst[1])}, {"n": 6}),
    TheoremSuite("rings", "Baer-type conditions on finite rings and their ideal lattices",
                 lambda max_n=100, max_product=64: ring_corpus(max_n, max_product), _rings,
                 lambda R: R.to_json(), {"max_n": 100, "max_product": 64}),
    TheoremSuite("oracles", "fast enumerators against brute-force oracles",
                 lambda cong_max=6, count_oracle_max=6: _oracle_tasks(cong_max, count_oracle_max),
                 _oracle, _serialize_oracle, {"cong_max": 6, "count_oracle_max": 6}),
]}

# suite name -> parameter that ``lattkit enumerate --n`` sets
SIZE_PARAM = {"davey": "n", "transfer": "n", "commutator": "n", "grid": "n", "induced": "n",
              "induced_identities": "n", "sublattices": "n", "products": "max_product", "rings": "max_n",
              "oracles": "cong_max"}

# older suite ids kept for scripts that still pass them
SUITE_ALIASES = {"ourdavey": "grid", "commsofcgs": "induced_identities", "commofcg": "induced",
                 "presprod": "products", "vsublat": "sublattices"}


# -- running ----------------------------------------------------------------------------------------

def _run_part(name: str, params: dict, jobs: int, part: int) -> SuiteSummary:
    suite = SUITES[name]
    summary = SuiteSummary(name, params)
    start = time.perf_counter()
    for i, inst in enumerate(suite.instances(**params)):
        if i % jobs != part:
            continue
        summary.record(i, suite.evaluate(inst), lambda: suite.serialize(inst))
    summary.seconds = time.perf_counter() - start
    return summary


def run_suite(name: str, params: dict | None = None, jobs: int = 1) -> SuiteSummary:
    name = SUITE_ALIASES.get(name, name)
    suite = SUITES[name]
    params = {**suite.defaults, **(params or {})}
    start = time.perf_counter()
    if jobs <= 1:
        out = _run_part(name, params, 1, 0)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_run_part, [name] * jobs, [params] * jobs, [jobs] * jobs, range(jobs)))
        out = SuiteSummary(name, params)
        for p in parts:
            out.merge(p)
    out.seconds = time.perf_counter() - start
    return out


def search_counterexample(predicate: Callable[[Any], bool], stream: Iterable):
    """The first instance satisfying ``predicate`` as ``(index, instance)``, or None."""
    for i, inst in enumerate(stream):
        if predicate(inst):
            return i, inst
    return None


def davey_grid_breaks_without_zero_radical(CL) -> bool:
    """The Davey grid disagrees even though the top class is trivial and [x, 1] = x."""
    L, c = CL.base, CL.comm
    eq = equiv_congruence(CL)
    if eq.congruence.class_mask(L.top) != 1 << L.top:
        return False
    if any(c[x][L.top] != x for x in range(L.n)):
        return False
    v = verdicts(L)
    return len({v[x] for x in ALL_CONDITIONS}) > 1


def search_grid_without_zero_radical(n: int = 4, meet_max: int = 4):
    return search_counterexample(davey_grid_breaks_without_zero_radical, _commutators(n, meet_max))


ACCEPTANCE = [
    (1, "davey", {"n": 7}),
    (2, "transfer", {"n": 6}),
    (3, "commutator", {"n": 4, "meet_max": 7}),
    (4, "induced", {"n": 6}),
    (5, "rings", {"max_n": 100, "max_product": 64}),
    (6, "oracles", {"cong_max": 6, "count_oracle_max": 6}),
    (7, "products", {"max_product": 36}),
    (7, "sublattices", {"n": 6}),
]


def verify_all(jobs: int = 1) -> list[tuple[int, SuiteSummary]]:
    return [(crit, run_suite(name, params, jobs)) for crit, name, params in ACCEPTANCE]
