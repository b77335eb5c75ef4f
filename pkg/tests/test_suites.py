import pytest

from lattkit import io
from lattkit.commutator import commutator_grid_report
from lattkit.conditions import sublattice_c5_checks
from lattkit.report import Report
from lattkit.suites import (ACCEPTANCE, SIZE_PARAM, SUITE_ALIASES, SUITES, SuiteSummary, run_suite, search_counterexample,
                            search_grid_without_zero_radical)
from lattkit.transfer import make_context, transfer_report


def stable(summary):
    out = summary.to_json()
    out.pop("seconds")
    return out


@pytest.mark.parametrize("name,params", [("transfer", {"n": 5}), ("davey", {"n": 6}),
                                         ("grid", {"n": 4, "meet_max": 5}), ("sublattices", {"n": 6})])
def test_summaries_do_not_depend_on_worker_count(name, params):
    one = run_suite(name, params, jobs=1)
    assert stable(one) == stable(run_suite(name, params, jobs=3))
    assert stable(one) == stable(run_suite(name, params, jobs=1))


def test_counters_add_up():
    s = run_suite("transfer", {"n": 5})
    assert s.tested == s.held + s.failed
    assert s.hypothesis_met <= s.tested
    for c in s.claims.values():
        assert c.held + c.failed == c.hypothesis_met


def test_empty_stream_records_nothing():
    summary = SuiteSummary("empty", {})
    assert summary.tested == 0 and summary.ok
    assert search_counterexample(lambda x: True, []) is None


def test_logged_claims_do_not_fail_an_instance():
    rep = Report()
    rep.claim("logged", True, False, asserted=False)
    s = SuiteSummary("t", {})
    s.record(0, rep, lambda: None)
    assert s.ok and s.logged_failures == {"logged": 1}


def test_least_index_witness_wins_in_merge():
    rep = Report()
    rep.claim("c", True, (False, "w"))
    a, b = SuiteSummary("t", {}), SuiteSummary("t", {})
    a.record(7, rep, lambda: "late")
    b.record(3, rep, lambda: "early")
    assert a.merge(b).witnesses["c"][0] == 3


def test_transfer_witnesses_replay_through_the_file_formats():
    s = run_suite("transfer", {"n": 6})
    assert s.failed > 0
    for claim, entry in s.to_json()["witnesses"].items():
        inst = entry["instance"]
        M = io.load_lattice(inst["lattice"])
        theta = io.load_congruence(M, inst["congruence"])
        replayed = transfer_report(make_context(M, theta)).checks.by_claim()[claim]
        assert replayed.failed
        assert replayed.witness == entry["witness"]


def test_sublattice_witness_replays():
    s = run_suite("sublattices", {"n": 6})
    entry = s.to_json()["witnesses"]["c5_instance_passes_to_sublattice"]
    L = io.load_lattice(entry["instance"]["lattice"])
    sub = [L.index(x) for x in entry["instance"]["sublattice"]]
    assert sublattice_c5_checks(L, sub).by_claim()["c5_instance_passes_to_sublattice"].failed


def test_grid_witnesses_replay_for_five_element_commutators():
    s = run_suite("grid", {"n": 5, "meet_max": 5})
    entry = s.to_json()["witnesses"]["c3_equivalent[one]"]
    CL = io.load_commutator(entry["instance"])
    assert commutator_grid_report(CL).checks.by_claim()["c3_equivalent[one]"].failed


def test_grid_search_without_zero_radical_exhausts_small_tables():
    assert search_grid_without_zero_radical(4, 4) is None


def test_registry_is_consistent():
    assert set(SIZE_PARAM) == set(SUITES)
    assert {name for _, name, _ in ACCEPTANCE} <= set(SUITES)
    assert sorted({c for c, _, _ in ACCEPTANCE}) == list(range(1, 8))
    for name, param in SIZE_PARAM.items():
        assert param in SUITES[name].defaults


def test_older_suite_ids_resolve_to_the_same_suites():
    for old, new in SUITE_ALIASES.items():
        assert new in SUITES
    assert stable(run_suite("sublattices", {"n": 5})) == stable(run_suite("vsublat", {"n": 5}))
