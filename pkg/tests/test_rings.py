import pytest

from lattkit.conditions import ALL_CONDITIONS, ConditionId, Family, Kappa
from lattkit.enumeration import is_squarefree
from lattkit.lattice import boolean_lattice, chain, is_isomorphic
from lattkit.report import Status
from lattkit.rings import (MAX_TABLE_RING_SIZE, NotARing, baer_bridge_report, build_product, build_table,
                           build_zn, check_ring_condition, enumerate_ideals, enumerate_ideals_naive,
                           hand_rings, has_no_nonzero_nilpotents, ideal_congruence_correspondence,
                           idempotent_algebra_checks, idempotents, is_baer, is_semiprime,
                           is_strongly_baer, prime_ideals, prime_ideals_elementwise, radical_ideal,
                           reticulation_ring, ring_annihilator, ring_report, ring_verdicts)


def ideal_of(R, *gens):
    return R.generated_ideal(sum(1 << R.index(g) for g in gens))


def test_residues_mod_six():
    Z6 = build_zn(6)
    assert Z6.n == 6 and Z6.mul[2][3] == 0 and Z6.add[5][4] == 3


def test_product_of_two_and_three_behaves_like_six():
    Z6, P = build_zn(6), build_product([build_zn(2), build_zn(3)])
    assert ring_verdicts(Z6) == ring_verdicts(P)
    assert P.labels[P.one] == "(1,1)"


def test_non_associative_multiplication_is_rejected():
    Z3 = build_zn(3)
    mul = [list(r) for r in Z3.mul]
    mul[2][2] = 2
    with pytest.raises(NotARing) as e:
        build_table(Z3.add, mul)
    assert e.value.axiom


def test_oversized_table_ring_is_rejected():
    R = build_zn(MAX_TABLE_RING_SIZE + 1)
    with pytest.raises(NotARing):
        build_table(R.add, R.mul)


def test_idempotents_of_small_residue_rings():
    assert set(idempotents(build_zn(6)).elements) == {0, 1, 3, 4}
    assert set(idempotents(build_zn(4)).elements) == {0, 1}
    for R in [build_zn(7), hand_rings()[0]]:
        assert set(idempotents(R).elements) == {R.zero, R.one}
    assert idempotent_algebra_checks(idempotents(build_zn(30))).ok


def test_ideals_of_six_and_four():
    IL = enumerate_ideals(build_zn(6))
    assert [I.label for I in IL.ideals] == ["(0)", "(3)", "(2)", "(1)"]
    assert is_isomorphic(IL.lattice, boolean_lattice(2))
    Z4 = build_zn(4)
    IL4 = enumerate_ideals(Z4)
    assert is_isomorphic(IL4.lattice, chain(3))
    two = IL4.of(ideal_of(Z4, "2"))
    assert IL4.commutator.comm[two][two] == IL4.lattice.bottom


def test_field_has_two_ideals():
    F4 = hand_rings()[0]
    assert len(enumerate_ideals(F4)) == 2


def test_hand_ring_with_a_non_principal_ideal():
    R = next(r for r in hand_rings() if r.provenance.get("name") == "F2[x,y]/(x,y)^2")
    labels = {I.label for I in enumerate_ideals(R).ideals}
    assert "(x,y)" in labels


@pytest.mark.parametrize("R", [build_zn(n) for n in (2, 4, 6, 8)] + [r for r in hand_rings() if r.n <= 8]
                         + [build_product([build_zn(2), build_zn(4)])])
def test_ideal_closure_matches_subset_filter(R):
    assert sorted(enumerate_ideals(R).index) == sorted(enumerate_ideals_naive(R))


def test_annihilator_radical_and_semiprimality_examples():
    Z6, Z12 = build_zn(6), build_zn(12)
    assert ring_annihilator(Z6, [Z6.index("2")]).mask == ideal_of(Z6, "3")
    assert radical_ideal(Z12, ideal_of(Z12, "4")).mask == ideal_of(Z12, "2")
    assert not is_semiprime(Z12) and is_semiprime(Z6)


@pytest.mark.parametrize("n", range(2, 41))
def test_semiprime_criteria_agree_on_residue_rings(n):
    R = build_zn(n)
    assert is_semiprime(R) == has_no_nonzero_nilpotents(R) == is_squarefree(n)
    assert {P.mask for P in prime_ideals(R)} == {P.mask for P in prime_ideals_elementwise(R)}


def test_strong_baer_on_six_scans_every_idempotent():
    assert check_ring_condition(build_zn(6), ConditionId(Family.C1, Kappa.ALL)).holds


def test_four_is_not_baer():
    r = check_ring_condition(build_zn(4), ConditionId(Family.C1, Kappa.ONE))
    assert not r.holds and r.witness["U"] == ["2"]


def test_fifth_condition_on_empty_subset_is_vacuous():
    for R in (build_zn(4), build_zn(8)):
        # Ann(∅) = R, so the only failures can come from nonempty U
        r = check_ring_condition(R, ConditionId(Family.C5, Kappa.ALL))
        assert r.holds or r.witness["U"]


def test_bridge_on_six():
    rep = baer_bridge_report(build_zn(6))
    assert rep.semiprime and rep.ok
    assert all(rep.ring_verdicts.values()) and all(rep.ideal_verdicts.values())


def test_thirty_has_eight_idempotents_matching_the_center():
    R = build_zn(30)
    rep = baer_bridge_report(R)
    assert len(idempotents(R).elements) == 8
    assert is_baer(R) and rep.ok
    assert rep.checks.by_claim()["idempotent_map_is_boolean_isomorphism"].status is Status.HOLDS


def test_bridge_on_four_asserts_only_unconditional_parts():
    rep = baer_bridge_report(build_zn(4))
    assert not rep.semiprime and rep.ok
    by = rep.checks.by_claim()
    assert by["ring_conditions_agree"].status is Status.NOT_MET
    assert by["iv_bridge"].status is Status.HOLDS
    assert by["c3_bridge[one]"].status is Status.HOLDS
    # (2)·(2) = 0 in Z4, so the product-based annihilator of (2) contains (2),
    # while in the chain (0) < (2) < (1) only (0) meets (2) trivially
    logged = by["ideal_meet_annihilator_is_principal_unconditional"]
    assert logged.failed and not logged.asserted
    assert logged.witness == {"ideal": "(2)"}
    assert by["c3_bridge_meet_annihilators_unconditional[one]"].witness == {"ring": False, "ideals": True}


def test_reticulations_of_rings():
    assert is_isomorphic(reticulation_ring(build_zn(12)), boolean_lattice(2))
    assert is_isomorphic(reticulation_ring(build_zn(6)), boolean_lattice(2))
    assert is_isomorphic(reticulation_ring(build_zn(7)), chain(2))


@pytest.mark.parametrize("R,count", [(build_zn(6), 4), (build_zn(4), 3), (build_zn(5), 2),
                                     (hand_rings()[3], None)])
def test_ideals_correspond_to_congruences(R, count):
    rep = ideal_congruence_correspondence(R)
    assert rep.ok
    if count is not None:
        assert rep.ideals == rep.congruences == count


@pytest.mark.parametrize("R", hand_rings() + [build_product([build_zn(2), build_zn(9)])])
def test_full_ring_report(R):
    assert ring_report(R).ok


def test_strongly_baer_iff_baer_on_semiprime_products():
    for a, b in [(2, 3), (5, 6), (2, 15)]:
        R = build_product([build_zn(a), build_zn(b)])
        assert is_semiprime(R) and is_baer(R) == is_strongly_baer(R) is True


def test_verdict_grid_covers_every_condition():
    assert set(ring_verdicts(build_zn(10))) == set(ALL_CONDITIONS)


def test_ring_json_round_trip():
    from lattkit.io import load_ring
    for R in [build_zn(9), build_product([build_zn(2), hand_rings()[1]]), hand_rings()[4]]:
        back = load_ring(R.to_json())
        assert back.add == R.add and back.mul == R.mul and back.labels == R.labels
