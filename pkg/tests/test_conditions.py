import pytest

from lattkit.conditions import (ALL_CONDITIONS, ConditionId, Family, Kappa, all_annihilators,
                                all_annihilators_brute, annihilator, boolean_center, check_condition,
                                davey_checks, davey_report, double_annihilator, product_preservation_checks,
                                sublattice_c5_checks, verdicts)
from lattkit.lattice import (boolean_lattice, chain, diamond, direct_product, divisor_lattice, pentagon)

from conftest import lat, names


def ids(L, labels):
    return [L.index(x) for x in labels.split()]


def test_annihilator_in_three_chain():
    C3 = chain(3)
    assert annihilator(C3, ids(C3, "a")).members == {C3.bottom}


def test_annihilator_in_diamond():
    M3 = diamond()
    assert names(M3, annihilator(M3, ids(M3, "a")).mask) == {"0", "b", "c"}


@pytest.mark.parametrize("L", [chain(3), diamond(), pentagon(), boolean_lattice(2)])
def test_annihilator_of_zero_and_of_nothing_is_everything(L):
    assert annihilator(L, [L.bottom]).mask == L.full
    assert annihilator(L, []).mask == L.full


def test_double_annihilator_applies_twice():
    M3 = diamond()
    a = ids(M3, "a")
    once = annihilator(M3, a)
    assert double_annihilator(M3, a).mask == annihilator(M3, once.members).mask


def test_annihilator_families_of_small_lattices():
    C3 = chain(3)
    assert all_annihilators(C3).all == {C3.full, 1 << C3.bottom}
    B2 = boolean_lattice(2)
    assert {frozenset(B2.names(m)) for m in all_annihilators(B2).all} == {
        frozenset(B2.labels), frozenset({"0"}), frozenset({"0", "01"}), frozenset({"0", "10"})}
    assert all_annihilators(chain(1)).all == {1}


def test_center_of_chain_is_trivial():
    C3 = chain(3)
    assert boolean_center(C3).elements == {C3.bottom, C3.top}


def test_center_of_diamond_is_everything_but_not_boolean():
    M3 = diamond()
    bc = boolean_center(M3)
    assert bc.elements == set(range(5))
    assert len(bc.complements[M3.index("a")]) == 2
    # closed under the lattice operations, so a sublattice, yet not distributive
    assert bc.sublattice and not bc.boolean


def test_center_of_square_is_boolean():
    B2 = boolean_lattice(2)
    bc = boolean_center(B2)
    assert bc.elements == set(range(4)) and bc.boolean


def test_stone_condition_on_chain_and_diamond():
    C3, M3 = chain(3), diamond()
    stone = ConditionId(Family.C1, Kappa.ONE)
    assert check_condition(C3, stone).holds
    r = check_condition(M3, stone)
    assert not r.holds
    assert r.witness["U"] == ["a"]


@pytest.mark.parametrize("L", [boolean_lattice(2), chain(3), divisor_lattice(12), boolean_lattice(3)])
def test_stone_examples_satisfy_every_condition(L):
    assert all(verdicts(L).values())
    assert davey_report(L).all_agree


def test_two_atoms_below_a_new_top_fail_everything(b2_plus_top):
    v = verdicts(b2_plus_top)
    assert not any(v.values())
    r = check_condition(b2_plus_top, ConditionId(Family.C5, Kappa.ONE))
    assert r.witness == {"U": ["a"]}


def test_pentagon_separates_only_the_second_family():
    v = verdicts(pentagon())
    failing = {c.family for c, ok in v.items() if not ok}
    assert failing == {Family.C2}


def test_diamond_satisfies_only_the_fifth_family():
    v = verdicts(diamond())
    holding = {c.family for c, ok in v.items() if ok}
    assert holding == {Family.C5}


def test_condition_ids_parse_and_print():
    assert str(ConditionId.parse("3", "fin")) == "(3)_fin"
    assert str(ConditionId.parse("iv")) == "(iv)"
    with pytest.raises(ValueError):
        ConditionId(Family.IV, Kappa.ONE)
    assert len(ALL_CONDITIONS) == 16


@pytest.mark.parametrize("L", [divisor_lattice(60), direct_product(chain(3), chain(3)), boolean_lattice(3)])
def test_families_agree_on_distributive_examples(L):
    assert davey_checks(L).ok


def test_families_agree_check_is_vacuous_off_distributivity():
    rep = davey_checks(diamond())
    assert rep.ok
    logged = rep.by_claim()["families_agree_without_distributivity"]
    assert logged.failed and not logged.asserted


def test_annihilator_closure_matches_subset_scan_on_twelve_elements():
    L = divisor_lattice(72)
    assert L.n == 12
    assert all_annihilators(L).all == all_annihilators_brute(L)


def test_product_of_pentagon_and_chain_preserves_verdicts():
    assert product_preservation_checks(pentagon(), chain(3)).ok


def test_fifth_condition_can_fail_in_a_sublattice_of_a_stone_lattice():
    L = lat("0 a b c d 1", "0-a 0-b a-c a-d b-d c-1 d-1")
    assert all(verdicts(L).values())
    rep = sublattice_c5_checks(L, sorted(L.index(x) for x in "0 a b d 1".split()))
    got = rep.by_claim()
    assert got["c5_instance_passes_to_sublattice"].witness == {"U": ["a"]}
    assert got["c5_passes_to_sublattice[one]"].witness == {"U": ["a"]}
