import pytest

from lattkit.lattice import (CyclicOrder, LatticeError, NoBounds, NotALattice, boolean_lattice,
                             bounded_sublattices, chain, class_extrema, congruence_generated, diamond,
                             direct_product, divisor_lattice, enumerate_congruences,
                             enumerate_congruences_naive, generated_ideal, irreducibles, is_0_regular,
                             is_distributive, is_distributive_by_sublattices, is_isomorphic, is_modular,
                             is_modular_by_sublattices, pentagon, quotient_lattice)

from conftest import cong, lat, names


def test_diamond_from_covers_has_expected_bounds():
    M3 = lat("0 a b c 1", "0-a 0-b 0-c a-1 b-1 c-1")
    assert (M3.bottom, M3.top) == (0, 4)
    for x in "abc":
        for y in "abc":
            if x != y:
                assert M3.labels[M3.join[M3.index(x)][M3.index(y)]] == "1"
                assert M3.labels[M3.meet[M3.index(x)][M3.index(y)]] == "0"


def test_two_maximal_elements_are_rejected():
    with pytest.raises(NoBounds):
        lat("0 a b", "0-a 0-b")


def test_missing_join_is_reported_with_the_competing_bounds():
    with pytest.raises(NotALattice) as e:
        lat("0 a b c d 1", "0-a 0-b a-c a-d b-c b-d c-1 d-1")
    assert "a" in str(e.value) and "b" in str(e.value)


def test_cycle_is_rejected():
    with pytest.raises(LatticeError):
        lat("0 a b 1", "0-a a-b b-a b-1")


def test_mutual_order_is_a_cyclic_order_error():
    from lattkit.lattice import FiniteLattice
    with pytest.raises(CyclicOrder):
        FiniteLattice.from_leq([[1, 1], [1, 1]])


def test_pentagon_is_not_modular():
    assert not is_modular(pentagon())
    assert not is_distributive(pentagon())


def test_diamond_is_modular_but_not_distributive():
    assert is_modular(diamond()) and not is_distributive(diamond())


@pytest.mark.parametrize("L", [chain(4), boolean_lattice(3), divisor_lattice(12), pentagon(), diamond(),
                               direct_product(pentagon(), chain(2))])
def test_identity_checks_match_forbidden_sublattice_tests(L):
    assert is_distributive(L) == is_distributive_by_sublattices(L)
    assert is_modular(L) == is_modular_by_sublattices(L)


def test_irreducibles_of_three_chain():
    C3 = chain(3)
    irr = irreducibles(C3)
    assert names(C3, sum(1 << x for x in irr.mi)) == {"0", "a", "1"}
    assert {C3.labels[x] for x in irr.smi} == {"0", "a"}
    assert {C3.labels[x] for x in irr.max} == {"a"}


def test_irreducibles_of_square():
    B2 = boolean_lattice(2)
    irr = irreducibles(B2)
    atoms = {x for x in range(B2.n) if x not in (B2.bottom, B2.top)}
    assert irr.smi == atoms and irr.max == atoms


def test_join_of_two_atoms_in_diamond_is_top():
    M3 = diamond()
    assert generated_ideal(M3, [M3.index("a"), M3.index("b")]) == M3.top


def test_three_chain_has_four_congruences():
    C3 = chain(3)
    got = {tuple(sorted(tuple(sorted(b)) for b in c.to_json())) for c in enumerate_congruences(C3)}
    assert got == {(("0",), ("1",), ("a",)), (("0", "1", "a"),), (("0", "a"), ("1",)), (("0",), ("1", "a"))}


def test_generated_congruence_on_three_chain():
    C3 = chain(3)
    theta = congruence_generated(C3, [(C3.index("0"), C3.index("a"))])
    assert theta == cong(C3, "0 a")


def test_quotient_of_three_chain_is_two_chain():
    C3 = chain(3)
    q = quotient_lattice(C3, cong(C3, "0 a"))
    assert is_isomorphic(q.lattice, chain(2))
    assert q.proj[C3.index("a")] == q.lattice.bottom


def test_bounded_sublattices_of_square():
    B2 = boolean_lattice(2)
    subs = {frozenset(B2.labels[x] for x in e) for _, e in bounded_sublattices(B2)}
    assert subs == {frozenset({"0", "1"}), frozenset({"0", "01", "1"}), frozenset({"0", "10", "1"}),
                    frozenset(B2.labels)}


def test_zero_regularity_of_small_chains():
    assert is_0_regular(chain(2))
    assert not is_0_regular(chain(3))


@pytest.mark.parametrize("L", [chain(5), boolean_lattice(3), diamond(), pentagon(), divisor_lattice(36)])
def test_congruence_classes_are_intervals(L):
    for theta in enumerate_congruences(L):
        for b in range(len(theta.blocks)):
            x = min(i for i in range(L.n) if theta.block_of[i] == b)
            lo, hi = class_extrema(L, theta, x)
            interval = {y for y in range(L.n) if L.leq[lo][y] and L.leq[y][hi]}
            assert interval == {y for y in range(L.n) if theta.block_of[y] == b}


def test_closure_congruences_match_partition_filter_on_products():
    L = direct_product(chain(3), chain(2))
    assert sorted(c.block_of for c in enumerate_congruences(L)) == \
        sorted(c.block_of for c in enumerate_congruences_naive(L))


def test_dual_of_pentagon_is_a_pentagon():
    assert is_isomorphic(pentagon().dual(), pentagon())
    assert not is_isomorphic(pentagon(), diamond())


def test_json_round_trip():
    from lattkit.io import load_lattice
    L = direct_product(pentagon(), chain(2))
    back = load_lattice(L.to_json())
    assert back.labels == L.labels and back.leq == L.leq
