import itertools

import pytest

from lattkit.commutator import validate_commutator
from lattkit.enumeration import (SizeTooLarge, commutator_tables_naive, enumerate_commutator_tables,
                                 enumerate_lattices, is_squarefree, lattice_codes, lattice_count_oracle,
                                 lattices_up_to, ring_corpus)
from lattkit.lattice import (boolean_lattice, chain, diamond, is_distributive, is_isomorphic, pentagon)
from lattkit.rings import is_semiprime
from lattkit.suites import KNOWN_LATTICE_COUNTS


@pytest.mark.parametrize("n", range(1, 8))
def test_lattice_counts_match_known_sequence(n):
    assert len(list(enumerate_lattices(n))) == KNOWN_LATTICE_COUNTS[n - 1]


@pytest.mark.parametrize("n", range(1, 6))
def test_lattice_counts_match_relation_filter_oracle(n):
    assert lattice_count_oracle(n) == len(lattice_codes(n))


def test_eight_element_lattices():
    assert len(lattice_codes(8)) == 222


def test_enumeration_refuses_large_sizes():
    with pytest.raises(SizeTooLarge):
        lattice_codes(9)
    with pytest.raises(SizeTooLarge):
        enumerate_commutator_tables(chain(6))


@pytest.mark.parametrize("n", range(1, 6))
def test_canonical_stream_is_duplicate_free(n):
    lattices = list(enumerate_lattices(n))
    for a, b in itertools.combinations(lattices, 2):
        assert not is_isomorphic(a, b)


def test_labelled_stream_covers_each_type():
    labelled = list(enumerate_lattices(5, canonical=False))
    canon = list(enumerate_lattices(5))
    assert len(labelled) > len(canon)
    for L in labelled:
        assert sum(is_isomorphic(L, C) for C in canon) == 1


def test_distributive_lattice_counts():
    assert [sum(map(is_distributive, enumerate_lattices(n))) for n in range(1, 8)] == [1, 1, 1, 2, 3, 5, 8]
    assert len(lattices_up_to(6, distributive_only=True)) == 13


@pytest.mark.parametrize("L,count", [(chain(2), 2), (chain(3), 7), (boolean_lattice(2), 4), (chain(4), 42),
                                     (diamond(), 1), (pentagon(), 4)])
def test_commutator_table_counts(L, count):
    tables = list(enumerate_commutator_tables(L))
    assert len(tables) == count
    assert len(set(tables)) == count
    for t in tables:
        validate_commutator(L, t)


@pytest.mark.parametrize("L", [chain(2), chain(3), boolean_lattice(2), chain(4)]
                         + [L for L in enumerate_lattices(4)])
def test_backtracking_matches_naive_table_filter(L):
    assert sorted(enumerate_commutator_tables(L)) == sorted(commutator_tables_naive(L))


def test_three_chain_tables_include_the_named_variants():
    tables = set(enumerate_commutator_tables(chain(3)))
    assert chain(3).meet in tables
    assert ((0, 0, 0), (0, 0, 1), (0, 1, 1)) in tables
    assert ((0, 0, 0), (0, 0, 0), (0, 0, 1)) in tables


def test_meet_is_emitted_on_distributive_lattices():
    for L in lattices_up_to(5, distributive_only=True):
        assert L.meet in set(enumerate_commutator_tables(L))


def test_ring_corpus_shape():
    rings = list(ring_corpus())
    assert len(rings) == 268
    zn = [R for R in rings if R.provenance["type"] == "Zn"]
    assert [R.n for R in zn] == list(range(2, 101))
    assert all(R.n <= 64 for R in rings if R.provenance["type"] == "product")
    assert sum(map(is_semiprime, rings)) == 125


def test_squarefree():
    assert [n for n in range(2, 20) if not is_squarefree(n)] == [4, 8, 9, 12, 16, 18]
