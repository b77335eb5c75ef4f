"""Randomized properties over the small exhaustive corpora."""
import functools

from hypothesis import given, settings, strategies as st

from lattkit.commutator import equiv_congruence, spectrum, validate_commutator
from lattkit.conditions import ALL_CONDITIONS, ann_of, check_condition
from lattkit.enumeration import enumerate_commutator_tables, lattices_up_to
from lattkit.lattice import (FiniteLattice, bits, canonical_form, class_extrema, congruence_generated,
                             direct_product, enumerate_congruences, identity_congruence, irreducibles,
                             is_distributive, is_isomorphic, quotient_lattice, upper_cover)
from lattkit.rings import build_product, build_zn, enumerate_ideals, hand_rings, idempotents

settings.register_profile("lattkit", max_examples=150, deadline=None, derandomize=True)
settings.load_profile("lattkit")


@functools.lru_cache(maxsize=None)
def small_lattices():
    return tuple(lattices_up_to(6))


@functools.lru_cache(maxsize=None)
def distributive_lattices():
    return tuple(L for L in small_lattices() if is_distributive(L))


@functools.lru_cache(maxsize=None)
def commutator_lattices():
    out = []
    for L in lattices_up_to(4):
        out.extend(validate_commutator(L, t) for t in enumerate_commutator_tables(L))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def small_rings():
    base = [build_zn(n) for n in range(2, 25)] + hand_rings()
    return tuple(base + [build_product([build_zn(a), build_zn(b)]) for a in (2, 3, 4) for b in (2, 3, 5, 6)])


lattices = st.sampled_from(small_lattices())
distributive = st.sampled_from(distributive_lattices())
commutators = st.sampled_from(commutator_lattices())
rings = st.sampled_from(small_rings())


def subsets(n):
    return st.integers(min_value=0, max_value=(1 << n) - 1)


@given(lattices, st.data())
def test_meet_and_join_are_greatest_lower_and_least_upper_bounds(L, data):
    x, y, z = (data.draw(st.integers(0, L.n - 1)) for _ in range(3))
    m, j = L.meet[x][y], L.join[x][y]
    assert L.leq[m][x] and L.leq[m][y] and L.leq[x][j] and L.leq[y][j]
    if L.leq[z][x] and L.leq[z][y]:
        assert L.leq[z][m]
    if L.leq[x][z] and L.leq[y][z]:
        assert L.leq[j][z]


@given(lattices, st.data())
def test_annihilator_is_antitone_and_a_triple_closure(L, data):
    u = data.draw(subsets(L.n))
    v = u | data.draw(subsets(L.n))
    au, av = ann_of(L, u), ann_of(L, v)
    assert av & ~au == 0
    assert au & ~ann_of(L, ann_of(L, au)) == 0
    assert ann_of(L, ann_of(L, au)) == au
    assert ann_of(L, u | v) == au & ann_of(L, v)


@given(distributive, st.data())
def test_distributive_annihilators_are_principal(L, data):
    u = data.draw(subsets(L.n))
    a = ann_of(L, u)
    assert a == ann_of(L, 1 << L.join_of(u))
    assert a == L.down[L.join_of(a)]


@given(lattices, st.data())
def test_generated_congruence_is_least_containing_the_pairs(L, data):
    pairs = data.draw(st.lists(st.tuples(st.integers(0, L.n - 1), st.integers(0, L.n - 1)), max_size=3))
    theta = congruence_generated(L, pairs)
    above = [c for c in enumerate_congruences(L) if all(c.related(x, y) for x, y in pairs)]
    assert theta in above
    assert all(theta <= c for c in above)


@given(lattices, st.data())
def test_class_extrema_respect_the_operations(L, data):
    theta = data.draw(st.sampled_from(enumerate_congruences(L)))
    x, y = data.draw(st.integers(0, L.n - 1)), data.draw(st.integers(0, L.n - 1))
    (lx, hx), (ly, hy) = class_extrema(L, theta, x), class_extrema(L, theta, y)
    assert class_extrema(L, theta, L.join[x][y])[0] == L.join[lx][ly]
    assert class_extrema(L, theta, L.meet[x][y])[1] == L.meet[hx][hy]


@given(lattices)
def test_identity_quotient_is_isomorphic(L):
    assert is_isomorphic(quotient_lattice(L, identity_congruence(L)).lattice, L)


@given(lattices, st.randoms(use_true_random=False))
def test_canonical_form_ignores_labelling(L, rnd):
    perm = list(range(L.n))
    rnd.shuffle(perm)
    leq = [[L.leq[perm[i]][perm[j]] for j in range(L.n)] for i in range(L.n)]
    assert canonical_form(FiniteLattice.from_leq(leq))[0] == canonical_form(L)[0]


@given(st.sampled_from(lattices_up_to(4)), st.sampled_from(lattices_up_to(4)))
def test_conditions_of_a_product_are_the_conjunction(L1, L2):
    P = direct_product(L1, L2)
    for c in ALL_CONDITIONS:
        assert check_condition(P, c).holds == (check_condition(L1, c).holds and check_condition(L2, c).holds)


@given(commutators, st.data())
def test_radical_is_a_closure_that_splits_meets(CL, data):
    L, c = CL.base, CL.comm
    rho = spectrum(CL).rho
    a, b = data.draw(st.integers(0, L.n - 1)), data.draw(st.integers(0, L.n - 1))
    assert L.leq[a][rho[a]] and rho[rho[a]] == rho[a]
    if L.leq[a][b]:
        assert L.leq[rho[a]][rho[b]]
    assert rho[L.meet[a][b]] == rho[c[a][b]] == L.meet[rho[a]][rho[b]]


@given(commutators)
def test_each_radical_class_has_its_radical_as_maximum(CL):
    sd = spectrum(CL)
    theta = equiv_congruence(CL).congruence
    for block in theta.blocks:
        radicals = [x for x in bits(block) if x in sd.radicals]
        assert len(radicals) == 1
        assert radicals[0] == CL.base.join_of(block)


@given(commutators)
def test_top_class_is_trivial_iff_top_is_idempotent(CL):
    L = CL.base
    trivial = equiv_congruence(CL).congruence.class_mask(L.top) == 1 << L.top
    assert trivial == (CL.comm[L.top][L.top] == L.top)


@given(commutators)
def test_primes_are_the_strictly_meet_irreducibles_with_non_vanishing_square_cover(CL):
    L = CL.base
    smi = irreducibles(L).smi
    expected = {x for x in smi if not L.leq[CL.comm[upper_cover(L, x)][upper_cover(L, x)]][x]}
    assert spectrum(CL).spec == expected


@given(rings, st.data())
def test_ring_annihilator_ignores_generated_closure(R, data):
    u = data.draw(subsets(R.n))
    assert R.annihilator_mask(u) == R.annihilator_mask(R.generated_ideal(u))


@given(rings, st.data())
def test_ideal_product_lies_in_the_intersection(R, data):
    IL = enumerate_ideals(R)
    i, j = data.draw(st.sampled_from(IL.ideals)), data.draw(st.sampled_from(IL.ideals))
    p = R.ideal_product(i.mask, j.mask)
    assert p & ~(i.mask & j.mask) == 0
    assert p in IL.index


@given(rings)
def test_idempotents_satisfy_boolean_laws(R):
    E = idempotents(R)
    es = E.elements
    for e in es:
        assert E.meet(e, E.complement(e)) == R.zero and E.join(e, E.complement(e)) == R.one
        for f in es:
            assert E.meet(e, f) in es and E.join(e, f) in es
            for g in es:
                assert E.meet(e, E.join(f, g)) == E.join(E.meet(e, f), E.meet(e, g))
