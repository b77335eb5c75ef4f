import pytest

from lattkit.conditions import ConditionId, Family, Kappa
from lattkit.lattice import (boolean_lattice, chain, diamond, divisor_lattice, enumerate_congruences,
                             identity_congruence, total_congruence)
from lattkit.report import Status
from lattkit.transfer import (PreconditionViolated, blp_check, make_context, one_class_trivial,
                              transfer_report, verify_ann_quotient, zero_class_trivial)

from conftest import cong, lat


def test_bound_classes_of_three_chain_congruences():
    C3 = chain(3)
    upper = make_context(C3, cong(C3, "a 1"))
    assert zero_class_trivial(upper) and not one_class_trivial(upper)
    ident = make_context(C3, identity_congruence(C3))
    assert zero_class_trivial(ident) and one_class_trivial(ident)
    total = make_context(C3, total_congruence(C3))
    assert not zero_class_trivial(total) and not one_class_trivial(total)


def test_annihilator_of_atom_maps_to_annihilator_of_top():
    C3 = chain(3)
    ctx = make_context(C3, cong(C3, "a 1"))
    a = C3.index("a")
    from lattkit.conditions import ann_of
    image = ctx.image(ann_of(C3, 1 << a))
    assert image == ann_of(ctx.quotient, 1 << ctx.proj[a]) == 1 << ctx.quotient.bottom
    assert verify_ann_quotient(ctx).ok


def test_annihilator_transfer_requires_trivial_zero_class():
    C3 = chain(3)
    with pytest.raises(PreconditionViolated):
        verify_ann_quotient(make_context(C3, cong(C3, "0 a")))


@pytest.mark.parametrize("L", [boolean_lattice(2), divisor_lattice(12), diamond()])
def test_identity_quotient_reproduces_every_verdict(L):
    rep = transfer_report(make_context(L, identity_congruence(L)))
    assert rep.ok
    assert rep.source == rep.target


def test_lifting_property_on_small_quotients():
    C3 = chain(3)
    assert blp_check(make_context(C3, cong(C3, "0 a")))["blp"]
    M3 = diamond()
    assert blp_check(make_context(M3, total_congruence(M3)))["blp"]


def test_without_trivial_zero_class_only_unconditional_claims_run():
    C3 = chain(3)
    rep = transfer_report(make_context(C3, cong(C3, "0 a")))
    by = rep.checks.by_claim()
    assert by["c5_descends[one]"].status is Status.HOLDS
    for name in ("c1_descends[one]", "c3_equivalent[one]", "c4_equivalent[all]", "ann_image_exact"):
        assert by[name].status is Status.NOT_MET


@pytest.mark.parametrize("L", [boolean_lattice(3), divisor_lattice(36), chain(4)])
def test_transfer_claims_hold_on_every_quotient_of_stone_lattices(L):
    for theta in enumerate_congruences(L):
        assert transfer_report(make_context(L, theta)).ok


# Recorded counterexamples: the claims below are asserted by the transfer
# suite and fail on these instances, so they pin known defects of the claims.

def test_double_annihilator_families_do_not_transfer_through_top_collapse(b2_plus_top):
    theta = cong(b2_plus_top, "c 1")
    rep = transfer_report(make_context(b2_plus_top, theta))
    failing = {c.claim for c in rep.checks.failures()}
    assert {f"c3_equivalent[{k.value}]" for k in Kappa} <= failing
    assert {f"c4_equivalent[{k.value}]" for k in Kappa} <= failing
    c3 = ConditionId(Family.C3, Kappa.ONE)
    assert (rep.source[c3], rep.target[c3]) == (False, True)
    logged = rep.checks.by_claim()["meet_ann_join_reflected"]
    assert logged.failed and not logged.asserted


def test_fifth_condition_does_not_descend_when_zero_class_is_collapsed():
    M = lat("0 a b c d 1", "0-a a-b a-c b-d c-d d-1")
    rep = transfer_report(make_context(M, cong(M, "0 a")))
    check = rep.checks.by_claim()["c5_descends[one]"]
    assert check.failed
    assert check.witness == {"M": True, "quotient": False}
