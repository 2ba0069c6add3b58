import pytest

from engine.errors import PreconditionError, StructuralError
from engine.inverses.bc import BCFlavor, bc_equality_clauses, bc_inverse, closed_form_clauses
from engine.inverses.classic import inner_inverse
from engine.inverses.pq import (
    PQFlavor,
    bott_duffin_p,
    djordjevic_wei,
    image_kernel_inverse,
    pq_inverse,
    pq_special_cases,
    regular_iff_idempotents,
)


@pytest.mark.parametrize(
    "flavor,kind",
    [
        (BCFlavor.FULL, "bc"),
        (BCFlavor.RIGHT_HYBRID, "bc-right-hybrid"),
        (BCFlavor.LEFT_HYBRID, "bc-left-hybrid"),
        (BCFlavor.ANNIHILATOR, "bc-annihilator"),
    ],
)
def test_bc_flavors_agree_on_matrix_units(m2f5, flavor, kind):
    a, e21 = m2f5.unit_matrix(1, 2), m2f5.unit_matrix(2, 1)
    rep = bc_inverse(a, e21, e21, flavor)
    assert rep.kind == kind
    assert rep.element == e21
    assert rep.details["closed_form"] == e21
    assert rep.details["flavor"] == flavor.value


def test_bc_closed_form_clauses_are_consistent(m2f5):
    a, e21 = m2f5.unit_matrix(1, 2), m2f5.unit_matrix(2, 1)
    g = inner_inverse(e21 * a * e21)
    grid = closed_form_clauses(a, e21, e21, g)
    assert all(cr.consistent for cr in grid.values())
    assert all(cr.holds for cr in grid.values())


def test_bc_equality_clauses(m2f5):
    a, e21 = m2f5.unit_matrix(1, 2), m2f5.unit_matrix(2, 1)
    report = bc_equality_clauses(a, e21, e21, e21)
    assert report.consistent and report.holds
    assert bc_equality_clauses(a, e21, e21, a).consistent


def test_bc_inverse_absent(m2f5):
    e12 = m2f5.unit_matrix(1, 2)
    # cab = 0, so nothing in e12·R is an outer inverse
    rep = bc_inverse(e12, e12, e12)
    assert rep.status == "none"


def test_djordjevic_wei_from_the_group_inverse(z6):
    a = z6.element(2)
    # a# = 2, so p = a#a = 4 and q = 1 - aa# = 3
    p, q = z6.element(4), z6.element(3)
    rep = djordjevic_wei(a, p, q)
    assert rep.element == a
    assert all(rep.details["final_claim"].values())
    assert image_kernel_inverse(a, p, q).element == a
    assert pq_inverse(a, p, q, PQFlavor.IMAGE_KERNEL).kind == "image-kernel"


def test_djordjevic_wei_absent(z6):
    rep = djordjevic_wei(z6.element(2), z6.one, z6.zero)
    assert rep.status == "none"
    assert rep.reason == "no outer inverse with xR = pR and rann(x) = qR"


def test_pq_preconditions(z6):
    with pytest.raises(PreconditionError):
        djordjevic_wei(z6.element(2), z6.element(2), z6.zero)
    with pytest.raises(StructuralError):
        pq_inverse(z6.element(2), z6.element(4), flavor=PQFlavor.IMAGE_KERNEL)


def test_bott_duffin(z6):
    assert bott_duffin_p(z6.element(5), z6.one).element == z6.element(5)
    assert bott_duffin_p(z6.element(2), z6.element(4)).element == z6.element(2)
    rep = bott_duffin_p(z6.element(3), z6.element(4))
    assert rep.status == "none" and rep.reason == "1−p+ap is not invertible"
    assert pq_inverse(z6.element(2), z6.element(4), flavor=PQFlavor.BOTT_DUFFIN).element == z6.element(2)


def test_pq_special_cases(z6, a3):
    assert pq_special_cases(z6.element(2)) == {"a^D": True}
    cases = pq_special_cases(a3)
    assert set(cases) == {"a^D", "a†", "a^core", "a_core"}
    assert all(cases.values())


def test_regularity_through_idempotents(z6, m2f2, a3):
    for a in (z6.element(2), m2f2.unit_matrix(1, 2), a3):
        report = regular_iff_idempotents(a)
        assert report.consistent and report.holds
