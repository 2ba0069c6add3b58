import pytest

from engine.errors import PreconditionError, UnsupportedInvolutionError
from engine.inverses.classic import core_inverse, dual_core_inverse, moore_penrose
from engine.inverses.special import (
    SET_IDENTITY_TAGS,
    StarClass,
    e_core,
    f_dual_core,
    is_right_w_core,
    is_weighted_mp,
    reduction_holds,
    right_w_core,
    star_class_contains,
    star_class_set,
    star_set_identity,
    v_dual_core,
    w_core,
    weighted,
    weighted_mp,
)


def test_star_classes_agree_with_their_projector_descriptions(m2f2):
    e12 = m2f2.unit_matrix(1, 2)
    for cls in StarClass:
        for x in m2f2.elements():
            assert star_class_contains(e12, x, cls).consistent, (cls, x.key)


def test_star_class_set_of_a_projection(m2f2):
    e11 = m2f2.unit_matrix(1, 1)
    # {1,3,4} leaves x22 free
    members = star_class_set(e11, StarClass.C134)
    assert {x.key for x in members} == {e11.key, m2f2.one.key}


@pytest.mark.parametrize("tag", SET_IDENTITY_TAGS)
def test_set_identities_over_f2(m2f2, tag):
    report = star_set_identity(m2f2.unit_matrix(1, 2), tag)
    assert report.holds, report


def test_set_identity_without_involution(z6):
    assert star_set_identity(z6.element(2), "15").holds
    with pytest.raises(UnsupportedInvolutionError):
        star_set_identity(z6.element(2), "13")
    with pytest.raises(UnsupportedInvolutionError):
        star_class_contains(z6.element(2), z6.element(2), StarClass.C13)


def test_identity_weights_reduce_to_the_classic_inverses(m2q, a3):
    one = m2q.one
    assert weighted_mp(a3, one, one).element == moore_penrose(a3).element
    assert e_core(a3, one).element == core_inverse(a3).element
    assert f_dual_core(a3, one).element == dual_core_inverse(a3).element
    assert w_core(a3, one).element == core_inverse(a3).element
    assert v_dual_core(a3, one).element == dual_core_inverse(a3).element


def test_weighted_moore_penrose_with_a_diagonal_weight(m2q, a3):
    e = m2q.element([["2", "0"], ["0", "1"]])
    rep = weighted_mp(a3, e, m2q.one)
    assert rep.found
    assert is_weighted_mp(a3, rep.element, e, m2q.one)
    assert rep.details["grid"]


def test_weights_must_be_invertible_and_symmetric(m2q, a3):
    with pytest.raises(PreconditionError):
        weighted_mp(a3, m2q.one + m2q.unit_matrix(1, 2), m2q.one)
    with pytest.raises(PreconditionError):
        e_core(a3, m2q.unit_matrix(1, 1))
    with pytest.raises(PreconditionError):
        weighted("bogus", a3, m2q.one)


def test_weighted_dispatch(m2q, a3):
    one = m2q.one
    assert weighted("ef-mp", a3, one).element == moore_penrose(a3).element
    assert weighted("w-core", a3, one).kind == "w-core"
    assert weighted("v-dual-core", a3, one).element == dual_core_inverse(a3).element


def test_w_core_grid_and_reductions(m2q, a3):
    rep = w_core(a3, m2q.one)
    assert rep.details["grid"]
    assert all(reduction_holds("w-core", a3, rep.element, m2q.one).values())
    with pytest.raises(PreconditionError):
        reduction_holds("nope", a3, rep.element, m2q.one)


def test_w_core_absent_for_a_nilpotent(m2q):
    e12 = m2q.unit_matrix(1, 2)
    rep = w_core(e12, m2q.one)
    assert rep.status == "none"


def test_right_w_core_family(m2f2):
    e11 = m2f2.unit_matrix(1, 1)
    rep = right_w_core(e11, m2f2.one)
    assert rep.status == "family"
    assert e11 in rep.members
    assert all(is_right_w_core(e11, x, m2f2.one) for x in rep.members)
    assert all(reduction_holds("right-w-core", e11, e11, m2f2.one).values())


def test_weighted_inverses_need_an_involution(z6):
    with pytest.raises(UnsupportedInvolutionError):
        weighted_mp(z6.element(2), z6.one, z6.one)
