import pytest

from engine.errors import ConstraintShapeError, PreconditionError
from engine.ideals.lattice import subspace_ideal, whole_ring, zero_ideal
from engine.inverses.equations import EQ1, EQ12, satisfies
from engine.inverses.prescribed import (
    IdealConstraints,
    Mode,
    Shape,
    annihilator_outer_clauses,
    inner_characterize,
    mitsch_extremes,
    mitsch_leq,
    one_inverse_family,
    one_inverse_report,
    one_inverse_solution_set,
    outer_existence,
    outer_with,
    prescribe,
    reflexive_characterize,
    reflexive_conditions,
)


def _bundles(ring, mode=Mode.OUTER):
    """The four pair-shaped bundles carried by E21 as an outer inverse of E12."""
    S = subspace_ideal(ring, "right", [["0", "1"]])
    S2 = subspace_ideal(ring, "left", [["1", "0"]])
    return {
        Shape.RIGHT_PAIR: IdealConstraints(right_prin=S, right_ann=S, mode=mode),
        Shape.LEFT_PAIR: IdealConstraints(left_prin=S2, left_ann=S2, mode=mode),
        Shape.PRINCIPAL_PAIR: IdealConstraints(right_prin=S, left_prin=S2, mode=mode),
        Shape.ANNIHILATOR_PAIR: IdealConstraints(right_ann=S, left_ann=S2, mode=mode),
    }


@pytest.mark.parametrize(
    "shape", [Shape.RIGHT_PAIR, Shape.LEFT_PAIR, Shape.PRINCIPAL_PAIR, Shape.ANNIHILATOR_PAIR]
)
def test_every_pair_shape_gives_e21(m2f5, shape):
    a, e21 = m2f5.unit_matrix(1, 2), m2f5.unit_matrix(2, 1)
    c = _bundles(m2f5)[shape]
    rep = outer_with(a, c)
    assert rep.status == "unique" and rep.element == e21
    assert all(rep.details["identities"].values())
    assert all(rep.details["idempotents"].values())
    refl = prescribe(a, c, "reflexive")
    assert refl.element == e21
    assert all(reflexive_conditions(a, c).values())
    existence = outer_existence(a, c)
    assert existence.consistent and existence.holds


def test_outer_inverse_absent_when_rann_meets_s(m2f5):
    a = m2f5.unit_matrix(1, 2)
    # rann(E12) is the column space span(e1) itself
    S = subspace_ideal(m2f5, "right", [["1", "0"]])
    rep = outer_with(a, IdealConstraints(right_prin=S, right_ann=S, mode=Mode.OUTER))
    assert rep.status == "none"
    assert rep.reason == "rann(a) ∩ S ≠ {0}"
    ex = outer_existence(a, IdealConstraints(right_prin=S, right_ann=S, mode=Mode.OUTER))
    assert ex.consistent and not ex.holds


def test_inner_family_for_right_pair(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    c = IdealConstraints(right_prin=first_row_zero, right_ann=first_row_zero, mode=Mode.INNER)
    rep = one_inverse_report(a, c)
    assert rep.status == "family"
    expected = sorted(
        (m2f5.element([["0", str(k)], ["1", "0"]]) for k in range(5)), key=lambda e: e.sort_key()
    )
    assert rep.members == expected
    assert not rep.details["widened"]


def test_inner_family_for_single_constraint(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    fam = one_inverse_family(a, IdealConstraints(right_prin=first_row_zero, mode=Mode.INNER))
    assert fam.widened
    members = fam.members()
    assert len(members) == 25
    assert all(satisfies(a, x, EQ1) and x.key[0][0] == 0 for x in members)


def test_inner_family_of_a_unit(z6):
    c = IdealConstraints(right_prin=whole_ring(z6, "right"), right_ann=zero_ideal(z6, "right"))
    rep = prescribe(z6.element(5), c, "inner")
    assert rep.members == [z6.element(5)]


def test_inner_characterizations_agree(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    c = IdealConstraints(right_prin=first_row_zero, right_ann=first_row_zero, mode=Mode.INNER)
    for x in (m2f5.unit_matrix(2, 1), m2f5.unit_matrix(2, 1) + m2f5.unit_matrix(2, 2), m2f5.one):
        assert inner_characterize(a, x, c).consistent


def test_solution_set_from_a_fixed_inner_inverse(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    c = IdealConstraints(right_prin=first_row_zero, right_ann=first_row_zero, mode=Mode.INNER)
    report = one_inverse_solution_set(a, c, m2f5.unit_matrix(2, 1))
    assert report.equal and len(report.actual) == 5
    with pytest.raises(PreconditionError):
        one_inverse_solution_set(a, c, a)


def test_reflexive_characterization_of_e21(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    c = IdealConstraints(right_prin=first_row_zero, right_ann=first_row_zero, mode=Mode.OUTER)
    good = reflexive_characterize(a, m2f5.unit_matrix(2, 1), c)
    assert good.consistent and good.holds
    bad = reflexive_characterize(a, m2f5.unit_matrix(2, 1) + a, c)
    assert bad.consistent and not bad.holds


def test_annihilator_pair_clauses(m2f5):
    a, e21 = m2f5.unit_matrix(1, 2), m2f5.unit_matrix(2, 1)
    c = _bundles(m2f5)[Shape.ANNIHILATOR_PAIR]
    assert annihilator_outer_clauses(a, e21, c).holds
    assert annihilator_outer_clauses(a, e21 + a, c).consistent


def test_reflexive_with_one_constraint_is_a_family(m2f5, first_row_zero):
    a = m2f5.unit_matrix(1, 2)
    rep = prescribe(a, IdealConstraints(right_prin=first_row_zero, mode=Mode.OUTER), "reflexive")
    assert rep.status == "family"
    assert rep.members and all(satisfies(a, x, EQ12) for x in rep.members)
    assert rep.element in rep.members


def test_malformed_bundles(m2f5, first_row_zero):
    left = subspace_ideal(m2f5, "left", [["1", "0"]])
    with pytest.raises(ConstraintShapeError):
        IdealConstraints()
    with pytest.raises(ConstraintShapeError):
        IdealConstraints(right_prin=left)
    with pytest.raises(ConstraintShapeError):
        IdealConstraints(right_prin=first_row_zero, left_ann=left)
    with pytest.raises(ConstraintShapeError):
        outer_with(m2f5.unit_matrix(1, 2), IdealConstraints(right_prin=first_row_zero))


def test_mitsch_order(m2q):
    e11 = m2q.unit_matrix(1, 1)
    assert mitsch_leq(m2q.zero, e11)
    assert mitsch_leq(e11, e11)
    assert mitsch_leq(e11, m2q.one)
    assert not mitsch_leq(m2q.one, e11)


def test_mitsch_extremes_single_out_the_prescribed_inverse(m2f2):
    a = m2f2.unit_matrix(1, 2)
    for c in _bundles(m2f2).values():
        report = mitsch_extremes(a, c)
        assert report.prescribed == m2f2.unit_matrix(2, 1)
        assert report.related and report.consistent


def _single(ring, slot, mode):
    col_e2 = subspace_ideal(ring, "right", [["0", "1"]])
    row_e1 = subspace_ideal(ring, "left", [["1", "0"]])
    field = {"S": "right_prin", "T": "right_ann", "S'": "left_prin", "T'": "left_ann"}[slot]
    return IdealConstraints(mode=mode, **{field: col_e2 if slot in ("S", "T") else row_e1})


# a = E12 over F5; p and q range over F5
_FAMILIES = {
    ("inner", "S"): lambda p, q: [[0, q], [1, p]],
    ("inner", "T'"): lambda p, q: [[0, q], [1, p]],
    ("inner", "T"): lambda p, q: [[p, q], [1, 0]],
    ("inner", "S'"): lambda p, q: [[p, q], [1, 0]],
    ("reflexive", "S"): lambda p, q: [[0, 0], [1, p]],
    ("reflexive", "T'"): lambda p, q: [[0, 0], [1, p]],
    ("reflexive", "T"): lambda p, q: [[p, 0], [1, 0]],
    ("reflexive", "S'"): lambda p, q: [[p, 0], [1, 0]],
}


@pytest.mark.parametrize("kind,slot", sorted(_FAMILIES))
def test_single_constraint_families_are_exact(m2f5, kind, slot):
    a = m2f5.unit_matrix(1, 2)
    build = _FAMILIES[(kind, slot)]
    expected = {m2f5.element([[str(v) for v in row] for row in build(p, q)]).key for p in range(5) for q in range(5)}
    if kind == "inner":
        members = one_inverse_family(a, _single(m2f5, slot, Mode.INNER)).members()
        assert len(expected) == 25
    else:
        rep = prescribe(a, _single(m2f5, slot, Mode.OUTER), "reflexive")
        assert rep.status == "family" and rep.element in rep.members
        members = rep.members
        assert len(expected) == 5
    assert len(members) == len(expected)
    assert {x.key for x in members} == expected
