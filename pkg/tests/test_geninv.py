import pytest

from engine.errors import StructuralError, UnsupportedInvolutionError
from engine.inverses.classic import (
    classify_projector_relations,
    core_inverse,
    drazin_identities,
    drazin_index,
    drazin_inverse,
    dual_core_inverse,
    equation_condition,
    example_grids,
    group_inverse,
    inner_identities,
    inner_inverse,
    moore_penrose,
    one_three_inverse,
    outer_identities,
    reflexive_inverse,
    reflexive_criteria,
    solve_affine,
    two_sided_inverse,
)
from engine.inverses.equations import (
    EQ1,
    EQ12,
    EQ1234,
    EquationSet,
    count_inverse_set,
    enumerate_inverse_set,
    satisfied_equations,
    satisfies,
)
from engine.ring.core import ring_for


@pytest.mark.parametrize(
    "text,expected",
    [
        ("1", "1"),
        ("4, 3,1", "1,3,4"),
        ("2,5,1^2", "2,5,1^2"),
        ("pow_left(3),2", "2,1^3"),
        ("^2 1", "^2 1"),
    ],
)
def test_equation_sets_parse_and_render(text, expected):
    assert EquationSet.parse(text).render() == expected


@pytest.mark.parametrize("bad", ["", "1,10", "x", "0"])
def test_malformed_equation_sets(bad):
    with pytest.raises(StructuralError):
        EquationSet.parse(bad)


def test_rational_example_values(m2q, a3):
    cases = {
        group_inverse: [["1/2", "-1/2"], ["0", "0"]],
        moore_penrose: [["1/4", "0"], ["-1/4", "0"]],
        core_inverse: [["1/2", "0"], ["0", "0"]],
        dual_core_inverse: [["1/4", "-1/4"], ["-1/4", "1/4"]],
    }
    for fn, expected in cases.items():
        rep = fn(a3)
        assert rep.status == "unique"
        assert m2q.render(rep.element) == expected
    mp = moore_penrose(a3)
    assert EQ1234.equations <= mp.satisfied.equations
    assert {label for label, _ in mp.projector_data} == {"φ_ax", "φ_xa", "_axφ", "_xaφ"}


def test_rational_example_grids(a3):
    grids = example_grids(a3)
    assert len(grids) == 4
    assert all(grids.values())


def test_nilpotent_matrix_has_drazin_but_no_group_inverse(m2q):
    e12 = m2q.unit_matrix(1, 2)
    d = drazin_inverse(e12)
    assert d.element == m2q.zero and d.index == 2
    g = group_inverse(e12)
    assert g.status == "none"
    assert g.reason == "index 2 > 1"
    assert all(drazin_identities(e12, d.element, 2).values())


def test_modular_inverse_sets(z6):
    two = z6.element(2)
    assert [z6.render(x) for x in enumerate_inverse_set(two, EQ1)] == ["2", "5"]
    assert group_inverse(two).element == two
    assert drazin_index(z6.element(3)) == 1
    assert inner_inverse(two) == two


def test_modular_nilpotent_index():
    z8 = ring_for("zn:8")
    two = z8.element(2)
    assert drazin_index(two) == 3
    rep = group_inverse(two)
    assert rep.status == "none" and rep.reason == "index 3 > 1"
    assert drazin_inverse(two).element == z8.zero


def test_f5_worked_example_counts(m2f5):
    e12 = m2f5.unit_matrix(1, 2)
    inner = enumerate_inverse_set(e12, EQ1)
    assert len(inner) == 125
    assert all(x.key[1][0] == 1 for x in inner)
    reflexive = enumerate_inverse_set(e12, EQ12)
    assert len(reflexive) == 25
    # x12 = x11 * x22 on top of x21 = 1
    assert all(x.key[0][1] == (x.key[0][0] * x.key[1][1]) % 5 for x in reflexive)
    assert count_inverse_set(e12, EQ12) == 25


def test_moore_penrose_absent_over_f2(m2f2):
    a = m2f2.element([["1", "1"], ["0", "0"]])
    rep = moore_penrose(a)
    assert rep.status == "none" and rep.element is None
    assert rep.reason


def test_involution_required_for_star_inverses(z6):
    with pytest.raises(UnsupportedInvolutionError):
        moore_penrose(z6.element(2))
    for star_inverse in (core_inverse, dual_core_inverse):
        with pytest.raises(UnsupportedInvolutionError):
            star_inverse(z6.element(3))
    with pytest.raises(UnsupportedInvolutionError):
        satisfies(z6.element(2), z6.element(2), EquationSet.of(3))
    # (3) and (4) are simply not reported on rings without an involution
    assert satisfied_equations(z6.element(2), z6.element(2)).equations == frozenset({1, 2, 5, 6, 7, 8, 9})


def test_inner_and_reflexive_witnesses(a3):
    g = inner_inverse(a3)
    assert satisfies(a3, g, EQ1)
    assert all(inner_identities(a3, g).values())
    x = reflexive_inverse(a3)
    assert satisfies(a3, x, EQ12)
    assert all(outer_identities(a3, x).values())
    assert all(v is not False for v in reflexive_criteria(a3, x).values())


def test_one_three_inverse_over_f2(m2f2):
    e12 = m2f2.unit_matrix(1, 2)
    x = one_three_inverse(e12)
    assert x is not None and satisfies(e12, x, EquationSet.of(1, 3))


def test_two_sided_inverse(m2q, a3):
    assert two_sided_inverse(a3).status == "none"
    u = m2q.one + m2q.unit_matrix(1, 2)
    assert two_sided_inverse(u).element == m2q.one - m2q.unit_matrix(1, 2)


def test_projector_relations_agree_with_the_equations(a3):
    mp = moore_penrose(a3).element
    rel = classify_projector_relations(a3, mp)
    assert rel.consistent
    assert rel.memberships["1,2"] and rel.memberships["1,3"] and rel.memberships["1,4"]
    assert "1,2" in rel.flagged
    assert all(rho is not None for rho in rel.maps.values())


def test_projector_relations_for_non_inverses(m2f2):
    e12 = m2f2.unit_matrix(1, 2)
    for x in m2f2.elements():
        assert classify_projector_relations(e12, x).consistent


def test_affine_solver(a3, m2q):
    x = solve_affine(m2q, [equation_condition(a3, 1)])
    assert satisfies(a3, x, EQ1)
    with pytest.raises(StructuralError):
        equation_condition(a3, 2)
