import pytest

from engine.errors import PreconditionError, StructuralError, UnsupportedInvolutionError
from engine.ideals.lattice import (
    all_subgroup_ideals,
    annihilator,
    annihilator_of,
    complement,
    direct_sum,
    from_elements,
    ideal_contains,
    ideal_image,
    ideal_join,
    ideal_meet,
    ideal_members,
    ideal_preimage,
    ideal_size,
    ideal_subset,
    orthogonal,
    principal_ideal,
    subspace_ideal,
    to_extensional,
    whole_ring,
    zero_ideal,
)
from engine.ideals.projector import (
    EndomorphismTable,
    map_as_projector,
    map_equals_projector,
    projector_complement,
    projector_from_idempotent,
    projector_from_sum,
    projector_orthogonality,
)


def _keys(I):
    return sorted(I.keys)


def test_modular_principal_ideals_and_annihilators(z6):
    two, three = z6.element(2), z6.element(3)
    assert _keys(principal_ideal(two, "right")) == [0, 2, 4]
    assert _keys(annihilator(two, "right")) == [0, 3]
    assert _keys(annihilator(three, "left")) == [0, 2, 4]
    assert len(all_subgroup_ideals(z6)) == 4


def test_matrix_right_ideal_is_a_column_space(m2f2):
    e12 = m2f2.unit_matrix(1, 2)
    second_row_zero = subspace_ideal(m2f2, "right", [["1", "0"]])
    assert principal_ideal(e12, "right") == second_row_zero
    # E12·X = 0 exactly when the second row of X vanishes
    assert annihilator(e12, "right") == second_row_zero
    assert ideal_size(second_row_zero) == 4
    members = ideal_members(second_row_zero)
    assert len(members) == 4
    assert all(m.key[1] == (0, 0) for m in members)


def test_rational_annihilator_and_membership(m2q, a3):
    assert principal_ideal(a3, "right") == subspace_ideal(m2q, "right", [["1", "0"]])
    rann = annihilator(a3, "right")
    assert rann == subspace_ideal(m2q, "right", [["1", "1"]])
    assert ideal_contains(rann, m2q.element([["1", "0"], ["1", "0"]]))
    assert not ideal_contains(rann, m2q.unit_matrix(1, 1))
    assert ideal_subset(principal_ideal(a3, "right"), whole_ring(m2q, "right"))


def test_lattice_operations_on_z6(z6):
    I2 = principal_ideal(z6.element(2), "right")
    I3 = principal_ideal(z6.element(3), "right")
    assert _keys(ideal_meet(I2, I3)) == [0]
    assert ideal_join(I2, I3) == whole_ring(z6, "right")
    assert ideal_image(z6.element(3), I2) == zero_ideal(z6, "right")
    assert ideal_preimage(z6.element(2), zero_ideal(z6, "right")) == annihilator(z6.element(2), "right")
    assert _keys(annihilator_of(I2)) == [0, 3]


def test_lattice_operations_on_matrices(m2q):
    e11, e22 = m2q.unit_matrix(1, 1), m2q.unit_matrix(2, 2)
    S, T = principal_ideal(e11, "right"), principal_ideal(e22, "right")
    assert ideal_meet(S, T) == zero_ideal(m2q, "right")
    assert ideal_join(S, T) == whole_ring(m2q, "right")
    e12 = m2q.unit_matrix(1, 2)
    assert ideal_image(e12, T) == S
    assert ideal_preimage(e12, zero_ideal(m2q, "right")) == S
    assert annihilator_of(S) == annihilator(e11, "left")


def test_side_and_ring_mismatches_raise(z6, m2q):
    right = principal_ideal(z6.element(2), "right")
    left = principal_ideal(z6.element(2), "left")
    with pytest.raises(StructuralError):
        ideal_subset(right, left)
    with pytest.raises(StructuralError):
        projector_from_sum(right, left)
    with pytest.raises(StructuralError):
        ideal_contains(right, m2q.one)
    with pytest.raises(StructuralError):
        principal_ideal(z6.element(2), "middle")


def test_element_sets_must_be_ideals(z6, m2f2):
    assert from_elements(z6, "right", [z6.element(k) for k in (0, 2, 4)]) == principal_ideal(z6.element(2), "right")
    with pytest.raises(StructuralError):
        from_elements(z6, "right", [z6.element(0), z6.element(1)])
    with pytest.raises(StructuralError):
        from_elements(m2f2, "right", [m2f2.zero, m2f2.unit_matrix(1, 2), m2f2.unit_matrix(2, 1)])


def test_direct_sums(z6, m2f2):
    S, T = principal_ideal(z6.element(2), "right"), principal_ideal(z6.element(3), "right")
    w = direct_sum(S, T)
    assert w is not None and w.unit == z6.element(4)
    assert direct_sum(S, S) is None
    e12 = m2f2.unit_matrix(1, 2)
    # E12·R = rann(E12), so the sum is not direct
    assert direct_sum(principal_ideal(e12, "right"), annihilator(e12, "right")) is None
    e11 = m2f2.unit_matrix(1, 1)
    w = direct_sum(principal_ideal(e11, "right"), annihilator(e11, "right"))
    assert w is not None and w.unit == e11


def test_complement_is_a_direct_summand(m2q, z6):
    S = principal_ideal(m2q.unit_matrix(1, 2), "right")
    assert direct_sum(S, complement(S)) is not None
    I = principal_ideal(z6.element(3), "right")
    assert direct_sum(I, complement(I)) is not None


def test_projector_laws_on_z6(z6):
    S, T = principal_ideal(z6.element(2), "right"), principal_ideal(z6.element(3), "right")
    rho = projector_from_sum(S, T)
    assert rho.unit_image == z6.element(4)
    for r in z6.elements():
        s = rho(r)
        assert s in S
        assert rho(s) == s
        assert (r - s) in T
    comp = projector_complement(rho)
    assert comp.onto == T and comp.unit_image == z6.element(3)
    assert map_equals_projector(z6.element(4), S, T)
    assert not map_equals_projector(z6.element(3), S, T)


def test_projector_from_idempotent(m2f2, z6):
    e11 = m2f2.unit_matrix(1, 1)
    rho = projector_from_idempotent(e11, "left")
    assert rho.onto == principal_ideal(e11, "left")
    assert rho.along == annihilator(e11, "left")
    assert map_as_projector(m2f2.unit_matrix(1, 2), "right") is None
    with pytest.raises(PreconditionError):
        projector_from_idempotent(z6.element(2), "right")


def test_projector_orthogonality(m2f2, z6):
    e11 = m2f2.unit_matrix(1, 1)
    flags = projector_orthogonality(projector_from_idempotent(e11, "right"))
    assert flags.right_orthogonal
    skew = m2f2.element([["1", "1"], ["0", "0"]])
    flags = projector_orthogonality(projector_from_idempotent(skew, "right"))
    assert not flags.right_orthogonal
    with pytest.raises(UnsupportedInvolutionError):
        orthogonal(principal_ideal(z6.element(2), "right"), principal_ideal(z6.element(3), "right"), "right")


def test_endomorphism_table_recognises_a_projector(z6):
    rho = projector_from_sum(principal_ideal(z6.element(2), "right"), principal_ideal(z6.element(3), "right"))
    table = EndomorphismTable(z6, lambda r: z6.element(4) * r)
    assert table.is_additive() and table.is_idempotent()
    assert sorted(table.image_keys()) == [0, 2, 4]
    assert sorted(table.kernel_keys()) == [0, 3]
    assert table.equals_projector(rho)
    assert not EndomorphismTable(z6, lambda r: z6.element(2) * r).is_idempotent()


def test_extensional_view_matches_subspace(m2f2):
    I = subspace_ideal(m2f2, "left", [["0", "1"]])
    ext = to_extensional(I)
    assert ext.basis is None and len(ext.keys) == 4
    assert all(ideal_contains(I, m) for m in ideal_members(I))
