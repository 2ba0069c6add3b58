import pytest
from pydantic import ValidationError

from engine.config import load_settings, set_settings
from engine.errors import NotEnumerableError, StructuralError, UnsupportedInvolutionError
from engine.ring.core import classify_element, ring_arith, ring_for
from engine.ring.spec import MatrixSpec, ModularSpec, dump_ring_spec, parse_ring_spec


def test_shorthands_and_json_specs_resolve_to_the_same_backend():
    json_spec = '{"kind":"matrix","size":2,"scalars":{"kind":"q"},"involution":"transpose"}'
    assert ring_for("m2q") is ring_for(json_spec)
    assert ring_for("zn:6") is ring_for({"kind": "modular", "n": 6})
    assert parse_ring_spec("m2f5") == MatrixSpec(size=2, scalars={"kind": "gf", "p": 5})
    assert dump_ring_spec(ModularSpec(n=6)) == {"kind": "modular", "n": 6}


@pytest.mark.parametrize(
    "bad",
    ["zn:1", "m2f4", '{"kind":"matrix","size":0,"scalars":{"kind":"q"}}', "not a ring"],
)
def test_malformed_ring_specs_are_rejected(bad):
    with pytest.raises((StructuralError, ValidationError)):
        ring_for(bad)


def test_rational_product_and_transpose(m2q, a3):
    mp = m2q.element([["1/4", "0"], ["-1/4", "0"]])
    assert m2q.render(a3 * mp) == [["1", "0"], ["0", "0"]]
    assert m2q.render(a3.star()) == [["2", "0"], ["-2", "0"]]
    assert a3.star().star() == a3


def test_modular_arithmetic_and_residue_parsing(z6):
    assert z6.render(z6.element("7")) == "1"
    assert z6.element(4) * z6.element(5) == z6.element(2)
    assert ring_arith(z6.element(2), z6.element(5), "add") == z6.zero
    assert ring_arith(z6.element(2), None, "neg") == z6.element(4)
    with pytest.raises(StructuralError):
        z6.element("x")
    with pytest.raises(StructuralError):
        ring_arith(z6.element(2), None, "mul")


def test_modular_ring_has_no_involution(z6):
    assert not z6.has_involution
    with pytest.raises(UnsupportedInvolutionError):
        z6.element(2).star()


def test_mixed_rings_are_rejected(z6, m2q):
    with pytest.raises(StructuralError):
        z6.one + m2q.one


def test_matrix_entries_are_validated(m2q):
    with pytest.raises(StructuralError):
        m2q.element([["1", "2"]])
    with pytest.raises(StructuralError):
        m2q.element([["1", "2"], ["3", "oops"]])


@pytest.mark.parametrize("spec", ["m2q", "m2f5"])
def test_zero_denominators_are_structural_errors(spec):
    ring = ring_for(spec)
    with pytest.raises(StructuralError, match="zero denominator"):
        ring.element([["1/0", "0"], ["0", "0"]])
    with pytest.raises(StructuralError, match="zero denominator"):
        ring.element([[(1, 0), 0], [0, 0]])


def test_enumeration_order_and_size(m2f5, m2f2, z6):
    assert m2f5.size() == 625
    assert sum(1 for _ in m2f5.elements()) == 625
    elems = m2f2.element_list()
    assert elems[0] == m2f2.zero
    assert [e.sort_key() for e in elems] == sorted(e.sort_key() for e in elems)
    assert [z6.render(e) for e in z6.elements()] == ["0", "1", "2", "3", "4", "5"]


def test_infinite_and_oversized_rings_are_not_enumerable(m2q):
    with pytest.raises(NotEnumerableError):
        next(m2q.elements())
    with pytest.raises(NotEnumerableError):
        next(ring_for("m3f2").elements())
    set_settings(load_settings(max_fp_size=3))
    assert ring_for("m3f2").size() == 512


def test_units_and_inverses(z6, m2f5, a3):
    assert z6.inverse(z6.element(5)) == z6.element(5)
    assert z6.inverse(z6.element(2)) is None
    assert not a3.ring.is_unit(a3)
    e12 = m2f5.unit_matrix(1, 2)
    assert m2f5.inverse(m2f5.one + e12) == m2f5.one - e12


def test_classify_element(m2f2, z6):
    e11 = m2f2.unit_matrix(1, 1)
    flags = classify_element(e11)
    assert flags.idempotent and flags.symmetric and flags.projection
    assert not flags.invertible
    z = classify_element(z6.element(3))
    assert z.idempotent and z.symmetric is None


def test_powers(m2q):
    e12 = m2q.unit_matrix(1, 2)
    assert e12**0 == m2q.one
    assert e12**2 == m2q.zero
    with pytest.raises(StructuralError):
        e12 ** -1


def test_domain_matrices_are_cached_only_on_finite_rings(m2q, a3, m2f2):
    assert (a3 * a3).key == (((4, 1), (-4, 1)), ((0, 1), (0, 1)))
    assert m2q.to_dm(a3) == m2q.to_dm(a3)
    assert m2q._dm_cache == {}
    x = m2f2.element([["1", "1"], ["0", "1"]])
    assert m2f2.to_dm(x) is m2f2.to_dm(x)
    assert x.key in m2f2._dm_cache
