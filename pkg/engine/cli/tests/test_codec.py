import pytest

from engine.cli.codec import decode_element, decode_ideal, dumps, encode_ideal
from engine.cli.main import main
from engine.config import load_settings, set_settings
from engine.errors import StructuralError
from engine.oracle.catalog import RingContext
from engine.ring.core import ring_for


@pytest.fixture(autouse=True)
def _fresh_settings():
    set_settings(load_settings())
    yield
    set_settings(load_settings())


def _sample(spec, limit):
    ctx = RingContext(ring_for(spec))
    return ctx, ctx.elements[:limit]


@pytest.mark.parametrize("spec,limit", [("zn:6", 6), ("m2f2", 16), ("m2q", 64)])
def test_elements_survive_the_json_codec(spec, limit):
    ctx, elems = _sample(spec, limit)
    for x in elems:
        assert decode_element(ctx.ring, dumps(x)) == x


@pytest.mark.parametrize("spec,limit", [("zn:6", 6), ("m2f2", 16), ("m2q", 16)])
def test_ideals_survive_the_json_codec(spec, limit):
    ctx, _ = _sample(spec, limit)
    ring = ctx.ring
    for side in ("right", "left"):
        ideals = ctx.ideals(side)[:limit]
        assert ideals
        for I in ideals:
            payload = encode_ideal(I)
            assert payload["side"] == side
            assert decode_ideal(ring, payload) == I
            assert decode_ideal(ring, dumps(I), side) == I


def test_decoding_rejects_bad_scalars():
    m2q = ring_for("m2q")
    with pytest.raises(StructuralError, match="zero denominator"):
        decode_element(m2q, '[["1/0","0"],["0","0"]]')
    with pytest.raises(StructuralError, match="malformed scalar"):
        decode_element(m2q, '[["1/x","0"],["0","0"]]')


def _stdout(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--ring", "zn:6", "--theorems", "all"),
        ("enumerate", "--ring", "m2f2", "--element", '[["1","1"],["0","0"]]', "--equations", "1"),
        ("compute", "--ring", "m2q", "--element", '[["2","-2"],["0","0"]]', "--inverse", "core"),
    ],
)
def test_repeated_runs_print_identical_bytes(capsys, argv):
    first = _stdout(capsys, *argv)
    second = _stdout(capsys, *argv)
    assert first[0] == 0
    assert first == second
    assert first[1].encode("utf-8") == second[1].encode("utf-8")
