import json
from fractions import Fraction

from conftest import P3_CONES, P3_RAYS
from toricfans import build, validate_fan
from toricfans import fanio

P3_DOC = """{
  "dim": 3,
  "rays": [
    [1, 0, 0],
    [0, 1, 0],
    [0, 0, 1],
    [-1, -1, -1]
  ],
  "max_cones": [
    [0, 1, 2],
    [0, 1, 3],
    [0, 2, 3],
    [1, 2, 3]
  ]
}
"""


def test_canonical_rendering_golden():
    fan = validate_fan(3, P3_RAYS, P3_CONES)
    assert fanio.dumps(fanio.fan_to_doc(fan)) == P3_DOC


def test_round_trip_is_identity(tmp_path):
    fan = build("Z13pp", (2, 7, 4, 2))
    path = tmp_path / "z.fan"
    fanio.save_fan(fan, path)
    text = path.read_text()
    assert fanio.load_fan(path) == fan
    assert fanio.dumps(fanio.fan_to_doc(fanio.load_fan(path))) == text


def test_cone_order_is_canonicalized():
    fan = validate_fan(3, P3_RAYS, [(3, 2, 1), (3, 1, 0), (2, 0, 1), (0, 2, 3)])
    doc = fanio.fan_to_doc(fan)
    assert doc["max_cones"] == [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]


def test_fraction_strings():
    assert fanio.fraction_str(Fraction(3)) == "3"
    assert fanio.fraction_str(Fraction(-5, 2)) == "-5/2"
    assert Fraction(fanio.fraction_str(Fraction(7, 3))) == Fraction(7, 3)


def test_key_digest_stability():
    fan = build("W7_5")
    assert fanio.fan_digest(fan) == fanio.fan_digest(build("W7_5"))
    assert len(fanio.fan_digest(fan)) == 12
    assert fanio.fan_digest(fan) != fanio.fan_digest(build("Z12"))


def test_parse_errors_are_fan_errors(tmp_path):
    from toricfans.errors import FanValidationError

    path = tmp_path / "x.fan"
    path.write_text("{}")
    try:
        fanio.load_fan(path)
    except FanValidationError as exc:
        assert "missing field" in str(exc)
    else:
        raise AssertionError("expected FanValidationError")


def test_documents_are_json(tmp_path):
    fan = build("Z10")
    doc = fanio.fan_to_doc(fan)
    assert json.loads(fanio.dumps(doc)) == doc
