import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stringy_toric.fan import TorusDivisor, face_fan
from stringy_toric.fixtures import C3, F1, NAMED
from stringy_toric.io import (
    InputError,
    emit_fan,
    emit_polytope,
    jsonable,
    parse_fan,
    parse_polytope,
    parse_polytopes,
    rational,
)
from stringy_toric.polytope import Polytope


def test_matrix_format():
    assert parse_polytope("2 3\n1 0\n0 1\n-1 -1") == F1
    assert parse_polytope("# comment\r\n2 3\r\n1 0\r\n0 1\r\n-1 -1\r\n") == F1


def test_palp_orientations():
    assert parse_polytope("2 3  comment\n1 0 -1\n0 1 -1", "palp") == F1
    assert parse_polytope("3 2\n1 0\n0 1\n-1 -1", "palp") == F1


def test_square_palp_matrix_warns():
    with pytest.warns(UserWarning, match="square"):
        P = parse_polytope("2 2\n1 0\n0 1", "palp")
    assert P.vertices == ((0, 1), (1, 0))


@pytest.mark.parametrize(
    "text, fmt, msg",
    [
        ("2\n1 0", "matrix", "malformed header"),
        ("2 3\n1 0\n0 1 5\n-1 -1", "matrix", "ragged row"),
        ("2 3\n1 0\n0 1", "matrix", "expected 3 rows"),
        ("9 2\n" + "\n".join(["1 " * 9] * 2), "matrix", "exceeds"),
        ("x 3\n1 0 0", "palp", "malformed header"),
        ("2 3\n1 a\n0 1\n-1 -1", "matrix", "non-integer"),
        ("2 3\n1 0\n0 1\n-1 -1\n5 5", "matrix", "trailing"),
    ],
)
def test_polytope_parse_errors(text, fmt, msg):
    with pytest.raises(InputError, match=msg):
        parse_polytope(text, fmt)


def test_batch_stream():
    text = "2 3\n1 0\n0 1\n-1 -1\n2 4\n1 0\n0 1\n-1 0\n0 -1\n"
    assert parse_polytopes(text) == [F1, NAMED["F7"]]


@pytest.mark.parametrize("name", sorted(n for n in NAMED if NAMED[n].is_lattice))
@pytest.mark.parametrize("fmt, orientation", [("matrix", "columns"), ("palp", "columns"), ("palp", "rows")])
def test_round_trip_fixtures(name, fmt, orientation):
    P = NAMED[name]
    assert parse_polytope(emit_polytope(P, fmt, orientation), fmt) == P


@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5), st.integers(-5, 5)), min_size=1, max_size=7))
@settings(max_examples=40, deadline=None)
def test_round_trip_random(pts):
    P = Polytope(pts)
    for fmt, o in (("matrix", "columns"), ("palp", "columns"), ("palp", "rows")):
        if fmt == "palp" and P.n_vertices <= P.ambient_dim:
            continue  # square or short matrices are ambiguous by design
        assert parse_polytope(emit_polytope(P, fmt, o), fmt) == P


F1_FAN = """rays 2 3
1 0
0 1
-1 -1
cones 3
0 1
1 2
0 2
divisor H 0 0 1
divisor half 1/2 1/2 1/2
"""


def _shape(fan):
    return {frozenset(fan.rays[i] for i in s) for s in fan.max_cones}


def test_parse_fan():
    fan, divs = parse_fan(F1_FAN)
    assert _shape(fan) == _shape(face_fan(F1))
    assert divs["K"] == TorusDivisor.anticanonical(fan)
    assert divs["half"].coefficients == (Fraction(1, 2),) * 3
    assert set(divs) == {"K", "H", "half"}


def test_parse_cube_fan():
    ff = face_fan(C3)
    fan, _ = parse_fan(emit_fan(ff))
    assert fan == ff and len(fan.max_cones) == 6


def test_fan_errors():
    with pytest.raises(ValueError, match="fan not complete"):
        parse_fan("rays 2 3\n1 0\n0 1\n-1 -1\ncones 2\n0 1\n1 2\n")
    with pytest.raises(InputError, match="out of range"):
        parse_fan("rays 2 3\n1 0\n0 1\n-1 -1\ncones 3\n0 1\n1 2\n0 3\n")
    with pytest.raises(InputError, match="reserved"):
        parse_fan(F1_FAN + "divisor K 1 1 1\n")
    with pytest.raises(InputError, match="must start"):
        parse_fan("cones 1\n0\n")


def test_non_primitive_ray_warns():
    with pytest.warns(UserWarning, match="primitive"):
        fan, _ = parse_fan("rays 2 3\n2 0\n0 1\n-1 -1\ncones 3\n0 1\n1 2\n0 2\n")
    assert fan.rays[0] == (1, 0)


def test_fan_round_trip_with_divisors():
    fan, divs = parse_fan(F1_FAN)
    again, divs2 = parse_fan(emit_fan(fan, divs))
    assert again == fan and divs2 == divs


def test_palp_refuses_short_vertex_lists():
    with pytest.raises(ValueError, match="at least as many"):
        emit_polytope(Polytope([(0, 0, 0), (1, 1, 1)]), "palp")


def test_json_conventions():
    assert rational(Fraction(4, 2)) == "2" and rational(Fraction(-2, 3)) == "-2/3"
    out = jsonable({"a": Fraction(1, 3), "b": 4, "c": [Fraction(2), (1, 2)], "d": frozenset({2, 1}), 3: None})
    assert out == {"a": "1/3", "b": 4, "c": ["2", [1, 2]], "d": [1, 2], "3": None}
    assert "." not in json.dumps(out)
    with pytest.raises(TypeError):
        jsonable(1.5)
