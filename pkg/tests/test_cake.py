from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grabgame import cake as cakemod
from grabgame import constructions
from grabgame.cake import (
    Cake,
    CakeParseError,
    MaskRangeError,
    TooLargeError,
    ValidationError,
)


def triangle_cake():
    return Cake.from_data([(0, 0), (4, 0), (0, 4)], [1, 0, 0])


def test_red_count_on_constructions():
    sun, _ = constructions.build_sun(3)
    assert cakemod.red_count(sun, sun.full_mask) == 6
    assert cakemod.green_count(sun, sun.full_mask) == 7
    moon, _ = constructions.build_moon(6)
    assert cakemod.red_count(moon, moon.full_mask) == 5
    assert cakemod.green_count(moon, moon.full_mask) == 7


def test_red_count_empty_mask():
    c = triangle_cake()
    assert cakemod.red_count(c, 0) == 0
    assert cakemod.red_count(c, c.full_mask) == 1


def test_red_count_mask_out_of_range():
    c = triangle_cake()
    with pytest.raises(MaskRangeError):
        cakemod.red_count(c, 1 << 10)


def test_red_count_monotone_under_inclusion():
    moon, _ = constructions.build_moon(4)
    full = moon.full_mask
    for sub in (0b1, 0b1010101, full >> 1, full):
        assert cakemod.red_count(moon, sub) <= cakemod.red_count(moon, full)


def test_validate_ok():
    report = cakemod.validate(triangle_cake())
    assert report.ok


def test_validate_collinear_triple():
    pts = [(0, 0), (1, 1), (2, 2), (0, 5)]
    report = cakemod.validate_points(pts)
    assert not report.ok
    assert any(v.kind == "collinear" and v.ids == (0, 1, 2) for v in report.violations)


def test_validate_duplicate_pair():
    report = cakemod.validate_points([(0, 0), (1, 2), (0, 0)])
    assert any(v.kind == "duplicate" and v.ids == (0, 2) for v in report.violations)


def test_parse_example():
    c = cakemod.parse("3\n0 0 1\n4 0 0\n0 4 0\n")
    assert len(c) == 3
    assert c.cherries[0].is_red
    assert c.cherries[1].point == (4, 0)


def test_serialize_bit_exact():
    text = "3\n0 0 1\n4 0 0\n0 4 0\n"
    assert cakemod.serialize(cakemod.parse(text)) == text


def test_parse_duplicate_point_rejected():
    with pytest.raises(ValidationError):
        cakemod.parse("2\n0 0 1\n0 0 0\n")


def test_parse_syntax_error_carries_line():
    with pytest.raises(CakeParseError) as err:
        cakemod.parse("2\n0 0 1\n0 zzz 0\n")
    assert err.value.line == 3


def test_parse_wrong_count():
    with pytest.raises(CakeParseError):
        cakemod.parse("3\n0 0 1\n1 5 0\n")


def test_parse_rational_weights():
    c = cakemod.parse("3\n0 0 1/2\n4 0 0\n0 4 7/3\n")
    assert c.weights[0] == Fraction(1, 2)
    assert c.weights[2] == Fraction(7, 3)
    assert cakemod.serialize(c) == "3\n0 0 1/2\n4 0 0\n0 4 7/3\n"


def test_cake_size_cap():
    pts = [(i, i * i) for i in range(64)]  # parabola, general position
    with pytest.raises(TooLargeError):
        Cake.from_data(pts, [0] * 64)


coords = st.tuples(st.integers(-1000, 1000), st.integers(-1000, 1000))


@settings(max_examples=60, deadline=None)
@given(st.lists(coords, min_size=1, max_size=8, unique=True), st.randoms())
def test_roundtrip_parse_serialize(pts, rng):
    weights = [rng.choice([0, 1, Fraction(1, 3)]) for _ in pts]
    if not cakemod.validate_points(pts).ok:
        return
    c = Cake.from_data(pts, weights)
    assert cakemod.parse(cakemod.serialize(c)) == c
