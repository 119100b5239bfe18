import pytest

from grabgame import cake as cakemod
from grabgame import constructions, engine, geom, ordertype
from grabgame.cake import Cake
from grabgame.constructions import ConstructionError
from grabgame.tactics import MoonAnnotation, SunAnnotation


def test_build_sun_sizes():
    for k, total, reds in ((3, 13, 6), (5, 21, 10)):
        sun, ann = constructions.build_sun(k)
        assert len(sun) == total
        assert cakemod.red_count(sun, sun.full_mask) == reds
        assert ann.k == k


def test_build_sun_rejects_even_k():
    with pytest.raises(ConstructionError):
        constructions.build_sun(4)
    with pytest.raises(ConstructionError):
        constructions.build_sun(1)


def test_built_sun_passes_its_validator():
    sun, ann = constructions.build_sun(3)
    assert cakemod.validate(sun).ok
    report = constructions.validate_sun(sun, ann)
    assert report.ok, report.failures


def test_sun_validator_catches_buried_beam():
    sun, ann = constructions.build_sun(3)
    pts = list(sun.points)
    # Move beam 0 between the other two beams, strictly inside their hull.
    for t, i in enumerate(ann.beams[0]):
        pts[i] = (-400000 - 37 * t, 1 + 13 * t * t)
    corrupted = Cake.from_data(pts, sun.weights)
    report = constructions.validate_sun(corrupted, ann)
    assert not report.ok
    assert any("exposed" in c.name and not c.ok for c in report.checks)


def test_sun_validator_catches_line_clipping_beam():
    sun, ann = constructions.build_sun(3)
    pts = list(sun.points)
    # Fold beam 0 sideways so its chords sweep across beam 1.
    b0, b1 = ann.beams[0], ann.beams[1]
    pts[b0[3]] = ((pts[b1[0]][0] * 9) // 10, (pts[b1[0]][1] * 9) // 10)
    corrupted = Cake.from_data(pts, sun.weights)
    report = constructions.validate_sun(corrupted, ann)
    assert not report.ok


def test_sun_outer_greens_are_the_initial_extremals():
    sun, ann = constructions.build_sun(5)
    outer_greens = {b[0] for b in ann.beams}
    assert engine.extremal_ids(sun, sun.full_mask) == outer_greens


def test_build_moon_sizes():
    # n+1 greens plus n-1 reds: 2n cherries total
    moon, ann = constructions.build_moon(6)
    assert len(moon) == 12
    assert cakemod.red_count(moon, moon.full_mask) == 5
    assert cakemod.green_count(moon, moon.full_mask) == 7
    tiny, tiny_ann = constructions.build_moon(2)
    assert len(tiny) == 4
    ext = engine.extremal_ids(tiny, tiny.full_mask)
    assert ext == set(tiny_ann.green_ids)
    assert len(ext) == 3


def test_build_moon_rejects_small_n():
    with pytest.raises(ConstructionError):
        constructions.build_moon(1)


def test_built_moon_passes_its_validator():
    moon, ann = constructions.build_moon(4)
    report = constructions.validate_moon(moon, ann)
    assert report.ok, report.failures


def test_moon_validator_catches_red_outside_band():
    moon, ann = constructions.build_moon(3)
    pts = list(moon.points)
    rid = ann.red_ids[0]
    # Push one red past the outer circle: it becomes extremal at once.
    pts[rid] = (pts[rid][0] * 2, pts[rid][1] * 2)
    corrupted = Cake.from_data(pts, moon.weights)
    report = constructions.validate_moon(corrupted, ann)
    assert not report.ok
    assert any(c.name == "extremal-set-is-greens" and not c.ok for c in report.checks)


def test_moon_annotation_counts_enforced():
    with pytest.raises(Exception):
        MoonAnnotation(n=3, green_ids=(0, 1), red_ids=(2,))


def test_moon_reduction_order_equivalent_smaller():
    for n in (3, 4, 5):
        moon, ann = constructions.build_moon(n)
        smaller, _ = constructions.build_moon(n - 1)
        full = moon.full_mask
        for g in ann.green_ids:
            sub = full & ~(1 << g)
            revealed = [
                i for i in engine.extremal_ids(moon, sub) if moon.weights[i] == 1
            ]
            assert len(revealed) == 1
            keep = [ch for ch in moon.cherries if ch.id not in (g, revealed[0])]
            reduced = Cake.from_data(
                [ch.point for ch in keep], [ch.weight for ch in keep]
            )
            assert ordertype.order_equivalent(reduced, smaller) is not None


def test_parity_flip_adds_extremal_red():
    sun, _ = constructions.build_sun(3)
    flipped = constructions.parity_flip(sun)
    assert len(flipped) == len(sun) + 1
    new_id = len(flipped) - 1
    assert flipped.weights[new_id] == 1
    assert new_id in engine.extremal_ids(flipped, flipped.full_mask)
    assert cakemod.validate(flipped).ok
    assert not geom.strictly_inside_hull(list(sun.points), flipped.points[new_id])


def test_parity_flip_swaps_parity():
    moon, _ = constructions.build_moon(3)
    assert len(constructions.parity_flip(moon)) % 2 == 1


def test_from_spec_variants():
    for spec, size in (("sun:3", 13), ("moon:4", 8), ("sun+red:3", 14), ("moon+red:2", 5)):
        built, _ = constructions.from_spec(spec)
        assert len(built) == size
    with pytest.raises(ConstructionError):
        constructions.from_spec("pie:3")
    with pytest.raises(ConstructionError):
        constructions.from_spec("sun:banana")


def test_builds_are_deterministic():
    a, _ = constructions.build_sun(3)
    b, _ = constructions.build_sun(3)
    assert a == b
    c, _ = constructions.build_moon(5)
    d, _ = constructions.build_moon(5)
    assert c == d
