from fractions import Fraction

import pytest

from grabgame import cake as cakemod
from grabgame import constructions, engine, tactics
from grabgame.cake import Cake
from grabgame.engine import Player


def square_plus_center():
    # (6, 5) stays interior even after any one corner is removed
    return Cake.from_data(
        [(0, 0), (10, 0), (10, 10), (0, 10), (6, 5)], [0, 0, 0, 0, 1]
    )


def test_legal_moves_moon_is_greens():
    moon, ann = constructions.build_moon(5)
    state = engine.initial_state(moon)
    assert engine.legal_moves(state) == set(ann.green_ids)


def test_legal_moves_three_cherries_all():
    c = Cake.from_data([(0, 0), (6, 1), (2, 7)], [1, 0, 0])
    assert engine.legal_moves(engine.initial_state(c)) == {0, 1, 2}


def test_legal_moves_square_corners_only():
    state = engine.initial_state(square_plus_center())
    assert engine.legal_moves(state) == {0, 1, 2, 3}


def test_apply_move_toggles_mover():
    state = engine.initial_state(square_plus_center())
    nxt = engine.apply_move(state, 0)
    assert nxt.mover is Player.BOB
    assert not nxt.remaining >> 0 & 1


def test_apply_move_rejects_center_while_corners_remain():
    state = engine.initial_state(square_plus_center())
    with pytest.raises(engine.IllegalMoveError):
        engine.apply_move(state, 4)


def test_apply_move_rejects_taken_cherry():
    state = engine.initial_state(square_plus_center())
    state = engine.apply_move(state, 0)
    with pytest.raises(engine.IllegalMoveError):
        engine.apply_move(state, 0)


def test_state_parity_invariant_enforced():
    c = square_plus_center()
    with pytest.raises(engine.EngineError):
        engine.GameState(c, c.full_mask, Player.BOB)


def test_scores_moon2_bob_gets_the_red():
    moon, ann = constructions.build_moon(2)
    green = ann.green_ids[0]
    sub = moon.full_mask & ~(1 << green)
    red = next(i for i in engine.extremal_ids(moon, sub) if moon.weights[i] == 1)
    rest = [i for i in range(len(moon)) if i not in (green, red)]
    a, b = engine.scores(moon, (green, red, rest[0], rest[1]))
    assert (a, b) == (0, 1)


def test_scores_all_green_cake():
    c = Cake.from_data([(0, 0), (9, 2), (4, 8), (5, 5)], [0, 0, 0, 0])
    moves = engine.simulate(c, tactics.lowest_id_tactic(), tactics.lowest_id_tactic())
    assert engine.scores(c, moves) == (0, 0)


def test_scores_illegal_gameplay_reports_index():
    c = square_plus_center()
    with pytest.raises(engine.IllegalGameplayError) as err:
        engine.scores(c, (0, 4, 1))  # center not extremal at move 1
    assert err.value.index == 1


def test_conservation_alice_plus_bob_is_red_count():
    for spec in ("moon:4", "sun:3"):
        c, _ = constructions.from_spec(spec)
        moves = engine.simulate(
            c, tactics.random_tactic(3), tactics.random_tactic(4)
        )
        a, b = engine.scores(c, moves)
        assert a + b == cakemod.red_count(c, c.full_mask)


def test_replay_accepts_only_extremal_prefixes():
    moon, _ = constructions.build_moon(3)
    moves = engine.simulate(
        moon, tactics.lowest_id_tactic(), tactics.simple_greedy_tactic()
    )
    state = engine.initial_state(moon)
    for m in moves:
        assert m in state.extremal
        state = engine.apply_move(state, m)
    assert state.is_over


def test_simulate_moon_simple_greedy_bob_gets_everything():
    moon, _ = constructions.build_moon(4)
    moves = engine.simulate(
        moon, tactics.lowest_id_tactic(), tactics.simple_greedy_tactic()
    )
    _, bob = engine.scores(moon, moves)
    assert bob == 3


def test_simulate_sun_careful_bob_reaches_bound():
    sun, ann = constructions.build_sun(3)
    for seed in range(5):
        moves = engine.simulate(
            sun, tactics.random_tactic(seed), tactics.careful_greedy_tactic(ann)
        )
        _, bob = engine.scores(sun, moves)
        assert bob >= 4


def test_simulate_rejects_buggy_tactic():
    c = square_plus_center()
    bad = engine.Tactic("buggy", lambda s: 4)  # center: never legal first
    with pytest.raises(engine.TacticError):
        engine.simulate(c, bad, tactics.lowest_id_tactic())


def test_gameplay_text_roundtrip():
    moves = (3, 1, 4, 1)
    assert engine.parse_gameplay(engine.format_gameplay(moves)) == moves


def test_tactic_from_name_roundtrip():
    moon, _ = constructions.build_moon(3)
    for name in ("simple-greedy", "lowest-id", "random:9"):
        t = tactics.tactic_from_name(name, moon)
        assert t.name == name
        move = t.choose(engine.initial_state(moon))
        assert move in engine.extremal_ids(moon, moon.full_mask)
    with pytest.raises(ValueError):
        tactics.tactic_from_name("alpha-beta", moon)
