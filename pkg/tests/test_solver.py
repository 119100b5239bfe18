import random
from fractions import Fraction

import pytest

from grabgame import cake as cakemod
from grabgame import constructions, engine, solver, tactics
from grabgame.cake import Cake, TooLargeError


def random_cake(rng, n, span=100):
    while True:
        pts = []
        used = set()
        while len(pts) < n:
            p = (rng.randrange(span), rng.randrange(span))
            if p not in used:
                used.add(p)
                pts.append(p)
        if cakemod.validate_points(pts).ok:
            weights = [rng.randint(0, 1) for _ in range(n)]
            return Cake.from_data(pts, weights)


def test_single_red_cherry_goes_to_alice():
    c = Cake.from_data([(3, 7)], [1])
    assert solver.minimax(c) == 0


def test_moon_values_exact():
    for n in (2, 3, 6):
        moon, _ = constructions.build_moon(n)
        assert solver.minimax(moon) == n - 1


def test_value_bounds():
    rng = random.Random(2)
    for _ in range(10):
        c = random_cake(rng, 7)
        v = solver.minimax(c)
        assert 0 <= v <= cakemod.red_count(c, c.full_mask)


def test_optimal_moves_three_cherries_single_red():
    c = Cake.from_data([(0, 0), (8, 1), (3, 9)], [1, 0, 0])
    rec = solver.optimal_moves(engine.initial_state(c))
    assert rec.optimal_moves == {0}
    assert rec.value == 0  # Bob never reaches the red


def test_optimal_moves_all_green_everything_optimal():
    c = Cake.from_data([(0, 0), (8, 1), (3, 9), (4, 4)], [0, 0, 0, 0])
    state = engine.initial_state(c)
    rec = solver.optimal_moves(state)
    assert rec.value == 0
    assert rec.optimal_moves == engine.legal_moves(state)


def test_optimal_moves_moon_bob_takes_revealed_red():
    moon, ann = constructions.build_moon(4)
    state = engine.apply_move(engine.initial_state(moon), ann.green_ids[2])
    rec = solver.optimal_moves(state)
    revealed = [i for i in state.extremal if moon.weights[i] == 1]
    assert len(revealed) == 1
    assert revealed[0] in rec.optimal_moves


def test_optimal_move_consistency_with_children():
    rng = random.Random(9)
    for _ in range(5):
        c = random_cake(rng, 7)
        sol = solver.Solver(c)
        state = engine.initial_state(c)
        rec = sol.record(state)
        for move in rec.optimal_moves:
            child_value = sol.value(state.remaining & ~(1 << move))
            assert child_value == rec.value  # Alice move adds no weight to Bob


def test_memoized_agrees_with_bruteforce():
    rng = random.Random(17)
    for _ in range(40):
        c = random_cake(rng, rng.randint(4, 8))
        assert solver.minimax(c) == solver.minimax_bruteforce(c)


def test_rational_weights_flow_through():
    c = Cake.from_data(
        [(0, 0), (10, 1), (4, 9), (5, 4)],
        [Fraction(1, 2), Fraction(3, 2), 0, Fraction(2, 3)],
    )
    v = solver.minimax(c)
    assert isinstance(v, Fraction)
    assert v == solver.minimax_bruteforce(c)


def test_guarantee_moon_simple_greedy():
    for n in (2, 4, 6):
        moon, _ = constructions.build_moon(n)
        got = solver.guarantee_with_fixed_bob(moon, tactics.simple_greedy_tactic())
        assert got == n - 1


def test_guarantee_sun_careful_greedy_k3():
    sun, ann = constructions.build_sun(3)
    got = solver.guarantee_with_fixed_bob(sun, tactics.careful_greedy_tactic(ann))
    assert got >= 4


def test_guarantee_never_exceeds_minimax():
    rng = random.Random(23)
    for _ in range(8):
        c = random_cake(rng, 7)
        m = solver.minimax(c)
        for t in (tactics.lowest_id_tactic(), tactics.simple_greedy_tactic()):
            assert solver.guarantee_with_fixed_bob(c, t) <= m


def test_guarantee_all_green():
    c = Cake.from_data([(0, 0), (9, 2), (4, 8), (5, 5)], [0, 0, 0, 0])
    assert solver.guarantee_with_fixed_bob(c, tactics.lowest_id_tactic()) == 0


def test_size_cap():
    pts = [(i, i * i) for i in range(20)]
    c = Cake.from_data(pts, [0] * 20)
    with pytest.raises(TooLargeError):
        solver.minimax_bruteforce(c)


def test_ratio_scan_sun_only():
    sun, _ = constructions.build_sun(3)
    result = solver.ratio_scan(iter([sun]), budget=5)
    assert result is not None
    assert result.ratio >= Fraction(2, 3)


def test_ratio_scan_moon_plus_red_is_zero():
    moon, _ = constructions.build_moon(3)
    flipped = constructions.parity_flip(moon)
    result = solver.ratio_scan(iter([flipped]), budget=1)
    assert result is not None
    assert result.ratio == 0


def test_ratio_scan_empty_budget():
    sun, _ = constructions.build_sun(3)
    assert solver.ratio_scan(iter([sun]), budget=0) is None


def test_concurrent_queries_share_one_solver():
    # the memo table is insert-once with identical values, so concurrent
    # queries on one instance must agree with a fresh sequential solve
    import threading

    moon, _ = constructions.build_moon(5)
    sol = solver.Solver(moon)
    results = {}

    def query(offset):
        state = engine.initial_state(moon)
        for _ in range(offset):
            state = engine.apply_move(state, min(state.extremal))
        results[offset] = sol.record(state).value

    threads = [threading.Thread(target=query, args=(i,)) for i in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for offset, value in results.items():
        state = engine.initial_state(moon)
        for _ in range(offset):
            state = engine.apply_move(state, min(state.extremal))
        assert solver.Solver(moon).record(state).value == value
