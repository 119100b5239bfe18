"""Exact game values by memoized search over remaining-subset bitmasks.

The value of a state is Bob's total gain from that point on: Alice
nodes minimize over her extremal moves, Bob nodes maximize move weight
plus continuation, the empty board is worth 0.  Values are exact
rationals end to end; the memo table keys on the mask alone because the
mover is implied by popcount parity relative to the full cake (checked,
never assumed).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from . import geom
from .cake import Cake, MAX_CAKE_SIZE, TooLargeError, red_count
from .engine import GameState, Player, Tactic, TacticError, mover_for


@dataclass(frozen=True)
class MinimaxRecord:
    value: Fraction
    optimal_moves: frozenset[int]


class Solver:
    """Minimax values for one fixed cake; reusable across queries."""

    def __init__(self, cake: Cake):
        if len(cake) > MAX_CAKE_SIZE:
            raise TooLargeError(f"cake size {len(cake)} exceeds {MAX_CAKE_SIZE}")
        self.cake = cake
        self._n = len(cake)
        self._value: dict[int, Fraction] = {0: Fraction(0)}
        self._extremal: dict[int, tuple[int, ...]] = {}

    def extremal(self, mask: int) -> tuple[int, ...]:
        cached = self._extremal.get(mask)
        if cached is None:
            ids = [i for i in self.cake.sorted_ids if mask >> i & 1]
            cached = tuple(geom.hull_from_sorted(self.cake.points, ids))
            self._extremal[mask] = cached
        return cached

    def _ordered_moves(self, mask: int) -> list[int]:
        # Red-first, lowest-id search order; a heuristic only.
        weights = self.cake.weights
        return sorted(self.extremal(mask), key=lambda i: (-(weights[i] == 1), i))

    def value(self, mask: int) -> Fraction:
        """Bob's optimal total gain from this position onward."""
        memo = self._value
        cached = memo.get(mask)
        if cached is not None:
            return cached
        weights = self.cake.weights
        if mover_for(self.cake, mask) is Player.ALICE:
            best = min(self.value(mask & ~(1 << m)) for m in self._ordered_moves(mask))
        else:
            best = max(
                weights[m] + self.value(mask & ~(1 << m))
                for m in self._ordered_moves(mask)
            )
        best = Fraction(best)
        memo[mask] = best
        return best

    def minimax(self) -> Fraction:
        return self.value(self.cake.full_mask)

    def record(self, state: GameState) -> MinimaxRecord:
        """Value plus every first move achieving it for the current mover."""
        mask = state.remaining
        assert state.mover is mover_for(self.cake, mask)
        weights = self.cake.weights
        moves = self.extremal(mask)
        if state.mover is Player.ALICE:
            child = {m: self.value(mask & ~(1 << m)) for m in moves}
            best = min(child.values())
        else:
            child = {m: weights[m] + self.value(mask & ~(1 << m)) for m in moves}
            best = max(child.values())
        best = Fraction(best)
        return MinimaxRecord(best, frozenset(m for m, v in child.items() if v == best))


def minimax(cake: Cake) -> Fraction:
    return Solver(cake).minimax()


def optimal_moves(state: GameState) -> MinimaxRecord:
    return Solver(state.cake).record(state)


def minimax_bruteforce(cake: Cake) -> Fraction:
    """Memoization-free oracle: plain recursion over fresh point lists.

    Deliberately shares no machinery with Solver besides the raw hull
    routine; used to cross-check the memoized path at small sizes.
    """
    if len(cake) > 16:
        raise TooLargeError("brute force is for oracle-scale cakes only")

    def go(ids: list[int], alice_to_move: bool) -> Fraction:
        if not ids:
            return Fraction(0)
        pts = [cake.points[i] for i in ids]
        ext = [ids[t] for t in geom.extremal_indices(pts)]
        outcomes = []
        for m in ext:
            rest = [i for i in ids if i != m]
            v = go(rest, not alice_to_move)
            if not alice_to_move:
                v = v + cake.weights[m]
            outcomes.append(v)
        return min(outcomes) if alice_to_move else max(outcomes)

    return go(list(range(len(cake))), True)


def guarantee_with_fixed_bob(cake: Cake, bob: Tactic) -> Fraction:
    """Bob's assured total when he plays ``bob`` and Alice plays adversarially.

    Alice branches over all her legal moves; Bob's reply is forced by
    the tactic, so only Alice-to-move masks are memoized.  Tactic
    failures (illegal move, careful-greedy FAIL) propagate untouched.
    """
    if len(cake) > MAX_CAKE_SIZE:
        raise TooLargeError(f"cake size {len(cake)} exceeds {MAX_CAKE_SIZE}")
    solver = Solver(cake)  # reuse its extremal cache; values stay untouched
    weights = cake.weights
    memo: dict[int, Fraction] = {}

    def alice_value(mask: int) -> Fraction:
        if mask == 0:
            return Fraction(0)
        cached = memo.get(mask)
        if cached is not None:
            return cached
        assert mover_for(cake, mask) is Player.ALICE
        best: Optional[Fraction] = None
        for a in solver.extremal(mask):
            mask_after_a = mask & ~(1 << a)
            if mask_after_a == 0:
                outcome = Fraction(0)
            else:
                bob_state = GameState(cake, mask_after_a, Player.BOB)
                b = bob.choose(bob_state)
                if b not in bob_state.extremal:
                    raise TacticError(
                        f"tactic {bob.name!r} chose illegal move {b} at "
                        f"mask {bin(mask_after_a)}"
                    )
                outcome = weights[b] + alice_value(mask_after_a & ~(1 << b))
            if best is None or outcome < best:
                best = outcome
        memo[mask] = best
        return best

    return alice_value(cake.full_mask)


@dataclass(frozen=True)
class ScanResult:
    cake: Cake
    ratio: Fraction
    value: Fraction
    examined: int


def ratio_scan(generator: Iterable[Cake], budget: int) -> Optional[ScanResult]:
    """Best minimax-to-red-count ratio over at most ``budget`` sampled cakes.

    Purely exploratory: the generator must yield odd-sized cakes (the
    ratio question is posed for odd sizes); all-green cakes are skipped
    since their ratio is undefined.
    """
    best: Optional[ScanResult] = None
    examined = 0
    it: Iterator[Cake] = iter(generator)
    for cake in it:
        if examined >= budget:
            break
        if len(cake) % 2 == 0:
            raise ValueError("ratio scan is defined over odd-sized cakes")
        examined += 1
        r = red_count(cake, cake.full_mask)
        if r == 0:
            continue
        v = minimax(cake)
        ratio = v / r
        if best is None or ratio > best.ratio:
            best = ScanResult(cake, ratio, v, examined)
    if best is not None:
        best = ScanResult(best.cake, best.ratio, best.value, examined)
    return best
