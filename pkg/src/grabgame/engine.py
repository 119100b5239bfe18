"""Game mechanics: legal moves, transitions, scoring, and tactic replay.

Alice moves first and minimizes Bob's total weight; Bob maximizes it.
Only extremal cherries (convex hull vertices of the remaining set) may
be taken.  Tactics are consulted but never trusted: every move passes
through the referee, so a buggy tactic cannot corrupt an experiment.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Optional, Sequence

from . import geom
from .cake import Cake, SubsetMask


class EngineError(Exception):
    pass


class EmptyStateError(EngineError):
    pass


class IllegalMoveError(EngineError):
    pass


class IllegalGameplayError(EngineError):
    def __init__(self, message: str, index: int):
        super().__init__(f"move #{index}: {message}")
        self.index = index


class TacticError(EngineError):
    """A tactic returned an illegal move; names the offender and the state."""


class Player(enum.Enum):
    ALICE = "alice"
    BOB = "bob"

    @property
    def other(self) -> "Player":
        return Player.BOB if self is Player.ALICE else Player.ALICE


def mover_for(cake: Cake, remaining: SubsetMask) -> Player:
    """Mover implied by alternation from the full cake (Alice first)."""
    taken = len(cake) - remaining.bit_count()
    return Player.ALICE if taken % 2 == 0 else Player.BOB


def extremal_ids(cake: Cake, remaining: SubsetMask) -> frozenset[int]:
    """Extremal cherries of the remaining subset, recomputed from scratch."""
    cake.check_mask(remaining)
    ids = [i for i in cake.sorted_ids if remaining >> i & 1]
    return frozenset(geom.hull_from_sorted(cake.points, ids))


@dataclass(frozen=True)
class GameState:
    cake: Cake
    remaining: SubsetMask
    mover: Player

    def __post_init__(self):
        self.cake.check_mask(self.remaining)
        # Parity invariant: all states in this workbench derive from a
        # full-cake start, so the mover is determined by the popcount.
        if self.mover is not mover_for(self.cake, self.remaining):
            raise EngineError(
                f"mover {self.mover} inconsistent with remaining popcount"
            )

    @cached_property
    def extremal(self) -> frozenset[int]:
        return extremal_ids(self.cake, self.remaining)

    @property
    def is_over(self) -> bool:
        return self.remaining == 0


def initial_state(cake: Cake) -> GameState:
    return GameState(cake, cake.full_mask, Player.ALICE)


def legal_moves(state: GameState) -> frozenset[int]:
    if state.remaining == 0:
        raise EmptyStateError("no cherries remain")
    return state.extremal


def apply_move(state: GameState, cherry_id: int) -> GameState:
    """Referee: rejects non-extremal or already-taken cherries."""
    if state.remaining == 0:
        raise EmptyStateError("no cherries remain")
    if not (0 <= cherry_id < len(state.cake)) or not state.remaining >> cherry_id & 1:
        raise IllegalMoveError(f"cherry {cherry_id} is not on the board")
    if cherry_id not in state.extremal:
        raise IllegalMoveError(f"cherry {cherry_id} is not extremal")
    return GameState(
        state.cake, state.remaining & ~(1 << cherry_id), state.mover.other
    )


Gameplay = tuple[int, ...]


def parse_gameplay(text: str) -> Gameplay:
    return tuple(int(tok) for tok in text.split())


def format_gameplay(moves: Sequence[int]) -> str:
    return " ".join(str(m) for m in moves)


def replay(cake: Cake, moves: Sequence[int]) -> GameState:
    """Replay a gameplay through the referee; returns the final state."""
    state = initial_state(cake)
    for idx, move in enumerate(moves):
        try:
            state = apply_move(state, move)
        except EngineError as exc:
            raise IllegalGameplayError(str(exc), idx) from exc
    return state


def scores(cake: Cake, moves: Sequence[int]) -> tuple[Fraction, Fraction]:
    """(Alice total, Bob total) for a legal gameplay.

    Alice takes the odd positions (1st, 3rd, ...), Bob the even ones;
    the two totals always sum to the cake's total weight once every
    cherry is taken.
    """
    replay(cake, moves)
    alice = sum((cake.weights[m] for m in moves[0::2]), Fraction(0))
    bob = sum((cake.weights[m] for m in moves[1::2]), Fraction(0))
    return alice, bob


@dataclass(frozen=True)
class Tactic:
    """A named deterministic move policy for one player."""

    name: str
    choose: Callable[[GameState], int] = field(compare=False)

    def __repr__(self) -> str:
        return f"Tactic({self.name!r})"


def simulate(
    cake: Cake, alice: Tactic, bob: Tactic, observer: Optional[Callable] = None
) -> Gameplay:
    """Alternate the two tactics from the full cake, refereeing every move.

    ``observer``, when given, is called with each pre-move state (useful
    for invariant instrumentation during simulations).
    """
    state = initial_state(cake)
    moves: list[int] = []
    while not state.is_over:
        tactic = alice if state.mover is Player.ALICE else bob
        if observer is not None:
            observer(state)
        move = tactic.choose(state)
        if move not in state.extremal:
            raise TacticError(
                f"tactic {tactic.name!r} chose illegal move {move} "
                f"(remaining {bin(state.remaining)})"
            )
        moves.append(move)
        state = apply_move(state, move)
    return tuple(moves)
