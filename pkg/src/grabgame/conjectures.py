"""Machine-checkable forms of the optimal-move conjectures.

Three statements about optimal play are examined over every reachable
game state of a cake (states reachable by alternating legal play from
the full board):

* greedy move -- whenever an extremal red exists, taking some extremal
  red is optimal;
* strong greedy move -- whenever an extremal red exists, taking any
  extremal red is optimal;
* no-reveal move -- whenever no extremal red exists but some move
  exposes no red, one such non-revealing move is optimal.

The checkers certify every verdict through the solver and never assert
mathematical truth: the first two questions are open, and the third is
settled in the negative by a searched counterexample whose branch
values are re-certified on every run.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import geom
from .cake import Cake, red_count, validate_points
from .engine import GameState, Player, mover_for
from .solver import Solver

EXHAUSTIVE_LIMIT = 14


@dataclass(frozen=True)
class StateVerdict:
    mask: int
    mover: Player
    holds: bool
    value: Fraction
    optimal: frozenset[int]
    candidates: frozenset[int]  # the move set the conjecture quantifies over


@dataclass(frozen=True)
class ConjectureReport:
    conjecture: str
    cake: Cake
    verdicts: tuple[StateVerdict, ...]  # applicable states only
    states_examined: int
    complete: bool

    @property
    def holds(self) -> bool:
        return all(v.holds for v in self.verdicts)

    def holds_for(self, mover: Player) -> bool:
        return all(v.holds for v in self.verdicts if v.mover is mover)

    @property
    def failures(self) -> tuple[StateVerdict, ...]:
        return tuple(v for v in self.verdicts if not v.holds)

    def to_text(self) -> str:
        lines = []
        for v in self.verdicts:
            status = "ok" if v.holds else "FAIL"
            lines.append(
                f"{status} mask={bin(v.mask)} mover={v.mover.value} value={v.value} "
                f"candidates={sorted(v.candidates)} optimal={sorted(v.optimal)}"
            )
        if self.holds:
            lines.append(
                f"HOLDS ({len(self.verdicts)} applicable / "
                f"{self.states_examined} reachable states)"
            )
        else:
            first = self.failures[0]
            lines.append(
                f"FAILS mask={bin(first.mask)} mover={first.mover.value} "
                f"value={first.value}"
            )
        return "\n".join(lines)

    def to_json(self) -> dict:
        """Machine-readable form, values as decimal strings (wire convention)."""
        return {
            "conjecture": self.conjecture,
            "holds": self.holds,
            "complete": self.complete,
            "states_examined": self.states_examined,
            "verdicts": [
                {
                    "mask": v.mask,
                    "mover": v.mover.value,
                    "holds": v.holds,
                    "value": str(v.value),
                    "candidates": sorted(v.candidates),
                    "optimal": sorted(v.optimal),
                }
                for v in self.verdicts
            ],
        }


def reachable_masks(cake: Cake, sample_seed: int = 0, samples: int = 2000) -> set[int]:
    """Masks reachable by alternating legal play from the full cake.

    Complete forward search below EXHAUSTIVE_LIMIT cherries; above it,
    seeded random playouts sample the space instead.
    """
    full = cake.full_mask
    if len(cake) <= EXHAUSTIVE_LIMIT:
        seen = {full}
        stack = [full]
        solver = Solver(cake)
        while stack:
            mask = stack.pop()
            if mask == 0:
                continue
            for m in solver.extremal(mask):
                child = mask & ~(1 << m)
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        return seen
    rng = random.Random(sample_seed)
    solver = Solver(cake)
    seen = {full}
    for _ in range(samples):
        mask = full
        while mask:
            mask &= ~(1 << rng.choice(solver.extremal(mask)))
            seen.add(mask)
    return seen


def _check(
    name: str,
    cake: Cake,
    candidate_moves,
) -> ConjectureReport:
    """Shared walk: for each reachable state with a nonempty candidate
    set, the conjecture holds iff an optimal move lies in the set."""
    solver = Solver(cake)
    masks = reachable_masks(cake)
    verdicts: list[StateVerdict] = []
    require_all = name == "strong-greedy-move"
    for mask in sorted(masks):
        if mask == 0:
            continue
        cands = candidate_moves(solver, mask)
        if not cands:
            continue
        mover = mover_for(cake, mask)
        rec = solver.record(GameState(cake, mask, mover))
        if require_all:
            holds = cands <= rec.optimal_moves
        else:
            holds = bool(cands & rec.optimal_moves)
        verdicts.append(
            StateVerdict(mask, mover, holds, rec.value, rec.optimal_moves, cands)
        )
    return ConjectureReport(
        name,
        cake,
        tuple(verdicts),
        states_examined=len(masks),
        complete=len(cake) <= EXHAUSTIVE_LIMIT,
    )


def _extremal_reds(cake: Cake, solver: Solver, mask: int) -> frozenset[int]:
    return frozenset(
        i for i in solver.extremal(mask) if cake.weights[i] == 1
    )


def check_greedy_move(cake: Cake) -> ConjectureReport:
    """Some extremal red is optimal wherever an extremal red exists."""
    return _check(
        "greedy-move",
        cake,
        lambda solver, mask: _extremal_reds(cake, solver, mask),
    )


def check_strong_greedy(cake: Cake) -> ConjectureReport:
    """Every extremal red is optimal wherever an extremal red exists."""
    return _check(
        "strong-greedy-move",
        cake,
        lambda solver, mask: _extremal_reds(cake, solver, mask),
    )


def _non_revealing(cake: Cake, solver: Solver, mask: int) -> frozenset[int]:
    """Extremal moves that expose no red, when no red is extremal now."""
    ext = solver.extremal(mask)
    reds_now = _extremal_reds(cake, solver, mask)
    if reds_now:
        return frozenset()
    out = []
    for c in ext:
        child_ext = solver.extremal(mask & ~(1 << c))
        if not any(cake.weights[i] == 1 for i in child_ext):
            out.append(c)
    return frozenset(out)


def check_no_reveal(cake: Cake) -> ConjectureReport:
    """Some non-revealing move is optimal wherever one exists (and no
    extremal red does).  False in general; see the counterexample search."""
    return _check(
        "no-reveal-move",
        cake,
        lambda solver, mask: _non_revealing(cake, solver, mask),
    )


def exterior_reds(cake: Cake, mask: int) -> frozenset[int]:
    """Remaining reds not strictly inside the hull of the remaining greens."""
    cake.check_mask(mask)
    greens = [
        cake.points[i]
        for i in range(len(cake))
        if mask >> i & 1 and cake.weights[i] == 0
    ]
    out = []
    for i in range(len(cake)):
        if mask >> i & 1 and cake.weights[i] == 1:
            if not geom.strictly_inside_hull(greens, cake.points[i]):
                out.append(i)
    return frozenset(out)


@dataclass(frozen=True)
class Counterexample:
    """A certified no-reveal failure at the root of a cake.

    ``non_revealing_move`` is the unique non-revealing first move;
    playing it hands Bob ``value_after_move`` while optimal play holds
    him to ``root_value``, so Alice strictly loses by not revealing.
    The Alice-side totals are red count minus the Bob values.
    """

    cake: Cake
    non_revealing_move: int
    root_value: Fraction
    value_after_move: Fraction
    attempts: int

    @property
    def alice_optimal(self) -> Fraction:
        return red_count(self.cake, self.cake.full_mask) - self.root_value

    @property
    def alice_after_move(self) -> Fraction:
        return red_count(self.cake, self.cake.full_mask) - self.value_after_move


def random_cakes(
    seed: int, n: int = 10, reds: int = 4, coord_range: int = 1000
) -> Iterator[Cake]:
    """Random general-position cakes with the red weights on interior points.

    Coordinates are uniform on the integer grid square; candidates with
    a duplicate, a collinear triple, or fewer than ``reds`` non-extremal
    points are rejected (reds must start hidden for the no-reveal
    premise to be satisfiable at the root).
    """
    rng = random.Random(seed)
    while True:
        points = []
        used = set()
        while len(points) < n:
            p = (rng.randrange(coord_range + 1), rng.randrange(coord_range + 1))
            if p not in used:
                used.add(p)
                points.append(p)
        if not validate_points(points).ok:
            continue
        hull = set(geom.extremal_indices(points))
        interior = [i for i in range(n) if i not in hull]
        if len(interior) < reds:
            continue
        red_ids = set(rng.sample(interior, reds))
        weights = [1 if i in red_ids else 0 for i in range(n)]
        yield Cake.from_data(points, weights)


def search_no_reveal_counterexample(
    seed: int, budget: int, n: int = 10, reds: int = 4
) -> Optional[Counterexample]:
    """Hunt for a cake whose unique non-revealing root move is suboptimal.

    Draws from ``random_cakes(seed)`` until the budget runs out.  A hit
    requires: no extremal red at the root, exactly one non-revealing
    move, and a solver-certified strictly worse value for Alice after
    that move.  Returns None when the budget is exhausted.
    """
    if budget <= 0:
        return None
    attempts = 0
    for cake in random_cakes(seed, n=n, reds=reds):
        if attempts >= budget:
            return None
        attempts += 1
        solver = Solver(cake)
        full = cake.full_mask
        nonreveal = _non_revealing(cake, solver, full)
        if len(nonreveal) != 1:
            continue
        move = next(iter(nonreveal))
        root_value = solver.value(full)
        value_after = solver.value(full & ~(1 << move))
        if value_after > root_value:
            return Counterexample(cake, move, root_value, value_after, attempts)
    return None
