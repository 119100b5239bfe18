"""Move policies and sun-specific game-state instrumentation.

Two tactics from the construction playbook:

* simple greedy -- take an extremal red if one exists, else anything;
* careful greedy -- a beam-aware refinement for suns that prioritizes
  beams still hiding a second red.

Every "any"/"a" in the policy texts resolves to the lowest cherry id:
determinism is required both for memoized adversarial search and for
reproducible experiments.  Careful greedy refuses to run without a
SunAnnotation, because beams are construction metadata that cannot be
recovered from bare geometry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from . import geom
from .cake import Cake
from .engine import GameState, Tactic
from .geom import HalfPlane, LEFT_CLOSED, RIGHT_CLOSED


class CarefulGreedyFail(Exception):
    """The careful greedy decision tree bottomed out.

    Unreachable in legal play on a valid sun; reaching it means either
    the cake is not a sun or a tactic/engine bug slipped through, so it
    is surfaced instead of being papered over with a fallback move.
    """


class AnnotationError(ValueError):
    pass


@dataclass(frozen=True)
class SunAnnotation:
    """Structural metadata of a sun: k beams around a central green.

    Each beam lists 4 cherry ids ordered outermost to innermost with
    the weight pattern [green, red, green, red]; together with the
    center they partition the cake.
    """

    k: int
    center_id: int
    beams: tuple[tuple[int, int, int, int], ...]

    def __post_init__(self):
        if self.k < 3 or self.k % 2 == 0:
            raise AnnotationError(f"k must be odd and > 2, got {self.k}")
        if len(self.beams) != self.k:
            raise AnnotationError("beam count does not match k")
        ids = [self.center_id] + [i for beam in self.beams for i in beam]
        if sorted(ids) != list(range(4 * self.k + 1)):
            raise AnnotationError("beams plus center must partition 0..4k")

    def check_weights(self, cake: Cake) -> None:
        if not cake.weights[self.center_id] == 0:
            raise AnnotationError("center cherry must be green")
        for beam in self.beams:
            pattern = [cake.weights[i] for i in beam]
            if pattern != [0, 1, 0, 1]:
                raise AnnotationError(
                    f"beam {beam} has weight pattern {pattern}, want [0, 1, 0, 1]"
                )

    @classmethod
    def infer(cls, cake: Cake) -> "SunAnnotation":
        """Recover the annotation from the canonical sun id layout.

        Suns are emitted with beam i at ids [4i .. 4i+3] and the center
        last; this checks the weight pattern and returns the metadata.
        """
        n = len(cake)
        if n % 4 != 1 or n < 13:
            raise AnnotationError(f"{n} cherries is not a sun layout (4k+1, k >= 3)")
        k = (n - 1) // 4
        ann = cls(
            k=k,
            center_id=n - 1,
            beams=tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(k)),
        )
        ann.check_weights(cake)
        return ann


@dataclass(frozen=True)
class MoonAnnotation:
    """Structural metadata of a moon: outer greens over inner reds."""

    n: int
    green_ids: tuple[int, ...]
    red_ids: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise AnnotationError(f"n must be >= 2, got {self.n}")
        if len(self.green_ids) != self.n + 1 or len(self.red_ids) != self.n - 1:
            raise AnnotationError("moon must have n+1 greens and n-1 reds")


def simple_greedy(state: GameState) -> int:
    """Lowest-id extremal red if any exists, else lowest-id extremal."""
    ext = state.extremal
    reds = [i for i in ext if state.cake.weights[i] == 1]
    return min(reds) if reds else min(ext)


def careful_greedy(state: GameState, ann: SunAnnotation) -> int:
    """The beam-aware greedy decision tree, verbatim, lowest-id tie-breaks.

    1. An extremal red on a beam that also has a non-extremal remaining
       red -> take it.
    2. Else a beam with exactly one extremal red -> take that red.
    3. Else take any extremal red.
    4. No extremal red: a beam with remaining greens and no remaining
       reds -> take an extremal green from such a beam.
    5. Otherwise FAIL (a bug detector, never a fallback).
    """
    ext = state.extremal
    remaining = state.remaining
    weights = state.cake.weights
    ext_reds = {i for i in ext if weights[i] == 1}

    if ext_reds:
        # Branch 1: beams hiding a second red behind an extremal one.
        priority: list[int] = []
        singles: list[int] = []
        for beam in ann.beams:
            beam_reds = [i for i in beam if weights[i] == 1 and remaining >> i & 1]
            beam_ext_reds = [i for i in beam_reds if i in ext_reds]
            if beam_ext_reds and len(beam_reds) > len(beam_ext_reds):
                priority.extend(beam_ext_reds)
            if len(beam_ext_reds) == 1:
                singles.append(beam_ext_reds[0])
        if priority:
            return min(priority)
        if singles:
            return min(singles)
        return min(ext_reds)

    # Branch 4: all-green beams.
    greens_on_red_free_beams: list[int] = []
    has_red_free_beam_with_green = False
    for beam in ann.beams:
        alive = [i for i in beam if remaining >> i & 1]
        if not alive:
            continue
        if any(weights[i] == 1 for i in alive):
            continue
        has_red_free_beam_with_green = True
        greens_on_red_free_beams.extend(i for i in alive if i in ext)
    if greens_on_red_free_beams:
        return min(greens_on_red_free_beams)
    if has_red_free_beam_with_green:
        # The policy text assumes such a beam always exposes a green;
        # treat a counterexample as a failure too rather than invent a move.
        raise CarefulGreedyFail(
            "red-free beam exists but none of its greens is extremal"
        )
    raise CarefulGreedyFail("no extremal red and no red-free beam with greens")


def is_semi_exposed(state: GameState, ann: SunAnnotation, beam_index: int) -> bool:
    """Exactly two remaining reds on the beam, exactly one of them extremal."""
    beam = ann.beams[beam_index]
    weights = state.cake.weights
    reds = [i for i in beam if weights[i] == 1 and state.remaining >> i & 1]
    if len(reds) != 2:
        return False
    return sum(1 for i in reds if i in state.extremal) == 1


def sle_tot(state: GameState, ann: SunAnnotation) -> tuple[int, int]:
    """(beams with exactly one remaining red, beams with at least one)."""
    weights = state.cake.weights
    sle = tot = 0
    for beam in ann.beams:
        reds = sum(
            1 for i in beam if weights[i] == 1 and state.remaining >> i & 1
        )
        if reds >= 1:
            tot += 1
        if reds == 1:
            sle += 1
    return sle, tot


def has_bounding_halfplane(
    state: GameState, ann: SunAnnotation
) -> Optional[HalfPlane]:
    """A closed half-plane through the center containing all remaining cherries.

    Such a witness exists iff the center is not strictly inside the hull
    of the other remaining cherries; when one exists, its boundary can
    always be rotated onto a remaining cherry, so checking the lines
    through the center and each remaining cherry is exhaustive.
    """
    pts = state.cake.points
    zeta = pts[ann.center_id]
    others = [
        i
        for i in range(len(state.cake))
        if state.remaining >> i & 1 and i != ann.center_id
    ]
    if not others:
        return HalfPlane(zeta, (1, 0), LEFT_CLOSED)
    for p in others:
        direction = (pts[p][0] - zeta[0], pts[p][1] - zeta[1])
        signs = [geom.cross(zeta, pts[p], pts[q]) for q in others]
        if all(s >= 0 for s in signs):
            return HalfPlane(zeta, direction, LEFT_CLOSED)
        if all(s <= 0 for s in signs):
            return HalfPlane(zeta, direction, RIGHT_CLOSED)
    return None


def max_tot_over_halfplanes(cake: Cake, ann: SunAnnotation) -> int:
    """max Tot(U intersect full sun) over closed half-planes through the center.

    Tot is monotone under inclusion, and rotating a bounding line onto
    the nearest cherry only grows the contained set, so the maximum is
    attained by a half-plane whose boundary passes through the center
    and one of the cherries; those finitely many are enumerated.
    """
    pts = cake.points
    zeta = pts[ann.center_id]
    best = 0
    for p in range(len(cake)):
        if p == ann.center_id:
            continue
        for side in (1, -1):
            tot = 0
            for beam in ann.beams:
                for i in beam:
                    if cake.weights[i] != 1:
                        continue
                    s = geom.cross(zeta, pts[p], pts[i])
                    if s == 0 or (s > 0) == (side == 1):
                        tot += 1
                        break
            best = max(best, tot)
    return best


def lowest_id(state: GameState) -> int:
    return min(state.extremal)


def seeded_random_choice(seed: int, state: GameState) -> int:
    """Uniform choice among legal moves, a pure function of (seed, state)."""
    rng = random.Random((seed << 64) | state.remaining)
    return rng.choice(sorted(state.extremal))


def simple_greedy_tactic() -> Tactic:
    return Tactic("simple-greedy", simple_greedy)


def careful_greedy_tactic(ann: SunAnnotation) -> Tactic:
    return Tactic("careful-greedy", lambda s: careful_greedy(s, ann))


def lowest_id_tactic() -> Tactic:
    return Tactic("lowest-id", lowest_id)


def random_tactic(seed: int) -> Tactic:
    return Tactic(f"random:{seed}", lambda s: seeded_random_choice(seed, s))


def tactic_from_name(name: str, cake: Cake) -> Tactic:
    """Resolve a CLI/service tactic name for the given cake."""
    if name == "simple-greedy":
        return simple_greedy_tactic()
    if name == "careful-greedy":
        return careful_greedy_tactic(SunAnnotation.infer(cake))
    if name == "lowest-id":
        return lowest_id_tactic()
    if name.startswith("random:"):
        try:
            seed = int(name.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad random tactic spec {name!r}") from None
        return random_tactic(seed)
    raise ValueError(f"unknown tactic {name!r}")
