"""Exact-arithmetic workbench for the convex grabbing game.

Two players alternately grab convex-hull vertices of a weighted planar
point set; Alice moves first and minimizes Bob's total weight, Bob
maximizes it.  The package provides exact geometric predicates, the
game engine and referee, a memoized minimax solver, greedy tactics,
generators and validators for the sun and moon configurations, checkers
for the optimal-move conjectures, a CLI, and an HTTP session service
for live play.
"""

__version__ = "0.1.0"
