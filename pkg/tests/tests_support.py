"""Shared helpers for the test suite."""

from grabgame import cake as cakemod
from grabgame.cake import Cake


def random_general_cake(rng, n, reds=None, span=200):
    """A random general-position cake; weights uniform or with a fixed red count."""
    while True:
        pts = []
        used = set()
        while len(pts) < n:
            p = (rng.randrange(span), rng.randrange(span))
            if p not in used:
                used.add(p)
                pts.append(p)
        if cakemod.validate_points(pts).ok:
            break
    if reds is None:
        weights = [rng.randint(0, 1) for _ in range(n)]
    else:
        ids = set(rng.sample(range(n), reds))
        weights = [1 if i in ids else 0 for i in range(n)]
    return Cake.from_data(pts, weights)
