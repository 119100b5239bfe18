"""Order-type signatures and order-equivalence of weighted cakes.

Two cakes are order-equivalent when a weight-preserving bijection maps
one onto the other so that every orientation triple keeps (or globally
flips) its sign.  The game value depends only on this equivalence
class, so these tools power both deduplication and invariance tests.

Equivalence is decided by backtracking search over weight-respecting
bijections with triple-sign pruning; realizing signatures as point sets
is a hard problem we never need, since every signature here comes from
a concrete cake.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import geom
from .cake import Cake, TooLargeError

CANONICAL_KEY_MAX = 9


@dataclass(frozen=True)
class OrderSignature:
    n: int
    weights: tuple[Fraction, ...]
    triple_signs: dict[tuple[int, int, int], int]

    def sign(self, a: int, b: int, c: int) -> int:
        """Orientation sign of an arbitrary (not necessarily sorted) triple."""
        (i, j, k), parity = _sort3(a, b, c)
        return self.triple_signs[(i, j, k)] * parity


@dataclass(frozen=True)
class Bijection:
    mapping: tuple[int, ...]  # mapping[i] = image of cherry i
    sigma: int  # +1 orientation-preserving, -1 mirror


def _sort3(a: int, b: int, c: int) -> tuple[tuple[int, int, int], int]:
    """Sorted triple plus the permutation parity (+1 even, -1 odd)."""
    parity = 1
    if a > b:
        a, b = b, a
        parity = -parity
    if b > c:
        b, c = c, b
        parity = -parity
    if a > b:
        a, b = b, a
        parity = -parity
    return (a, b, c), parity


def signature(cake: Cake) -> OrderSignature:
    """Orientation sign of every sorted index triple, plus the weights."""
    n = len(cake)
    pts = cake.points
    signs: dict[tuple[int, int, int], int] = {}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                try:
                    signs[(i, j, k)] = geom.orientation(pts[i], pts[j], pts[k])
                except geom.GeometryError as exc:
                    raise geom.GeneralPositionError(str(exc)) from exc
    return OrderSignature(n, cake.weights, signs)


def order_equivalent(p: Cake, q: Cake) -> Optional[Bijection]:
    """A weight-preserving, sign-consistent bijection p -> q, or None.

    Tries sigma = +1 first, then -1.  Candidates are restricted to
    cherries of equal weight and pruned on every completed triple.
    """
    n = len(p)
    if n != len(q):
        return None
    if sorted(p.weights) != sorted(q.weights):
        return None
    sig_p = signature(p)
    sig_q = signature(q)
    candidates = [
        [j for j in range(n) if q.weights[j] == p.weights[i]] for i in range(n)
    ]

    def extend(sigma: int, mapping: list[int], used: list[bool]) -> bool:
        i = len(mapping)
        if i == n:
            return True
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for a in range(i):
                for b in range(a + 1, i):
                    if sig_q.sign(mapping[a], mapping[b], j) != sigma * sig_p.sign(
                        a, b, i
                    ):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                mapping.append(j)
                used[j] = True
                if extend(sigma, mapping, used):
                    return True
                used[j] = False
                mapping.pop()
        return False

    for sigma in (1, -1):
        mapping: list[int] = []
        used = [False] * n
        if extend(sigma, mapping, used):
            return Bijection(tuple(mapping), sigma)
    return None


def canonical_key(cake: Cake) -> bytes:
    """Minimal serialized signature over weight-respecting relabelings.

    Equal keys iff order-equivalent, for cakes of at most
    CANONICAL_KEY_MAX cherries (the search is factorial in each weight
    class, which only conjecture-scan deduplication ever needs).
    """
    n = len(cake)
    if n > CANONICAL_KEY_MAX:
        raise TooLargeError(f"canonical_key supports n <= {CANONICAL_KEY_MAX}")
    pts = cake.points
    order = sorted(range(n), key=lambda i: cake.weights[i])
    target_weights = tuple(cake.weights[i] for i in order)
    # Group original ids by weight; relabelings permute within classes.
    classes: list[list[int]] = []
    start = 0
    while start < n:
        end = start
        while end < n and cake.weights[order[end]] == cake.weights[order[start]]:
            end += 1
        classes.append([order[t] for t in range(start, end)])
        start = end
    triples = list(itertools.combinations(range(n), 3))
    best: Optional[tuple] = None
    for perm_parts in itertools.product(
        *(itertools.permutations(cls) for cls in classes)
    ):
        relabel = [i for part in perm_parts for i in part]  # new index -> old id
        signs = tuple(
            geom.orientation(pts[relabel[a]], pts[relabel[b]], pts[relabel[c]])
            for a, b, c in triples
        )
        for sigma in (1, -1):
            cand = tuple(sigma * s for s in signs)
            if best is None or cand < best:
                best = cand
    weight_part = ",".join(str(w) for w in target_weights)
    sign_part = "" if best is None else "".join("+" if s > 0 else "-" for s in best)
    return f"{n}|{weight_part}|{sign_part}".encode("ascii")
