"""Integer-coordinate realizations of the sun and moon configurations.

The defining texts for both families are metric (circles, rotational
symmetry, an epsilon band); what every argument downstream actually
uses is a handful of combinatorial facts, and exact rotational symmetry
is unattainable on the integer grid anyway.  So the builders sketch the
metric picture in floating point, round onto the grid at a given scale,
and then the exact validators -- which check precisely the combinatorial
facts -- decide whether the rounding survived.  On failure the scale is
doubled and the sketch retried; the validators define correctness.

Sun: k beams (4 cherries [green, red, green, red], outermost first, on
a shallow arc) spread evenly around a central green cherry, far enough
out that every beam cherry stays outside the hull of the other beams.

Moon: n+1 greens on an outer half-circle, n-1 reds slightly deeper on
the same rays, so that exactly one red pops out whenever a green is
taken, and taking that pair leaves a smaller moon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import geom, ordertype
from .cake import Cake, Cherry, validate_points
from .tactics import MoonAnnotation, SunAnnotation

DEFAULT_SCALE = 10**6
RETRY_LIMIT = 10


class ConstructionError(Exception):
    def __init__(self, message: str, failures: tuple[str, ...] = ()):
        if failures:
            message = f"{message}: {', '.join(failures)}"
        super().__init__(message)
        self.failures = failures


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


@dataclass(frozen=True)
class ConstructionReport:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(f"{c.name}: {c.detail}" for c in self.checks if not c.ok)


def _round_point(x: float, y: float) -> geom.Point:
    return (round(x), round(y))


# ---------------------------------------------------------------------------
# Sun


def _sketch_sun(k: int, scale: int) -> list[geom.Point]:
    """Float sketch of the sun, beam-major order, center last.

    Each beam sits on a circular arc whose chords run nearly radially,
    so a line through any two beam cherries passes close to the center
    and exits through the gap between the two opposite beams (k is
    odd).  Radial spacing keeps even the innermost cherry outside the
    hull of the other beams.
    """
    r0 = float(scale)
    gap = 1.0 - math.cos(2.0 * math.pi / k)
    d = r0 * gap / 10.0  # radial spacing between beam cherries
    delta = 1.0 / (100.0 * k)  # arc step, radians
    big_l = d / delta  # lateral circle radius

    template = []
    for t in range(4):  # t = 0 outermost
        alpha = (4 - t) * delta
        radial = r0 + big_l * math.sin(alpha)
        lateral = -big_l * (1.0 - math.cos(alpha))
        template.append((radial, lateral))

    points: list[geom.Point] = []
    for i in range(k):
        phi = 2.0 * math.pi * i / k
        c, s = math.cos(phi), math.sin(phi)
        for radial, lateral in template:
            points.append(_round_point(radial * c - lateral * s, radial * s + lateral * c))
    points.append((0, 0))  # the central green
    return points


def build_sun(k: int, scale: int = DEFAULT_SCALE) -> tuple[Cake, SunAnnotation]:
    """A validated sun with k beams; k must be odd and greater than 2."""
    if k <= 2 or k % 2 == 0:
        raise ConstructionError(f"k must be odd and > 2, got {k}")
    last: tuple[str, ...] = ()
    for _ in range(RETRY_LIMIT):
        points = _sketch_sun(k, scale)
        weights = []
        for i in range(k):
            weights.extend([0, 1, 0, 1])
        weights.append(0)
        if validate_points(points).ok:
            cake = Cake.from_data(points, weights)
            ann = SunAnnotation(
                k=k,
                center_id=4 * k,
                beams=tuple(tuple(range(4 * i, 4 * i + 4)) for i in range(k)),
            )
            report = validate_sun(cake, ann)
            if report.ok:
                return cake, ann
            last = report.failures
        else:
            last = ("general position failed after rounding",)
        scale *= 2
    raise ConstructionError(f"sun k={k} failed after {RETRY_LIMIT} retries", last)


def validate_sun(cake: Cake, ann: SunAnnotation) -> ConstructionReport:
    """Exact checks of the sun's defining combinatorial properties.

    (a) every beam cherry lies strictly outside the convex hull of the
        cherries inner to it on its own beam plus everything off-beam;
        by monotonicity this settles extremality of the outermost
        remaining beam cherry under every game-reachable removal;
    (b) the line through any two cherries of a beam cuts no other beam
        and leaves (k-1)/2 whole beams strictly on each side;
    (c) each beam together with the center is in convex position.

    Rotational symmetry is metric and deliberately not checked.
    """
    checks: list[CheckResult] = []
    ann.check_weights(cake)
    pts = cake.points
    k = ann.k

    ok_a, detail_a = True, ""
    for bi, beam in enumerate(ann.beams):
        off_beam = [pts[i] for i in range(len(cake)) if i not in beam]
        for t, cid in enumerate(beam):
            others = off_beam + [pts[i] for i in beam[t + 1 :]]
            if geom.strictly_inside_hull(others, pts[cid]):
                ok_a, detail_a = False, f"beam {bi} cherry {cid} buried at depth {t}"
                break
        if not ok_a:
            break
    checks.append(CheckResult("beam-cherries-exposed", ok_a, detail_a))

    ok_b, detail_b = True, ""
    want = (k - 1) // 2
    for bi, beam in enumerate(ann.beams):
        for a_idx in range(4):
            for b_idx in range(a_idx + 1, 4):
                p, q = pts[beam[a_idx]], pts[beam[b_idx]]
                pos = neg = 0
                for bj, other in enumerate(ann.beams):
                    if bj == bi:
                        continue
                    signs = {_sign(geom.cross(p, q, pts[i])) for i in other}
                    if len(signs) != 1 or 0 in signs:
                        ok_b = False
                        detail_b = (
                            f"line {beam[a_idx]}-{beam[b_idx]} cuts beam {bj}"
                        )
                        break
                    if 1 in signs:
                        pos += 1
                    else:
                        neg += 1
                if not ok_b:
                    break
                if (pos, neg) != (want, want):
                    ok_b = False
                    detail_b = (
                        f"line {beam[a_idx]}-{beam[b_idx]} splits beams "
                        f"{pos}/{neg}, want {want}/{want}"
                    )
                    break
            if not ok_b:
                break
        if not ok_b:
            break
    checks.append(CheckResult("beam-lines-split-evenly", ok_b, detail_b))

    ok_c, detail_c = True, ""
    for bi, beam in enumerate(ann.beams):
        five = [pts[i] for i in beam] + [pts[ann.center_id]]
        try:
            if geom.extremal_indices(five) != set(range(5)):
                ok_c, detail_c = False, f"beam {bi} + center not in convex position"
                break
        except geom.GeometryError as exc:
            ok_c, detail_c = False, f"beam {bi} + center degenerate: {exc}"
            break
    checks.append(CheckResult("beam-plus-center-convex", ok_c, detail_c))

    return ConstructionReport(tuple(checks))


def _sign(v: int) -> int:
    return 0 if v == 0 else (1 if v > 0 else -1)


# ---------------------------------------------------------------------------
# Moon


def _sketch_moon(n: int, scale: int) -> tuple[list[geom.Point], list[int]]:
    """Float sketch: greens on the lower outer half-circle, reds inset.

    Rays leave the center every 180/n degrees; the kept half-plane is
    the lower one, whose boundary ray contributes the two endpoint
    greens.  Reds sit on the interior rays at radius 1 - eps with eps
    half of the reveal threshold.
    """
    eps = (1.0 - math.cos(math.pi / (2 * n))) / 2.0
    inner = 1.0 - eps
    points: list[geom.Point] = []
    weights: list[int] = []
    for j in range(n + 1):  # greens, sweeping 180 deg .. 360 deg
        theta = math.pi + j * math.pi / n
        points.append(_round_point(scale * math.cos(theta), scale * math.sin(theta)))
        weights.append(0)
    for j in range(1, n):  # reds on the interior rays
        theta = math.pi + j * math.pi / n
        points.append(
            _round_point(scale * inner * math.cos(theta), scale * inner * math.sin(theta))
        )
        weights.append(1)
    return points, weights


def build_moon(n: int, scale: int = DEFAULT_SCALE) -> tuple[Cake, MoonAnnotation]:
    """A validated moon with n+1 greens and n-1 reds; n must be >= 2."""
    if n < 2:
        raise ConstructionError(f"n must be >= 2, got {n}")
    last: tuple[str, ...] = ()
    for _ in range(RETRY_LIMIT):
        points, weights = _sketch_moon(n, scale)
        if validate_points(points).ok:
            cake = Cake.from_data(points, weights)
            ann = MoonAnnotation(
                n=n,
                green_ids=tuple(range(n + 1)),
                red_ids=tuple(range(n + 1, 2 * n)),
            )
            report = validate_moon(cake, ann)
            if report.ok:
                return cake, ann
            last = report.failures
        else:
            last = ("general position failed after rounding",)
        scale *= 2
    raise ConstructionError(f"moon n={n} failed after {RETRY_LIMIT} retries", last)


MOON_EQUIV_CHECK_MAX = 7


def validate_moon(cake: Cake, ann: MoonAnnotation) -> ConstructionReport:
    """Exact checks of the moon's defining combinatorial properties.

    (a) the extremal set of the full cake is exactly the greens;
    (b) removing any single green exposes exactly one red;
    (c) removing a green and its exposed red leaves a cake
        order-equivalent to the next-smaller moon (checked for
        n <= MOON_EQUIV_CHECK_MAX; the bijection search grows fast).
    """
    checks: list[CheckResult] = []
    greens = set(ann.green_ids)
    reds = set(ann.red_ids)
    full = cake.full_mask

    ext = _extremal_of_mask(cake, full)
    ok_a = ext == greens
    checks.append(
        CheckResult("extremal-set-is-greens", ok_a, "" if ok_a else f"got {sorted(ext)}")
    )

    ok_b, detail_b = True, ""
    revealed: dict[int, int] = {}
    for g in ann.green_ids:
        sub = _extremal_of_mask(cake, full & ~(1 << g))
        new_reds = sub & reds
        if len(new_reds) != 1:
            ok_b = False
            detail_b = f"removing green {g} exposes reds {sorted(new_reds)}"
            break
        revealed[g] = next(iter(new_reds))
    checks.append(CheckResult("green-removal-reveals-one-red", ok_b, detail_b))

    ok_c, detail_c = True, ""
    if ok_b and 2 < ann.n <= MOON_EQUIV_CHECK_MAX:
        smaller, _ = build_moon(ann.n - 1)
        for g, r in revealed.items():
            rest = [ch for ch in cake.cherries if ch.id not in (g, r)]
            reduced = Cake.from_data(
                [ch.point for ch in rest], [ch.weight for ch in rest]
            )
            if ordertype.order_equivalent(reduced, smaller) is None:
                ok_c = False
                detail_c = f"removing ({g}, {r}) is not equivalent to the smaller moon"
                break
    checks.append(CheckResult("pair-removal-shrinks-moon", ok_c, detail_c))

    return ConstructionReport(tuple(checks))


def _extremal_of_mask(cake: Cake, mask: int) -> set[int]:
    ids = [i for i in cake.sorted_ids if mask >> i & 1]
    return set(geom.hull_from_sorted(cake.points, ids))


# ---------------------------------------------------------------------------
# Parity flip


def parity_flip(cake: Cake) -> Cake:
    """The cake plus one red cherry strictly outside its convex hull.

    The new cherry goes far along the positive x-axis beyond every
    existing coordinate; its y is nudged until no collinear triple
    appears.  Adding it swaps the parity of the cake size.
    """
    xs = [p[0] for p in cake.points]
    span = max(max(xs) - min(xs), 1)
    x_new = max(xs) + span
    y = 0
    while True:
        cand = (x_new, y)
        n = len(cake.points)
        clean = all(
            geom.cross(cake.points[i], cake.points[j], cand) != 0
            for i in range(n)
            for j in range(i + 1, n)
        )
        if clean:
            break
        y = -y + 1 if y <= 0 else -y  # 0, 1, -1, 2, -2, ...
    points = list(cake.points) + [cand]
    weights = list(cake.weights) + [Fraction(1)]
    return Cake.from_data(points, weights)


# ---------------------------------------------------------------------------
# Named construction specs (CLI / service surface)


def from_spec(spec: str, scale: int = DEFAULT_SCALE) -> tuple[Cake, Optional[object]]:
    """Build "sun:<k>", "moon:<n>", "sun+red:<k>" or "moon+red:<n>".

    Returns the cake and its annotation; the +red variants carry no
    annotation since the extra cherry breaks the layout the tactics
    rely on.
    """
    name, _, arg = spec.partition(":")
    try:
        value = int(arg)
    except ValueError:
        raise ConstructionError(f"bad construction spec {spec!r}") from None
    if name == "sun":
        return build_sun(value, scale)
    if name == "moon":
        return build_moon(value, scale)
    if name == "sun+red":
        cake, _ = build_sun(value, scale)
        return parity_flip(cake), None
    if name == "moon+red":
        cake, _ = build_moon(value, scale)
        return parity_flip(cake), None
    raise ConstructionError(f"unknown construction {name!r}")
