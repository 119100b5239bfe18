"""The cake data model: weighted point sets, masks, and the file format.

A cake is an ordered list of weighted cherries in general position.
Weights are exact rationals; everything outside the solver restricts
them to {0, 1} (red / green).  Remaining subsets are plain integer
bitmasks over cherry ids, which caps the cake size at 63 so the
solver's memo table can key on a single machine word.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import geom
from .geom import Point

MAX_CAKE_SIZE = 63

SubsetMask = int


class CakeError(ValueError):
    pass


class TooLargeError(CakeError):
    pass


class MaskRangeError(CakeError):
    pass


class CakeParseError(CakeError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Violation:
    """One general-position failure: a duplicate pair or collinear triple."""

    kind: str  # "duplicate" | "collinear"
    ids: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


class ValidationError(CakeError):
    def __init__(self, report: ValidationReport):
        lines = ", ".join(f"{v.kind}{v.ids}" for v in report.violations)
        super().__init__(f"invalid cake: {lines}")
        self.report = report


@dataclass(frozen=True)
class Cherry:
    id: int
    point: Point
    weight: Fraction

    @property
    def is_red(self) -> bool:
        return self.weight == 1

    @property
    def is_green(self) -> bool:
        return self.weight == 0


def validate_points(points: Sequence[Point]) -> ValidationReport:
    """Full distinctness + general-position scan; lists every violation."""
    violations: list[Violation] = []
    n = len(points)
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            violations.append(Violation("duplicate", (seen[p], i)))
        else:
            seen[p] = i
    if not violations:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    if geom.cross(points[i], points[j], points[k]) == 0:
                        violations.append(Violation("collinear", (i, j, k)))
    return ValidationReport(tuple(violations))


class Cake:
    """Immutable ordered list of cherries; validated at construction."""

    __slots__ = ("cherries", "points", "weights", "sorted_ids", "red_mask")

    def __init__(self, cherries: Iterable[Cherry], _checked: bool = False):
        cherries = tuple(cherries)
        if len(cherries) > MAX_CAKE_SIZE:
            raise TooLargeError(
                f"cake has {len(cherries)} cherries; the mask cap is {MAX_CAKE_SIZE}"
            )
        for i, ch in enumerate(cherries):
            if ch.id != i:
                raise CakeError(f"cherry at position {i} has id {ch.id}")
            if ch.weight < 0:
                raise CakeError(f"cherry {i} has negative weight {ch.weight}")
        self.cherries = cherries
        self.points: tuple[Point, ...] = tuple(ch.point for ch in cherries)
        self.weights: tuple[Fraction, ...] = tuple(ch.weight for ch in cherries)
        if not _checked:
            report = validate_points(self.points)
            if not report.ok:
                raise ValidationError(report)
        # Pre-sorted ids make per-subset hull computations O(n) in the
        # solver's inner loop instead of O(n log n).
        self.sorted_ids: tuple[int, ...] = tuple(
            sorted(range(len(cherries)), key=self.points.__getitem__)
        )
        self.red_mask: int = sum(1 << ch.id for ch in cherries if ch.is_red)

    @classmethod
    def from_data(
        cls, points: Sequence[Point], weights: Sequence[Fraction | int]
    ) -> "Cake":
        if len(points) != len(weights):
            raise CakeError("points and weights differ in length")
        return cls(
            Cherry(i, tuple(p), Fraction(w))
            for i, (p, w) in enumerate(zip(points, weights))
        )

    def __len__(self) -> int:
        return len(self.cherries)

    def __eq__(self, other) -> bool:
        return isinstance(other, Cake) and self.cherries == other.cherries

    def __hash__(self):
        return hash(self.cherries)

    def __repr__(self) -> str:
        return f"Cake({len(self)} cherries, {bin(self.red_mask).count('1')} red)"

    @property
    def full_mask(self) -> SubsetMask:
        return (1 << len(self.cherries)) - 1

    @property
    def is_binary(self) -> bool:
        return all(w == 0 or w == 1 for w in self.weights)

    def check_mask(self, mask: SubsetMask) -> None:
        if mask < 0 or mask >> len(self.cherries):
            raise MaskRangeError(f"mask {bin(mask)} out of range for {self!r}")

    def ids_in(self, mask: SubsetMask) -> list[int]:
        return [i for i in range(len(self.cherries)) if mask >> i & 1]


def red_count(cake: Cake, mask: SubsetMask) -> int:
    """Number of remaining weight-1 cherries."""
    cake.check_mask(mask)
    return (mask & cake.red_mask).bit_count()


def green_count(cake: Cake, mask: SubsetMask) -> int:
    """Number of remaining weight-0 cherries."""
    cake.check_mask(mask)
    green_mask = sum(1 << ch.id for ch in cake.cherries if ch.is_green)
    return (mask & green_mask).bit_count()


def validate(cake: Cake) -> ValidationReport:
    return validate_points(cake.points)


def _format_weight(w: Fraction) -> str:
    return str(w.numerator) if w.denominator == 1 else f"{w.numerator}/{w.denominator}"


def serialize(cake: Cake) -> str:
    """Deterministic text form: count line, then one "<x> <y> <w>" per cherry."""
    lines = [str(len(cake))]
    for ch in cake.cherries:
        lines.append(f"{ch.point[0]} {ch.point[1]} {_format_weight(ch.weight)}")
    return "\n".join(lines) + "\n"


def parse(text: str, validated: bool = True) -> Cake:
    """Parse the cake file format; inverse of serialize on valid input.

    Syntax failures raise CakeParseError with the offending line number;
    semantic failures (duplicates, collinearity) raise ValidationError
    unless ``validated`` is False.
    """
    lines = text.splitlines()
    if not lines:
        raise CakeParseError("empty input", 1)
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise CakeParseError(f"expected cherry count, got {lines[0]!r}", 1) from None
    if n < 0:
        raise CakeParseError("negative cherry count", 1)
    body = [ln for ln in lines[1:] if ln.strip()]
    if len(body) != n:
        raise CakeParseError(f"expected {n} cherry lines, found {len(body)}", len(lines))
    cherries = []
    for i, ln in enumerate(body):
        parts = ln.split()
        if len(parts) != 3:
            raise CakeParseError(f"expected 'x y w', got {ln!r}", i + 2)
        try:
            x, y = int(parts[0]), int(parts[1])
            w = Fraction(parts[2])
        except (ValueError, ZeroDivisionError):
            raise CakeParseError(f"bad number in {ln!r}", i + 2) from None
        if w < 0:
            raise CakeParseError(f"negative weight in {ln!r}", i + 2)
        cherries.append(Cherry(i, (x, y), w))
    if validated:
        cake = Cake(cherries)  # raises ValidationError on bad geometry
    else:
        cake = Cake(cherries, _checked=True)
    return cake


def load(path) -> Cake:
    with open(path, "r", encoding="ascii") as f:
        return parse(f.read())


def save(cake: Cake, path) -> None:
    with open(path, "w", encoding="ascii", newline="") as f:
        f.write(serialize(cake))
