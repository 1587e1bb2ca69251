"""Exact rational plane geometry: areas, convexity, side subdivision, strips, apex.

Conventions used throughout the package:

* quadrilaterals are labelled A, B, C, D counterclockwise, with sides AB and
  DC the two that get divided (AB from A, DC from D);
* strip i is the quadrilateral between division lines i-1 and i, so the strip
  tuple starts at the AD end;
* all coordinates and areas are Fractions, never floats.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .division import DivisionSpec, RationalLike, to_fraction
from .errors import InconsistentQuadError, InvalidInputError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        # coerce so that downstream divisions never fall back to floats
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", to_fraction(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", to_fraction(self.y))

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar) -> "Point":
        s = to_fraction(scalar)
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def cross(self, other: "Point") -> Fraction:
        return self.x * other.y - self.y * other.x

    def text(self) -> str:
        return f"{self.x},{self.y}"

    @classmethod
    def parse(cls, text: str) -> "Point":
        parts = text.split(",")
        if len(parts) != 2:
            raise InvalidInputError(f"a point is written as 'x,y', got {text!r}")
        return cls(to_fraction(parts[0]), to_fraction(parts[1]))


def pt(x: RationalLike, y: RationalLike) -> Point:
    """Convenience constructor coercing ints and strings to exact rationals."""
    return Point(to_fraction(x), to_fraction(y))


def polygon_area(vertices: Sequence[Point]) -> Fraction:
    """Signed shoelace area, positive for counterclockwise order, exact."""
    if len(vertices) < 3:
        raise InvalidInputError("a polygon needs at least three vertices")
    twice = Fraction(0)
    for i, v in enumerate(vertices):
        w = vertices[(i + 1) % len(vertices)]
        twice += v.cross(w)
    return twice / 2


def is_convex_ccw(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff the four consecutive cross products are all strictly positive."""
    quad = (a, b, c, d)
    for i in range(4):
        u = quad[(i + 1) % 4] - quad[i]
        v = quad[(i + 2) % 4] - quad[(i + 1) % 4]
        if u.cross(v) <= 0:
            return False
    return True


@dataclass(frozen=True)
class ConvexQuad:
    """A strictly convex quadrilateral with counterclockwise vertex order."""

    a: Point
    b: Point
    c: Point
    d: Point

    def __post_init__(self):
        if not is_convex_ccw(self.a, self.b, self.c, self.d):
            raise InvalidInputError(
                "vertices are not a strictly convex counterclockwise quadrilateral"
            )

    @classmethod
    def of(cls, a: Point, b: Point, c: Point, d: Point) -> "ConvexQuad":
        """Build a quad, reflecting clockwise input by swapping B and D."""
        if is_convex_ccw(a, b, c, d):
            return cls(a, b, c, d)
        if is_convex_ccw(a, d, c, b):
            log.info("clockwise quadrilateral input; swapped B and D to restore orientation")
            return cls(a, d, c, b)
        raise InvalidInputError("vertices do not form a strictly convex quadrilateral")

    @classmethod
    def parse(cls, text: str) -> "ConvexQuad":
        points = [Point.parse(part) for part in text.split(";") if part.strip()]
        if len(points) != 4:
            raise InvalidInputError("a quadrilateral is written as four ';'-separated points")
        return cls.of(*points)

    @property
    def vertices(self) -> tuple[Point, Point, Point, Point]:
        return (self.a, self.b, self.c, self.d)

    @property
    def area(self) -> Fraction:
        return polygon_area(self.vertices)

    def text(self) -> str:
        return ";".join(v.text() for v in self.vertices)


@dataclass(frozen=True)
class DivisionPoints:
    """Division points along AB and DC, endpoints included."""

    on_ab: tuple[Point, ...]
    on_dc: tuple[Point, ...]


@dataclass(frozen=True)
class ParallelMarker:
    """Marker returned by apex_of when AB and DC are parallel."""


@dataclass(frozen=True)
class ApexFrame:
    """Apex data for a non-parallel quad.

    ``branch`` is "q1" when A lies between the apex and B, "q2" when B lies
    between A and the apex.  ``p0`` and ``p0_prime`` extend the ratio scales
    toward the apex along the divided sides, measured from the corner nearest
    the apex.  ``scale`` is the area unit: the triangle cut off at the apex by
    the nearest division corners has area scale*p0*p0_prime.
    """

    apex: Point
    branch: str
    p0: Fraction
    p0_prime: Fraction
    scale: Fraction


def _cumulative(ratios: Sequence[Fraction]) -> list[Fraction]:
    sums = [Fraction(0)]
    for r in ratios:
        sums.append(sums[-1] + r)
    return sums


def subdivide(q: ConvexQuad, spec: DivisionSpec) -> DivisionPoints:
    """Division points at the prescribed consecutive ratios, exact."""
    sums_ab = _cumulative(spec.p)
    sums_dc = _cumulative(spec.p_prime)
    total_ab, total_dc = sums_ab[-1], sums_dc[-1]
    on_ab = tuple(q.a + (s / total_ab) * (q.b - q.a) for s in sums_ab)
    on_dc = tuple(q.d + (s / total_dc) * (q.c - q.d) for s in sums_dc)
    return DivisionPoints(on_ab, on_dc)


def strip_areas(q: ConvexQuad, spec: DivisionSpec) -> tuple[Fraction, ...]:
    """Exact areas of the strips between consecutive division lines."""
    division = subdivide(q, spec)
    areas = []
    for i in range(1, spec.n + 1):
        strip = (
            division.on_ab[i - 1],
            division.on_ab[i],
            division.on_dc[i],
            division.on_dc[i - 1],
        )
        area = polygon_area(strip)
        assert area > 0, "strip areas of a convex quadrilateral must be positive"
        areas.append(area)
    return tuple(areas)


def apex_of(q: ConvexQuad, spec: DivisionSpec):
    """Apex frame of the quad, or ParallelMarker when AB and DC never meet.

    The intersection point E of lines AB and DC is computed exactly.  E must
    fall outside both divided segments; it landing inside one means the input
    is not a valid convex quadrilateral (guards corrupted data).
    """
    u = q.b - q.a
    w = q.c - q.d
    denom = u.cross(w)
    if denom == 0:
        return ParallelMarker()
    diff = q.d - q.a
    t = diff.cross(w) / denom  # parameter along AB: A at 0, B at 1
    r = diff.cross(u) / denom  # parameter along DC: D at 0, C at 1
    if 0 <= t <= 1 or 0 <= r <= 1:
        raise InconsistentQuadError("side lines meet inside a divided segment")
    apex = q.a + t * u
    total_ab = sum(spec.p)
    total_dc = sum(spec.p_prime)
    if t < 0:
        # apex beyond A, hence also beyond D on the other side
        assert r < 0
        p0 = -t * total_ab
        p0_prime = -r * total_dc
        tri = polygon_area([apex, q.a, q.d])
        branch = "q1"
    else:
        assert r > 1
        p0 = (t - 1) * total_ab
        p0_prime = (r - 1) * total_dc
        tri = polygon_area([apex, q.c, q.b])
        branch = "q2"
    assert tri > 0
    return ApexFrame(apex, branch, p0, p0_prime, tri / (p0 * p0_prime))
