"""Exact planar convex geometry.

Areas here are *normalized*: twice the Lebesgue area, so the standard
triangle has area 1 and the unit square area 2. Mixed areas follow the same
convention, which makes ``mixed_area(P, P) == normalized_area(P)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import EmptyInput
from .exact import as_rational

Point2 = tuple[Fraction, Fraction]


def cross(o: Point2, a: Point2, b: Point2) -> Fraction:
    """Twice the signed area of the triangle (o, a, b); positive if counterclockwise."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class ConvexPolygon:
    """Vertices in counterclockwise order, starting at the lexicographic minimum.

    A point has one vertex and a segment two (its sorted endpoints). Always
    build instances through :func:`hull`.
    """

    vertices: tuple[Point2, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def dimension(self) -> int:
        return min(len(self.vertices) - 1, 2)

    def translate(self, dx, dy) -> "ConvexPolygon":
        dx, dy = as_rational(dx), as_rational(dy)
        return ConvexPolygon(tuple((x + dx, y + dy) for x, y in self.vertices))

    def scale(self, t) -> "ConvexPolygon":
        t = as_rational(t)
        if t == 0:
            return ConvexPolygon(((Fraction(0), Fraction(0)),))
        if t < 0:
            return hull((t * x, t * y) for x, y in self.vertices)
        return ConvexPolygon(tuple((t * x, t * y) for x, y in self.vertices))


def _point(p: Sequence) -> Point2:
    return (as_rational(p[0]), as_rational(p[1]))


def hull_indices(points: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    """Counterclockwise hull vertices of integer points (collinear points dropped)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain: list[tuple[int, int]] = []
        for p in seq:
            while len(chain) >= 2:
                (ox, oy), (ax, ay) = chain[-2], chain[-1]
                if (ax - ox) * (p[1] - oy) - (ay - oy) * (p[0] - ox) > 0:
                    break
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def clear_denominators(points: Iterable[Sequence[Fraction]]) -> tuple[int, list[tuple[int, ...]]]:
    """Common denominator ``d`` and the integer points ``d * p``."""
    points = list(points)
    den = lcm(*(c.denominator for p in points for c in p)) if points else 1
    return den, [tuple(c.numerator * (den // c.denominator) for c in p) for p in points]


def hull(points: Iterable[Sequence]) -> ConvexPolygon:
    """Canonical convex hull (monotone chain, exact orientation tests)."""
    pts = [_point(p) for p in points]
    if not pts:
        raise EmptyInput("hull of an empty point set")
    # Orientation tests on integers after clearing denominators: same answer, far cheaper.
    den, ints = clear_denominators(pts)
    ring = hull_indices(ints)
    return ConvexPolygon(tuple((Fraction(x, den), Fraction(y, den)) for x, y in ring))


def normalized_area(poly: ConvexPolygon) -> Fraction:
    """Twice the Lebesgue area (0 for points and segments)."""
    v = poly.vertices
    if len(v) < 3:
        return Fraction(0)
    total = Fraction(0)
    for i in range(len(v)):
        x0, y0 = v[i]
        x1, y1 = v[(i + 1) % len(v)]
        total += x0 * y1 - x1 * y0
    return abs(total)


def minkowski_sum(p: ConvexPolygon, q: ConvexPolygon) -> ConvexPolygon:
    return hull((a[0] + b[0], a[1] + b[1]) for a in p.vertices for b in q.vertices)


def mixed_area(p: ConvexPolygon, q: ConvexPolygon) -> Fraction:
    """Normalized mixed area; bilinear under Minkowski sums, ``MV(P, P) = area(P)``."""
    if len(p) == 1 or len(q) == 1:
        return Fraction(0)
    return (normalized_area(minkowski_sum(p, q)) - normalized_area(p) - normalized_area(q)) / 2
