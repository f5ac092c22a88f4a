"""Exact planar geometry over arbitrary-precision integer coordinates.

Signed areas come out as Fractions with denominator 1 or 2; nothing is ever
rounded.  Vertex order is meaningful throughout: the surveyor's formula is
orientation-sensitive and no function reorders its input.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .sequences import SequenceFamily, family_term


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class Polygon:
    """An ordered vertex list, at least a triangle."""

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        # operator.index rejects floats and fractions: coordinates are exact.
        object.__setattr__(
            self,
            "vertices",
            tuple(
                Point(operator.index(p[0]), operator.index(p[1]))
                for p in self.vertices
            ),
        )
        if len(self.vertices) < 3:
            raise ValueError("a polygon needs at least 3 vertices")

    def translated(self, dx: int, dy: int) -> Polygon:
        return Polygon(tuple(Point(p.x + dx, p.y + dy) for p in self.vertices))

    def reversed(self) -> Polygon:
        return Polygon(tuple(self.vertices[::-1]))


@dataclass(frozen=True)
class PolygonSpec:
    """Recipe for an m-gon on sequence terms: vertex i is
    (seq(n + 2*i*k), seq(n + (2*i+1)*k)) for i = 0 .. m-1."""

    family: SequenceFamily
    n: int
    k: int
    m: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"start index n must be >= 0, got {self.n}")
        if self.k < 1:
            raise ValueError(f"stride k must be >= 1, got {self.k}")
        if self.m < 3:
            raise ValueError(f"vertex count m must be >= 3, got {self.m}")

    @property
    def max_index(self) -> int:
        """Largest sequence index the vertex pattern touches."""
        return self.n + (2 * self.m - 1) * self.k


def build_vertices(spec: PolygonSpec) -> Polygon:
    """Materialize the vertex pattern of a PolygonSpec as a Polygon."""
    points = []
    for i in range(spec.m):
        x = family_term(spec.family, spec.n + 2 * i * spec.k)
        y = family_term(spec.family, spec.n + (2 * i + 1) * spec.k)
        points.append(Point(x, y))
    return Polygon(tuple(points))


def shoelace_signed(poly: Polygon) -> Fraction:
    """Signed surveyor's-formula area: half the cyclic sum of cross terms.

    Positive for counterclockwise orientation.
    """
    total = 0
    pts = poly.vertices
    for i in range(len(pts)):
        a = pts[i]
        b = pts[(i + 1) % len(pts)]
        total += a.x * b.y - b.x * a.y
    return Fraction(total, 2)


def shoelace_area(poly: Polygon) -> Fraction:
    """Absolute surveyor's-formula area."""
    return abs(shoelace_signed(poly))


def triangle_area_det(p1: Point, p2: Point, p3: Point) -> Fraction:
    """Triangle area as half the absolute edge-difference determinant."""
    det = (p2.x - p1.x) * (p3.y - p1.y) - (p2.y - p1.y) * (p3.x - p1.x)
    return Fraction(abs(det), 2)


def collinear(points: Sequence[Point]) -> bool:
    """True if all points lie on one line (exact cross-product test).

    Needs at least 2 points; a fully coincident set counts as collinear.
    """
    if len(points) < 2:
        raise ValueError("collinearity needs at least 2 points")
    first = points[0]
    anchor = next((p for p in points if p != first), None)
    if anchor is None:
        return True
    ux, uy = anchor.x - first.x, anchor.y - first.y
    return all(
        ux * (p.y - first.y) - uy * (p.x - first.x) == 0 for p in points
    )
