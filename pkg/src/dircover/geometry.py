"""Points, non-vertical lines, the point-line duality, and exact predicates.

A non-vertical line is stored by the pair (a, b) meaning the solution set
of y + a*x + b = 0, so the duality is the trivial coefficient swap:
point (a, b) <-> line y + a*x + b = 0.  Incidence is symmetric under this
map, which is what every construction here exploits.  Vertical lines are
unrepresentable on purpose; vertical probes are handled as directions.

Everything is generic over the scalar domain (Fraction or CycloElement)
and decided by exact zero tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence, Union

from .errors import DegenerateInputError, OrderMismatchError
from .field import CycloElement

Scalar = Union[Fraction, CycloElement]


def _as_scalar(value) -> Scalar:
    if isinstance(value, (Fraction, CycloElement)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact scalar required, got {type(value).__name__}")


def _unify(x, y) -> tuple[Scalar, Scalar]:
    x, y = _as_scalar(x), _as_scalar(y)
    if isinstance(x, CycloElement) and isinstance(y, CycloElement):
        if x.order != y.order:
            raise OrderMismatchError(
                f"coordinates from different fields: orders {x.order} and {y.order}"
            )
    elif isinstance(x, CycloElement):
        y = CycloElement.from_rational(x.order, y)
    elif isinstance(y, CycloElement):
        x = CycloElement.from_rational(y.order, x)
    return x, y


def cross(ux: Scalar, uy: Scalar, vx: Scalar, vy: Scalar) -> Scalar:
    """Cross product of the vectors (ux, uy) and (vx, vy)."""
    return ux * vy - uy * vx


@dataclass(frozen=True)
class Point:
    x: Scalar
    y: Scalar

    def __post_init__(self):
        x, y = _unify(self.x, self.y)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)


@dataclass(frozen=True)
class NonVerticalLine:
    """The line y + a*x + b = 0 (slope -a).  Never vertical, by construction."""

    a: Scalar
    b: Scalar

    def __post_init__(self):
        a, b = _unify(self.a, self.b)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)


@dataclass(frozen=True)
class Direction:
    """A line direction: the vector (dx, dy) modulo scaling and sign.

    Rational directions have the canonical form "coprime integers with
    dx > 0, or (0, 1)", so equal classes compare equal structurally.  In
    the cyclotomic domain no canonical scaling exists without division,
    so class membership is always decided by the cross-product predicate
    (:meth:`parallel_to`), never by structural equality.
    """

    dx: Scalar
    dy: Scalar

    def __post_init__(self):
        dx, dy = _unify(self.dx, self.dy)
        if dx == 0 and dy == 0:
            raise DegenerateInputError("zero direction")
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "dy", dy)

    @classmethod
    def between(cls, p: Point, q: Point) -> "Direction":
        """Direction of the segment from p to q, canonicalized when rational."""
        d = cls(q.x - p.x, q.y - p.y)
        return d.canonical() if d.is_rational else d

    @property
    def is_rational(self) -> bool:
        return isinstance(self.dx, Fraction) and isinstance(self.dy, Fraction)

    @property
    def is_vertical(self) -> bool:
        return self.dx == 0

    def canonical(self) -> "Direction":
        """Canonical integer form; only the rational domain has one."""
        if not self.is_rational:
            raise ValueError("no canonical form without division; use parallel_to")
        k = self.dx.denominator * self.dy.denominator // gcd(
            self.dx.denominator, self.dy.denominator
        )
        a, b = int(self.dx * k), int(self.dy * k)
        g = gcd(abs(a), abs(b))
        a, b = a // g, b // g
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        return Direction(Fraction(a), Fraction(b))

    def parallel_to(self, other: "Direction") -> bool:
        return cross(self.dx, self.dy, other.dx, other.dy) == 0


def dual_point_to_line(p: Point) -> NonVerticalLine:
    """The bijection sending point (a, b) to the line y + a*x + b = 0."""
    return NonVerticalLine(p.x, p.y)


def dual_line_to_point(line: NonVerticalLine) -> Point:
    """Inverse of :func:`dual_point_to_line`."""
    return Point(line.a, line.b)


def incident(p: Point, line: NonVerticalLine) -> bool:
    """Exact incidence: p lies on the line iff p.y + a*p.x + b = 0.

    The expression is symmetric in the roles of point and line coefficients,
    which gives incident(p, dual(q)) == incident(q, dual(p)) for all p, q.
    """
    return p.y + line.a * p.x + line.b == 0


def parallel(l1: NonVerticalLine, l2: NonVerticalLine) -> bool:
    return l1.a == l2.a


def collinear(p: Point, q: Point, r: Point) -> bool:
    return cross(q.x - p.x, q.y - p.y, r.x - p.x, r.y - p.y) == 0


def ensure_distinct_points(points: Sequence[Point]) -> None:
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            raise DegenerateInputError(f"duplicate point at positions {seen[p]} and {i}")
        seen[p] = i


def ensure_distinct_lines(lines: Sequence[NonVerticalLine]) -> None:
    seen: dict[NonVerticalLine, int] = {}
    for i, line in enumerate(lines):
        if line in seen:
            raise DegenerateInputError(f"duplicate line at positions {seen[line]} and {i}")
        seen[line] = i


def concurrent_family(lines: Sequence[NonVerticalLine]) -> bool:
    """Whether one point lies on every line of the family.

    Decided through duality without any division: two distinct parallel
    lines never meet, and a pairwise non-parallel family is concurrent
    exactly when its dual points are collinear (their common line has
    distinct x-coordinates, hence is non-vertical, hence is the dual of
    the shared point).  Two non-parallel lines are always concurrent.
    """
    if len(lines) < 2:
        raise DegenerateInputError("concurrency needs at least 2 lines")
    ensure_distinct_lines(lines)
    slopes = [line.a for line in lines]
    for i in range(len(slopes)):
        for j in range(i + 1, len(slopes)):
            if slopes[i] == slopes[j]:
                return False
    duals = [dual_line_to_point(line) for line in lines]
    p0, p1 = duals[0], duals[1]
    return all(collinear(p0, p1, p) for p in duals[2:])


@dataclass(frozen=True)
class AffineMap:
    """Invertible affine map x -> m @ x + t over one scalar domain."""

    m: tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]
    t: tuple[Scalar, Scalar] = (0, 0)

    def __post_init__(self):
        (m00, m01), (m10, m11) = self.m
        m00, m01 = _unify(m00, m01)
        m10, m11 = _unify(m10, m11)
        tx, ty = _unify(*self.t)
        if m00 * m11 - m01 * m10 == 0:
            raise ValueError("singular matrix")
        object.__setattr__(self, "m", ((m00, m01), (m10, m11)))
        object.__setattr__(self, "t", (tx, ty))

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((1, 0), (0, 1)), (0, 0))

    def apply(self, p: Point) -> Point:
        (m00, m01), (m10, m11) = self.m
        tx, ty = self.t
        return Point(m00 * p.x + m01 * p.y + tx, m10 * p.x + m11 * p.y + ty)


def affine_apply(amap: AffineMap, points: Sequence[Point]) -> list[Point]:
    """Pointwise image; preserves collinearity, parallelism, and hence spectra."""
    return [amap.apply(p) for p in points]
