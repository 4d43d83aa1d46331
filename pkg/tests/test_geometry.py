"""Duality, incidence, and predicate tests over both coordinate domains."""

from fractions import Fraction
from itertools import combinations

import pytest

from dircover.errors import DegenerateInputError, OrderMismatchError
from dircover.field import CycloElement, zeta
from dircover.geometry import (
    AffineMap,
    Direction,
    NonVerticalLine,
    Point,
    affine_apply,
    collinear,
    concurrent_family,
    dual_line_to_point,
    dual_point_to_line,
    ensure_distinct_lines,
    ensure_distinct_points,
    incident,
    parallel,
)
from dircover.polygon import PolygonConfig, RationalRotation, instantiate_polygon


def heptagon():
    return instantiate_polygon(PolygonConfig(7), RationalRotation.from_parameter(1))


class TestDuality:
    def test_origin(self):
        assert dual_point_to_line(Point(0, 0)) == NonVerticalLine(0, 0)

    def test_direct_substitution(self):
        assert dual_point_to_line(Point(1, 2)) == NonVerticalLine(1, 2)
        assert dual_line_to_point(NonVerticalLine(1, 2)) == Point(1, 2)

    def test_round_trip(self):
        for p in (Point(0, 0), Point(Fraction(3, 7), Fraction(-2, 5)), Point(-4, 9)):
            assert dual_line_to_point(dual_point_to_line(p)) == p
        line = NonVerticalLine(Fraction(-1, 3), 8)
        assert dual_point_to_line(dual_line_to_point(line)) == line


class TestIncidence:
    def test_arithmetic_identity(self):
        assert incident(Point(1, -3), NonVerticalLine(1, 2))

    def test_origin_misses(self):
        assert not incident(Point(0, 0), NonVerticalLine(1, 2))

    def test_symmetry_instance(self):
        p, q = Point(1, -3), Point(1, 2)
        assert incident(p, dual_point_to_line(q))
        assert incident(q, dual_point_to_line(p))

    def test_cyclotomic_incidence(self):
        # the vertex (x, y) lies on the line y0 + a*x0 + b = 0 with a = 1, b = -(y + x)
        x = (zeta(12) + zeta(12, 11)) * Fraction(1, 2)
        y = (zeta(12, 11) - zeta(12)) * zeta(12, 3) * Fraction(1, 2)
        assert incident(Point(x, y), NonVerticalLine(CycloElement.one(12), -(y + x)))


class TestParallel:
    def test_equal_slopes(self):
        assert parallel(NonVerticalLine(1, 2), NonVerticalLine(1, 5))
        assert not parallel(NonVerticalLine(1, 2), NonVerticalLine(2, 2))

    def test_shared_x_dualizes_to_parallel(self):
        c = Fraction(5, 3)
        l1 = dual_point_to_line(Point(c, 1))
        l2 = dual_point_to_line(Point(c, -7))
        assert parallel(l1, l2)
        l3 = dual_point_to_line(Point(c + 1, 1))
        assert not parallel(l1, l3)


class TestCollinear:
    def test_diagonal(self):
        assert collinear(Point(0, 0), Point(1, 1), Point(2, 2))

    def test_triangle(self):
        assert not collinear(Point(0, 0), Point(1, 0), Point(0, 1))

    def test_polygon_vertices_never_collinear(self):
        pts = heptagon()
        for a, b, c in combinations(pts, 3):
            assert not collinear(a, b, c)


class TestConcurrent:
    def test_duals_of_collinear_points(self):
        pts = [Point(0, 0), Point(1, 1), Point(2, 2)]
        assert concurrent_family([dual_point_to_line(p) for p in pts])

    def test_duals_of_triangle(self):
        pts = [Point(0, 0), Point(1, 0), Point(0, 1)]
        assert not concurrent_family([dual_point_to_line(p) for p in pts])

    def test_heptagon_family_not_concurrent(self):
        assert not concurrent_family([dual_point_to_line(p) for p in heptagon()])

    def test_two_nonparallel_always_concurrent(self):
        assert concurrent_family([NonVerticalLine(0, 0), NonVerticalLine(1, 0)])

    def test_parallel_pair_never_concurrent(self):
        assert not concurrent_family([NonVerticalLine(1, 0), NonVerticalLine(1, 5)])
        assert not concurrent_family(
            [NonVerticalLine(1, 0), NonVerticalLine(1, 5), NonVerticalLine(0, 0)]
        )

    def test_too_few_lines(self):
        with pytest.raises(DegenerateInputError):
            concurrent_family([NonVerticalLine(1, 0)])

    def test_duplicates_rejected(self):
        with pytest.raises(DegenerateInputError):
            concurrent_family([NonVerticalLine(1, 0), NonVerticalLine(1, 0)])


class TestAffine:
    def test_identity(self):
        pts = [Point(3, 4), Point(Fraction(1, 2), -1)]
        assert affine_apply(AffineMap.identity(), pts) == pts

    def test_shear_of_unit_square(self):
        shear = AffineMap(((1, Fraction(1, 3)), (0, 1)))
        square = [Point(0, 0), Point(1, 0), Point(0, 1), Point(1, 1)]
        assert affine_apply(shear, square) == [
            Point(0, 0),
            Point(1, 0),
            Point(Fraction(1, 3), 1),
            Point(Fraction(4, 3), 1),
        ]

    def test_singular_rejected(self):
        with pytest.raises(ValueError):
            AffineMap(((1, 2), (2, 4)))

    def test_affine_regular_hexagon_relations(self):
        # rational realization of the regular hexagon: all collinearity and
        # parallelism relations of the regular one must hold
        h = Fraction(1, 2)
        hexagon = [Point(1, 0), Point(h, h), Point(-h, h), Point(-1, 0), Point(-h, -h), Point(h, -h)]
        for i in range(3):
            edge1 = Direction.between(hexagon[i], hexagon[i + 1])
            edge2 = Direction.between(hexagon[i + 3], hexagon[(i + 4) % 6])
            assert edge1.parallel_to(edge2)
            # main diagonals pass through the center
            assert collinear(hexagon[i], Point(0, 0), hexagon[i + 3])
        for a, b, c in combinations(hexagon, 3):
            assert not collinear(a, b, c)

    def test_preserves_collinearity_and_direction_equality(self):
        amap = AffineMap(((2, 1), (1, 1)), (Fraction(1, 3), -2))
        pts = [Point(0, 0), Point(1, 2), Point(2, 4), Point(5, -1)]
        img = affine_apply(amap, pts)
        assert collinear(img[0], img[1], img[2])
        assert not collinear(img[0], img[1], img[3])


class TestDirection:
    def test_canonical_examples(self):
        assert Direction(2, 4).canonical() == Direction(1, 2)
        assert Direction(-1, 3).canonical() == Direction(1, -3)
        assert Direction(0, -5).canonical() == Direction(0, 1)
        assert Direction(Fraction(1, 2), Fraction(3, 4)).canonical() == Direction(2, 3)

    def test_canonical_idempotent(self):
        d = Direction(Fraction(-6, 7), Fraction(2, 3)).canonical()
        assert d.canonical() == d

    def test_zero_rejected(self):
        with pytest.raises(DegenerateInputError):
            Direction(0, 0)

    def test_vertical(self):
        assert Direction(0, 1).is_vertical
        assert not Direction(1, 0).is_vertical

    def test_cyclotomic_has_no_canonical_form(self):
        d = Direction(zeta(5), CycloElement.one(5))
        with pytest.raises(ValueError):
            d.canonical()
        assert d.parallel_to(Direction(zeta(5) * 3, CycloElement.from_rational(5, 3)))


class TestDomains:
    def test_point_embeds_rational_coordinate(self):
        p = Point(Fraction(1, 2), zeta(8))
        assert isinstance(p.x, CycloElement) and p.x.order == 8

    def test_point_rejects_mixed_orders(self):
        with pytest.raises(OrderMismatchError):
            Point(zeta(8), zeta(12))

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            Point(0.5, 1)

    def test_distinctness_guards(self):
        with pytest.raises(DegenerateInputError):
            ensure_distinct_points([Point(1, 2), Point(1, 2)])
        with pytest.raises(DegenerateInputError):
            ensure_distinct_lines([NonVerticalLine(1, 2), NonVerticalLine(1, 2)])
        ensure_distinct_points([Point(1, 2), Point(2, 1)])
