"""Brute-force spectrum oracle, kept independent of the production engine.

It re-derives the cover partition for every ordered vertex pair from
scratch, assigning each point to the first compatible anchor by a 3x3
affine-determinant collinearity test.  No grouping code is shared with
:mod:`dircover.spectrum`; rational domain only, capped at 10 points.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import DegenerateInputError
from .geometry import Point

MAX_ORACLE_POINTS = 10


def _det3(ax, ay, bx, by, cx, cy):
    # | ax ay 1 ; bx by 1 ; cx cy 1 |, expanded along the third column
    return (bx * cy - by * cx) - (ax * cy - ay * cx) + (ax * by - ay * bx)


def oracle_spectrum(points: Sequence[Point]) -> frozenset[int]:
    pts = list(points)
    if not pts:
        raise DegenerateInputError("empty point set")
    if len(pts) > MAX_ORACLE_POINTS:
        raise DegenerateInputError(f"oracle capped at {MAX_ORACLE_POINTS} points")
    for p in pts:
        if not (isinstance(p.x, Fraction) and isinstance(p.y, Fraction)):
            raise DegenerateInputError("oracle handles rational coordinates only")
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if pts[i] == pts[j]:
                raise DegenerateInputError(f"duplicate point at positions {i} and {j}")
    counts = {len(pts)}
    for i in range(len(pts)):
        for j in range(len(pts)):
            if i == j:
                continue
            vx = pts[j].x - pts[i].x
            vy = pts[j].y - pts[i].y
            anchors: list[Point] = []
            for p in pts:
                for q in anchors:
                    if _det3(q.x, q.y, q.x + vx, q.y + vy, p.x, p.y) == 0:
                        break
                else:
                    anchors.append(p)
            counts.add(len(anchors))
    return frozenset(counts)
