"""Direction-cover spectra of point sets and vertical stab spectra of line families.

For a finite point set Q, a direction d induces a unique minimal family of
parallel lines covering Q: group the points by "difference parallel to d".
The spectrum I(Q) collects the group counts over every direction; only the
finitely many chord directions of Q can yield fewer than |Q| lines, so the
engine enumerates those and adjoins the generic count |Q| by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from .errors import DegenerateInputError
from .geometry import (
    Direction,
    NonVerticalLine,
    Point,
    dual_line_to_point,
    ensure_distinct_lines,
    ensure_distinct_points,
)


@dataclass(frozen=True)
class LinePartition:
    """Cover of the input set by parallel lines in one direction.

    Groups are disjoint, nonempty, in first-point order, and their union is
    the input; two points share a group iff their difference is parallel to
    ``direction``.  ``generic`` marks the synthetic witness for a direction
    parallel to no chord (all groups are singletons).
    """

    direction: Direction
    groups: tuple[tuple[Point, ...], ...]
    generic: bool = False


@dataclass(eq=False)
class SpectrumReport:
    counts: frozenset[int]
    witnesses: Mapping[int, LinePartition]
    vertical_count: int

    @property
    def sorted_counts(self) -> list[int]:
        return sorted(self.counts)


def pair_directions(points: Sequence[Point]) -> list[Direction]:
    """One representative per parallelism class of chord directions.

    Pairs are scanned in index order (i, j), i < j, and each class is
    represented by its first chord.  Rational inputs group by canonical
    form; cyclotomic inputs, which admit no canonical scaling, fall back to
    cross-product-zero tests against the representatives found so far.
    """
    pts = list(points)
    if len(pts) < 2:
        raise DegenerateInputError("need at least 2 points for pair directions")
    ensure_distinct_points(pts)
    if all(isinstance(p.x, Fraction) and isinstance(p.y, Fraction) for p in pts):
        seen: dict[Direction, None] = {}
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                seen.setdefault(Direction.between(pts[i], pts[j]))
        return list(seen)
    reps: list[Direction] = []
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = Direction.between(pts[i], pts[j])
            if all(not d.parallel_to(r) for r in reps):
                reps.append(d)
    return reps


def lines_in_direction(points: Sequence[Point], direction: Direction) -> LinePartition:
    """The unique minimal parallel cover of the points in the given direction.

    Points p, q land on one cover line iff cross(q - p, d) = 0, i.e. iff the
    bilinear key cross(p, d) agrees; grouping by that exact key realizes the
    equivalence in a single pass.
    """
    pts = list(points)
    if not pts:
        raise DegenerateInputError("empty point set")
    ensure_distinct_points(pts)
    groups: dict[object, list[Point]] = {}
    dx, dy = direction.dx, direction.dy
    for p in pts:
        key = p.x * dy - p.y * dx
        groups.setdefault(key, []).append(p)
    return LinePartition(direction, tuple(tuple(g) for g in groups.values()))


def generic_direction(
    points: Sequence[Point], chord_dirs: Optional[Sequence[Direction]] = None
) -> Direction:
    """A direction parallel to no chord of the set.

    Tries (1, t) for t = 0, 1, 2, ...; each chord class rules out at most
    one integer t, so at most len(chord_dirs) + 1 candidates are examined.
    """
    pts = list(points)
    if len(pts) < 2:
        return Direction(Fraction(1), Fraction(0))
    if chord_dirs is None:
        chord_dirs = pair_directions(pts)
    t = 0
    while True:
        cand = Direction(Fraction(1), Fraction(t))
        if all(not cand.parallel_to(d) for d in chord_dirs):
            return cand
        t += 1


def spectrum(points: Sequence[Point]) -> SpectrumReport:
    """The direction-cover spectrum I(Q) with a witness partition per count."""
    pts = list(points)
    if not pts:
        raise DegenerateInputError("empty point set")
    ensure_distinct_points(pts)
    n = len(pts)
    counts: set[int] = set()
    witnesses: dict[int, LinePartition] = {}
    dirs: list[Direction] = []
    if n >= 2:
        dirs = pair_directions(pts)
        for d in dirs:
            part = lines_in_direction(pts, d)
            c = len(part.groups)
            counts.add(c)
            witnesses.setdefault(c, part)
    counts.add(n)
    if n not in witnesses:
        witnesses[n] = LinePartition(
            generic_direction(pts, dirs), tuple((p,) for p in pts), generic=True
        )
    return SpectrumReport(frozenset(counts), witnesses, vertical_class_count(pts))


def vertical_class_count(points: Sequence[Point]) -> int:
    """Number of distinct x-coordinates: the cover count of the vertical direction."""
    pts = list(points)
    if not pts:
        raise DegenerateInputError("empty point set")
    ensure_distinct_points(pts)
    return len({p.x for p in pts})


def stab_spectrum(lines: Sequence[NonVerticalLine]) -> frozenset[int]:
    """All values of |L intersect union(F)| over vertical lines L.

    Transported through duality: a vertical probe at abscissa A meets the
    family in as many points as there are parallel cover lines of the dual
    point set in the direction of slope -A, and the critical abscissae
    correspond exactly to the non-vertical chord directions of the dual
    set.  Vertical chord directions (parallel primal lines) match no probe
    and are skipped; every non-critical probe contributes |F|.
    """
    fam = list(lines)
    if not fam:
        raise DegenerateInputError("empty line family")
    ensure_distinct_lines(fam)
    counts = {len(fam)}
    if len(fam) >= 2:
        duals = [dual_line_to_point(line) for line in fam]
        for d in pair_directions(duals):
            if d.is_vertical:
                continue
            counts.add(len(lines_in_direction(duals, d).groups))
    return frozenset(counts)
