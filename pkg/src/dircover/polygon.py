"""Regular n-gon configurations: residue combinatorics and exact instantiation.

Index the vertices of a regular n-gon by Z_n.  The chord through vertices
i and j has direction angle pi*(i+j)/n + pi/2 modulo pi, so chords are
parallel exactly when i+j agrees mod n: the residue d = i+j mod n is the
chord's direction class.  All direction-cover counts of the polygon (with
or without the circle's center) reduce to counting solutions of congruences
in Z_n; the geometric realization with exact cyclotomic coordinates is kept
for cross-validation and for building dual line families.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from math import lcm
from typing import Iterator

from .field import CycloElement, zeta
from .geometry import Point

CASE2_NOTE = (
    "discrepancy note: for n = 2k+1 vertices enumeration gives the spectrum "
    "{k+1, 2k+1}; the closed form {k, 2k+1} undercounts by one "
    "(at n = 7 every chord direction carries exactly 4 cover lines, not 3)."
)


@dataclass(frozen=True)
class PolygonConfig:
    """A regular polygon with ``vertices`` >= 3, optionally plus the circle center."""

    vertices: int
    with_center: bool = False

    def __post_init__(self):
        if self.vertices < 3:
            raise ValueError(f"polygon needs at least 3 vertices, got {self.vertices}")

    @property
    def total(self) -> int:
        return self.vertices + (1 if self.with_center else 0)


def chord_class(n: int, i: int, j: int) -> int:
    """Direction class of the chord {i, j}: the residue (i + j) mod n."""
    if i % n == j % n:
        raise ValueError("a chord needs two distinct vertices")
    return (i + j) % n


def polygon_direction_count(cfg: PolygonConfig, d: int) -> int:
    """Cover-line count of the configuration in chord-direction class d.

    Pure residue arithmetic.  With s = #{i : 2i = d (mod n)}: the class
    contains (n - s)/2 chords of two vertices each, and each of the s
    vertices with 2i = d sits alone on its line (three concyclic points are
    never collinear).  A center point rides along on the class's diameter
    when one exists -- n even and d = n/2 (mod 2) -- and otherwise needs one
    extra line that contains no vertex.
    """
    n = cfg.vertices
    if not 0 <= d < n:
        raise ValueError(f"invalid residue {d} for n={n}")
    s = 1 if n % 2 else (2 if d % 2 == 0 else 0)
    count = (n - s) // 2 + s
    if cfg.with_center:
        diameter_in_class = n % 2 == 0 and (d - n // 2) % 2 == 0
        if not diameter_in_class:
            count += 1
    return count


def polygon_spectrum_enumerated(cfg: PolygonConfig) -> frozenset[int]:
    """Spectrum of the configuration by enumerating all critical direction classes.

    Chord classes are the residues mod n.  When the center is present and n
    is odd, the center-vertex directions form extra classes parallel to no
    chord (their angles are integer multiples of pi/n, chords sit at
    half-integer multiples); each covers the center and one vertex together,
    so it contributes the count n.  The generic count, the total number of
    points, is always achieved.
    """
    n = cfg.vertices
    counts = {polygon_direction_count(cfg, d) for d in range(n)}
    if cfg.with_center and n % 2 == 1:
        counts.add(n)
    counts.add(cfg.total)
    return frozenset(counts)


def polygon_spectrum_closed_form(cfg: PolygonConfig) -> frozenset[int]:
    """Closed-form spectrum for the four classically tabulated cases.

    Plain n = 2k: {k, k+1, 2k}.  Plain n = 2k+1: {k+1, 2k+1} -- note the
    corrected k+1; see CASE2_NOTE.  With center, n = 4k+2:
    {2k+1, 2k+3, 4k+3}; with center, n = 4k: {2k+1, 4k+1}.  An odd vertex
    count with center has no closed form here (use the enumeration).
    """
    n = cfg.vertices
    if not cfg.with_center:
        k = n // 2
        if n % 2 == 0:
            return frozenset({k, k + 1, 2 * k})
        return frozenset({k + 1, 2 * k + 1})
    if n % 4 == 2:
        k = (n - 2) // 4
        return frozenset({2 * k + 1, 2 * k + 3, 4 * k + 3})
    if n % 4 == 0:
        k = n // 4
        return frozenset({2 * k + 1, 4 * k + 1})
    raise ValueError("no closed form for an odd vertex count with center")


@dataclass(frozen=True)
class RationalRotation:
    """A rotation by a rational point (c, s) on the unit circle."""

    c: Fraction
    s: Fraction

    def __post_init__(self):
        c, s = Fraction(self.c), Fraction(self.s)
        if c * c + s * s != 1:
            raise ValueError(f"({c}, {s}) is not on the unit circle")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)

    @classmethod
    def identity(cls) -> "RationalRotation":
        return cls(Fraction(1), Fraction(0))

    @classmethod
    def from_parameter(cls, t) -> "RationalRotation":
        """Tangent half-angle parametrization ((1-t^2)/(1+t^2), 2t/(1+t^2))."""
        t = Fraction(t)
        den = 1 + t * t
        return cls((1 - t * t) / den, 2 * t / den)


def rotation_parameters() -> Iterator[Fraction]:
    """0 followed by the Calkin-Wilf enumeration of the positive rationals."""
    yield Fraction(0)
    q = Fraction(1)
    while True:
        yield q
        q = 1 / (2 * Fraction(q.numerator // q.denominator) - q + 1)


def field_order(n: int) -> int:
    """Order m of the cyclotomic field used for exact n-gon coordinates."""
    return lcm(4, n)


def instantiate_polygon(cfg: PolygonConfig, rotation: RationalRotation) -> list[Point]:
    """Exact vertices of the rotated unit-circle n-gon (center last, if present).

    Works in Q(zeta_m) with m = lcm(4, n) so that the imaginary unit is
    zeta_m^(m/4) and both coordinates of w * zeta_n^i split off as field
    elements: x = (z + conj(z))/2 and y = (conj(z) - z) * i / 2.  Only ring
    operations and the scalar 1/2 are needed.
    """
    n = cfg.vertices
    m = field_order(n)
    zn = zeta(m, m // n)
    iu = zeta(m, m // 4)
    half = Fraction(1, 2)
    z = iu * rotation.s + rotation.c
    pts = []
    for _ in range(n):
        zbar = z.conjugate()
        pts.append(Point((z + zbar) * half, (zbar - z) * iu * half))
        z = z * zn
    if cfg.with_center:
        origin = CycloElement.zero(m)
        pts.append(Point(origin, origin))
    return pts


def choose_rotation(cfg: PolygonConfig) -> RationalRotation:
    """First enumerated rational rotation giving pairwise distinct x-coordinates.

    Termination is a counting argument: each point pair of the configuration
    shares an x-coordinate for at most 2 rotation angles, the candidate
    parameters map to pairwise distinct angles, and the stream is infinite,
    so at most total*(total-1) + 2*total candidates can fail.
    """
    limit = cfg.total * cfg.total + cfg.total + 8
    for t in islice(rotation_parameters(), limit):
        rot = RationalRotation.from_parameter(t)
        pts = instantiate_polygon(cfg, rot)
        if len({p.x for p in pts}) == len(pts):
            return rot
    raise RuntimeError("rotation search exceeded its counting bound")
