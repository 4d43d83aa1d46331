"""Line families whose vertical stab spectrum avoids {n-1, n-2}, with certificates.

For n >= 7, dualizing the vertices of a regular n-gon (rotated so that no
two vertices share an x-coordinate) yields n pairwise non-parallel,
non-concurrent, non-vertical lines; every vertical line meets their union
in a number of points drawn from the polygon's cover spectrum, which stays
clear of n-1 and n-2.  Verification re-derives every claim from the exact
coefficients; decimal renderings are attached for humans only.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import mpmath

from .errors import ParseError
from .field import CycloElement, euler_phi, format_rational, parse_rational
from .geometry import NonVerticalLine, concurrent_family, dual_point_to_line
from .polygon import (
    PolygonConfig,
    RationalRotation,
    choose_rotation,
    field_order,
    instantiate_polygon,
)
from .spectrum import stab_spectrum


@dataclass
class VerificationReport:
    """Outcome of the exact checks on one line family."""

    pairwise_nonparallel: bool
    parallel_witness: Optional[tuple[int, int]]
    nonconcurrent: bool
    concurrency_witness: Optional[tuple[str, str]]
    stab_counts: frozenset[int]
    forbidden: frozenset[int]
    forbidden_hit: frozenset[int]

    @property
    def passed(self) -> bool:
        return self.pairwise_nonparallel and self.nonconcurrent and not self.forbidden_hit

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        return {
            "pairwise_nonparallel": self.pairwise_nonparallel,
            "parallel_witness": list(self.parallel_witness) if self.parallel_witness else None,
            "nonconcurrent": self.nonconcurrent,
            "concurrency_witness": list(self.concurrency_witness)
            if self.concurrency_witness
            else None,
            "stab_counts": sorted(self.stab_counts),
            "forbidden": sorted(self.forbidden),
            "forbidden_hit": sorted(self.forbidden_hit),
            "verdict": self.verdict,
        }


@dataclass
class CounterexampleBundle:
    n: int
    config: PolygonConfig
    rotation: RationalRotation
    lines: tuple[NonVerticalLine, ...]
    field_order: int
    certificate: Optional[VerificationReport] = None
    approx_lines: tuple[tuple[str, str], ...] = field(default_factory=tuple)


def construct(n: int, variant: str = "plain") -> CounterexampleBundle:
    """Build and certify the n-line family dual to a polygon configuration.

    The default uses the plain regular n-gon, which works for every n >= 7:
    odd n = 2k+1 has spectrum {k+1, n} and even n = 2k has {k, k+1, n}, with
    k+1 <= n-3 in both cases.  ``variant="center"`` instead takes a polygon
    of n-1 vertices plus its center (n odd only); its certificate is honest
    and fails for n = 7, where the hexagon-plus-center spectrum {3, 5, 7}
    contains n-2.
    """
    if n < 7:
        raise ValueError(f"construction needs n >= 7, got {n}")
    if variant == "plain":
        config = PolygonConfig(n)
    elif variant == "center":
        if n % 2 == 0:
            raise ValueError("center variant needs odd n (vertex count n-1 must be even)")
        config = PolygonConfig(n - 1, with_center=True)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    rotation = choose_rotation(config)
    points = instantiate_polygon(config, rotation)
    lines = tuple(dual_point_to_line(p) for p in points)
    bundle = CounterexampleBundle(
        n=n,
        config=config,
        rotation=rotation,
        lines=lines,
        field_order=field_order(config.vertices),
        approx_lines=approximate_lines(lines),
    )
    bundle.certificate = verify(bundle)
    return bundle


def _meet_point(l1: NonVerticalLine, l2: NonVerticalLine) -> Optional[tuple[str, str]]:
    # Needs field division, so only the rational domain yields coordinates.
    if not (isinstance(l1.a, Fraction) and isinstance(l2.a, Fraction)):
        return None
    x = (l1.b - l2.b) / (l2.a - l1.a)
    y = -(l1.a * x + l1.b)
    return (format_rational(x), format_rational(y))


def verify(
    bundle: CounterexampleBundle, forbidden: Optional[Iterable[int]] = None
) -> VerificationReport:
    """Re-derive the certificate from the bundle's exact line coefficients."""
    lines = list(bundle.lines)
    n = bundle.n
    if len(lines) != n:
        raise ValueError(f"malformed bundle: {len(lines)} lines for n={n}")
    domains = {
        s.order if isinstance(s, CycloElement) else "rational"
        for line in lines
        for s in (line.a, line.b)
    }
    if len(domains) > 1:
        raise ValueError(f"malformed bundle: mixed coordinate domains {sorted(map(str, domains))}")
    forbidden_set = frozenset(forbidden) if forbidden is not None else frozenset({n - 1, n - 2})

    parallel_witness = None
    for i in range(n):
        for j in range(i + 1, n):
            if lines[i].a == lines[j].a:
                parallel_witness = (i, j)
                break
        if parallel_witness:
            break

    is_concurrent = concurrent_family(lines)
    witness = _meet_point(lines[0], lines[1]) if is_concurrent else None

    stab = stab_spectrum(lines)
    return VerificationReport(
        pairwise_nonparallel=parallel_witness is None,
        parallel_witness=parallel_witness,
        nonconcurrent=not is_concurrent,
        concurrency_witness=witness,
        stab_counts=stab,
        forbidden=forbidden_set,
        forbidden_hit=stab & forbidden_set,
    )


@dataclass(frozen=True)
class FloatCrosscheck:
    counts: frozenset[int]
    inconclusive: tuple[float, ...]

    @property
    def conclusive(self) -> bool:
        return not self.inconclusive


def _scalar_to_float(s) -> float:
    if isinstance(s, Fraction):
        return float(s)
    return float(s.approx(80).real)


def float_crosscheck(bundle: CounterexampleBundle, epsilon: float = 1e-6) -> FloatCrosscheck:
    """Approximate stab spectrum from floating intersections, for cross-checks.

    For each pairwise intersection abscissa A it clusters the n ordinate
    values { -(a_i*A + b_i) } at tolerance epsilon and records the cluster
    count; any two values with a gap in [epsilon, 10*epsilon) make that
    abscissa inconclusive (reported, not counted, never an error).  The
    generic count n is always included.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    coeffs = [(_scalar_to_float(line.a), _scalar_to_float(line.b)) for line in bundle.lines]
    counts = {len(coeffs)}
    inconclusive: list[float] = []
    for i in range(len(coeffs)):
        for j in range(i + 1, len(coeffs)):
            ai, bi = coeffs[i]
            aj, bj = coeffs[j]
            if ai == aj:
                continue
            abscissa = (bi - bj) / (aj - ai)
            ys = sorted(-(a * abscissa + b) for a, b in coeffs)
            ambiguous = any(
                epsilon <= ys[v] - ys[u] < 10 * epsilon
                for u in range(len(ys))
                for v in range(u + 1, len(ys))
            )
            if ambiguous:
                inconclusive.append(abscissa)
                continue
            clusters = 1 + sum(1 for u in range(1, len(ys)) if ys[u] - ys[u - 1] >= epsilon)
            counts.add(clusters)
    return FloatCrosscheck(frozenset(counts), tuple(inconclusive))


def approximate_lines(
    lines: Sequence[NonVerticalLine], digits: int = 12
) -> tuple[tuple[str, str], ...]:
    """Decimal renderings of (a, b) per line; display only, never verified against."""

    def render(s) -> str:
        if isinstance(s, Fraction):
            return mpmath.nstr(mpmath.mpf(s.numerator) / s.denominator, digits)
        return mpmath.nstr(s.approx(128).real, digits)

    return tuple((render(line.a), render(line.b)) for line in lines)


def bundle_to_json(bundle: CounterexampleBundle) -> dict:
    """Serializable document: exact coefficient vectors plus the certificate."""
    for line in bundle.lines:
        if not isinstance(line.a, CycloElement):
            raise ValueError("only cyclotomic-coefficient bundles are serializable")
    return {
        "n": bundle.n,
        "config": {
            "vertices": bundle.config.vertices,
            "with_center": bundle.config.with_center,
        },
        "rotation": {
            "c": format_rational(bundle.rotation.c),
            "s": format_rational(bundle.rotation.s),
        },
        "field_order": bundle.field_order,
        "lines": [
            {
                "a": [format_rational(c) for c in line.a.coeffs],
                "b": [format_rational(c) for c in line.b.coeffs],
            }
            for line in bundle.lines
        ],
        "approx_lines": [{"a": a, "b": b} for a, b in bundle.approx_lines],
        "certificate": bundle.certificate.to_json() if bundle.certificate else None,
    }


def write_bundle(bundle: CounterexampleBundle, path) -> None:
    doc = bundle_to_json(bundle)
    with open(path, "w", encoding="utf-8") as fp:
        json.dump(doc, fp, indent=2)
        fp.write("\n")


def _parse_coeff_vector(order: int, raw, what: str) -> CycloElement:
    if not isinstance(raw, list) or len(raw) != euler_phi(order):
        raise ParseError(f"{what}: expected {euler_phi(order)} coefficients")
    return CycloElement(order, [parse_rational(str(tok)) for tok in raw])


def read_bundle(path) -> CounterexampleBundle:
    """Load a bundle document; exact data is rebuilt, the stored certificate kept as-is."""
    with open(path, "r", encoding="utf-8") as fp:
        try:
            doc = json.load(fp)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid JSON ({exc})") from None
    try:
        n = int(doc["n"])
        config = PolygonConfig(int(doc["config"]["vertices"]), bool(doc["config"]["with_center"]))
        rotation = RationalRotation(
            parse_rational(doc["rotation"]["c"]), parse_rational(doc["rotation"]["s"])
        )
        order = int(doc["field_order"])
        lines = tuple(
            NonVerticalLine(
                _parse_coeff_vector(order, rec["a"], f"line {i} a"),
                _parse_coeff_vector(order, rec["b"], f"line {i} b"),
            )
            for i, rec in enumerate(doc["lines"])
        )
        approx = tuple((rec["a"], rec["b"]) for rec in doc.get("approx_lines", []))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"{path}: malformed bundle document ({exc})") from None
    cert = None
    raw_cert = doc.get("certificate")
    if raw_cert is not None:
        try:
            cert = VerificationReport(
                pairwise_nonparallel=bool(raw_cert["pairwise_nonparallel"]),
                parallel_witness=tuple(raw_cert["parallel_witness"])
                if raw_cert.get("parallel_witness")
                else None,
                nonconcurrent=bool(raw_cert["nonconcurrent"]),
                concurrency_witness=tuple(raw_cert["concurrency_witness"])
                if raw_cert.get("concurrency_witness")
                else None,
                stab_counts=frozenset(int(k) for k in raw_cert["stab_counts"]),
                forbidden=frozenset(int(k) for k in raw_cert["forbidden"]),
                forbidden_hit=frozenset(int(k) for k in raw_cert["forbidden_hit"]),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"{path}: malformed certificate ({exc})") from None
    return CounterexampleBundle(
        n=n,
        config=config,
        rotation=rotation,
        lines=lines,
        field_order=order,
        certificate=cert,
        approx_lines=approx,
    )
