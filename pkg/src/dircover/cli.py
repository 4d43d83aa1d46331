"""Command-line front end: ``dircover <subcommand> ...``.

Exit codes: 0 success, 1 failed check/verification, 2 parse or usage error,
3 degenerate input.  ``DS_PRECISION_BITS`` (default 128) controls the
precision of the decimal approximations printed for display.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath

from .checks import CheckReport, affine_check, duality_check, oracle_check, pinchasi_check
from .counterexample import bundle_to_json, construct, read_bundle, verify, write_bundle
from .errors import DegenerateInputError, DirCoverError, ParseError
from .field import format_rational
from .fileio import format_lines, format_points, parse_lines, parse_points
from .geometry import dual_line_to_point, dual_point_to_line
from .polygon import (
    CASE2_NOTE,
    PolygonConfig,
    choose_rotation,
    field_order,
    instantiate_polygon,
    polygon_spectrum_closed_form,
    polygon_spectrum_enumerated,
)
from .randgen import RandomConfig
from .spectrum import LinePartition, spectrum, stab_spectrum

_CHECK_DEFAULT_TRIALS = {"duality": 10000, "pinchasi": 1000, "affine": 100, "oracle": 200}


def _precision_bits() -> int:
    try:
        bits = int(os.environ.get("DS_PRECISION_BITS", "128"))
    except ValueError:
        bits = 128
    return max(53, bits)


def _display_digits() -> int:
    return max(6, round(_precision_bits() * 0.30103))


def _approx_str(scalar) -> str:
    digits = _display_digits()
    if isinstance(scalar, Fraction):
        return mpmath.nstr(mpmath.mpf(scalar.numerator) / scalar.denominator, digits)
    return mpmath.nstr(scalar.approx(_precision_bits()).real, digits)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fp:
            return fp.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fp:
        fp.write(text)


def _witness_doc(part: LinePartition, index: dict) -> dict:
    return {
        "direction": [format_rational(part.direction.dx), format_rational(part.direction.dy)],
        "generic": part.generic,
        "groups": [sorted(index[p] for p in group) for group in part.groups],
    }


def cmd_spectrum(args) -> int:
    pts = parse_points(_read_text(args.file), args.file)
    rep = spectrum(pts)
    if args.json:
        index = {p: i for i, p in enumerate(pts)}
        doc = {
            "points": len(pts),
            "counts": rep.sorted_counts,
            "vertical_classes": rep.vertical_count,
            "witnesses": {str(c): _witness_doc(rep.witnesses[c], index) for c in rep.sorted_counts},
        }
        print(json.dumps(doc, indent=2))
        return 0
    print(f"points: {len(pts)}")
    print("counts:", " ".join(map(str, rep.sorted_counts)))
    for c in rep.sorted_counts:
        w = rep.witnesses[c]
        tag = "generic direction" if w.generic else "direction"
        print(
            f"  {c}  {tag} "
            f"({format_rational(w.direction.dx)}, {format_rational(w.direction.dy)})"
        )
    print(f"vertical classes: {rep.vertical_count}")
    return 0


def cmd_stab(args) -> int:
    lines = parse_lines(_read_text(args.file), args.file)
    counts = sorted(stab_spectrum(lines))
    if args.json:
        print(json.dumps({"lines": len(lines), "counts": counts}))
        return 0
    print(f"lines: {len(lines)}")
    print("stab counts:", " ".join(map(str, counts)))
    return 0


def cmd_dualize(args) -> int:
    text = _read_text(args.input)
    if args.kind == "points":
        out = format_lines([dual_point_to_line(p) for p in parse_points(text, args.input)])
    else:
        out = format_points([dual_line_to_point(l) for l in parse_lines(text, args.input)])
    if args.output:
        _write_text(args.output, out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_polygon(args) -> int:
    cfg = PolygonConfig(args.n, args.center)
    enumerated = polygon_spectrum_enumerated(cfg)
    try:
        closed = polygon_spectrum_closed_form(cfg)
    except ValueError:
        closed = None
    if closed is not None and closed != enumerated:
        print(
            "internal error: closed form disagrees with enumeration "
            f"({sorted(closed)} vs {sorted(enumerated)})",
            file=sys.stderr,
        )
        return 1
    rot = choose_rotation(cfg)
    pts = instantiate_polygon(cfg, rot)
    note = CASE2_NOTE if (not cfg.with_center and cfg.vertices % 2 == 1) else None
    if args.json:
        doc = {
            "vertices": cfg.vertices,
            "with_center": cfg.with_center,
            "total_points": cfg.total,
            "enumerated": sorted(enumerated),
            "closed_form": sorted(closed) if closed is not None else None,
            "note": note,
            "rotation": {"c": format_rational(rot.c), "s": format_rational(rot.s)},
            "field_order": field_order(cfg.vertices),
            "points": [
                {"x": str(p.x), "y": str(p.y), "approx": [_approx_str(p.x), _approx_str(p.y)]}
                for p in pts
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0
    suffix = " + center" if cfg.with_center else ""
    print(f"polygon: {cfg.vertices} vertices{suffix} ({cfg.total} points)")
    print("enumerated spectrum:", " ".join(map(str, sorted(enumerated))))
    if closed is not None:
        print("closed form:        ", " ".join(map(str, sorted(closed))))
    else:
        print("closed form:         (none for an odd vertex count with center)")
    if note:
        print(note)
    print(f"rotation: c = {format_rational(rot.c)}, s = {format_rational(rot.s)}")
    print(f"field order: {field_order(cfg.vertices)}")
    for i, p in enumerate(pts):
        name = "center" if cfg.with_center and i == len(pts) - 1 else f"v{i}"
        print(f"  {name}: x = {p.x} ; y = {p.y}")
        print(f"      ~ ({_approx_str(p.x)}, {_approx_str(p.y)})")
    return 0


def cmd_counterexample(args) -> int:
    bundle = construct(args.n, variant=args.variant)
    cert = bundle.certificate
    if args.out:
        write_bundle(bundle, args.out)
    if args.json:
        print(json.dumps(bundle_to_json(bundle), indent=2))
    else:
        print(f"counterexample: n={bundle.n} ({args.variant} variant), field order {bundle.field_order}")
        print(
            f"config: {bundle.config.vertices} vertices"
            + (" + center" if bundle.config.with_center else "")
        )
        print(
            f"rotation: c = {format_rational(bundle.rotation.c)}, "
            f"s = {format_rational(bundle.rotation.s)}"
        )
        print("stab spectrum:", " ".join(map(str, sorted(cert.stab_counts))))
        hit = " ".join(map(str, sorted(cert.forbidden_hit))) or "none"
        print(f"forbidden {sorted(cert.forbidden)} hit: {hit}")
        print(f"certificate: {cert.verdict}")
        for i, (a, b) in enumerate(bundle.approx_lines):
            print(f"  l{i}: a ~ {a}, b ~ {b}")
        if args.out:
            print(f"wrote bundle to {args.out}")
    return 0 if cert.passed else 1


def cmd_verify(args) -> int:
    bundle = read_bundle(args.file)
    rep = verify(bundle)
    print(f"verify: n={bundle.n}, {len(bundle.lines)} lines, field order {bundle.field_order}")
    if rep.pairwise_nonparallel:
        print("pairwise non-parallel: ok")
    else:
        print(f"pairwise non-parallel: FAIL (lines {rep.parallel_witness})")
    if rep.nonconcurrent:
        print("non-concurrent: ok")
    else:
        where = f" at {rep.concurrency_witness}" if rep.concurrency_witness else ""
        print(f"non-concurrent: FAIL (common point{where})")
    print("stab spectrum:", " ".join(map(str, sorted(rep.stab_counts))))
    hit = " ".join(map(str, sorted(rep.forbidden_hit))) or "none"
    print(f"forbidden {sorted(rep.forbidden)} hit: {hit}")
    print(f"verdict: {rep.verdict}")
    return 0 if rep.passed else 1


def _spread(total: int, buckets: int) -> list[int]:
    base, extra = divmod(total, buckets)
    return [base + (1 if i < extra else 0) for i in range(buckets)]


def cmd_check(args) -> int:
    trials = args.trials if args.trials is not None else _CHECK_DEFAULT_TRIALS[args.suite]
    if args.suite == "duality":
        rep = duality_check(
            RandomConfig(seed=args.seed, count=trials, coordinate_bound=args.bound),
            engineered=max(1, trials // 10),
        )
    elif args.suite == "pinchasi":
        rep = CheckReport("pinchasi")
        sizes = list(range(3, 13))
        for size, quota in zip(sizes, _spread(trials, len(sizes))):
            if quota == 0:
                continue
            rep.merge(
                pinchasi_check(
                    RandomConfig(
                        seed=args.seed + size,
                        count=quota,
                        size=size,
                        coordinate_bound=args.bound,
                    )
                )
            )
    elif args.suite == "affine":
        rep = affine_check(
            RandomConfig(seed=args.seed, count=trials, size=args.size, coordinate_bound=args.bound)
        )
    else:
        rep = oracle_check(
            RandomConfig(seed=args.seed, count=trials, size=args.size, coordinate_bound=args.bound)
        )
    if args.json:
        print(
            json.dumps(
                {
                    "name": rep.name,
                    "pass": rep.passed,
                    "fail": rep.failed,
                    "skip": rep.skipped,
                    "notes": rep.lines,
                }
            )
        )
    else:
        print(rep.render())
    return 0 if rep.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dircover",
        description="Exact direction-cover spectra, point-line duality, and certified line families.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=42, help="RNG seed for randomized commands")
    common.add_argument("--trials", type=int, default=None, help="trial count for check suites")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="direction-cover spectrum of a points file")
    p.add_argument("file")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("stab", parents=[common], help="vertical stab count set of a lines file")
    p.add_argument("file")
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("dualize", parents=[common], help="map a points file to its dual lines file or back")
    p.add_argument("kind", choices=["points", "lines"], help="what the input file contains")
    p.add_argument("input")
    p.add_argument("output", nargs="?", default=None)
    p.set_defaults(func=cmd_dualize)

    p = sub.add_parser("polygon", parents=[common], help="regular polygon spectra and exact coordinates")
    p.add_argument("--n", type=int, required=True, help="vertex count (>= 3)")
    p.add_argument("--center", action="store_true", help="include the circle center")
    p.set_defaults(func=cmd_polygon)

    p = sub.add_parser("counterexample", parents=[common], help="build and certify an n-line family")
    p.add_argument("--n", type=int, required=True, help="number of lines (>= 7)")
    p.add_argument("--variant", choices=["plain", "center"], default="plain")
    p.add_argument("--out", default=None, help="write the bundle JSON to this file")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("verify", parents=[common], help="re-check a bundle file")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("check", parents=[common], help="randomized property suites")
    p.add_argument("suite", choices=["duality", "pinchasi", "affine", "oracle"])
    p.add_argument("--size", type=int, default=6, help="points per random set")
    p.add_argument("--bound", type=int, default=50, help="coordinate magnitude bound")
    p.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except DegenerateInputError as exc:
        print(f"error: degenerate input: {exc}", file=sys.stderr)
        return 3
    except DirCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
