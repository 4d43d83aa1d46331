"""Acceptance gate: every release-blocking criterion, one test each.

Each test prints one `ACCEPTANCE <k> <name>: PASS|FAIL` line (visible with
``pytest -s`` or in captured output on failure).  All expectations are exact;
the stated runtime budgets are asserted where the criterion fixes one.
"""

import time
from contextlib import contextmanager

import pytest

from dircover.checks import affine_check, duality_check, oracle_check, pinchasi_check
from dircover.cli import main
from dircover.counterexample import construct, float_crosscheck, verify
from dircover.geometry import dual_point_to_line
from dircover.polygon import (
    PolygonConfig,
    choose_rotation,
    instantiate_polygon,
    polygon_direction_count,
    polygon_spectrum_closed_form,
    polygon_spectrum_enumerated,
)
from dircover.randgen import RandomConfig, make_rng, random_point_set
from dircover.spectrum import spectrum, stab_spectrum, vertical_class_count


@contextmanager
def criterion(num, name):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {num:2d} {name}: FAIL")
        raise
    print(f"ACCEPTANCE {num:2d} {name}: PASS")


@pytest.fixture(scope="module")
def bundles():
    t0 = time.perf_counter()
    built = {n: construct(n) for n in range(7, 25)}
    return built, time.perf_counter() - t0


def test_01_heptagon_reproduction():
    with criterion(1, "heptagon reproduction"):
        t0 = time.perf_counter()
        cfg = PolygonConfig(7)
        assert all(polygon_direction_count(cfg, d) == 4 for d in range(7))
        bundle = construct(7)
        assert stab_spectrum(bundle.lines) == {4, 7}
        assert time.perf_counter() - t0 < 1.0


def test_02_theorem_reproduction(bundles):
    with criterion(2, "theorem reproduction for n in 7..24"):
        built, build_time = bundles
        t0 = time.perf_counter()
        for n, bundle in built.items():
            report = verify(bundle)
            assert report.pairwise_nonparallel, n
            assert report.nonconcurrent, n
            assert not report.stab_counts & {n - 1, n - 2}, n
            assert report.verdict == "pass", n
            # spectrum transport: the family's stab set is the polygon's spectrum
            assert report.stab_counts == polygon_spectrum_enumerated(bundle.config), n
        assert build_time + time.perf_counter() - t0 < 60.0


def test_03_closed_forms(capsys):
    with criterion(3, "closed forms for cases 1-4"):
        for n in range(4, 51, 2):  # case 1: even n
            k = n // 2
            cfg = PolygonConfig(n)
            assert polygon_spectrum_enumerated(cfg) == {k, k + 1, 2 * k}
            assert polygon_spectrum_closed_form(cfg) == {k, k + 1, 2 * k}
        for n in range(3, 52, 2):  # case 2, corrected set
            k = n // 2
            cfg = PolygonConfig(n)
            assert polygon_spectrum_enumerated(cfg) == {k + 1, 2 * k + 1}
            assert polygon_spectrum_closed_form(cfg) == {k + 1, 2 * k + 1}
        for n in range(6, 51, 4):  # case 3: n = 4k+2 with center
            k = (n - 2) // 4
            cfg = PolygonConfig(n, with_center=True)
            expected = {2 * k + 1, 2 * k + 3, 4 * k + 3}
            assert polygon_spectrum_enumerated(cfg) == expected
            assert polygon_spectrum_closed_form(cfg) == expected
        for n in range(4, 49, 4):  # case 4: n = 4k with center
            k = n // 4
            cfg = PolygonConfig(n, with_center=True)
            expected = {2 * k + 1, 4 * k + 1}
            assert polygon_spectrum_enumerated(cfg) == expected
            assert polygon_spectrum_closed_form(cfg) == expected
        # the CLI emits the documented discrepancy note for the odd case
        assert main(["polygon", "--n", "9"]) == 0
        out = capsys.readouterr().out
        assert "discrepancy note" in out and "{k, 2k+1}" in out


def test_04_duality_lemma_suite():
    with criterion(4, "duality lemma property suite"):
        t0 = time.perf_counter()
        report = duality_check(RandomConfig(seed=42, count=10000), engineered=1000)
        assert report.passed == 11000 and report.failed == 0
        assert time.perf_counter() - t0 < 5.0


def test_05_duality_transport():
    with criterion(5, "duality transport"):
        rng = make_rng(RandomConfig(seed=2024))
        checked_distinct = 0
        trial = 0
        while checked_distinct < 100:
            size = 3 + trial % 6
            trial += 1
            pts = random_point_set(rng, size)
            if vertical_class_count(pts) != len(pts):
                continue
            lines = [dual_point_to_line(p) for p in pts]
            assert spectrum(pts).counts == stab_spectrum(lines)
            checked_distinct += 1
        for k in range(50):  # engineered repeated-x sets
            size = 4 + k % 5
            pts = random_point_set(rng, size)
            forced = list(pts)
            forced[-1] = type(pts[0])(pts[0].x, pts[-1].y)
            if forced[-1] in pts[:-1]:
                continue
            lines = [dual_point_to_line(p) for p in forced]
            adjoined = stab_spectrum(lines) | {vertical_class_count(forced)}
            assert spectrum(forced).counts == adjoined


def test_06_affine_invariance():
    with criterion(6, "affine invariance"):
        report = affine_check(RandomConfig(seed=7, count=100, size=6))
        assert report.passed == 100 and report.failed == 0


def test_07_oracle_equivalence():
    with criterion(7, "oracle equivalence"):
        report = oracle_check(RandomConfig(seed=11, count=200, size=8))
        assert report.passed == 200 and report.failed == 0


def test_08_pinchasi_bound():
    with criterion(8, "pinchasi bound"):
        total = 0
        for size in range(3, 13):
            report = pinchasi_check(RandomConfig(seed=42 + size, count=100, size=size))
            assert report.failed == 0
            total += report.passed
        assert total == 1000
        # the heptagon attains the bound with equality
        heptagon_counts = polygon_spectrum_enumerated(PolygonConfig(7))
        assert max(heptagon_counts - {7}) == 4 == (7 + 1) // 2


def test_09_float_crosscheck(bundles):
    with criterion(9, "float cross-check"):
        built, _ = bundles
        for n, bundle in built.items():
            result = float_crosscheck(bundle, epsilon=1e-6)
            assert result.conclusive, n
            assert result.counts == bundle.certificate.stab_counts, n


def test_10_negative_control():
    with criterion(10, "negative control for n = 4, 5, 6"):
        for n in (4, 5, 6):
            cfg = PolygonConfig(n)
            pts = instantiate_polygon(cfg, choose_rotation(cfg))
            counts = stab_spectrum([dual_point_to_line(p) for p in pts])
            assert counts & {n - 1, n - 2}, (n, counts)
            with pytest.raises(ValueError):
                construct(n)
        assert stab_spectrum(
            [dual_point_to_line(p) for p in instantiate_polygon(PolygonConfig(4), choose_rotation(PolygonConfig(4)))]
        ) == {2, 3, 4}
