"""Plain-text record formats.

Points file: one ``x y`` per line.  Lines file: one ``a b`` per line,
meaning y + a*x + b = 0.  Fields are whitespace-separated rationals in the
``p`` / ``p/q`` grammar; ``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .errors import ParseError
from .field import format_rational, parse_rational
from .geometry import NonVerticalLine, Point


def _parse_records(text: str, source: str) -> list[tuple[Fraction, Fraction]]:
    records = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise ParseError(f"{source}:{lineno}: expected 2 fields, got {len(tokens)}")
        try:
            records.append((parse_rational(tokens[0]), parse_rational(tokens[1])))
        except ParseError as exc:
            raise ParseError(f"{source}:{lineno}: {exc}") from None
    return records


def parse_points(text: str, source: str = "<points>") -> list[Point]:
    return [Point(x, y) for x, y in _parse_records(text, source)]


def parse_lines(text: str, source: str = "<lines>") -> list[NonVerticalLine]:
    return [NonVerticalLine(a, b) for a, b in _parse_records(text, source)]


def _require_rational(value, what: str) -> Fraction:
    if not isinstance(value, Fraction):
        raise ValueError(f"{what} files hold rational coordinates only")
    return value


def format_points(points: Sequence[Point]) -> str:
    rows = [
        f"{format_rational(_require_rational(p.x, 'points'))} "
        f"{format_rational(_require_rational(p.y, 'points'))}"
        for p in points
    ]
    return "\n".join(rows) + "\n" if rows else ""


def format_lines(lines: Sequence[NonVerticalLine]) -> str:
    rows = [
        f"{format_rational(_require_rational(line.a, 'lines'))} "
        f"{format_rational(_require_rational(line.b, 'lines'))}"
        for line in lines
    ]
    return "\n".join(rows) + "\n" if rows else ""
