"""The ``.poly`` text format.

::

    # comments run to the end of a line
    6
    0 0
    2 0
    2 1
    1 1
    1 2
    0 2

The first non-blank line is the vertex count, then one ``x y`` line per
vertex.  Coordinates are integers, decimals (``0.25``) or rationals
(``1/3``) and are read exactly.  Clockwise input is reversed on load.
"""
from __future__ import annotations

import hashlib
from fractions import Fraction
from pathlib import Path

from .errors import ParseError
from .geometry import SimplePolygon, rational, validate_polygon

__all__ = ["parse_poly", "read_poly", "serialize_poly", "digest", "format_number"]


def _coordinate(token: str, line: int):
    try:
        if "/" in token:
            num, den = token.split("/")
            if int(den) == 0:
                raise ZeroDivisionError
            return rational(Fraction(int(num), int(den)))
        return rational(Fraction(token))
    except (ValueError, ZeroDivisionError):
        raise ParseError(line, f"bad coordinate {token!r}") from None


def parse_poly(text: str) -> SimplePolygon:
    """Parse ``.poly`` text into a validated, counter-clockwise polygon.

    Raises :class:`ParseError` for malformed text and the
    :class:`~artgallery.errors.PolygonError` family for invalid polygons.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((lineno, body.split()))
    if not rows:
        raise ParseError(1, "empty input")
    lineno, head = rows[0]
    if len(head) != 1:
        raise ParseError(lineno, "first line must hold the vertex count")
    try:
        n = int(head[0])
    except ValueError:
        raise ParseError(lineno, f"bad vertex count {head[0]!r}") from None
    if n < 1:
        raise ParseError(lineno, f"vertex count must be positive, got {n}")
    body = rows[1:]
    if len(body) < n:
        last = body[-1][0] if body else lineno
        raise ParseError(last + 1, f"expected {n} vertices, found {len(body)}")
    if len(body) > n:
        raise ParseError(body[n][0], f"unexpected line after {n} vertices")
    pts = []
    for lineno, toks in body:
        if len(toks) != 2:
            raise ParseError(lineno, f"expected 'x y', got {len(toks)} fields")
        pts.append((_coordinate(toks[0], lineno), _coordinate(toks[1], lineno)))
    return validate_polygon(pts)


def read_poly(path) -> SimplePolygon:
    return parse_poly(Path(path).read_text(encoding="utf-8"))


def format_number(v) -> str:
    """Exact text for a rational: ``3``, ``-1/2``."""
    v = rational(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def serialize_poly(P: SimplePolygon) -> str:
    lines = [str(P.n)]
    lines += [f"{format_number(p.x)} {format_number(p.y)}" for p in P.vertices]
    return "\n".join(lines) + "\n"


def digest(P: SimplePolygon) -> str:
    """sha256 of the canonical serialization (after orientation fix-up)."""
    return hashlib.sha256(serialize_poly(P).encode("ascii")).hexdigest()
