"""Polygon interchange format: one polygon per line, a JSON array of [x, y] pairs."""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Iterable

from .errors import InvalidPolygon
from .geometry import Polygon


class FormatError(ValueError):
    pass


def _num(v: float) -> str:
    # 17 significant digits round-trip any binary64 value
    s = format(v, ".17g")
    return "0" if s == "-0" else s


def format_polygon(poly: Polygon) -> str:
    return "[" + ",".join(f"[{_num(x)},{_num(y)}]" for x, y in poly.vertices) + "]"


def parse_polygon(text: str) -> Polygon:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not JSON: {exc}") from exc
    if not isinstance(data, list) or not all(
        isinstance(v, list) and len(v) == 2 and all(_is_number(c) for c in v) for v in data
    ):
        raise FormatError("expected a JSON array of [x, y] number pairs")
    try:
        return Polygon(data)
    except InvalidPolygon as exc:
        raise FormatError(str(exc)) from exc


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


def write_corpus(path: str | Path, polygons: Iterable[Polygon]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for poly in polygons:
            fh.write(format_polygon(poly) + "\n")


def read_corpus(path: str | Path) -> list[Polygon]:
    """Read a corpus file; blank lines are skipped.  Raises FormatError on bad lines."""
    polys = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                polys.append(parse_polygon(line))
            except FormatError as exc:
                raise FormatError(f"{path}:{lineno}: {exc}") from exc
    return polys


def read_polygon(path: str | Path) -> Polygon:
    """A single polygon file: either one JSON document or the first corpus line."""
    text = Path(path).read_text(encoding="utf-8").strip()
    if not text:
        raise FormatError(f"{path}: empty file")
    try:
        return parse_polygon(text)
    except FormatError:
        first = text.splitlines()[0]
        if first == text:
            raise
        return parse_polygon(first)
