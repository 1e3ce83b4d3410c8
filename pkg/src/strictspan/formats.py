"""Reading and writing facet lists.

Text: one facet per line as whitespace-separated positive integers, with
``#`` starting a comment. JSON: ``{"name": ..., "facets": [[...], ...]}``.
"""
from __future__ import annotations

import json

from .complex import Complex, Simplex
from .errors import DuplicateFacet, EmptyInput, ParseError

TEXT = "text"
JSON = "json"


def _check_facets(rows: list[tuple[Simplex, int | None]]) -> Complex:
    if not rows:
        raise EmptyInput("no facets in input")
    seen: dict[Simplex, int | None] = {}
    for f, where in rows:
        if f in seen:
            raise DuplicateFacet(f"facet {list(f)} repeated (line {where})" if where else f"facet {list(f)} repeated")
        seen[f] = where
    return Complex(seen)


def _canon(values: list[int], line: int | None) -> Simplex:
    if not values:
        raise ParseError("empty facet", line)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v <= 0:
            raise ParseError(f"vertex labels must be positive integers, got {v!r}", line)
    f = tuple(sorted(values))
    if len(set(f)) != len(f):
        raise ParseError(f"repeated vertex in facet {values}", line)
    return f


def parse_text(text: str) -> Complex:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            values = [int(tok) for tok in body.split()]
        except ValueError:
            raise ParseError(f"not an integer list: {body!r}", lineno) from None
        rows.append((_canon(values, lineno), lineno))
    return _check_facets(rows)


def parse_json(text: str) -> tuple[Complex, str | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "facets" not in data:
        raise ParseError("expected an object with a 'facets' array")
    name = data.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("'name' must be a string")
    facets = data["facets"]
    if not isinstance(facets, list):
        raise ParseError("'facets' must be an array")
    rows = []
    for i, f in enumerate(facets):
        if not isinstance(f, list):
            raise ParseError(f"facet #{i} is not an array")
        rows.append((_canon(f, None), None))
    return _check_facets(rows), name


def detect_format(text: str) -> str:
    return JSON if text.lstrip().startswith("{") else TEXT


def parse_complex(source: bytes | str, fmt: str = "auto") -> Complex:
    """Parse a facet list in either format; ``fmt="auto"`` sniffs for JSON."""
    return parse_named(source, fmt)[0]


def parse_named(source: bytes | str, fmt: str = "auto") -> tuple[Complex, str | None]:
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc}") from None
    if fmt == "auto":
        fmt = detect_format(source)
    if fmt == TEXT:
        return parse_text(source), None
    if fmt == JSON:
        return parse_json(source)
    raise ValueError(f"unknown format {fmt!r}")


def export_text(c: Complex) -> str:
    return "".join(" ".join(map(str, f)) + "\n" for f in sorted(c.facets))


def export_json(c: Complex, name: str | None = None) -> str:
    data: dict = {"facets": [list(f) for f in sorted(c.facets)]}
    if name is not None:
        data["name"] = name
    return json.dumps(data, sort_keys=True) + "\n"


def export(c: Complex, fmt: str, name: str | None = None) -> str:
    if fmt == TEXT:
        return export_text(c)
    if fmt == JSON:
        return export_json(c, name)
    raise ValueError(f"unknown format {fmt!r}")
