"""Text formats for Sudoku squares.

Three interchangeable styles:

* ``single_line``: rows joined by ``|``, one character per symbol
  (0-9 then a-z, so orders up to 36), e.g. ``"01|10"``.
* ``grid``: one row per line, whitespace-separated decimal symbols.
* ``json``: canonical JSON object ``{"h": .., "rows": [[..]], "w": ..}``
  with sorted keys and no whitespace, safe to diff byte-for-byte.

Parsers validate and return SudokuSquare; structural problems raise
ParseError (a MalformedInputError with a ``kind`` tag) while latin/box
failures surface as the usual validation errors.
"""
from __future__ import annotations

import json
from typing import Sequence

from .core import BoxType, MalformedInputError, SudokuSquare

_DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUE = {ch: k for k, ch in enumerate(_DIGITS)}

STYLES = ("single_line", "grid", "json")


class ParseError(MalformedInputError):
    """Malformed serialized square; ``kind`` says which rule broke."""

    def __init__(self, kind: str, message: str):
        self.kind = kind
        super().__init__(message)


def parse_single_line(text: str, box_type: BoxType) -> SudokuSquare:
    n = box_type.n
    blocks = text.strip().split("|")
    if len(blocks) != n:
        raise ParseError("block_count", f"expected {n} row blocks, got {len(blocks)}")
    rows = []
    for i, block in enumerate(blocks):
        if len(block) != n:
            raise ParseError("block_length", f"row {i} has {len(block)} symbols, expected {n}")
        row = []
        for ch in block:
            if ch not in _DIGIT_VALUE:
                raise ParseError("invalid_char", f"row {i}: {ch!r} is not a symbol character")
            v = _DIGIT_VALUE[ch]
            if v >= n:
                raise ParseError("symbol_range", f"row {i}: symbol {v} out of range 0..{n - 1}")
            row.append(v)
        rows.append(row)
    return SudokuSquare(rows, box_type)


def parse_grid(text: str, box_type: BoxType) -> SudokuSquare:
    n = box_type.n
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if len(lines) != n:
        raise ParseError("line_count", f"expected {n} rows, got {len(lines)}")
    rows = []
    for i, line in enumerate(lines):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError("token_count", f"row {i} has {len(tokens)} entries, expected {n}")
        row = []
        for tok in tokens:
            try:
                v = int(tok)
            except ValueError:
                raise ParseError("invalid_char", f"row {i}: {tok!r} is not an integer") from None
            if not 0 <= v < n:
                raise ParseError("symbol_range", f"row {i}: symbol {v} out of range 0..{n - 1}")
            row.append(v)
        rows.append(row)
    return SudokuSquare(rows, box_type)


def parse_json(text: str) -> SudokuSquare:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("json", f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or not {"h", "w", "rows"} <= set(obj):
        raise ParseError("json", 'expected an object with keys "h", "w", "rows"')
    try:
        box = BoxType(int(obj["h"]), int(obj["w"]))
    except (TypeError, ValueError):
        raise ParseError("json", '"h" and "w" must be positive integers') from None
    rows = obj["rows"]
    if not isinstance(rows, list):
        raise ParseError("json", '"rows" must be a list of rows')
    return SudokuSquare(rows, box)


def parse(text: str, box_type: BoxType, style: str) -> SudokuSquare:
    if style == "single_line":
        return parse_single_line(text, box_type)
    if style == "grid":
        return parse_grid(text, box_type)
    if style == "json":
        sq = parse_json(text)
        if sq.box_type != box_type:
            raise ParseError(
                "json",
                f"box type {sq.box_type.h}x{sq.box_type.w} in JSON, expected {box_type.h}x{box_type.w}",
            )
        return sq
    raise ValueError(f"unknown style {style!r}, expected one of {STYLES}")


def _rows_of(square: SudokuSquare) -> list[list[int]]:
    return [list(map(int, row)) for row in square.cells.tolist()]


def serialize(square: SudokuSquare, style: str = "single_line") -> str:
    n = square.order
    if style == "single_line":
        if n > len(_DIGITS):
            raise ValueError(f"single_line style supports orders up to {len(_DIGITS)}, got {n}")
        return "|".join("".join(_DIGITS[v] for v in row) for row in square.cells.tolist())
    if style == "grid":
        width = len(str(n - 1))
        return "\n".join(
            " ".join(str(v).rjust(width) for v in row) for row in square.cells.tolist()
        )
    if style == "json":
        payload = {"h": square.box_type.h, "w": square.box_type.w, "rows": _rows_of(square)}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))
    raise ValueError(f"unknown style {style!r}, expected one of {STYLES}")


def canonical_json(obj) -> str:
    """Sorted-keys, no-whitespace JSON used for certificates and caches."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
