"""Core grid types: latin squares, Sudoku latin squares, partial squares.

Symbols are 0-based everywhere: an order-n square is filled with 0..n-1.
A Sudoku square of box type (h, w) is an order h*w latin square whose
h-row by w-column boxes each contain every symbol once.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np


class MalformedInputError(ValueError):
    """Structurally bad input: not square, out-of-range symbols, bad permutation."""


class ValidationError(ValueError):
    """A structurally fine grid that breaks a latin or box constraint."""

    def __init__(self, violation: "Violation"):
        self.violation = violation
        super().__init__(str(violation))


class LatinViolationError(ValidationError):
    pass


class BoxViolationError(ValidationError):
    pass


@dataclass(frozen=True)
class Violation:
    kind: str  # "row" | "column" | "box"
    where: tuple[int, ...]  # row index, column index, or box coordinates (p, q)
    symbol: int

    def __str__(self) -> str:
        return f"symbol {self.symbol} repeats in {self.kind} {self.where}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.ok


def as_grid(rows: Union[np.ndarray, Sequence[Sequence[int]]]) -> np.ndarray:
    """Coerce nested sequences to an (n, n) int array of symbols 0..n-1.

    Raises MalformedInputError for ragged/non-square input or out-of-range
    entries.  The result is a fresh read-only array.
    """
    try:
        raw = np.asarray(rows)
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"not a rectangular integer grid: {exc}") from None
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1] or raw.shape[0] == 0:
        raise MalformedInputError(f"expected a nonempty square grid, got shape {raw.shape}")
    if not np.issubdtype(raw.dtype, np.integer):
        raise MalformedInputError(f"expected integer entries, got dtype {raw.dtype}")
    grid = raw.astype(np.int64, copy=True)
    n = grid.shape[0]
    if grid.min() < 0 or grid.max() >= n:
        bad = grid.min() if grid.min() < 0 else grid.max()
        raise MalformedInputError(f"symbol {bad} out of range 0..{n - 1}")
    grid.flags.writeable = False
    return grid


def _first_duplicate(line: np.ndarray) -> int | None:
    seen = set()
    for v in line.tolist():
        if v in seen:
            return v
        seen.add(v)
    return None


def validate_latin(rows: Union[np.ndarray, Sequence[Sequence[int]]]) -> ValidationReport:
    """Check the latin property; malformed input raises instead of reporting."""
    grid = as_grid(rows)
    n = grid.shape[0]
    for i in range(n):
        dup = _first_duplicate(grid[i])
        if dup is not None:
            return ValidationReport(False, Violation("row", (i,), dup))
    for j in range(n):
        dup = _first_duplicate(grid[:, j])
        if dup is not None:
            return ValidationReport(False, Violation("column", (j,), dup))
    return ValidationReport(True)


@dataclass(frozen=True)
class BoxType:
    """Box shape (h, w): boxes are h rows by w columns, order n = h*w."""

    h: int
    w: int

    def __post_init__(self):
        if self.h < 1 or self.w < 1:
            raise MalformedInputError(f"box type must be positive, got {(self.h, self.w)}")

    @property
    def n(self) -> int:
        return self.h * self.w

    def transposed(self) -> "BoxType":
        return BoxType(self.w, self.h)

    def box_origin(self, p: int, q: int) -> tuple[int, int]:
        # box (p, q), p in 0..w-1 bands, q in 0..h-1 stacks
        return p * self.h, q * self.w

    def boxes(self) -> Iterable[tuple[int, int]]:
        return ((p, q) for p in range(self.w) for q in range(self.h))


def validate_sudoku(
    rows: Union[np.ndarray, Sequence[Sequence[int]]], box_type: BoxType
) -> ValidationReport:
    """Check latin plus box constraints for the given box type."""
    grid = as_grid(rows)
    if grid.shape[0] != box_type.n:
        raise MalformedInputError(
            f"grid order {grid.shape[0]} does not match box type {box_type.h}x{box_type.w}"
        )
    report = validate_latin(grid)
    if not report.ok:
        return report
    for p, q in box_type.boxes():
        r0, c0 = box_type.box_origin(p, q)
        block = grid[r0 : r0 + box_type.h, c0 : c0 + box_type.w].ravel()
        dup = _first_duplicate(block)
        if dup is not None:
            return ValidationReport(False, Violation("box", (p, q), dup))
    return ValidationReport(True)


class LatinSquare:
    """Immutable order-n latin square over symbols 0..n-1."""

    __slots__ = ("cells", "_hash")

    def __init__(self, rows: Union[np.ndarray, Sequence[Sequence[int]]]):
        grid = as_grid(rows)
        report = validate_latin(grid)
        if not report.ok:
            raise LatinViolationError(report.violation)
        object.__setattr__(self, "cells", grid)
        object.__setattr__(self, "_hash", hash((grid.shape[0], grid.tobytes())))

    def __setattr__(self, name, value):
        raise AttributeError("LatinSquare is immutable")

    @property
    def order(self) -> int:
        return self.cells.shape[0]

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self.cells.tolist())

    def __getitem__(self, key):
        return self.cells[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatinSquare):
            return NotImplemented
        return self.order == other.order and np.array_equal(self.cells, other.cells)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = "/".join("".join(format(v, "x") for v in row) for row in self.cells.tolist())
        if self.order > 16:
            body = f"order {self.order}"
        return f"LatinSquare({body})"


class SudokuSquare:
    """A latin square paired with a box type it satisfies."""

    __slots__ = ("square", "box_type")

    def __init__(self, square: Union[LatinSquare, np.ndarray, Sequence], box_type: BoxType):
        if not isinstance(square, LatinSquare):
            square = LatinSquare(square)
        report = validate_sudoku(square.cells, box_type)
        if not report.ok:
            raise BoxViolationError(report.violation)
        object.__setattr__(self, "square", square)
        object.__setattr__(self, "box_type", box_type)

    def __setattr__(self, name, value):
        raise AttributeError("SudokuSquare is immutable")

    @property
    def cells(self) -> np.ndarray:
        return self.square.cells

    @property
    def order(self) -> int:
        return self.square.order

    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self.square.rows()

    def transposed(self) -> "SudokuSquare":
        return SudokuSquare(LatinSquare(self.cells.T), self.box_type.transposed())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SudokuSquare):
            return NotImplemented
        return self.box_type == other.box_type and self.square == other.square

    def __hash__(self) -> int:
        return hash((self.box_type, self.square))

    def __repr__(self) -> str:
        return f"SudokuSquare({self.box_type.h}x{self.box_type.w}, {self.square!r})"


GridLike = Union[LatinSquare, SudokuSquare, np.ndarray, Sequence]


def _cells_of(x: GridLike) -> np.ndarray:
    if isinstance(x, (LatinSquare, SudokuSquare)):
        return x.cells
    return as_grid(x)


class PartialSquare:
    """A partial latin square: a set of (row, col, symbol) triples, no cell
    or line used twice."""

    __slots__ = ("order", "triples")

    def __init__(self, order: int, triples: Iterable[tuple[int, int, int]]):
        triples = frozenset((int(r), int(c), int(s)) for r, c, s in triples)
        cells = set()
        rows_used = set()
        cols_used = set()
        for r, c, s in triples:
            if not (0 <= r < order and 0 <= c < order and 0 <= s < order):
                raise MalformedInputError(f"triple {(r, c, s)} out of range for order {order}")
            if (r, c) in cells:
                raise MalformedInputError(f"cell ({r}, {c}) filled twice")
            cells.add((r, c))
            if (r, s) in rows_used:
                raise LatinViolationError(Violation("row", (r,), s))
            if (c, s) in cols_used:
                raise LatinViolationError(Violation("column", (c,), s))
            rows_used.add((r, s))
            cols_used.add((c, s))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "triples", triples)

    def __setattr__(self, name, value):
        raise AttributeError("PartialSquare is immutable")

    def __len__(self) -> int:
        return len(self.triples)

    def __iter__(self):
        return iter(sorted(self.triples))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PartialSquare):
            return NotImplemented
        return self.order == other.order and self.triples == other.triples

    def __hash__(self) -> int:
        return hash((self.order, self.triples))


def intersection(a: GridLike, b: GridLike) -> PartialSquare:
    """Cells where two equal-order squares agree, as a partial square."""
    ca, cb = _cells_of(a), _cells_of(b)
    if ca.shape != cb.shape:
        raise MalformedInputError(f"order mismatch: {ca.shape[0]} vs {cb.shape[0]}")
    rr, cc = np.nonzero(ca == cb)
    return PartialSquare(ca.shape[0], zip(rr.tolist(), cc.tolist(), ca[rr, cc].tolist()))


def intersection_size(a: GridLike, b: GridLike) -> int:
    """|intersection(a, b)| without building the triple set."""
    ca, cb = _cells_of(a), _cells_of(b)
    if ca.shape != cb.shape:
        raise MalformedInputError(f"order mismatch: {ca.shape[0]} vs {cb.shape[0]}")
    return int((ca == cb).sum())


def _check_perm(pi: Sequence[int], n: int) -> np.ndarray:
    arr = np.asarray(pi, dtype=np.int64)
    if arr.shape != (n,) or sorted(arr.tolist()) != list(range(n)):
        raise MalformedInputError(f"not a permutation of 0..{n - 1}: {list(pi)}")
    return arr


def permute_symbols(s: LatinSquare, pi: Sequence[int]) -> LatinSquare:
    """Relabel symbols: k becomes pi[k]."""
    arr = _check_perm(pi, s.order)
    return LatinSquare(arr[s.cells])


def permute_rows(s: LatinSquare, pi: Sequence[int]) -> LatinSquare:
    """Row i of the result is row pi[i] of the input."""
    arr = _check_perm(pi, s.order)
    return LatinSquare(s.cells[arr])


def permute_cols(s: LatinSquare, pi: Sequence[int]) -> LatinSquare:
    """Column j of the result is column pi[j] of the input."""
    arr = _check_perm(pi, s.order)
    return LatinSquare(s.cells[:, arr])


def transpose(s: LatinSquare) -> LatinSquare:
    return LatinSquare(s.cells.T)


def relabel_sudoku(s: SudokuSquare, pi: Sequence[int]) -> SudokuSquare:
    """Symbol relabelling preserves boxes, so the result keeps the box type."""
    return SudokuSquare(permute_symbols(s.square, pi), s.box_type)


def cyclic_square(n: int) -> LatinSquare:
    """The addition table of Z_n: entry (i, j) = (i + j) mod n."""
    i = np.arange(n)
    return LatinSquare((i[:, None] + i[None, :]) % n)
