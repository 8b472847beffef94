"""Pentadoku: 5x5 latin squares with five pentomino cages.

A tiling carves the 5x5 grid into five pairwise distinct free pentominoes
(distinct as shapes up to rotation and reflection).  Tilings are counted
up to the dihedral symmetry group of the grid (rotations and
reflections); each class is represented by a canonical form, the
lexicographically least cage grid over the 8 transforms with cage ids
renumbered in first-appearance order.  A Pentadoku solution is a latin
square in which every cage also contains all five symbols.

The census classifies all tilings by their intersection spectrum (sizes
of |A ∩ B| over solution pairs): ``unsolvable`` (no solution), ``full``
(the whole order-5 spectrum {0..19, 21, 25}), ``partial`` (a proper
nonempty subset), and ``rigid`` (a unique solution up to symbol
relabelling, giving spectrum {0, 5, 10, 15, 25}).

Solutions are enumerated up to relabelling (first row 0 1 2 3 4); the
relabelling group acts freely, so every count of raw solutions is 120
times the canonical count, and spectra factor through one canonical side.
Both facts are verified in the test suite against plain enumeration.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .core import LatinSquare

SIZE = 5

Cells = tuple[tuple[int, int], ...]

# the 12 free pentominoes, one orientation each
PENTOMINO_BASE: dict[str, Cells] = {
    "F": ((0, 1), (0, 2), (1, 0), (1, 1), (2, 1)),
    "I": ((0, 0), (1, 0), (2, 0), (3, 0), (4, 0)),
    "L": ((0, 0), (1, 0), (2, 0), (3, 0), (3, 1)),
    "N": ((0, 1), (1, 1), (2, 0), (2, 1), (3, 0)),
    "P": ((0, 0), (0, 1), (1, 0), (1, 1), (2, 0)),
    "T": ((0, 0), (0, 1), (0, 2), (1, 1), (2, 1)),
    "U": ((0, 0), (0, 2), (1, 0), (1, 1), (1, 2)),
    "V": ((0, 0), (1, 0), (2, 0), (2, 1), (2, 2)),
    "W": ((0, 0), (1, 0), (1, 1), (2, 1), (2, 2)),
    "X": ((0, 1), (1, 0), (1, 1), (1, 2), (2, 1)),
    "Y": ((0, 1), (1, 0), (1, 1), (2, 1), (3, 1)),
    "Z": ((0, 0), (0, 1), (1, 1), (2, 1), (2, 2)),
}


def normalize(cells) -> Cells:
    pts = list(cells)
    r0 = min(r for r, _ in pts)
    c0 = min(c for _, c in pts)
    return tuple(sorted((r - r0, c - c0) for r, c in pts))


def orientations(cells: Cells) -> tuple[Cells, ...]:
    """All distinct placements of a shape under rotation and reflection."""
    seen = []
    current = cells
    for _ in range(2):
        for _ in range(4):
            current = normalize((c, -r) for r, c in current)  # rotate 90
            if current not in seen:
                seen.append(current)
        current = normalize((r, -c) for r, c in current)  # reflect
    return tuple(seen)


PENTOMINO_ORIENTATIONS = {name: orientations(cells) for name, cells in PENTOMINO_BASE.items()}
_SHAPE_NAME = {
    orient: name for name, orients in PENTOMINO_ORIENTATIONS.items() for orient in orients
}


def shape_name(cells) -> str:
    """Which free pentomino a 5-cell set is."""
    key = normalize(cells)
    try:
        return _SHAPE_NAME[key]
    except KeyError:
        raise ValueError(f"{len(key)} cells do not form a pentomino") from None


Grid = tuple[tuple[int, ...], ...]


def _relabel_first_appearance(flat: list[int]) -> list[int]:
    mapping: dict[int, int] = {}
    out = []
    for v in flat:
        if v not in mapping:
            mapping[v] = len(mapping)
        out.append(mapping[v])
    return out


def canonical_cage_key(grid) -> str:
    """Lexicographically least cage string over the 8 grid symmetries,
    cage ids renumbered in first-appearance order."""
    g = np.asarray(grid)
    best = None
    for k in range(4):
        for mirrored in (False, True):
            t = np.rot90(g, k)
            if mirrored:
                t = t[:, ::-1]
            flat = _relabel_first_appearance(t.ravel().tolist())
            key = "".join(str(v) for v in flat)
            if best is None or key < best:
                best = key
    return best


@dataclass(frozen=True)
class Tiling:
    """A cage partition of the 5x5 grid into five distinct pentominoes.

    ``grid[r][c]`` is the cage id (0..4, first-appearance order) and
    ``shapes[i]`` the free pentomino type of cage i.
    """

    grid: Grid
    shapes: tuple[str, ...]

    def __post_init__(self):
        g = np.asarray(self.grid)
        if g.shape != (SIZE, SIZE):
            raise ValueError(f"cage grid must be {SIZE}x{SIZE}")
        cages = [np.argwhere(g == i) for i in range(SIZE)]
        if sum(len(c) for c in cages) != SIZE * SIZE:
            raise ValueError("cage ids must be 0..4 covering the grid")
        names = []
        for i, cage in enumerate(cages):
            if len(cage) != SIZE:
                raise ValueError(f"cage {i} has {len(cage)} cells, expected {SIZE}")
            cells = {(int(r), int(c)) for r, c in cage}
            if not _connected(cells):
                raise ValueError(f"cage {i} is not edge-connected")
            names.append(shape_name(cells))
        if tuple(names) != self.shapes:
            raise ValueError(f"shapes {self.shapes} do not match cages {tuple(names)}")
        if len(set(names)) != SIZE:
            raise ValueError("cages must be pairwise distinct pentomino types")

    @classmethod
    def from_grid(cls, grid) -> "Tiling":
        g = tuple(tuple(int(v) for v in row) for row in np.asarray(grid).tolist())
        names = []
        arr = np.asarray(g)
        for i in range(SIZE):
            cells = {(int(r), int(c)) for r, c in np.argwhere(arr == i)}
            names.append(shape_name(cells))
        return cls(g, tuple(names))

    @classmethod
    def from_string(cls, text: str) -> "Tiling":
        rows = text.strip().split("|")
        return cls.from_grid([[int(ch) for ch in row] for row in rows])

    def key(self) -> str:
        return "".join(str(v) for row in self.grid for v in row)

    def canonical_key(self) -> str:
        return canonical_cage_key(self.grid)


def _connected(cells: set[tuple[int, int]]) -> bool:
    stack = [next(iter(cells))]
    seen = {stack[0]}
    while stack:
        r, c = stack.pop()
        for nr, nc in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
            if (nr, nc) in cells and (nr, nc) not in seen:
                seen.add((nr, nc))
                stack.append((nr, nc))
    return len(seen) == len(cells)


def enumerate_tilings() -> tuple[Tiling, ...]:
    """All tilings of the grid by five distinct free pentominoes, one
    canonical representative per symmetry class, in sorted key order."""
    grid = [[-1] * SIZE for _ in range(SIZE)]
    used: set[str] = set()
    canonical: dict[str, None] = {}

    def first_empty() -> tuple[int, int] | None:
        for r in range(SIZE):
            for c in range(SIZE):
                if grid[r][c] < 0:
                    return r, c
        return None

    def place(cage_idx: int):
        spot = first_empty()
        if spot is None:
            canonical.setdefault(canonical_cage_key(grid))
            return
        r0, c0 = spot
        for name, orients in PENTOMINO_ORIENTATIONS.items():
            if name in used:
                continue
            for cells in orients:
                # cells[0] is the row-major least cell, which must land on
                # the first empty spot
                dr, dc = r0 - cells[0][0], c0 - cells[0][1]
                target = [(r + dr, c + dc) for r, c in cells]
                if all(0 <= r < SIZE and 0 <= c < SIZE and grid[r][c] < 0 for r, c in target):
                    for r, c in target:
                        grid[r][c] = cage_idx
                    used.add(name)
                    place(cage_idx + 1)
                    used.discard(name)
                    for r, c in target:
                        grid[r][c] = -1

    place(0)
    out = []
    for key in sorted(canonical):
        rows = tuple(tuple(int(ch) for ch in key[i * SIZE : (i + 1) * SIZE]) for i in range(SIZE))
        out.append(Tiling.from_grid(rows))
    return tuple(out)


def solve_cage_latin(tiling: Tiling, up_to_relabelling: bool = True) -> tuple[LatinSquare, ...]:
    """All latin squares whose cages each hold all five symbols.

    With ``up_to_relabelling`` the first row is pinned to 0 1 2 3 4,
    giving exactly one solution per relabelling class (the symbol group
    acts freely); multiply counts by 120 for raw solutions.
    """
    n = SIZE
    cage_flat = [tiling.grid[r][c] for r in range(n) for c in range(n)]
    full = (1 << n) - 1
    row_masks = [0] * n
    col_masks = [0] * n
    cage_masks = [0] * n
    grid = [0] * (n * n)
    out: list[LatinSquare] = []

    def go(pos: int):
        if pos == n * n:
            out.append(LatinSquare(np.array(grid, dtype=np.int64).reshape(n, n)))
            return
        r, c = divmod(pos, n)
        avail = full & ~row_masks[r] & ~col_masks[c] & ~cage_masks[cage_flat[pos]]
        if up_to_relabelling and r == 0:
            avail &= 1 << c
        while avail:
            bit = avail & -avail
            avail ^= bit
            grid[pos] = bit.bit_length() - 1
            row_masks[r] |= bit
            col_masks[c] |= bit
            cage_masks[cage_flat[pos]] |= bit
            go(pos + 1)
            row_masks[r] ^= bit
            col_masks[c] ^= bit
            cage_masks[cage_flat[pos]] ^= bit

    go(0)
    return tuple(out)


_S5 = np.array(list(itertools.permutations(range(SIZE))), dtype=np.uint8)


def tiling_spectrum(tiling: Tiling, solutions: tuple[LatinSquare, ...] | None = None) -> frozenset[int]:
    """Intersection sizes over all ordered pairs of raw solutions.

    One side ranges over canonical solutions only: relabelling both
    squares together is intersection-preserving, so every pair is
    equivalent to one with a canonical left square.
    """
    if solutions is None:
        solutions = solve_cage_latin(tiling)
    if not solutions:
        return frozenset()
    canon = np.array([sol.cells.ravel() for sol in solutions], dtype=np.uint8)
    relabelled = _S5[:, canon].reshape(len(_S5) * len(canon), SIZE * SIZE)
    values: set[int] = set()
    for a in canon:
        agree = (relabelled == a).sum(axis=1)
        values.update(np.unique(agree).tolist())
    return frozenset(int(v) for v in values)


FULL_SPECTRUM = frozenset(range(SIZE * SIZE - 5)) | {SIZE * SIZE - 4, SIZE * SIZE}
RIGID_SPECTRUM = frozenset({0, 5, 10, 15, 25})

CATEGORIES = ("unsolvable", "full", "partial", "rigid")


@dataclass(frozen=True)
class TilingClass:
    tiling: Tiling
    canonical_solutions: int
    spectrum: frozenset[int]
    category: str

    @property
    def raw_solutions(self) -> int:
        return 120 * self.canonical_solutions

    @property
    def missing(self) -> frozenset[int]:
        return FULL_SPECTRUM - self.spectrum


def classify_tiling(tiling: Tiling) -> TilingClass:
    solutions = solve_cage_latin(tiling)
    if not solutions:
        return TilingClass(tiling, 0, frozenset(), "unsolvable")
    spectrum = tiling_spectrum(tiling, solutions)
    if len(solutions) == 1:
        category = "rigid"
    elif spectrum == FULL_SPECTRUM:
        category = "full"
    else:
        category = "partial"
    return TilingClass(tiling, len(solutions), spectrum, category)


def _classify_worker(grid: Grid) -> TilingClass:
    return classify_tiling(Tiling.from_grid(grid))


@dataclass(frozen=True)
class CensusReport:
    classes: tuple[TilingClass, ...]

    def count(self, category: str) -> int:
        return sum(1 for c in self.classes if c.category == category)

    def summary(self) -> tuple[int, int, int, int]:
        return tuple(self.count(cat) for cat in CATEGORIES)

    def by_category(self, category: str) -> tuple[TilingClass, ...]:
        return tuple(c for c in self.classes if c.category == category)


def classify_all(tilings: tuple[Tiling, ...] | None = None, jobs: int = 1) -> CensusReport:
    if tilings is None:
        tilings = enumerate_tilings()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            classes = tuple(pool.map(_classify_worker, [t.grid for t in tilings]))
    else:
        classes = tuple(classify_tiling(t) for t in tilings)
    return CensusReport(classes)


CENSUS_CONVENTIONS = {
    "grid": "5x5, cage ids 0..4 in first-appearance row-major order",
    "tiling_symmetry": "tilings counted up to grid rotations and reflections (8 transforms)",
    "distinctness": "the five cages are pairwise distinct free pentominoes",
    "solutions": "latin squares over symbols 0..4 with all symbols in every cage",
    "canonical_solution": "first row reads 0 1 2 3 4; raw count = 120 x canonical",
    "spectrum": "intersection sizes over ordered pairs of raw solutions",
}


def write_census(report: CensusReport, out, fmt: str = "csv") -> None:
    """Write one row per tiling; ``out`` is a writable text file object."""
    rows = [
        {
            "cage_grid": "|".join("".join(str(v) for v in row) for row in cls.tiling.grid),
            "shapes": "".join(cls.tiling.shapes),
            "canonical_solutions": cls.canonical_solutions,
            "raw_solutions": cls.raw_solutions,
            "category": cls.category,
            "spectrum": " ".join(str(v) for v in sorted(cls.spectrum)),
            "missing": " ".join(str(v) for v in sorted(cls.missing)) if cls.category == "partial" else "",
        }
        for cls in report.classes
    ]
    if fmt == "json":
        json.dump({"conventions": CENSUS_CONVENTIONS, "tilings": rows}, out, indent=1)
        out.write("\n")
        return
    if fmt != "csv":
        raise ValueError(f"unknown census format {fmt!r}")
    for key, value in CENSUS_CONVENTIONS.items():
        out.write(f"# {key}: {value}\n")
    writer = csv.DictWriter(out, fieldnames=list(rows[0].keys()))
    writer.writeheader()
    writer.writerows(rows)


def census_text(report: CensusReport, fmt: str = "csv") -> str:
    buf = io.StringIO()
    write_census(report, buf, fmt)
    return buf.getvalue()


# the worked rigid example: cage grid and its unique canonical solution
RIGID_TILING = Tiling.from_string("00111|20001|22331|22433|44443")
RIGID_SOLUTION = LatinSquare(
    [
        [0, 1, 2, 3, 4],
        [1, 3, 4, 2, 0],
        [3, 2, 0, 4, 1],
        [4, 0, 3, 1, 2],
        [2, 4, 1, 0, 3],
    ]
)
