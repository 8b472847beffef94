"""Checked-in seed squares witnessing hard-to-construct intersection values.

One fixture file per box type under ``data/``.  Entries are labelled with
their intersection size against a reference square: files in single-line
notation use the last entry as the reference (it is the square compared
with itself, so its label is n^2); files in grid notation label the
reference ``L``.

These seeds serve two roles: they witness complete spectra at the small
box types (2,2), (2,3), (3,3), and they supply the three exceptional
targets n^2-6, n^2-9, n^2-11 at box width 4 that no product
decomposition reaches.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .core import BoxType, SudokuSquare, intersection_size
from .formats import parse_grid, parse_single_line

SEED_TYPES = ((2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4))


@dataclass(frozen=True)
class SeedSet:
    box_type: BoxType
    entries: tuple[tuple[int, SudokuSquare], ...]  # (label, square), reference excluded
    reference: SudokuSquare

    def labels(self) -> frozenset[int]:
        return frozenset(label for label, _ in self.entries) | {self.box_type.n ** 2}

    def pair_for(self, t: int) -> tuple[SudokuSquare, SudokuSquare]:
        """A pair of squares of this type meeting in exactly t cells."""
        if t == self.box_type.n ** 2:
            return self.reference, self.reference
        for label, square in self.entries:
            if label == t:
                return square, self.reference
        raise KeyError(f"no seed with label {t} for box type {self.box_type}")


def _parse_fixture(text: str, box_type: BoxType) -> SeedSet:
    n = box_type.n
    raw: list[tuple[str, SudokuSquare]] = []
    lines = [ln for ln in (raw_ln.strip() for raw_ln in text.splitlines()) if ln]
    i = 0
    while i < len(lines):
        line = lines[i]
        if line.startswith("#"):
            i += 1
            continue
        label, _, rest = line.partition(":")
        rest = rest.strip()
        if rest:
            raw.append((label.strip(), parse_single_line(rest, box_type)))
            i += 1
        else:
            grid_text = "\n".join(lines[i + 1 : i + 1 + n])
            raw.append((label.strip(), parse_grid(grid_text, box_type)))
            i += 1 + n
    named = {label: sq for label, sq in raw}
    if "L" in named:
        reference = named["L"]
        entries = tuple((int(label), sq) for label, sq in raw if label != "L")
    else:
        reference = raw[-1][1]
        entries = tuple((int(label), sq) for label, sq in raw[:-1])
    return SeedSet(box_type, entries, reference)


def load_seed_set(h: int, w: int) -> SeedSet:
    name = f"seeds_{h}x{w}.txt"
    text = resources.files("sudoku_spectra.data").joinpath(name).read_text()
    return _parse_fixture(text, BoxType(h, w))


class SeedDatabase:
    """All checked-in seed sets, loaded lazily and cached."""

    def __init__(self):
        self._sets: dict[tuple[int, int], SeedSet] = {}

    def get(self, h: int, w: int) -> SeedSet:
        if (h, w) not in self._sets:
            if (h, w) not in SEED_TYPES:
                raise KeyError(f"no seed fixture for box type {(h, w)}")
            self._sets[(h, w)] = load_seed_set(h, w)
        return self._sets[(h, w)]

    def types(self) -> tuple[tuple[int, int], ...]:
        return SEED_TYPES


DATABASE = SeedDatabase()


@dataclass(frozen=True)
class SeedCheck:
    h: int
    w: int
    label: int
    claimed: int
    actual: int

    @property
    def ok(self) -> bool:
        return self.claimed == self.actual


@dataclass(frozen=True)
class SeedVerification:
    checks: tuple[SeedCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> tuple[SeedCheck, ...]:
        return tuple(c for c in self.checks if not c.ok)


def verify_seed_database(db: SeedDatabase = DATABASE) -> SeedVerification:
    """Recompute every label against its reference square.

    Square validity is enforced at parse time, so a fixture that is not a
    Sudoku square of its claimed type fails to load at all; this check
    covers the intersection claims, including the reference against
    itself (label n^2).
    """
    checks = []
    for h, w in db.types():
        seed_set = db.get(h, w)
        ref = seed_set.reference
        n = h * w
        checks.append(SeedCheck(h, w, n * n, n * n, intersection_size(ref, ref)))
        for label, square in seed_set.entries:
            checks.append(SeedCheck(h, w, label, label, intersection_size(square, ref)))
    return SeedVerification(tuple(checks))
