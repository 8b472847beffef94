"""Pentomino cage tilings of the 5x5 grid and their latin squares."""

import csv
import io
import json

import numpy as np
import pytest

from sudoku_spectra.construct import latin_spectrum
from sudoku_spectra.core import LatinSquare, intersection_size, validate_latin
from sudoku_spectra.pentadoku import (
    CATEGORIES,
    CENSUS_CONVENTIONS,
    RIGID_SOLUTION,
    RIGID_TILING,
    FULL_SPECTRUM,
    PENTOMINO_BASE,
    PENTOMINO_ORIENTATIONS,
    RIGID_SPECTRUM,
    Tiling,
    canonical_cage_key,
    census_text,
    classify_tiling,
    enumerate_tilings,
    shape_name,
    solve_cage_latin,
    tiling_spectrum,
)

EXPECTED_ORIENTATIONS = {
    "F": 8, "I": 2, "L": 8, "N": 8, "P": 8, "T": 4,
    "U": 4, "V": 4, "W": 4, "X": 1, "Y": 8, "Z": 4,
}


def test_twelve_free_pentominoes_and_63_orientations():
    assert set(PENTOMINO_BASE) == set(EXPECTED_ORIENTATIONS)
    total = 0
    for name, count in EXPECTED_ORIENTATIONS.items():
        oris = PENTOMINO_ORIENTATIONS[name]
        assert len(oris) == count, name
        assert len(set(oris)) == count
        total += count
        for cells in oris:
            assert shape_name(cells) == name
            assert min(r for r, _ in cells) == 0
            assert min(c for _, c in cells) == 0
    assert total == 63


def test_canonical_key_is_symmetry_invariant():
    g = np.asarray(RIGID_TILING.grid)
    keys = set()
    for k in range(4):
        for mirror in (False, True):
            t = np.rot90(g, k)
            if mirror:
                t = t[:, ::-1]
            keys.add(canonical_cage_key(t))
    assert keys == {RIGID_TILING.canonical_key()}
    # first-appearance labelled grids are never below their canonical form
    assert RIGID_TILING.canonical_key() <= RIGID_TILING.key()


def test_tiling_validation():
    with pytest.raises(ValueError):
        Tiling.from_string("00|11")
    with pytest.raises(ValueError):
        # five I columns: connected, right sizes, but all the same type
        Tiling.from_string("01234|01234|01234|01234|01234")
    with pytest.raises(ValueError):
        # cage 0 too large
        Tiling.from_string("00000|00000|11111|22222|33333")
    with pytest.raises(ValueError):
        # shapes tuple must match the grid
        Tiling(RIGID_TILING.grid, ("I",) * 5)


def test_from_string_round_trip():
    assert RIGID_TILING.key() == "0011120001223312243344443"
    assert Tiling.from_string("|".join(
        "".join(str(v) for v in row) for row in RIGID_TILING.grid
    )) == RIGID_TILING
    assert RIGID_TILING.shapes == ("N", "V", "P", "W", "Y")


def test_enumeration_finds_107_classes():
    tilings = enumerate_tilings()
    assert len(tilings) == 107
    keys = {t.canonical_key() for t in tilings}
    assert len(keys) == 107
    # stored representatives are canonical and symmetry-stable
    for t in tilings[:10]:
        assert t.key() == t.canonical_key()
        flipped = canonical_cage_key(np.asarray(t.grid)[::-1, :])
        assert flipped == t.canonical_key()


def test_rigid_tiling_has_unique_stored_solution():
    sols = solve_cage_latin(RIGID_TILING)
    assert sols == (RIGID_SOLUTION,)
    raw = solve_cage_latin(RIGID_TILING, up_to_relabelling=False)
    assert len(raw) == 120
    for sol in raw[:10]:
        assert validate_latin(sol.cells).ok
        grid = np.asarray(RIGID_TILING.grid)
        for cage in range(5):
            assert set(sol.cells[grid == cage].tolist()) == set(range(5))
    cls = classify_tiling(RIGID_TILING)
    assert cls.category == "rigid"
    assert cls.canonical_solutions == 1
    assert cls.raw_solutions == 120
    assert cls.spectrum == RIGID_SPECTRUM


def test_spectrum_matches_naive_all_pairs(census):
    # factored computation (canonical x relabelled) vs literal all pairs
    small = [
        c.tiling
        for c in sorted(census.value.classes, key=lambda c: c.canonical_solutions)
        if 0 < c.canonical_solutions <= 6
    ]
    assert len(small) >= 10
    checked = 0
    for tiling in small[:12]:
        raw = solve_cage_latin(tiling, up_to_relabelling=False)
        flats = np.array([s.cells.ravel() for s in raw], dtype=np.int16)
        naive = set()
        for row in flats:
            naive.update(np.unique((flats == row).sum(axis=1)).tolist())
        assert tiling_spectrum(tiling) == frozenset(naive)
        checked += 1
    assert checked >= 10


def test_census_summary(census):
    report = census.value
    assert len(report.classes) == 107
    assert report.summary() == (4, 58, 44, 1)
    assert report.summary() == tuple(report.count(c) for c in CATEGORIES)


def test_census_category_properties(census):
    report = census.value
    for cls in report.classes:
        assert cls.raw_solutions == 120 * cls.canonical_solutions
        if cls.category == "unsolvable":
            assert cls.canonical_solutions == 0 and cls.spectrum == frozenset()
        elif cls.category == "full":
            assert cls.spectrum == FULL_SPECTRUM and cls.missing == frozenset()
        elif cls.category == "partial":
            assert cls.canonical_solutions > 1
            assert cls.missing and cls.missing <= {1, 14, 16, 17, 18}
        else:
            assert cls.canonical_solutions == 1
    assert max(c.canonical_solutions for c in report.classes) == 34


def test_the_single_rigid_class_is_the_worked_example(census):
    rigid = census.value.by_category("rigid")
    assert len(rigid) == 1
    assert rigid[0].tiling.canonical_key() == RIGID_TILING.canonical_key()


def test_full_spectrum_matches_order_five_latin_spectrum():
    assert FULL_SPECTRUM == latin_spectrum(5)
    assert RIGID_SPECTRUM == {5 * k for k in range(4)} | {25}
    assert RIGID_SPECTRUM < FULL_SPECTRUM


def test_census_csv_output(census):
    text = census_text(census.value, "csv")
    lines = text.splitlines()
    comments = [ln for ln in lines if ln.startswith("#")]
    assert len(comments) == len(CENSUS_CONVENTIONS)
    body = [ln for ln in lines if not ln.startswith("#")]
    rows = list(csv.DictReader(io.StringIO("\n".join(body))))
    assert len(rows) == 107
    assert sum(1 for r in rows if r["category"] == "rigid") == 1
    for r in rows:
        assert int(r["raw_solutions"]) == 120 * int(r["canonical_solutions"])
        if r["category"] != "partial":
            assert r["missing"] == ""


def test_census_json_output(census):
    obj = json.loads(census_text(census.value, "json"))
    assert obj["conventions"] == CENSUS_CONVENTIONS
    assert len(obj["tilings"]) == 107
    cats = {t["category"] for t in obj["tilings"]}
    assert cats == set(CATEGORIES)
    with pytest.raises(ValueError):
        census_text(census.value, "xml")


def test_intersections_of_rigid_solutions_hit_rigid_values_only():
    raw = solve_cage_latin(RIGID_TILING, up_to_relabelling=False)
    rng = np.random.default_rng(99)
    for _ in range(200):
        i, j = rng.integers(0, len(raw), 2)
        assert intersection_size(raw[i], raw[j]) in RIGID_SPECTRUM
    assert isinstance(raw[0], LatinSquare)
