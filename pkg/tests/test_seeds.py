"""Checked-in seed squares and their intersection labels."""

import pytest

from sudoku_spectra.construct import sudoku_spectrum
from sudoku_spectra.core import BoxType, intersection_size, validate_sudoku
from sudoku_spectra.seeds import (
    DATABASE,
    SEED_TYPES,
    SeedDatabase,
    load_seed_set,
    verify_seed_database,
)

# which labels each fixture carries, beyond the reference's n^2
EXPECTED_LABELS = {
    (2, 2): set(range(5)) | {6, 8, 9, 12},
    (2, 3): set(range(31)) | {32},
    (3, 3): set(range(76)) | {77},
    (2, 4): {64 - 11, 64 - 9, 64 - 6},
    (3, 4): {144 - 11, 144 - 9, 144 - 6},
    (4, 4): {256 - 11, 256 - 9, 256 - 6},
}


def test_every_fixture_loads_and_validates():
    for h, w in SEED_TYPES:
        seed_set = load_seed_set(h, w)
        assert seed_set.box_type == BoxType(h, w)
        assert validate_sudoku(seed_set.reference.cells, seed_set.box_type).ok
        for _, sq in seed_set.entries:
            assert validate_sudoku(sq.cells, seed_set.box_type).ok


def test_expected_label_sets():
    for (h, w), labels in EXPECTED_LABELS.items():
        seed_set = DATABASE.get(h, w)
        assert seed_set.labels() == labels | {(h * w) ** 2}, (h, w)


def test_small_types_witness_their_whole_spectrum():
    # at the three smallest box types the seeds cover every achievable value
    for h, w in [(2, 2), (2, 3), (3, 3)]:
        assert DATABASE.get(h, w).labels() == sudoku_spectrum(h, w)


def test_verification_recomputes_every_label():
    result = verify_seed_database()
    assert result.ok
    assert not result.failures()
    assert len(result.checks) == sum(len(v) + 1 for v in EXPECTED_LABELS.values())
    for check in result.checks:
        assert check.claimed == check.actual == check.label


def test_pair_for_returns_matching_pair():
    seed_set = DATABASE.get(2, 3)
    for t in sorted(seed_set.labels()):
        a, b = seed_set.pair_for(t)
        assert intersection_size(a, b) == t
    with pytest.raises(KeyError):
        seed_set.pair_for(31)  # impossible value, no seed


def test_database_rejects_unknown_types():
    db = SeedDatabase()
    with pytest.raises(KeyError):
        db.get(5, 5)
    assert db.types() == SEED_TYPES
