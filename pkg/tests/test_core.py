"""Square types, validation, intersections, symmetries."""

import numpy as np
import pytest

from sudoku_spectra.core import (
    BoxType,
    BoxViolationError,
    LatinSquare,
    LatinViolationError,
    MalformedInputError,
    PartialSquare,
    SudokuSquare,
    ValidationError,
    as_grid,
    cyclic_square,
    intersection,
    intersection_size,
    permute_cols,
    permute_rows,
    permute_symbols,
    relabel_sudoku,
    transpose,
    validate_latin,
    validate_sudoku,
)


def test_as_grid_accepts_lists_and_arrays():
    g = as_grid([[0, 1], [1, 0]])
    assert g.shape == (2, 2)
    assert g.dtype == np.int64
    assert not g.flags.writeable
    same = as_grid(g)
    assert np.array_equal(same, g)


def test_as_grid_rejects_bad_shapes_and_symbols():
    with pytest.raises(MalformedInputError):
        as_grid([[0, 1], [1]])  # ragged
    with pytest.raises(MalformedInputError):
        as_grid([[0, 1, 2], [1, 2, 0]])  # not square
    with pytest.raises(MalformedInputError):
        as_grid([[0, 5], [5, 0]])  # symbol out of range
    with pytest.raises(MalformedInputError):
        as_grid([[0.5, 1], [1, 0]])  # non-integer
    with pytest.raises(MalformedInputError):
        as_grid([])


def test_validate_latin_reports_row_and_column_repeats():
    ok = validate_latin([[0, 1], [1, 0]])
    assert ok.ok and ok.violation is None

    bad_row = validate_latin([[0, 0], [1, 1]])
    assert not bad_row.ok
    assert bad_row.violation.kind == "row"

    bad_col = validate_latin([[0, 1], [0, 1]])
    assert not bad_col.ok
    assert bad_col.violation.kind == "column"


def test_validate_sudoku_reports_box_repeats():
    bt = BoxType(2, 2)
    rows = [
        [0, 1, 2, 3],
        [2, 3, 0, 1],
        [1, 0, 3, 2],
        [3, 2, 1, 0],
    ]
    assert validate_sudoku(rows, bt).ok
    # swap two rows from different bands: still latin, box (0,0) now repeats
    swapped = [rows[0], rows[2], rows[1], rows[3]]
    rep = validate_sudoku(swapped, bt)
    assert not rep.ok
    assert rep.violation.kind == "box"


def test_latin_square_constructor_enforces_validity():
    with pytest.raises(LatinViolationError):
        LatinSquare([[0, 0], [1, 1]])
    sq = LatinSquare([[0, 1], [1, 0]])
    assert sq.order == 2
    assert sq.rows() == ((0, 1), (1, 0))
    assert not sq.cells.flags.writeable
    with pytest.raises(AttributeError):
        sq.cells = None


def test_sudoku_square_constructor_enforces_boxes():
    bt = BoxType(2, 2)
    rows = [
        [0, 1, 2, 3],
        [2, 3, 0, 1],
        [1, 0, 3, 2],
        [3, 2, 1, 0],
    ]
    s = SudokuSquare(rows, bt)
    assert s.order == 4
    with pytest.raises(BoxViolationError):
        SudokuSquare([rows[0], rows[2], rows[1], rows[3]], bt)
    # latin failure beats box failure
    with pytest.raises(LatinViolationError):
        SudokuSquare([[0] * 4] * 4, bt)


def test_box_type_geometry():
    bt = BoxType(2, 3)
    assert bt.n == 6
    assert bt.transposed() == BoxType(3, 2)
    boxes = list(bt.boxes())
    assert len(boxes) == 6
    # box (p, q) starts at row p*h, col q*w
    assert bt.box_origin(1, 0) == (2, 0)
    assert bt.box_origin(0, 1) == (0, 3)
    with pytest.raises(ValueError):
        BoxType(0, 3)


def test_equality_and_hash_follow_cells():
    a = LatinSquare(cyclic_square(4).cells)
    b = cyclic_square(4)
    assert a == b
    assert hash(a) == hash(b)
    c = permute_symbols(b, [1, 0, 2, 3])
    assert a != c
    assert len({a, b, c}) == 2


def test_sudoku_equality_includes_box_type():
    # 1xn and nx1 boxes are rows/columns, satisfied by every latin square
    s = SudokuSquare(cyclic_square(4), BoxType(1, 4))
    t = SudokuSquare(s.cells, BoxType(4, 1))
    assert s != t
    assert s.square == t.square
    assert len({s, t}) == 2


def test_intersection_and_size():
    a = cyclic_square(5)
    b = permute_symbols(a, [1, 0, 2, 3, 4])
    common = intersection(a, b)
    assert isinstance(common, PartialSquare)
    assert len(common.triples) == intersection_size(a, b) == 15
    for r, c, s in common.triples:
        assert a.cells[r, c] == b.cells[r, c] == s
    assert intersection_size(a, a) == 25
    with pytest.raises(ValueError):
        intersection_size(a, cyclic_square(4))


def test_partial_square_rejects_conflicts():
    PartialSquare(3, {(0, 0, 1), (0, 1, 2)})
    with pytest.raises(ValueError):
        PartialSquare(3, {(0, 0, 1), (0, 0, 2)})  # cell reused
    with pytest.raises(ValueError):
        PartialSquare(3, {(0, 0, 1), (0, 1, 1)})  # symbol reused in row
    with pytest.raises(ValueError):
        PartialSquare(3, {(0, 0, 1), (1, 0, 1)})  # symbol reused in column
    with pytest.raises(ValueError):
        PartialSquare(2, {(0, 0, 5)})


def test_symmetries_preserve_latin_property():
    rng = np.random.default_rng(42)
    for _ in range(25):
        n = int(rng.integers(2, 7))
        sq = cyclic_square(n)
        pi = rng.permutation(n)
        for moved in (
            permute_symbols(sq, pi),
            permute_rows(sq, pi),
            permute_cols(sq, pi),
            transpose(sq),
        ):
            assert validate_latin(moved.cells).ok


def test_permutations_validate_their_argument():
    sq = cyclic_square(3)
    with pytest.raises(ValueError):
        permute_symbols(sq, [0, 0, 1])
    with pytest.raises(ValueError):
        permute_rows(sq, [0, 1])


def test_intersection_is_invariant_under_joint_symmetry():
    # moving both squares by the same symmetry never changes the overlap
    rng = np.random.default_rng(7)
    a = cyclic_square(6)
    for _ in range(40):
        b = permute_symbols(a, rng.permutation(6))
        base = intersection_size(a, b)
        pi = rng.permutation(6)
        assert intersection_size(permute_rows(a, pi), permute_rows(b, pi)) == base
        assert intersection_size(permute_cols(a, pi), permute_cols(b, pi)) == base
        assert intersection_size(permute_symbols(a, pi), permute_symbols(b, pi)) == base
        assert intersection_size(transpose(a), transpose(b)) == base


def test_relabel_sudoku_keeps_box_type():
    from sudoku_spectra.markov import sample_sudoku

    s = sample_sudoku(2, 3, np.random.default_rng(1))
    moved = relabel_sudoku(s, np.random.default_rng(2).permutation(6))
    assert isinstance(moved, SudokuSquare)
    assert moved.box_type == s.box_type
    assert validate_sudoku(moved.cells, moved.box_type).ok


def test_validation_error_carries_violation():
    try:
        LatinSquare([[0, 0], [1, 1]])
    except ValidationError as exc:
        assert exc.violation.kind == "row"
        assert "row" in str(exc)
    else:  # pragma: no cover
        pytest.fail("expected ValidationError")
