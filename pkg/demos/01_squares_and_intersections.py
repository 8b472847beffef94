"""Build squares, validate them, and measure where two squares agree.

Run: python3 demos/01_squares_and_intersections.py
"""

import numpy as np

from sudoku_spectra import (
    BoxType,
    SudokuSquare,
    cyclic_square,
    intersection,
    intersection_size,
    permute_symbols,
    serialize,
    validate_sudoku,
)


def main():
    # an order-6 latin square from the cyclic construction
    l = cyclic_square(6)
    print("cyclic order-6 square, rows reordered to respect (2, 3) boxes:")
    print(serialize(SudokuSquare(l.cells[[0, 3, 1, 4, 2, 5]], BoxType(2, 3)), "grid"))
    print()

    # swapping two symbols changes exactly the cells holding them
    swapped = permute_symbols(l, [1, 0, 2, 3, 4, 5])
    print("cells agreeing after swapping symbols 0 and 1:",
          intersection_size(l, swapped), "of 36")

    common = intersection(l, swapped)
    rows_touched = {r for r, _, _ in common}
    print("every row keeps", len(common) // 6, "of its 6 cells;",
          "rows touched:", sorted(rows_touched))
    print()

    # the same grid can respect one box shape and break another
    grid = np.array(
        [[0, 1, 2, 3, 4, 5],
         [3, 4, 5, 0, 1, 2],
         [1, 2, 0, 4, 5, 3],
         [4, 5, 3, 1, 2, 0],
         [2, 0, 1, 5, 3, 4],
         [5, 3, 4, 2, 0, 1]]
    )
    for h, w in [(2, 3), (3, 2)]:
        report = validate_sudoku(grid, BoxType(h, w))
        verdict = "valid" if report.ok else f"breaks {report.violation}"
        print(f"as a ({h}, {w}) Sudoku square: {verdict}")


if __name__ == "__main__":
    main()
