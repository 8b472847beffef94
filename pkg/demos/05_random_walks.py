"""Random squares: direct sampling and the incidence-cube chain.

Run: python3 demos/05_random_walks.py
"""

from collections import Counter

import numpy as np

from sudoku_spectra import (
    ChainState,
    cyclic_square,
    drift_near,
    intersection_size,
    jm_step,
    resolve_proper,
    row_derangement,
    sample_sudoku,
    serialize,
)


def main():
    rng = np.random.default_rng(7)

    square = sample_sudoku(3, 3, rng)
    print("random (3, 3) Sudoku square:", serialize(square))
    print()

    # the chain walks the 0/1 incidence cube, visiting improper states
    state = ChainState.from_square(cyclic_square(4))
    flavors = Counter()
    for _ in range(500):
        state = jm_step(state, rng)
        flavors["proper" if state.proper else "improper"] += 1
    state = resolve_proper(state, rng)
    print(f"500 chain steps at order 4: {flavors['proper']} proper, "
          f"{flavors['improper']} improper, final square valid:",
          state.grid().order == 4)
    print()

    # small controlled moves around a square
    near = drift_near(square, rng, steps=5)
    far = row_derangement(square, rng)
    print("after 5 accepted excursions, agreement:",
          intersection_size(square, near), "of 81")
    print("after deranging all rows, agreement:",
          intersection_size(square, far), "of 81")


if __name__ == "__main__":
    main()
