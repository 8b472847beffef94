"""Randomized square generation: backtracking samplers, the
Jacobson-Matthews chain on latin squares, and helpers for steering a
square toward or away from a reference.

The chain walks the 0/1 incidence cube f(r, c, s) of a latin square (all
line sums 1), allowing one improper cell with a -1 entry.  From a proper
state, pick a uniform empty triple and trade along the implied 2x2x2
corner pattern; from an improper state, do the same from its negative
triple with uniform choices among the two positive candidates on each
line.  Sustained steps mix toward the uniform distribution on latin
squares of that order.

All functions take ``rng``: an int seed, a numpy Generator, or None.
Fixed generator algorithm: numpy PCG64 via ``default_rng``, so results
are reproducible across runs for a given seed.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import (
    BoxType,
    LatinSquare,
    SudokuSquare,
    validate_sudoku,
)


def ensure_rng(rng=None) -> np.random.Generator:
    if isinstance(rng, np.random.Generator):
        return rng
    return np.random.default_rng(rng)


class SampleError(RuntimeError):
    """Backtracking sampler exhausted its restart budget."""


def _sample_grid(n: int, box_of: list[int] | None, rng: np.random.Generator,
                 effort: int) -> list[int] | None:
    """One randomized backtracking attempt; None on budget exhaustion.

    Cells are filled most-constrained-first with random tie-breaking, and
    candidate symbols are tried in random order, so every square of the
    type has positive probability.
    """
    total = n * n
    full = (1 << n) - 1
    row_masks = [0] * n
    col_masks = [0] * n
    box_masks = [0] * n
    grid = [-1] * total
    budget = effort * total

    def avail_of(pos: int) -> int:
        r, c = divmod(pos, n)
        a = full & ~row_masks[r] & ~col_masks[c]
        if box_of is not None:
            a &= ~box_masks[box_of[pos]]
        return a

    nodes = 0

    def go(filled: int) -> bool:
        nonlocal nodes
        if filled == total:
            return True
        # most-constrained empty cell, ties broken at random
        best_pos = -1
        best_count = n + 1
        best_avail = 0
        ties = 0
        for pos in range(total):
            if grid[pos] >= 0:
                continue
            a = avail_of(pos)
            cnt = a.bit_count()
            if cnt == 0:
                return False
            if cnt < best_count:
                best_count = cnt
                best_pos = pos
                best_avail = a
                ties = 1
            elif cnt == best_count:
                ties += 1
                if rng.integers(ties) == 0:
                    best_pos = pos
                    best_avail = a
        pos, a = best_pos, best_avail
        r, c = divmod(pos, n)
        syms = []
        while a:
            bit = a & -a
            a ^= bit
            syms.append(bit.bit_length() - 1)
        order = rng.permutation(len(syms))
        for idx in order:
            nodes += 1
            if nodes > budget:
                return False
            s = syms[idx]
            bit = 1 << s
            grid[pos] = s
            row_masks[r] |= bit
            col_masks[c] |= bit
            if box_of is not None:
                box_masks[box_of[pos]] |= bit
            if go(filled + 1):
                return True
            grid[pos] = -1
            row_masks[r] ^= bit
            col_masks[c] ^= bit
            if box_of is not None:
                box_masks[box_of[pos]] ^= bit
        return False

    return grid if go(0) else None


def random_latin_square(n: int, rng=None, *, effort: int = 100, restarts: int = 20) -> LatinSquare:
    rng = ensure_rng(rng)
    for _ in range(restarts):
        grid = _sample_grid(n, None, rng, effort)
        if grid is not None:
            return LatinSquare(np.array(grid, dtype=np.int64).reshape(n, n))
    raise SampleError(f"failed to sample an order-{n} latin square in {restarts} restarts")


def sample_sudoku(h: int, w: int, rng=None, *, effort: int = 100, restarts: int = 20) -> SudokuSquare:
    """A random Sudoku square of box type (h, w), deterministic in rng."""
    box = BoxType(h, w)
    n = box.n
    box_of = [(r // h) * h + (c // w) for r in range(n) for c in range(n)]
    rng = ensure_rng(rng)
    for _ in range(restarts):
        grid = _sample_grid(n, box_of, rng, effort)
        if grid is not None:
            return SudokuSquare(np.array(grid, dtype=np.int64).reshape(n, n), box)
    raise SampleError(f"failed to sample a ({h}, {w}) Sudoku square in {restarts} restarts")


@dataclass(frozen=True)
class ChainState:
    """Incidence cube of a (possibly improper) latin square."""

    f: np.ndarray  # (n, n, n) int8
    negative: tuple[int, int, int] | None = None

    @property
    def order(self) -> int:
        return self.f.shape[0]

    @property
    def proper(self) -> bool:
        return self.negative is None

    @classmethod
    def from_square(cls, square: LatinSquare) -> "ChainState":
        n = square.order
        f = np.zeros((n, n, n), dtype=np.int8)
        rr, cc = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
        f[rr.ravel(), cc.ravel(), square.cells.ravel()] = 1
        f.flags.writeable = False
        return cls(f, None)

    def grid(self) -> LatinSquare:
        if not self.proper:
            raise ValueError("improper state has no square")
        return LatinSquare(np.argmax(self.f, axis=2))

    def check(self) -> None:
        """Assert the incidence invariants (all line sums 1, entries in
        {-1, 0, 1} with at most one -1)."""
        f = self.f
        assert f.sum(axis=0).min() == f.sum(axis=0).max() == 1
        assert f.sum(axis=1).min() == f.sum(axis=1).max() == 1
        assert f.sum(axis=2).min() == f.sum(axis=2).max() == 1
        neg = np.argwhere(f < 0)
        if self.proper:
            assert len(neg) == 0 and f.min() >= 0
        else:
            assert len(neg) == 1 and tuple(neg[0]) == self.negative and f.min() == -1


def jm_step(state: ChainState, rng=None) -> ChainState:
    """One move of the chain; proper and improper states alternate freely."""
    rng = ensure_rng(rng)
    n = state.order
    if n < 2:
        raise ValueError("the chain needs order >= 2")
    f = np.array(state.f, dtype=np.int8)
    if state.proper:
        r = int(rng.integers(n))
        c = int(rng.integers(n))
        s_cur = int(np.argmax(f[r, c]))
        s = int(rng.integers(n - 1))
        if s >= s_cur:
            s += 1
    else:
        r, c, s = state.negative

    def pick(cands: np.ndarray) -> int:
        return int(cands[rng.integers(len(cands))])

    r2 = pick(np.flatnonzero(f[:, c, s] == 1))
    c2 = pick(np.flatnonzero(f[r, :, s] == 1))
    s2 = pick(np.flatnonzero(f[r, c, :] == 1))
    f[r, c, s] += 1
    f[r, c2, s] -= 1
    f[r2, c, s] -= 1
    f[r, c, s2] -= 1
    f[r2, c2, s] += 1
    f[r2, c, s2] += 1
    f[r, c2, s2] += 1
    f[r2, c2, s2] -= 1
    negative = (r2, c2, s2) if f[r2, c2, s2] < 0 else None
    f.flags.writeable = False
    return ChainState(f, negative)


def resolve_proper(state: ChainState, rng=None, max_steps: int = 10_000) -> ChainState:
    """Step until the state is proper again (almost surely fast)."""
    rng = ensure_rng(rng)
    for _ in range(max_steps):
        if state.proper:
            return state
        state = jm_step(state, rng)
    raise RuntimeError(f"chain failed to return to a proper state in {max_steps} steps")


def sample_latin_chain(n: int, rng=None, *, steps: int | None = None) -> LatinSquare:
    """Sample by mixing the chain from the cyclic square."""
    rng = ensure_rng(rng)
    if steps is None:
        steps = 10 * n * n * n
    from .core import cyclic_square

    state = ChainState.from_square(cyclic_square(n))
    for _ in range(steps):
        state = jm_step(state, rng)
    return resolve_proper(state, rng).grid()


def drift_near(square: SudokuSquare, rng=None, *, steps: int = 5,
               attempts: int = 40) -> SudokuSquare:
    """A Sudoku square near the input: chain excursions resolved to
    proper squares, rejecting any that break a box.  Each step retries
    rejected proposals up to ``attempts`` times, so ``steps`` counts
    accepted moves in practice; few steps keep the intersection with the
    input large."""
    rng = ensure_rng(rng)
    box = square.box_type
    state = ChainState.from_square(square.square)
    for _ in range(steps):
        for _ in range(attempts):
            proposal = resolve_proper(jm_step(state, rng), rng)
            if validate_sudoku(proposal.grid().cells, box).ok:
                state = proposal
                break
    return SudokuSquare(state.grid(), box)


def _derangement(k: int, rng: np.random.Generator) -> np.ndarray:
    if k < 2:
        raise ValueError("derangements need at least 2 elements")
    while True:
        perm = rng.permutation(k)
        if not np.any(perm == np.arange(k)):
            return perm


def row_derangement(square: SudokuSquare, rng=None) -> SudokuSquare:
    """Permute rows so none stays put, preserving the box structure:
    bands are deranged, and rows within each band are deranged too when
    the band holds more than one row."""
    rng = ensure_rng(rng)
    h, w = square.box_type.h, square.box_type.w
    bands = w  # n / h
    beta = _derangement(bands, rng)
    perm = np.empty(square.order, dtype=np.int64)
    for p in range(bands):
        inner = _derangement(h, rng) if h >= 2 else np.zeros(1, dtype=np.int64)
        for j in range(h):
            perm[p * h + j] = beta[p] * h + inner[j]
    return SudokuSquare(square.cells[perm], square.box_type)
