"""Product constructions and intersection spectra.

The two products both build an order n*m square from order-n and order-m
ingredients, with rows and columns indexed by pairs (i, j) -> i*m + j:

* ``kronecker(l, m)``: entry ((i1, j1), (i2, j2)) = l(i1, i2)*m + m(j1, j2).
* ``triangle_product(l, fam)``: like kronecker, but the inner square may
  depend on the row bundle i1 and on the symbol k = l(i1, i2); the family
  member ``fam[i1][k]`` fills that block, offset by k*m.

``sudoku_reorder`` permutes the rows of such a product so that the result
is a Sudoku square of box type (n, m).

Spectra: ``latin_spectrum(n)`` is the set of achievable intersection sizes
of two order-n latin squares, ``sudoku_spectrum(h, w)`` the analogue for
box type (h, w), and ``upsilon(n)`` the near-full-free set
{0..n^2-6} + {n^2-4, n^2} they both eventually equal.

``decompose_target`` splits a Sudoku target t into h*h latin targets for
the block product; a handful of targets at w = 4 cannot be split and are
flagged ``SeedRequired``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .core import BoxType, LatinSquare, MalformedInputError, SudokuSquare


def kronecker(l: LatinSquare, m: LatinSquare) -> LatinSquare:
    """Kronecker-style product of latin squares, order l.order * m.order."""
    n_, m_ = l.order, m.order
    ones = np.ones((m_, m_), dtype=np.int64)
    out = np.kron(l.cells * m_, ones) + np.tile(m.cells, (n_, n_))
    return LatinSquare(out)


class SquareFamily:
    """An n-by-n array of order-m latin squares for the block product.

    ``members[i][k]`` is used for row bundle i and symbol k of the outer
    square.  Members are stored over symbols 0..m-1; the product applies
    the +k*m offset itself.
    """

    __slots__ = ("n", "m", "members")

    def __init__(self, members: Sequence[Sequence[LatinSquare]]):
        rows = tuple(tuple(row) for row in members)
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise MalformedInputError("family must be a nonempty n-by-n array of squares")
        m = rows[0][0].order
        for row in rows:
            for sq in row:
                if not isinstance(sq, LatinSquare):
                    raise MalformedInputError("family members must be LatinSquare")
                if sq.order != m:
                    raise MalformedInputError(
                        f"family members must share one order, got {sq.order} and {m}"
                    )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "members", rows)

    def __setattr__(self, name, value):
        raise AttributeError("SquareFamily is immutable")

    @classmethod
    def constant(cls, n: int, square: LatinSquare) -> "SquareFamily":
        return cls([[square] * n for _ in range(n)])

    def __getitem__(self, i: int) -> tuple[LatinSquare, ...]:
        return self.members[i]


def triangle_product(l: LatinSquare, fam: SquareFamily) -> LatinSquare:
    """Block product of an outer square with a family of inner squares."""
    if fam.n != l.order:
        raise MalformedInputError(f"family is {fam.n}x{fam.n}, outer square order {l.order}")
    n, m = l.order, fam.m
    out = np.empty((n * m, n * m), dtype=np.int64)
    for i1 in range(n):
        for i2 in range(n):
            k = int(l.cells[i1, i2])
            out[i1 * m : (i1 + 1) * m, i2 * m : (i2 + 1) * m] = fam.members[i1][k].cells + k * m
    # constructor re-checks the latin property
    return LatinSquare(out)


def reorder_permutation(n: int, m: int) -> np.ndarray:
    """Row permutation sending product row i*m + j to position j*n + i."""
    perm = np.empty(n * m, dtype=np.int64)
    for j in range(m):
        for i in range(n):
            perm[j * n + i] = i * m + j
    return perm


def sudoku_reorder(s: LatinSquare, n: int, m: int) -> SudokuSquare:
    """Reorder the rows of an order n*m product square into a Sudoku square
    of box type (n, m)."""
    if s.order != n * m:
        raise MalformedInputError(f"square order {s.order} is not {n}*{m}")
    perm = reorder_permutation(n, m)
    return SudokuSquare(LatinSquare(s.cells[perm]), BoxType(n, m))


def upsilon(n: int) -> frozenset[int]:
    """{0..n^2-6} + {n^2-4, n^2}: every value except the impossible
    near-full ones n^2-1, n^2-2, n^2-3, n^2-5.  Defined for n >= 3."""
    if n < 3:
        raise ValueError(f"upsilon(n) needs n >= 3, got {n}")
    return frozenset(range(n * n - 5)) | {n * n - 4, n * n}


def latin_spectrum(n: int) -> frozenset[int]:
    """Achievable |L ∩ L'| over pairs of order-n latin squares."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return frozenset({1})
    if n == 2:
        return frozenset({0, 4})
    if n == 3:
        return frozenset({0, 3, 9})
    if n == 4:
        return frozenset({0, 1, 2, 3, 4, 6, 8, 9, 12, 16})
    return upsilon(n)


def sudoku_spectrum(h: int, w: int) -> frozenset[int]:
    """Achievable |A ∩ B| over pairs of Sudoku squares of box type (h, w)."""
    if h < 2 or w < 2:
        raise ValueError(f"box type needs h, w >= 2, got {(h, w)}")
    if h == 2 and w == 2:
        return frozenset({0, 1, 2, 3, 4, 6, 8, 9, 12, 16})
    return upsilon(h * w)


FORBIDDEN_OFFSETS = (1, 2, 3, 5)


def forbidden_values(n: int) -> frozenset[int]:
    """Intersection sizes no pair of order-n squares can have (n >= 3)."""
    return frozenset(n * n - d for d in FORBIDDEN_OFFSETS)


@dataclass(frozen=True)
class Decomposition:
    """Latin targets for the h*h family slots, row-major over (i, k)."""

    t: int
    h: int
    w: int
    parts: tuple[int, ...]

    def __post_init__(self):
        spectrum = latin_spectrum(self.w)
        if len(self.parts) != self.h * self.h:
            raise MalformedInputError(f"need {self.h * self.h} parts, got {len(self.parts)}")
        if sum(self.parts) != self.t:
            raise MalformedInputError(f"parts sum to {sum(self.parts)}, target is {self.t}")
        for part in self.parts:
            if part not in spectrum:
                raise MalformedInputError(
                    f"part {part} is not an achievable order-{self.w} intersection"
                )


@dataclass(frozen=True)
class SeedRequired:
    """Marker: the target has no product decomposition and needs a stored
    seed pair (only happens at w = 4 for t in {n^2-6, n^2-9, n^2-11})."""

    t: int
    h: int
    w: int


# Splits r = k + l with k, l achievable at order 4, for the residues r
# in 0..16 that are not themselves achievable.
ORDER4_SPLITS = {
    5: (3, 2),
    7: (4, 3),
    10: (6, 4),
    11: (8, 3),
    13: (9, 4),
    14: (8, 6),
    15: (9, 6),
}

# Sudoku targets with no decomposition at w = 4: residues 5, 7, 10 off a
# single non-full slot, i.e. t = n^2 - 11, n^2 - 9, n^2 - 6.
SEED_RESIDUES = (5, 7, 10)


def decompose_target(t: int, h: int, w: int) -> Union[Decomposition, SeedRequired]:
    """Split a box-type (h, w) target t into h*h order-w latin targets.

    Writes t = q*w^2 + r and fills q full slots; the residue goes into one
    slot when achievable at order w, else into two (w = 4 splits, w >= 5
    uses w^2 - 6 plus a small remainder).  Requires t in the (h, w)
    spectrum and w >= 4.
    """
    if w < 4:
        raise ValueError(f"decomposition needs w >= 4, got {w}")
    if h < 2:
        raise ValueError(f"decomposition needs h >= 2, got {h}")
    n = h * w
    if t not in sudoku_spectrum(h, w):
        raise ValueError(f"target {t} is not achievable for box type {(h, w)}")
    slots = h * h
    spectrum = latin_spectrum(w)
    q, r = divmod(t, w * w)
    if q == slots:  # t = n^2, every slot full
        return Decomposition(t, h, w, (w * w,) * slots)
    if q == slots - 1:
        # t in upsilon(n) forces r achievable at order w here, except for
        # the three residues at w = 4 that need stored seeds
        if w == 4 and r in SEED_RESIDUES:
            return SeedRequired(t, h, w)
        if r not in spectrum:
            raise AssertionError(
                f"residue {r} unexpectedly unachievable at order {w} for target {t}"
            )
        return Decomposition(t, h, w, (w * w,) * q + (r,))
    tail = slots - q
    if r in spectrum:
        return Decomposition(t, h, w, (w * w,) * q + (r,) + (0,) * (tail - 1))
    if w == 4:
        k, l = ORDER4_SPLITS[r]
    else:
        s = r - (w * w - 6)
        if not 1 <= s <= 5:
            raise AssertionError(f"residue {r} out of expected range at order {w}")
        k, l = w * w - 6, s
    return Decomposition(t, h, w, (w * w,) * q + (k, l) + (0,) * (tail - 2))
