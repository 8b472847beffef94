"""Realize any achievable intersection value with an explicit pair of
squares, plus the machinery behind it.

``realize_sudoku_pair(h, w, t)`` dispatches by box type:

* (2,2), (2,3), (3,3) and their transposes come straight from the seed
  fixtures, which witness those complete spectra;
* at box width 4, the three targets n^2-6, n^2-9, n^2-11 have no product
  decomposition and also come from seeds;
* everything else splits t into h*h order-w latin targets
  (``decompose_target``) realized by ``realize_latin_pair``, assembled
  with the block product over a common outer square, and reordered into
  Sudoku form.  Intersections add across family slots, so the assembled
  pair meets the target exactly; the result is re-verified anyway.

``realize_latin_pair(w, s)`` is a depth-first search for a second square
at prescribed agreement with a base square, steering candidate order
toward or away from agreement depending on the remaining quota.  Base
squares fall back from the cyclic square through random squares to, at
small orders, every square up to relabelling, so the search is complete
where enumeration is feasible.  Found pairs go into a memo cache,
optionally persisted as a JSON file.
"""
from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass

import numpy as np

from .construct import (
    Decomposition,
    SeedRequired,
    decompose_target,
    forbidden_values,
    latin_spectrum,
    sudoku_spectrum,
    SquareFamily,
    sudoku_reorder,
    triangle_product,
)
from .core import (
    BoxType,
    LatinSquare,
    SudokuSquare,
    cyclic_square,
    intersection_size,
)
from .formats import canonical_json
from .markov import ensure_rng, random_latin_square
from .seeds import DATABASE, SeedDatabase


class SpectrumError(ValueError):
    """Requested intersection value is not achievable."""


class RealizationError(RuntimeError):
    """The search gave up; with default budgets this indicates a bug for
    any value inside the spectrum."""


class CertificateError(AssertionError):
    pass


DEFAULT_MAX_ORDER = 144

SEED_ONLY_TYPES = {(2, 2), (2, 3), (3, 3)}


def _describe_values(allowed: frozenset[int]) -> str:
    vals = sorted(allowed)
    runs = []
    start = prev = vals[0]
    for v in vals[1:] + [None]:
        if v is not None and v == prev + 1:
            prev = v
            continue
        runs.append(str(start) if start == prev else f"{start}..{prev}")
        if v is not None:
            start = prev = v
    return ", ".join(runs)


def _spectrum_message(value: int, n: int, allowed: frozenset[int], what: str) -> str:
    msg = f"{value} is not an achievable intersection for {what}"
    if n >= 3 and value in forbidden_values(n):
        excluded = sorted(forbidden_values(n))
        msg += (
            f"; no two distinct order-{n} latin squares can agree on "
            f"n^2-1, n^2-2, n^2-3, or n^2-5 cells (= {excluded[3]}, {excluded[2]}, "
            f"{excluded[1]}, {excluded[0]})"
        )
    else:
        msg += f"; achievable values are {_describe_values(allowed)}"
    return msg


class PairCache:
    """Memo cache for realized latin pairs, keyed by (order, target).

    With a path, the cache round-trips through a canonical JSON file;
    entries failing validation on load are dropped silently (the cache is
    advisory, searches recompute what it cannot supply).
    """

    def __init__(self, path: str | os.PathLike | None = None):
        self.path = os.fspath(path) if path is not None else None
        self._lock = threading.RLock()
        self._mem: dict[tuple[int, int], tuple[LatinSquare, LatinSquare]] = {}
        if self.path is not None and os.path.exists(self.path):
            self._load()

    def _load(self) -> None:
        with open(self.path) as f:
            raw = json.load(f)
        for key, (rows_a, rows_b) in raw.items():
            try:
                w_str, s_str = key.split(":")
                w, s = int(w_str), int(s_str)
                a, b = LatinSquare(rows_a), LatinSquare(rows_b)
                if a.order == w and intersection_size(a, b) == s:
                    self._mem[(w, s)] = (a, b)
            except (ValueError, TypeError):
                continue

    def _save(self) -> None:
        payload = {
            f"{w}:{s}": [[list(map(int, row)) for row in a.cells.tolist()],
                          [list(map(int, row)) for row in b.cells.tolist()]]
            for (w, s), (a, b) in sorted(self._mem.items())
        }
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(self.path) or ".", suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as f:
                f.write(canonical_json(payload))
            os.replace(tmp, self.path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get(self, w: int, s: int) -> tuple[LatinSquare, LatinSquare] | None:
        with self._lock:
            return self._mem.get((w, s))

    def put(self, w: int, s: int, pair: tuple[LatinSquare, LatinSquare]) -> None:
        with self._lock:
            self._mem[(w, s)] = pair
            if self.path is not None:
                self._save()

    def __len__(self) -> int:
        with self._lock:
            return len(self._mem)


DEFAULT_PAIR_CACHE = PairCache()


class _BudgetExceeded(Exception):
    pass


def _search_second(a_flat: list[int], w: int, s: int, budget: int) -> list[int] | None:
    """Depth-first search for a latin square agreeing with ``a`` in
    exactly s cells.  Returns its flat cell list, or None if the subtree
    under this base square is exhausted.  Raises _BudgetExceeded when the
    node budget runs out."""
    total = w * w
    full = (1 << w) - 1
    row_masks = [0] * w
    col_masks = [0] * w
    b = [0] * total
    nodes = 0
    agreed = 0

    def go(pos: int) -> bool:
        nonlocal nodes, agreed
        if pos == total:
            return agreed == s
        r, c = divmod(pos, w)
        avail = full & ~row_masks[r] & ~col_masks[c]
        if not avail:
            return False
        rem_after = total - pos - 1
        need = s - agreed
        agree_bit = (1 << a_flat[pos]) & avail
        order = []
        rest = avail & ~agree_bit
        # behind quota: try the agreeing symbol first, else last
        if agree_bit and 2 * need >= total - pos:
            order.append(agree_bit)
        while rest:
            bit = rest & -rest
            rest ^= bit
            order.append(bit)
        if agree_bit and 2 * need < total - pos:
            order.append(agree_bit)
        for bit in order:
            agree = 1 if bit == agree_bit else 0
            new_agreed = agreed + agree
            if new_agreed > s or new_agreed + rem_after < s:
                continue
            nodes += 1
            if nodes > budget:
                raise _BudgetExceeded
            b[pos] = bit.bit_length() - 1
            row_masks[r] |= bit
            col_masks[c] |= bit
            agreed = new_agreed
            if go(pos + 1):
                return True
            row_masks[r] ^= bit
            col_masks[c] ^= bit
            agreed = new_agreed - agree
        return False

    import sys

    limit = sys.getrecursionlimit()
    if total + 100 > limit:
        sys.setrecursionlimit(total + 200)
    try:
        return b if go(0) else None
    finally:
        sys.setrecursionlimit(limit)


_KLEIN4 = ((0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0))

_ENUM_FALLBACK_MAX_ORDER = 6


def _base_squares(w: int, rng, round_no: int):
    """Base squares to anchor the pair search, roughly cheapest first."""
    yield cyclic_square(w)
    if w == 4:
        yield LatinSquare(_KLEIN4)
    for _ in range(4 * (round_no + 1)):
        yield random_latin_square(w, rng)
    if round_no >= 1 and w <= _ENUM_FALLBACK_MAX_ORDER:
        from .enumeration import enumerate_squares

        for flat in enumerate_squares(w, None, first_row_fixed=True):
            yield LatinSquare(flat.reshape(w, w))


def realize_latin_pair(
    w: int,
    s: int,
    rng=None,
    *,
    cache: PairCache | None = None,
    node_budget: int = 200_000,
) -> tuple[LatinSquare, LatinSquare]:
    """Two order-w latin squares meeting in exactly s cells."""
    if w < 1:
        raise ValueError(f"order must be positive, got {w}")
    spectrum = latin_spectrum(w)
    if s not in spectrum:
        raise SpectrumError(_spectrum_message(s, w, spectrum, f"order-{w} latin squares"))
    if cache is None:
        cache = DEFAULT_PAIR_CACHE
    hit = cache.get(w, s)
    if hit is not None:
        return hit
    if s == w * w:
        a = cyclic_square(w)
        pair = (a, a)
        cache.put(w, s, pair)
        return pair
    rng = ensure_rng(rng)
    budget = node_budget
    for round_no in range(5):
        seen: set[LatinSquare] = set()
        for a in _base_squares(w, rng, round_no):
            if a in seen:
                continue
            seen.add(a)
            try:
                found = _search_second(a.cells.ravel().tolist(), w, s, budget)
            except _BudgetExceeded:
                continue
            if found is not None:
                b = LatinSquare(np.array(found, dtype=np.int64).reshape(w, w))
                assert intersection_size(a, b) == s
                pair = (a, b)
                cache.put(w, s, pair)
                return pair
        budget *= 4
    raise RealizationError(
        f"no pair of order-{w} squares with intersection {s} found within budget; "
        f"this value is achievable, so raise node_budget"
    )


@dataclass(frozen=True)
class RealizationCertificate:
    """A realized pair plus how it was obtained.  ``verify`` recomputes
    the claim from scratch."""

    a: SudokuSquare
    b: SudokuSquare
    target: int
    method: str  # "seed" | "product"

    def verify(self) -> int:
        if self.a.box_type != self.b.box_type:
            raise CertificateError("pair has mismatched box types")
        actual = intersection_size(self.a, self.b)
        if actual != self.target:
            raise CertificateError(f"pair meets in {actual} cells, claimed {self.target}")
        return actual

    def to_json(self) -> str:
        return canonical_json(
            {
                "h": self.a.box_type.h,
                "w": self.a.box_type.w,
                "target": self.target,
                "method": self.method,
                "a": [list(map(int, r)) for r in self.a.cells.tolist()],
                "b": [list(map(int, r)) for r in self.b.cells.tolist()],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "RealizationCertificate":
        obj = json.loads(text)
        box = BoxType(int(obj["h"]), int(obj["w"]))
        cert = cls(
            SudokuSquare(obj["a"], box),
            SudokuSquare(obj["b"], box),
            int(obj["target"]),
            str(obj["method"]),
        )
        cert.verify()
        return cert


def _seed_pair(h: int, w: int, t: int, db: SeedDatabase) -> tuple[SudokuSquare, SudokuSquare]:
    seed_set = db.get(h, w)
    return seed_set.pair_for(t)


def realize_sudoku_pair(
    h: int,
    w: int,
    t: int,
    rng=None,
    *,
    cache: PairCache | None = None,
    seed_db: SeedDatabase = DATABASE,
    max_order: int = DEFAULT_MAX_ORDER,
) -> RealizationCertificate:
    """A certificate pair of box type (h, w) Sudoku squares meeting in
    exactly t cells, for any achievable t."""
    if h < 2 or w < 2:
        raise ValueError(f"box type needs h, w >= 2, got {(h, w)}")
    n = h * w
    if n > max_order:
        raise ValueError(f"order {n} exceeds the configured limit {max_order}")
    spectrum = sudoku_spectrum(h, w)
    if t not in spectrum:
        raise SpectrumError(_spectrum_message(t, n, spectrum, f"box type ({h}, {w})"))

    if (h, w) in SEED_ONLY_TYPES or (w, h) in SEED_ONLY_TYPES:
        if (h, w) in SEED_ONLY_TYPES:
            a, b = _seed_pair(h, w, t, seed_db)
        else:
            a, b = _seed_pair(w, h, t, seed_db)
            a, b = a.transposed(), b.transposed()
        cert = RealizationCertificate(a, b, t, "seed")
        cert.verify()
        return cert

    hh, ww = (h, w) if w >= h else (w, h)
    flip = (hh, ww) != (h, w)

    dec = decompose_target(t, hh, ww)
    if isinstance(dec, SeedRequired):
        a, b = _seed_pair(hh, 4, t, seed_db)
        method = "seed"
    else:
        assert isinstance(dec, Decomposition)
        outer = cyclic_square(hh)
        members_a = []
        members_b = []
        for i in range(hh):
            row_a = []
            row_b = []
            for k in range(hh):
                part = dec.parts[i * hh + k]
                pa, pb = realize_latin_pair(ww, part, rng, cache=cache)
                row_a.append(pa)
                row_b.append(pb)
            members_a.append(row_a)
            members_b.append(row_b)
        fam_a = SquareFamily(members_a)
        fam_b = SquareFamily(members_b)
        a = sudoku_reorder(triangle_product(outer, fam_a), hh, ww)
        b = sudoku_reorder(triangle_product(outer, fam_b), hh, ww)
        method = "product"
    if flip:
        a, b = a.transposed(), b.transposed()
    cert = RealizationCertificate(a, b, t, method)
    cert.verify()
    return cert
