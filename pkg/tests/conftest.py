"""Shared fixtures.

The expensive artifacts (exhaustive spectra, the 5x5 cage census) are computed
once per session and handed to every test that needs them, together with the
wall-clock time the computation took so the timing budgets can be asserted
no matter which test triggered the work.
"""

import time
from dataclasses import dataclass
from typing import Any

import pytest


@dataclass(frozen=True)
class Timed:
    value: Any
    elapsed: float


@pytest.fixture(scope="session")
def latin_brute_reports():
    from sudoku_spectra.enumeration import brute_force_latin_spectrum

    t0 = time.perf_counter()
    reports = {n: brute_force_latin_spectrum(n) for n in (1, 2, 3, 4)}
    return Timed(reports, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def sudoku_22_report():
    from sudoku_spectra.enumeration import brute_force_spectrum

    t0 = time.perf_counter()
    report = brute_force_spectrum(2, 2)
    return Timed(report, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def sudoku_23_report():
    from sudoku_spectra.enumeration import brute_force_spectrum

    t0 = time.perf_counter()
    report = brute_force_spectrum(2, 3)
    return Timed(report, time.perf_counter() - t0)


@pytest.fixture(scope="session")
def census():
    from sudoku_spectra.pentadoku import classify_all

    t0 = time.perf_counter()
    report = classify_all()
    return Timed(report, time.perf_counter() - t0)
