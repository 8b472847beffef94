"""End-to-end command line behavior, run in process."""

import json

import pytest

from sudoku_spectra.cli import main
from sudoku_spectra.core import BoxType
from sudoku_spectra.formats import parse, serialize
from sudoku_spectra.markov import sample_sudoku
from sudoku_spectra.spectrum import RealizationCertificate


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as e:
        main(["--version"])
    assert e.value.code == 0
    assert "sudoku-spectra" in capsys.readouterr().out


def test_unknown_command_exits_with_usage_error():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_realize_prints_verified_value(capsys):
    rc, out, err = run(capsys, "realize", "--h", "2", "--w", "3", "--t", "19")
    assert rc == 0
    assert out.strip() == "19"


def test_realize_writes_certificate(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    rc, out, _ = run(
        capsys, "realize", "--h", "2", "--w", "4", "--t", "40",
        "--out", str(cert_path), "--seed", "5",
    )
    assert rc == 0 and out.strip() == "40"
    cert = RealizationCertificate.from_json(cert_path.read_text())
    assert cert.target == 40
    assert cert.a.box_type == BoxType(2, 4)


def test_realize_cache_file_round_trip(tmp_path, capsys):
    cache_path = tmp_path / "cache.json"
    args = ("realize", "--h", "2", "--w", "5", "--t", "73", "--cache", str(cache_path))
    rc, out, _ = run(capsys, *args)
    assert rc == 0 and out.strip() == "73"
    first = json.loads(cache_path.read_text())
    rc, out, _ = run(capsys, *args)  # second run hits the cache
    assert rc == 0 and out.strip() == "73"
    assert json.loads(cache_path.read_text()) == first


def test_realize_impossible_value_exits_2(capsys):
    rc, out, err = run(capsys, "realize", "--h", "2", "--w", "2", "--t", "5")
    assert rc == 2
    assert out == ""
    assert "not an achievable intersection" in err


def test_realize_near_full_message_names_the_gaps(capsys):
    rc, _, err = run(capsys, "realize", "--h", "2", "--w", "3", "--t", "35")
    assert rc == 2
    assert "n^2-1" in err and "35" in err


def test_realize_over_order_limit_exits_1(capsys):
    rc, _, err = run(capsys, "realize", "--h", "2", "--w", "3", "--t", "0",
                     "--max-order", "5")
    assert rc == 1
    assert "error" in err


def test_verify_all_styles(tmp_path, capsys):
    a = sample_sudoku(2, 3, 7)
    b = sample_sudoku(2, 3, 8)
    for style in ("single_line", "grid", "json"):
        pa, pb = tmp_path / f"a.{style}", tmp_path / f"b.{style}"
        pa.write_text(serialize(a, style) + "\n")
        pb.write_text(serialize(b, style) + "\n")
        rc, out, _ = run(capsys, "verify", str(pa), str(pb), "--h", "2", "--w", "3")
        assert rc == 0
        lines = out.strip().splitlines()
        assert "valid" in lines[0]
        value = int(lines[-1])
        assert 0 <= value <= 36
        # explicit style agrees with auto sniffing
        rc2, out2, _ = run(capsys, "verify", str(pa), str(pb),
                           "--h", "2", "--w", "3", "--style", style)
        assert rc2 == 0 and out2 == out


def test_verify_rejects_invalid_square(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("012345|012345|012345|012345|012345|012345\n")
    good = tmp_path / "good.txt"
    good.write_text(serialize(sample_sudoku(2, 3, 1), "single_line") + "\n")
    rc, _, err = run(capsys, "verify", str(bad), str(good), "--h", "2", "--w", "3")
    assert rc == 1
    assert "error" in err


def test_verify_missing_file_exits_1(tmp_path, capsys):
    good = tmp_path / "good.txt"
    good.write_text(serialize(sample_sudoku(2, 3, 1), "single_line") + "\n")
    rc, _, err = run(capsys, "verify", str(tmp_path / "nope.txt"), str(good),
                     "--h", "2", "--w", "3")
    assert rc == 1
    assert "error" in err


def test_spectrum_theorem_mode(capsys):
    rc, out, _ = run(capsys, "spectrum", "--h", "2", "--w", "3")
    assert rc == 0
    values = list(map(int, out.split()))
    assert values == sorted(set(range(31)) | {32, 36})


def test_spectrum_brute_mode(capsys):
    rc, out, err = run(capsys, "spectrum", "--h", "2", "--w", "2", "--mode", "brute")
    assert rc == 0
    assert list(map(int, out.split())) == [0, 1, 2, 3, 4, 6, 8, 9, 12, 16]
    assert "288 squares" in err


def test_spectrum_brute_mode_bounds(capsys):
    rc, _, err = run(capsys, "spectrum", "--h", "3", "--w", "3", "--mode", "brute")
    assert rc == 1
    assert "error" in err


def test_spectrum_seeds_mode(capsys):
    rc, out, err = run(capsys, "spectrum", "--h", "3", "--w", "3", "--mode", "seeds")
    assert rc == 0
    values = list(map(int, out.split()))
    assert values == sorted(set(range(76)) | {77, 81})
    assert "full spectrum" in err


def test_sample_is_deterministic_and_parseable(capsys):
    rc, out1, _ = run(capsys, "sample", "--h", "3", "--w", "3", "--seed", "11")
    rc2, out2, _ = run(capsys, "sample", "--h", "3", "--w", "3", "--seed", "11")
    assert rc == rc2 == 0
    assert out1 == out2
    parse(out1.strip(), BoxType(3, 3), "single_line")


def test_sample_grid_format_and_drift(capsys):
    rc, out, _ = run(capsys, "sample", "--h", "2", "--w", "4", "--seed", "3",
                     "--steps", "4", "--format", "grid")
    assert rc == 0
    parse(out, BoxType(2, 4), "grid")


def test_pentadoku_to_file(tmp_path, capsys):
    out_path = tmp_path / "census.csv"
    rc, out, _ = run(capsys, "pentadoku", "--out", str(out_path))
    assert rc == 0
    assert out.strip() == "4 58 44 1"
    body = [ln for ln in out_path.read_text().splitlines() if not ln.startswith("#")]
    assert len(body) == 108  # header + one row per tiling


def test_pentadoku_json_to_stdout(capsys):
    rc, out, err = run(capsys, "pentadoku", "--format", "json")
    assert rc == 0
    assert err.strip() == "4 58 44 1"
    obj = json.loads(out)
    assert len(obj["tilings"]) == 107
