import json
import subprocess
import sys

import pytest

from polytile.cli import main, parse_size, run_bench


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestCheck:
    def test_tileable(self, capsys):
        assert run(capsys, "check", "--word", "urdl")[:2] == (0, "tileable\n")

    def test_not_tileable(self, capsys):
        assert run(capsys, "check", "--word", "uurdrurddlll")[:2] == (2, "not tileable\n")

    def test_invalid_word(self, capsys):
        code, _, err = run(capsys, "check", "--word", "uu")
        assert code == 1 and "not closed" in err

    def test_needs_one_source(self, capsys, tmp_path):
        assert run(capsys, "check")[0] == 1
        f = tmp_path / "w.txt"
        f.write_text("urdl\n")
        assert run(capsys, "check", "--word", "urdl", "--word-file", str(f))[0] == 1

    def test_word_file_with_comments(self, capsys, tmp_path):
        f = tmp_path / "w.txt"
        f.write_text("# bar\nu r^3\nd l^3  # tail\n", encoding="utf-8")
        assert run(capsys, "check", "--word-file", str(f))[0] == 0

    def test_cells_file(self, capsys, tmp_path):
        f = tmp_path / "cells.txt"
        f.write_text("0 0\n1 0\n2 0\n0 1\n2 1\n", encoding="utf-8")
        assert run(capsys, "check", "--cells-file", str(f))[0] == 2

    def test_missing_file(self, capsys):
        assert run(capsys, "check", "--word-file", "/nonexistent/w.txt")[0] == 1

    def test_usage_error_exit_code(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 1


class TestEnumerate:
    def test_json_schema(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--word", "urdl")
        data = json.loads(out)
        assert code == 0
        assert list(data) == ["word", "n", "factorizations", "factorization_count", "tiling_count"]
        (rec,) = data["factorizations"]
        assert list(rec) == ["A", "B", "C", "tA", "tB", "tC", "lattice"]
        assert rec["A"] == {"start": 1, "len": 1, "text": "u"}
        assert rec["B"]["text"] == "r" and rec["C"]["len"] == 0
        assert rec["lattice"] == [[1, 0], [0, 1]]

    def test_domino_tilings(self, capsys):
        data = json.loads(run(capsys, "enumerate", "--word", "urrdll")[1])
        assert data["tiling_count"] == 2

    def test_empty(self, capsys):
        data = json.loads(run(capsys, "enumerate", "--word", "uurdrurddlll")[1])
        assert data["factorizations"] == [] and data["tiling_count"] == 0

    def test_text(self, capsys):
        out = run(capsys, "enumerate", "--word", "urrdll", "--format", "text")[1]
        assert out == "u|r|r @ (-2,0) (-1,1)\nu|rr|ε @ (-2,0) (0,1)\n"

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "e.json"
        run(capsys, "enumerate", "--word", "urdl", "--out", str(target))
        assert json.loads(target.read_text(encoding="utf-8"))["n"] == 4


class TestRender:
    def test_paths(self, capsys, tmp_path):
        target = tmp_path / "p.svg"
        assert run(capsys, "render", "--word", "urrdll", "--index", "0", "--radius", "1", "--out", str(target))[0] == 0
        assert target.read_text(encoding="utf-8").count("<path") == 9

    def test_index_out_of_range(self, capsys):
        assert run(capsys, "render", "--word", "urrdll", "--index", "5")[0] == 1

    def test_byte_identical(self, capsys, tmp_path):
        a, b = tmp_path / "a.svg", tmp_path / "b.svg"
        for target in (a, b):
            run(capsys, "render", "--word", "ururdrdlll", "--radius", "2", "--out", str(target))
        assert a.read_bytes() == b.read_bytes()


def test_factors(capsys):
    data = json.loads(run(capsys, "factors", "--word", "urrdll")[1])
    assert len(data["admissible"]) == 8
    assert {"center": {"kind": "even", "pos": 2}, "start": 2, "len": 2, "text": "rr", "partner": 5} in data["admissible"]


class TestOracle:
    def test_area_one(self, capsys):
        code, out, _ = run(capsys, "oracle", "--max-area", "1")
        assert code == 0 and out == "1 shapes checked, 0 diffs\n"

    def test_mutation_fails(self, capsys):
        code, out, err = run(capsys, "oracle", "--max-area", "3", "--mutate", "square-pass")
        assert code != 0 and not out.endswith(" 0 diffs\n") and err

    def test_lr_mutation_fails(self, capsys):
        assert run(capsys, "oracle", "--max-area", "2", "--mutate", "lr-check")[0] != 0

    def test_bad_area(self, capsys):
        assert run(capsys, "oracle", "--max-area", "9")[0] == 1

    def test_parallel_matches_serial(self, capsys, monkeypatch):
        serial = run(capsys, "oracle", "--max-area", "5")
        monkeypatch.setenv("POLYTILE_THREADS", "2")
        assert run(capsys, "oracle", "--max-area", "5") == serial

    def test_bad_threads(self, capsys, monkeypatch):
        monkeypatch.setenv("POLYTILE_THREADS", "many")
        assert run(capsys, "oracle", "--max-area", "1")[0] == 1


class TestGen:
    def test_bar(self, capsys):
        assert run(capsys, "gen", "bar", "3")[1] == "urrrdlll\n"

    def test_fig2(self, capsys):
        assert run(capsys, "gen", "fig2")[1].splitlines()[0] == "ururdrurdddluldlul"

    def test_random_round_trip(self, capsys, tmp_path):
        out = run(capsys, "gen", "random-tileable", "25", "--seed", "9")[1]
        assert out.splitlines()[1].startswith("# witness ")
        f = tmp_path / "w.txt"
        f.write_text(out, encoding="utf-8")
        assert run(capsys, "check", "--word-file", str(f))[0] == 0

    def test_unknown(self):
        with pytest.raises(SystemExit):
            main(["gen", "spiral"])


class TestBench:
    def test_sizes(self):
        assert parse_size("2^16") == 65536
        assert parse_size("128") == 128

    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "bench", "2^8", "2^9", "--repeat", "1")
        assert code == 0 and "fitted exponent" in out

    def test_json(self, capsys):
        data = json.loads(run(capsys, "bench", "64", "128", "--repeat", "1", "--format", "json", "--family", "random-tileable")[1])
        assert [r["n"] for r in data["rows"]] == [64, 128]
        assert data["rows"][1]["ratio"] is not None

    def test_descending_rejected(self, capsys):
        assert run(capsys, "bench", "2^9", "2^8")[0] == 1

    def test_run_bench_counts(self):
        res = run_bench([16, 32], repeat=1)
        assert [r["factorizations"] for r in res["rows"]] == [7, 15]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "polytile", "check", "--word", "urdl"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "tileable\n"
