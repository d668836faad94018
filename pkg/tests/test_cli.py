"""CLI surface: verbs, exit codes, file round-trips, determinism."""

import io
import json
import sys

import pytest

from zarpair.cli import run
from zarpair.combinatorics import Combinatorics, ordered_equal
from zarpair.realization import Arrangement


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def invoke_json(capsys, *argv):
    code, out, err = invoke(capsys, *argv)
    return code, json.loads(out) if out.strip() else None, err


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj), encoding="utf-8")
    return str(path)


@pytest.fixture()
def seed_file(tmp_path, capsys):
    code, out, _ = invoke(capsys, "catalog", "ledger-seed")
    assert code == 0
    path = tmp_path / "seed.json"
    path.write_text(out, encoding="utf-8")
    return str(path)


class TestCatalog:
    @pytest.mark.parametrize(
        "name",
        [
            "ext-maclane-comb",
            "maclane-comb",
            "ext-maclane+",
            "ext-maclane-",
            "xi-maclane",
            "rybnikov-comb",
            "ledger-seed",
        ],
    )
    def test_every_name_emits_json(self, capsys, name):
        code, obj, err = invoke_json(capsys, "catalog", name)
        assert code == 0
        assert obj is not None

    def test_unknown_name_is_usage_error(self, capsys):
        code, _, _ = invoke(capsys, "catalog", "nonsense")
        assert code == 2

    def test_deterministic_bytes(self, capsys):
        _, first, _ = invoke(capsys, "catalog", "rybnikov-comb")
        _, second, _ = invoke(capsys, "catalog", "rybnikov-comb")
        assert first == second


class TestValidate:
    def test_valid_input(self, capsys, tmp_path):
        path = write(
            tmp_path, "tri.json", {"lines": ["A", "B", "C"], "points": [[1, 2], [1, 3], [2, 3]]}
        )
        code, obj, _ = invoke_json(capsys, "validate", path)
        assert code == 0
        assert obj == {"valid": True, "problems": []}

    def test_invalid_input_exits_one(self, capsys, tmp_path):
        path = write(
            tmp_path, "bad.json", {"lines": ["A", "B", "C"], "points": [[1, 2], [1, 3]]}
        )
        code, obj, _ = invoke_json(capsys, "validate", path)
        assert code == 1
        assert not obj["valid"]
        assert obj["problems"]

    def test_garbage_exits_two(self, capsys, tmp_path):
        path = tmp_path / "garbage.json"
        path.write_text("{not json", encoding="utf-8")
        code, _, err = invoke(capsys, "validate", str(path))
        assert code == 2
        assert "error" in err


class TestDerive:
    def test_pipe_equals_catalog_combinatorics(self, capsys, monkeypatch):
        code, arr_text, _ = invoke(capsys, "catalog", "rybnikov+")
        assert code == 0
        monkeypatch.setattr(sys, "stdin", io.StringIO(arr_text))
        code, derived, _ = invoke(capsys, "derive", "-")
        assert code == 0
        code, explicit, _ = invoke(capsys, "catalog", "rybnikov-comb")
        assert derived == explicit  # byte-identical output

    def test_output_file(self, capsys, tmp_path):
        code, arr_text, _ = invoke(capsys, "catalog", "ext-maclane+")
        src = tmp_path / "arr.json"
        src.write_text(arr_text, encoding="utf-8")
        out = tmp_path / "comb.json"
        code, _, _ = invoke(capsys, "derive", str(src), "-o", str(out))
        assert code == 0
        derived = Combinatorics.from_obj(json.loads(out.read_text()))
        assert derived.n_lines == 9


class TestAut:
    def test_order_and_stats(self, capsys, tmp_path):
        code, comb_text, _ = invoke(capsys, "catalog", "ext-maclane-comb")
        path = tmp_path / "cm.json"
        path.write_text(comb_text, encoding="utf-8")
        code, obj, _ = invoke_json(capsys, "aut", str(path), "--stats", "--elements")
        assert code == 0
        assert obj["order"] == 12
        assert obj["stats"]["element_order_histogram"] == {
            "1": 1, "2": 7, "3": 2, "6": 2
        }
        assert "id" in obj["elements"]
        assert len(obj["elements"]) == 12


class TestInnerCyclic:
    def test_catalog_pair_passes_both_modes(self, capsys, tmp_path):
        _, comb_text, _ = invoke(capsys, "catalog", "ext-maclane-comb")
        _, char_text, _ = invoke(capsys, "catalog", "xi-maclane")
        comb = tmp_path / "cm.json"
        comb.write_text(comb_text, encoding="utf-8")
        char = tmp_path / "xi.json"
        char.write_text(char_text, encoding="utf-8")
        code, obj, _ = invoke_json(
            capsys, "inner-cyclic", str(comb), str(char), "--cycle", "1,2,3",
            "--mode", "both",
        )
        assert code == 0
        assert obj == {"def": True, "remark": True}

    def test_failing_character_exits_one(self, capsys, tmp_path):
        _, comb_text, _ = invoke(capsys, "catalog", "ext-maclane-comb")
        comb = tmp_path / "cm.json"
        comb.write_text(comb_text, encoding="utf-8")
        char = write(
            tmp_path, "bad.json", {"modulus": 3, "exponents": [1, 2, 0, 0, 0, 0, 0, 0, 0]}
        )
        code, obj, _ = invoke_json(
            capsys, "inner-cyclic", str(comb), char, "--cycle", "1,2,3"
        )
        assert code == 1
        assert obj == {"def": False, "remark": False}

    def test_bad_cycle_argument(self, capsys, tmp_path):
        _, comb_text, _ = invoke(capsys, "catalog", "ext-maclane-comb")
        comb = tmp_path / "cm.json"
        comb.write_text(comb_text, encoding="utf-8")
        char = write(
            tmp_path, "triv.json", {"modulus": 1, "exponents": [0] * 9}
        )
        code, _, err = invoke(capsys, "inner-cyclic", str(comb), char, "--cycle", "1,2")
        assert code == 2


class TestGlue:
    def test_glue_and_report(self, capsys, tmp_path):
        _, left_text, _ = invoke(capsys, "catalog", "ext-maclane+")
        _, right_text, _ = invoke(capsys, "catalog", "ext-maclane-")
        left = tmp_path / "mp.json"
        left.write_text(left_text, encoding="utf-8")
        right = tmp_path / "mm.json"
        right.write_text(right_text, encoding="utf-8")
        report = tmp_path / "report.json"
        code, obj, _ = invoke_json(
            capsys, "glue", str(left), str(right), "--report", str(report)
        )
        assert code == 0
        glued = Arrangement.from_obj(obj)
        assert glued.n_lines == 15
        report_obj = json.loads(report.read_text())
        assert report_obj["shared_count"] == 3
        assert report_obj["checks"] == {"gluing": True, "generic": True}
        assert report_obj["parameter"] is not None

    def test_exhausted_budget_is_an_error(self, capsys, tmp_path):
        _, left_text, _ = invoke(capsys, "catalog", "ext-maclane+")
        left = tmp_path / "mp.json"
        left.write_text(left_text, encoding="utf-8")
        code, _, err = invoke(
            capsys, "glue", str(left), str(left), "--max-candidates", "0"
        )
        assert code == 2
        assert "error" in err

    def test_glue_comb(self, capsys, tmp_path):
        _, comb_text, _ = invoke(capsys, "catalog", "ext-maclane-comb")
        path = tmp_path / "cm.json"
        path.write_text(comb_text, encoding="utf-8")
        code, obj, _ = invoke_json(capsys, "glue-comb", str(path), str(path))
        assert code == 0
        glued = Combinatorics.from_obj(obj)
        _, explicit_text, _ = invoke(capsys, "catalog", "rybnikov-comb")
        assert ordered_equal(glued, Combinatorics.from_obj(json.loads(explicit_text)))


class TestInvariantCommands:
    def test_glue_derivation(self, capsys, seed_file):
        code, obj, _ = invoke_json(
            capsys, "invariant", "glue",
            "--ledger", seed_file, "--left", "M+", "--right", "M+", "--id", "R+",
        )
        assert code == 0
        assert obj["id"] == "R+"
        assert obj["value"] == "z"
        assert obj["provenance"].startswith("multiplicativity")

    def test_conj_derivation(self, capsys, seed_file):
        code, obj, _ = invoke_json(
            capsys, "invariant", "conj", "--ledger", seed_file, "--entry", "M+"
        )
        assert code == 0
        assert obj["value"] == "z"

    def test_missing_entry_errors(self, capsys, seed_file):
        code, _, err = invoke(
            capsys, "invariant", "conj", "--ledger", seed_file, "--entry", "nope"
        )
        assert code == 2


class TestZariski:
    def test_positive_verdict(self, capsys, seed_file):
        code, obj, _ = invoke_json(
            capsys, "zariski", "--ledger", seed_file, "--entry", "M+"
        )
        assert code == 0
        assert obj["verdict"] == "ordered_zariski_pair"
        assert obj["values"] == ["z", "1"]

    def test_aut_trivial_upgrade(self, capsys, seed_file):
        code, obj, _ = invoke_json(
            capsys, "zariski", "--ledger", seed_file, "--entry", "M+", "--aut-trivial"
        )
        assert code == 0
        assert obj["verdict"] == "zariski_pair"

    def test_inconclusive_exits_one(self, capsys, tmp_path, seed_file):
        # doctor the seed: a real value (1) for the M+ entry
        entries = json.loads(open(seed_file).read())
        entries[0]["value"] = "1"
        path = write(tmp_path, "real.json", entries)
        entry_id = entries[0]["id"]
        code, obj, _ = invoke_json(capsys, "zariski", "--ledger", path, "--entry", entry_id)
        assert code == 1
        assert obj["verdict"] == "inconclusive"


class TestUsage:
    def test_no_command_is_usage_error(self, capsys):
        assert invoke(capsys, )[0] == 2

    def test_unknown_flag_rejected(self, capsys):
        assert invoke(capsys, "catalog", "ext-maclane-comb", "--frobnicate")[0] == 2

    def test_help_exits_zero(self, capsys):
        assert invoke(capsys, "--help")[0] == 0


class TestRoundTrips:
    @pytest.mark.parametrize(
        "name", ["ext-maclane-comb", "maclane-comb", "rybnikov-comb"]
    )
    def test_combinatorics_reparse(self, capsys, name):
        _, text, _ = invoke(capsys, "catalog", name)
        comb = Combinatorics.from_obj(json.loads(text))
        assert json.dumps(comb.to_obj(), indent=2) + "\n" == text

    @pytest.mark.parametrize("name", ["ext-maclane+", "ext-maclane-", "rybnikov+"])
    def test_arrangement_reparse(self, capsys, name):
        _, text, _ = invoke(capsys, "catalog", name)
        arr = Arrangement.from_obj(json.loads(text))
        assert json.dumps(arr.to_obj(), indent=2) + "\n" == text
