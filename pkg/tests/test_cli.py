import json

import pytest

from boxdot.cli import cli


def run(capsys, *argv):
    code = cli(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestParse:
    def test_canonical_form(self, capsys):
        code, out, _ = run(capsys, "parse", "[.]p -> []p")
        assert code == 0
        assert out.strip() == "(([.]p) -> ([]p))"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "parse", "--json", "p & q")
        assert code == 0
        assert json.loads(out) == {"formula": "(!(p -> (!q)))"}

    def test_bad_formula_is_usage_error(self, capsys):
        code, _, err = run(capsys, "parse", "p ->")
        assert code == 2 and "error" in err


class TestCheckProof:
    def test_accepted(self, capsys):
        code, out, _ = run(capsys, "check-proof", "docs/proof-scripts/lemma1.proof")
        assert code == 0 and "accepted" in out

    def test_rejected(self, capsys, tmp_path):
        bad = tmp_path / "bad.proof"
        bad.write_text("1: []p -> q ; ax truth\n")
        code, out, _ = run(capsys, "check-proof", str(bad))
        assert code == 1 and "rejected at step 1" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "check-proof", "no-such-file.proof")
        assert code == 2 and "error" in err

    def test_malformed_script(self, capsys, tmp_path):
        bad = tmp_path / "bad.proof"
        bad.write_text("1: p -> p ; wat\n")
        code, _, err = run(capsys, "check-proof", str(bad))
        assert code == 2

    def test_json_report(self, capsys, tmp_path):
        good = tmp_path / "ok.proof"
        good.write_text("hyp 1: []p\n1: []p ; hyp 1\n2: []p -> p ; ax truth\n3: p ; mp 1 2\n")
        code, out, _ = run(capsys, "check-proof", "--json", str(good))
        doc = json.loads(out)
        assert code == 0
        assert doc["accepted"] is True
        assert doc["theorem"] is False
        assert doc["conclusion"] == "p"


class TestModelChecking:
    MODEL = "docs/model-example.json"

    def test_mc_true(self, capsys):
        code, out, _ = run(capsys, "mc", self.MODEL, "w1", "p")
        assert code == 0 and "true" in out

    def test_mc_false(self, capsys):
        code, out, _ = run(capsys, "mc", self.MODEL, "w1", "[]p")
        assert code == 1 and "false" in out

    def test_mc_unknown_world(self, capsys):
        code, _, err = run(capsys, "mc", self.MODEL, "w9", "p")
        assert code == 2

    def test_mc_valid(self, capsys):
        code, out, _ = run(capsys, "mc-valid", self.MODEL, "p -> p")
        assert code == 0 and "valid" in out

    def test_mc_not_valid(self, capsys):
        code, out, _ = run(capsys, "mc-valid", "--json", self.MODEL, "p")
        assert code == 1
        assert json.loads(out)["extension"] == ["w1"]

    def test_invalid_model_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"worlds": ["w1"], "evidence": {"e": [[]]}, "valuation": {}}')
        code, _, err = run(capsys, "mc", str(bad), "w1", "p")
        assert code == 2 and "invalid model" in err


class TestHotel:
    def test_true_with_witness(self, capsys):
        code, out, _ = run(capsys, "hotel", "--variant", "I",
                           "--world", "default=occupied; 7=vacant",
                           "--json", "[.]exists_vacant")
        doc = json.loads(out)
        assert code == 0
        assert doc["verdict"] is True
        assert doc["witness"] == {"tracked": [7], "fresh_count": 0}

    def test_false(self, capsys):
        code, out, _ = run(capsys, "hotel", "--variant", "I",
                           "--world", "default=occupied", "[.]exists_vacant")
        assert code == 1 and "false" in out

    def test_bad_variant_usage_error(self, capsys):
        code, _, _ = run(capsys, "hotel", "--variant", "III",
                         "--world", "default=occupied", "p")
        assert code == 2

    def test_bad_world_literal(self, capsys):
        code, _, err = run(capsys, "hotel", "--variant", "I",
                           "--world", "occupied", "exists_vacant")
        assert code == 2


class TestCounterexamples:
    def test_exit_zero_and_both_reports(self, capsys):
        code, out, _ = run(capsys, "counterexamples")
        assert code == 0
        assert "negative-introspection" in out
        assert "weak-negative-introspection" in out

    def test_json_verdicts(self, capsys):
        code, out, _ = run(capsys, "counterexamples", "--json")
        doc = json.loads(out)
        assert code == 0
        assert [r["verdict"] for r in doc["reports"]] == [False, False]


class TestFuzz:
    def test_small_run(self, capsys):
        code, out, _ = run(capsys, "fuzz", "--seed", "5",
                           "--theorems", "40", "--models", "4")
        assert code == 0
        assert "violations=0" in out

    def test_json_byte_identical(self, capsys):
        args = ("fuzz", "--json", "--seed", "5", "--theorems", "40", "--models", "4")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 == out2

    def test_usage_error_on_bad_bounds(self, capsys):
        code, _, err = run(capsys, "fuzz", "--seed", "1", "--max-worlds", "99")
        assert code == 2


class TestUnravelSim:
    def test_single_universe(self, capsys):
        code, out, _ = run(capsys, "unravel-sim", "--seed", "3", "--size", "12")
        assert code == 0
        assert "well_founded=true" in out

    def test_json_multiple(self, capsys):
        code, out, _ = run(capsys, "unravel-sim", "--json", "--seed", "3",
                           "--size", "10", "--universes", "3")
        doc = json.loads(out)
        assert code == 0 and len(doc["reports"]) == 3


class TestCorpusCommand:
    def test_all_accepted(self, capsys):
        code, out, _ = run(capsys, "corpus")
        assert code == 0
        assert "4/4 accepted" in out

    def test_json(self, capsys):
        code, out, _ = run(capsys, "corpus", "--json")
        doc = json.loads(out)
        assert code == 0
        assert set(doc) == {"lemma1", "lemma2", "att-truth", "box-nec"}
        assert all(entry["accepted"] for entry in doc.values())


class TestUsage:
    def test_no_arguments(self, capsys):
        assert run(capsys, )[0] == 2

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0
