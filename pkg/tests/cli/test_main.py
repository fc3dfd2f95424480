"""
CLI tests: exit codes, JSON reports and human-readable output
"""

import json

import pytest

from butson.cli.main import main
from butson.cli.models import RunReport
from butson.matrices.service import fourier
from butson.matrices.text_format import format_matrix_text


def run_json(capsys, *argv: str):
    code = main([*argv, "--json", "--no-timing"])
    out = capsys.readouterr().out
    return code, out, json.loads(out)


@pytest.fixture
def fourier_file(tmp_path):
    path = tmp_path / "f4.txt"
    path.write_text(format_matrix_text(fourier(4)))
    return str(path)


@pytest.mark.cli
class TestVerifyCommand:
    """Test the verify command"""

    def test_builtin_ex2(self, capsys):
        """Test ex2 verifies with circulant, symmetric and unreal flags"""
        code, _, data = run_json(capsys, "verify", "--builtin", "ex2")
        assert code == 0
        assert data["result"]["kind"] == "verification"
        assert data["result"]["is_bh"] is True
        assert data["result"]["structure"] == {"symmetric": True, "circulant": True, "unreal": True}
        assert data["input"]["m"] == 5 and data["input"]["l"] == 5

    def test_builtin_ex3(self, capsys):
        """Test ex3 verifies"""
        code, _, _ = run_json(capsys, "verify", "--builtin", "ex3")
        assert code == 0

    def test_not_bh(self, capsys, tmp_path):
        """Test a non-BH matrix exits with 1"""
        path = tmp_path / "bad.txt"
        path.write_text("bh 2 2\n0 0\n0 0\n")
        code, _, data = run_json(capsys, "verify", str(path))
        assert code == 1
        assert data["result"]["failing_cell"]["row"] == 0

    def test_malformed_file(self, capsys, tmp_path):
        """Test a short row exits with 2 and a located diagnostic"""
        path = tmp_path / "short.txt"
        path.write_text("bh 2 4\n0 0\n1\n")
        code, _, data = run_json(capsys, "verify", str(path))
        assert code == 2
        assert data["success"] is False
        assert data["error"]["code"] == "MATRIX_PARSE_ERROR"
        assert data["error"]["details"]["line"] == 3

    def test_non_utf8_file(self, capsys, tmp_path):
        """Test an undecodable file exits with 2, not as an internal error"""
        path = tmp_path / "binary.txt"
        path.write_bytes(b"bh 1 2\n\xff\n")
        code, _, data = run_json(capsys, "verify", str(path))
        assert code == 2
        assert data["error"]["code"] == "MATRIX_PARSE_ERROR"
        assert data["error"]["details"]["line"] == 2

    def test_needs_one_input(self, capsys):
        """Test missing input exits with 2"""
        code, _, data = run_json(capsys, "verify")
        assert code == 2
        assert data["error"]["code"] == "INVALID_ARGUMENT"


@pytest.mark.cli
class TestSpectrumCommand:
    """Test the spectrum command"""

    def test_ex1(self, capsys):
        """Test k = 24 with angles 1/24 and 17/24"""
        code, _, data = run_json(capsys, "spectrum", "--builtin", "ex1")
        assert code == 0
        assert data["result"]["common_k"] == 24
        angles = [f["angle"] for f in data["result"]["findings"]]
        assert angles == [{"num": 1, "den": 24}, {"num": 17, "den": 24}]

    def test_ex2(self, capsys):
        """Test k = 10"""
        code, _, data = run_json(capsys, "spectrum", "--builtin", "ex2")
        assert code == 0
        assert data["result"]["method"] == "exact"
        assert sorted(f["angle"]["num"] for f in data["result"]["findings"]) == [1, 1, 3, 3, 7]

    def test_ex3(self, capsys):
        """Test k = 3"""
        code, _, data = run_json(capsys, "spectrum", "--builtin", "ex3")
        assert code == 0
        assert data["result"]["common_k"] == 3

    def test_mixed_orders(self, capsys, fourier_file):
        """Test no common k exits with 4 and still reports the spectrum"""
        code, _, data = run_json(capsys, "spectrum", fourier_file)
        assert code == 4
        assert data["result"]["failure"] == "mixed_orders"

    def test_human_output(self, capsys):
        """Test the table shows angles as fractions of a turn"""
        assert main(["spectrum", "--builtin", "ex1", "--no-timing"]) == 0
        out = capsys.readouterr().out
        assert "17/24" in out
        assert "common k: 24" in out
        assert "elapsed" not in out


@pytest.mark.cli
class TestConjectureCommand:
    """Test the conjecture command"""

    def test_ex2_counterexample(self, capsys):
        """Test ex2 exits with 3 at i = 3"""
        code, _, data = run_json(capsys, "conjecture", "--builtin", "ex2")
        assert code == 3
        assert data["result"]["counterexample_i"] == 3
        third = next(r for r in data["result"]["per_i"] if r["i"] == 3)
        assert third["distinct_values"] == [{"n": 10, "t": 1}, {"n": 10, "t": 3}, {"n": 10, "t": 9}]

    def test_ex1_holds(self, capsys):
        """Test ex1 exits with 0"""
        code, _, _ = run_json(capsys, "conjecture", "--builtin", "ex1")
        assert code == 0

    def test_ex3_flags_mu_k(self, capsys):
        """Test ex3 exits with 0 and flags i = 2 outside mu_3"""
        code, _, data = run_json(capsys, "conjecture", "--builtin", "ex3")
        assert code == 0
        second = next(r for r in data["result"]["per_i"] if r["i"] == 2)
        assert second["all_in_mu_k"] is False

    def test_no_common_k(self, capsys, fourier_file):
        """Test a mixed spectrum exits with 4"""
        code, _, data = run_json(capsys, "conjecture", fourier_file)
        assert code == 4
        assert data["error"]["code"] == "PRECONDITION_FAILED"

    def test_human_output(self, capsys):
        """Test the per-i table names root values"""
        assert main(["conjecture", "--builtin", "ex2"]) == 3
        out = capsys.readouterr().out
        assert "zeta_10^9" in out
        assert "counterexample at i = 3" in out


@pytest.mark.cli
class TestSearchCommand:
    """Test the search command"""

    def test_empty_range(self, capsys):
        """Test an empty range reports zero counters"""
        code, _, data = run_json(capsys, "search", "5", "5", "--range", "0..0")
        assert code == 0
        result = data["result"]
        assert result["scanned"] == result["bh_count"] == result["tested"] == 0
        assert result["counterexamples"] == []

    def test_two_by_two(self, capsys):
        """Test (2, 2) has no circulant BH matrix"""
        code, _, data = run_json(capsys, "search", "2", "2")
        assert code == 0
        assert data["result"]["bh_count"] == 0

    def test_invalid_range(self, capsys):
        """Test a reversed range exits with 2"""
        code, _, _ = run_json(capsys, "search", "5", "5", "--range", "9..3")
        assert code == 2

    def test_unparsable_range(self):
        """Test argparse rejects a malformed range"""
        with pytest.raises(SystemExit) as exc_info:
            main(["search", "5", "5", "--range", "abc"])
        assert exc_info.value.code == 2

    def test_unresumable_checkpoint(self, capsys, tmp_path):
        """Test a checkpoint from another config exits with 2"""
        path = str(tmp_path / "scan.ckpt")
        assert run_json(capsys, "search", "4", "2", "--checkpoint", path)[0] == 0
        code, _, data = run_json(capsys, "search", "4", "2", "--dedup", "--checkpoint", path)
        assert code == 2
        assert data["error"]["code"] == "CHECKPOINT_ERROR"

    def test_workers_flag(self, capsys):
        """Test parallel output equals serial output"""
        serial = run_json(capsys, "search", "4", "2")[1]
        parallel = run_json(capsys, "search", "4", "2", "--workers", "2", "--checkpoint-every", "3")[1]
        assert json.loads(serial)["result"] == json.loads(parallel)["result"]


@pytest.mark.cli
class TestJsonStability:
    """Test JSON output is deterministic"""

    @pytest.mark.parametrize("command", ["verify", "spectrum", "conjecture"])
    @pytest.mark.parametrize("name", ["ex1", "ex2", "ex3"])
    def test_byte_stable(self, capsys, command, name):
        """Test repeated runs print identical bytes that round-trip"""
        first = run_json(capsys, command, "--builtin", name)[1]
        second = run_json(capsys, command, "--builtin", name)[1]
        assert first == second
        assert RunReport.model_validate_json(first).model_dump_json() + "\n" == first

    def test_timing_present_by_default(self, capsys):
        """Test elapsed_ms is a number unless --no-timing is given"""
        main(["verify", "--builtin", "ex1", "--json"])
        assert isinstance(json.loads(capsys.readouterr().out)["elapsed_ms"], float)


@pytest.mark.cli
class TestFormatCommand:
    """Test the format command"""

    def test_circulant_shorthand(self, capsys):
        """Test ex2 prints as a circ matrix"""
        assert main(["format", "--builtin", "ex2", "--circulant"]) == 0
        assert capsys.readouterr().out == "circ 5 5\n1 3 4 4 3\n"
