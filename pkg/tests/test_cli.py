import json

import pytest

from cycloschur.cli import ParseError, main, parse_multipartition


class TestMultipartitionParser:
    def test_simple(self):
        assert parse_multipartition("((1),())") == ((1,), ())

    def test_whitespace_insensitive(self):
        assert parse_multipartition(" ( ( 2 , 1 ) , ( 1 ) ) ") == ((2, 1), (1,))

    def test_single_component(self):
        assert parse_multipartition("((3,1))") == ((3, 1),)

    def test_empty_only(self):
        assert parse_multipartition("((),())") == ((), ())

    def test_error_reports_position(self):
        with pytest.raises(ParseError) as err:
            parse_multipartition("((1),x)")
        assert "position 5" in str(err.value)

    def test_not_decreasing(self):
        with pytest.raises(ParseError):
            parse_multipartition("((1,2))")


class TestComputeCommands:
    def test_phi(self, capsys):
        assert main(["compute", "phi", "1", "3", "+"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["query"] == "phi"
        assert len(data["terms"]) == 3

    def test_lr_pieri(self, capsys):
        assert main(["compute", "lr", "((1))", "((1))", "-r", "1"]) == 0
        data = json.loads(capsys.readouterr().out)
        assert data["terms"] == [
            {"nu": [[1, 1]], "coeff": 1},
            {"nu": [[2]], "coeff": 1},
        ]

    def test_character(self, capsys):
        code = main(["compute", "character", "((1),())", "-r", "2", "-m", "2,2"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert len(data["terms"]) == 4

    def test_tableaux(self, capsys):
        code = main(["compute", "tableaux", "((1),())", "((1),())", "-m", "2,2"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["count"] == 1

    def test_structure_constants(self, capsys):
        code = main(["compute", "structure-constants", "-m", "1,1", "--deg", "0"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["table"]

    def test_parse_error_exit_2(self, capsys):
        assert main(["compute", "character", "((1),!)", "-r", "2", "-m", "2,2"]) == 2
        assert "error" in capsys.readouterr().err

    def test_wrong_arity_exit_2(self, capsys):
        assert main(["compute", "lr", "((1))"]) == 2


class TestVerifyCommand:
    def test_symfun_suite_passes(self, capsys):
        code = main(["verify", "--suite", "symfun", "-n", "2", "-r", "2", "-m", "2,2"])
        out = capsys.readouterr().out
        assert code == 0
        report = json.loads(out)
        assert report["schema"] == 1
        assert report["passed"] is True
        assert report["suites"]["symfun"]["failed"] == []

    def test_lie_suite_passes(self, capsys):
        code = main(["verify", "--suite", "lie", "-r", "2", "-m", "1,1", "--deg", "1"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["passed"] is True

    def test_unknown_suite_exit_2(self):
        assert main(["verify", "--suite", "nope"]) == 2

    def test_mismatched_m_exit_2(self):
        assert main(["verify", "--suite", "lie", "-r", "2", "-m", "3"]) == 2

    def test_reports_byte_identical(self, tmp_path):
        args = [
            "verify", "--suite", "lie", "-r", "1", "-m", "2",
            "--deg", "1", "--seed", "42",
        ]
        f1 = tmp_path / "a.json"
        f2 = tmp_path / "b.json"
        assert main(args + ["--out", str(f1)]) == 0
        assert main(args + ["--out", str(f2)]) == 0
        assert f1.read_bytes() == f2.read_bytes()

    def test_verify_hecke_small(self, capsys):
        code = main(["verify", "--suite", "hecke", "-n", "2", "-r", "2", "-m", "1,1"])
        assert code == 0
        report = json.loads(capsys.readouterr().out)
        assert report["suites"]["hecke"]["passed"] is True

    def test_verify_schur_tiny(self, capsys):
        code = main([
            "verify", "--suite", "schur", "-n", "1", "-r", "2", "-m", "1,1",
            "--deg", "1", "--dmax", "1",
        ])
        assert code == 0

    def test_verify_q1_tiny(self, capsys):
        code = main([
            "verify", "--suite", "q1", "-n", "1", "-r", "2", "-m", "1,1", "--deg", "1",
        ])
        assert code == 0
