"""Tests for src/cli.py — exit codes and output routing."""

from pathlib import Path

from cli import EXIT_FAIL, EXIT_INVALID, EXIT_PASS, main

WORKSHEETS = Path(__file__).resolve().parent.parent / "worksheets"


def write_sheet(tmp_path, text: str) -> str:
    path = tmp_path / "sheet.cor"
    path.write_text(text, encoding="utf-8")
    return str(path)


class TestMain:
    def test_worksheet_matches_golden(self, capsys):
        code = main(["--input", str(WORKSHEETS / "gaussian.cor"), "--json", "--seed", "0"])
        assert code == EXIT_PASS
        golden = (WORKSHEETS / "gaussian.golden.json").read_text(encoding="utf-8")
        assert capsys.readouterr().out == golden

    def test_text_report(self, capsys):
        assert main(["--input", str(WORKSHEETS / "radicial.cor")]) == EXIT_PASS
        out = capsys.readouterr().out
        assert "  ✓ radicial v Gm (t): s" in out

    def test_failed_check_exits_one(self, tmp_path, capsys):
        sheet = write_sheet(tmp_path, "variety X over Q vars (x) ideal ();\n"
                                      "variety A over Q vars (y) ideal ();\n"
                                      "corr c : X -> A = [x];\nvalidate c;\n")
        assert main(["--input", sheet]) == EXIT_FAIL

    def test_script_error_exits_two(self, tmp_path, capsys):
        sheet = write_sheet(tmp_path, "field k = Q\n")
        assert main(["--input", sheet]) == EXIT_INVALID
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "error: line 2, column 1" in captured.err

    def test_missing_input_exits_two(self, tmp_path):
        assert main(["--input", str(tmp_path / "absent.cor")]) == EXIT_INVALID

    def test_invalid_settings_exit_two(self):
        assert main(["--input", str(WORKSHEETS / "sqrt2.cor"), "--max-degree", "-1"]) == EXIT_INVALID

    def test_out_file_written(self, tmp_path, capsys):
        out = tmp_path / "reports" / "sqrt2.json"
        assert main(["--input", str(WORKSHEETS / "sqrt2.cor"), "--json", "--out", str(out)]) == EXIT_PASS
        assert out.read_text(encoding="utf-8") == capsys.readouterr().out
