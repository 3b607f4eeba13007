import io
from pathlib import Path

from convexchoice import __version__
from convexchoice.cli import cli_main

CORPUS = Path(__file__).parent / "corpus"


def test_eval_file(capsys):
    code = cli_main(["eval", str(CORPUS / "coinarb.choice")])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "{true: 1}\n{false: 1}\n"


def test_eval_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ret true <|1/4|> ret false"))
    code = cli_main(["eval", "-"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "{true: 1/4, false: 3/4}\n"


def test_eval_structured(capsys):
    code = cli_main(["eval", "--format", "structured", str(CORPUS / "coinarb.choice")])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == '[[[true,"1"]],[[false,"1"]]]\n'


def test_eval_parse_error(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("ret true <|3/2|> ret false"))
    code = cli_main(["eval", "-"])
    out = capsys.readouterr()
    assert code == 1
    assert "line 1" in out.err and "col" in out.err


def test_eval_missing_file(capsys):
    code = cli_main(["eval", "/nonexistent/prog.choice"])
    assert code == 1
    assert "error" in capsys.readouterr().err


def test_check_laws_single(capsys):
    code = cli_main(["check-laws", "--trials", "5", "--seed", "7", "--law", "choice0"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out.startswith("PASS choice0")


def test_check_laws_unknown_law(capsys):
    code = cli_main(["check-laws", "--law", "bogus"])
    assert code == 1
    assert "unknown law" in capsys.readouterr().err


def test_check_laws_failure_exit_code(capsys):
    # seed 0, one trial: the negative control finds nothing, so its verdict fails
    code = cli_main(
        ["check-laws", "--trials", "1", "--seed", "0", "--law", "neg_bindDr_choice"]
    )
    out = capsys.readouterr()
    assert code == 2
    assert out.out.startswith("FAIL neg_bindDr_choice")


def test_check_laws_full_fast(capsys):
    code = cli_main(["check-laws", "--trials", "12", "--seed", "42"])
    out = capsys.readouterr()
    assert code == 0
    lines = [l for l in out.out.splitlines() if l and not l.startswith(" ")]
    from convexchoice.laws import law_names

    assert len(lines) == len(law_names())
    assert all(l.startswith("PASS") for l in lines)


def test_monty_both(capsys):
    code = cli_main(["monty"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == (
        "stick: {true: 1/3, false: 2/3}\n"
        "switch: {true: 2/3, false: 1/3}\n"
    )


def test_monty_single(capsys):
    code = cli_main(["monty", "--strategy", "switch"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out == "switch: {true: 2/3, false: 1/3}\n"


def test_version(capsys):
    code = cli_main(["version"])
    out = capsys.readouterr()
    assert code == 0
    assert out.out.strip() == __version__
