import subprocess
import sys

import pytest

from smippc.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, main
from smippc.code import Code, parse, serialize

TYPE_IV = Code.from_words([(0, 0, 0), (1, 1, 1), (0, 0, 1), (0, 1, 0), (1, 0, 0)], q=2)


@pytest.fixture
def q6(tmp_path):
    path = tmp_path / "q6.code"
    assert main(["construct", "--q", "6", "--out", str(path)]) == EXIT_OK
    return path


@pytest.fixture
def q6_binary(tmp_path, q6):
    path = tmp_path / "q6.bin"
    assert main(["compose", "--in", str(q6), "--out", str(path)]) == EXIT_OK
    return path


def test_construct(tmp_path, capsys, q6):
    assert "M=51 bound=51 optimal=yes" in capsys.readouterr().out
    text = q6.read_text()
    assert text.startswith("# q=6 family=SPECIAL_6 s=5")
    assert parse(text).M == 51
    assert main(["construct", "--q", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "M=4 bound=5 optimal=yes"
    assert main(["construct", "--q", "9"]) == EXIT_USAGE
    assert "not covered" in capsys.readouterr().err


def test_verify(tmp_path, capsys):
    path = tmp_path / "q8.code"
    main(["construct", "--q", "8", "--out", str(path)])
    capsys.readouterr()
    assert main(["verify", "--in", str(path), "--property", "smippc", "--t", "2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "SMIPPC t=2 RESULT=pass WITNESS=-"

    bad = tmp_path / "iv.code"
    bad.write_text(serialize(TYPE_IV))
    assert main(["verify", "--in", str(bad), "--property", "smippc"]) == EXIT_FAIL
    out = capsys.readouterr().out
    assert "RESULT=fail" in out and "WITNESS=1,2|" in out
    assert main(["verify", "--in", str(bad), "--property", "type4", "--report"]) == EXIT_FAIL
    assert "witness[0]" in capsys.readouterr().out
    assert main(["verify", "--in", str(bad), "--property", "smippc", "--cap", "2"]) == EXIT_CAP
    assert main(["verify", "--in", str(bad), "--property", "sc", "--t", "1"]) == EXIT_USAGE


def test_attack(tmp_path, capsys, q6, q6_binary):
    capsys.readouterr()
    assert main(["attack", "--in", str(q6_binary), "--coalition", "1,2", "--alg", "ssc"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "coalition 1 2" and lines[1].startswith("T ") and lines[2].startswith("R ")
    assert lines[3].startswith("TRACE alg=ssc t=2 result=colluders set=")
    assert main(["attack", "--in", str(q6), "--coalition", "1,2", "--alg", "ssc"]) == EXIT_USAGE
    assert main(["attack", "--in", str(q6), "--coalition", "1,52", "--alg", "qary"]) == EXIT_USAGE

    q7 = tmp_path / "q7.code"
    main(["construct", "--q", "7", "--out", str(q7)])
    assert main(["attack", "--in", str(q7), "--coalition", "5,70", "--alg", "qary"]) == EXIT_OK
    assert main(["attack", "--in", str(q7), "--coalition", "5,70", "--alg", "mippc"]) == EXIT_OK


def test_attack_reports_property_violation(tmp_path, capsys):
    bad = tmp_path / "iv.code"
    bad.write_text(serialize(TYPE_IV))
    assert main(["attack", "--in", str(bad), "--coalition", "1,2", "--alg", "qary"]) == EXIT_FAIL
    assert "result=error" in capsys.readouterr().out


def test_trace(tmp_path, capsys):
    pattern = tmp_path / "r.txt"
    pattern.write_text("0,1\n0\n0\n")
    c342 = tmp_path / "c342.code"
    c342.write_text("3 4 2\n0 0 0\n1 0 0\n0 1 0\n0 0 1\n")
    assert main(["trace", "--in", str(c342), "--pattern", str(pattern)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "TRACE alg=ssc t=2 result=colluders set=1,2"
    pattern.write_text("*\n*\n*\n")
    assert main(["trace", "--in", str(c342), "--pattern", str(pattern), "--alg", "mippc"]) == EXIT_FAIL


def test_bound_and_screen(capsys):
    assert main(["bound", "--q", "7"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "70"
    assert main(["bound", "--q", "1"]) == EXIT_USAGE
    assert main(["screen", "--q", "13", "--A1", "1,2,3,4,5,6"]) == EXIT_FAIL
    assert "REASON=III: b=6" in capsys.readouterr().out
    assert main(["screen", "--q", "6", "--A1", "1,2", "--m", "3"]) == EXIT_FAIL
    assert main(["screen", "--q", "6", "--A1", "1,2"]) == EXIT_USAGE
    assert main(["screen", "--q", "19"]) == EXIT_OK
    assert main(["screen", "--q", "9"]) == EXIT_USAGE


def test_missing_file_and_bad_flags(tmp_path, capsys):
    assert main(["verify", "--in", str(tmp_path / "nope"), "--property", "sc"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as exc:
        main(["attack", "--in", "x", "--coalition", "a,b"])
    assert exc.value.code == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "smippc", "bound", "--q", "5"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "35"
