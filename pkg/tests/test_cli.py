import json

import pytest

from sturmlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err.strip()


@pytest.mark.parametrize("argv,expected", [
    (("balanced", "count", "17"), "594"),
    (("numeration", "to-pell", "10"), "200"),
    (("numeration", "to-pell", "0"), ""),
    (("numeration", "from-pell", "110"), "7"),
    (("generate", "fibonacci", "--len", "8"), "01001010"),
    (("generate", "pell-word", "--len", "8"), "01010010"),
    (("generate", "mechanical", "--slope", "(-1+1*sqrt(2))/1", "--len", "8"), "01010010"),
    (("generate", "mechanical", "--slope", "fib", "--intercept", "(0+0*sqrt(0))/1", "--len", "8"), "01001010"),
    (("powers", "endings", "--word", "000000", "--exp", "3", "--max-period", "1"), "2 3 4 5"),
    (("gaps", "prefix", "--slope", "sqrt2-1", "--exp", "3", "--len", "20000"), "1 7 10"),
])
def test_plain_output(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_balanced_list(capsys):
    code, out, _ = run(capsys, "balanced", "list", "3")
    assert code == 0
    assert out.split() == ["000", "001", "010", "011", "100", "101", "110", "111"]


def test_formats(capsys):
    _, out, _ = run(capsys, "--format", "json", "balanced", "count", "32")
    assert json.loads(out) == {"n": 32, "count": 3650}
    _, out, _ = run(capsys, "gaps", "census", "--length", "32", "--exp", "3", "--max-period", "5", "--format", "csv")
    header, row = out.splitlines()
    record = dict(zip(header.split(","), row.split(",")))
    assert record["max_gap"] == "10" and record["words"] == "3650" and record["min_endings"] == "2"


def test_gaps_word(capsys):
    code, out, _ = run(capsys, "--format", "json", "gaps", "word", "--word",
                       "0100101001001010010100100101001001", "--exp", "3")
    assert code == 0
    assert json.loads(out)["endings"].startswith("13 22 23 26")


def test_word_from_file(capsys, tmp_path):
    path = tmp_path / "fib.txt"
    assert main(["generate", "fibonacci", "--len", "40", "--out", str(path)]) == 0
    capsys.readouterr()
    code, out, _ = run(capsys, "powers", "endings", "--word", str(path), "--exp", "3")
    assert code == 0
    assert out.split()[:5] == ["13", "22", "23", "26", "34"]


def test_sharded_census_output_is_identical(capsys):
    args = ("gaps", "census", "--length", "36", "--exp", "8/3", "--max-period", "5", "--format", "json")
    _, sequential, _ = run(capsys, *args)
    _, sharded, _ = run(capsys, *args, "--jobs", "2")
    assert sequential == sharded


@pytest.mark.parametrize("argv", [
    ("frobnicate",),
    ("balanced", "count", "-1"),
    ("powers", "endings", "--word", "01", "--exp", "1/2"),
    ("powers", "endings", "--word", "01", "--exp", "three"),
    ("gaps", "prefix", "--slope", "(0+1*sqrt(2))/1-1", "--exp", "3", "--len", "10"),
    ("generate", "mechanical", "--slope", "(1+0*sqrt(0))/2", "--len", "10"),
    ("numeration", "from-pell", "21"),
    ("powers", "endings", "--word", "no-such-file", "--exp", "3"),
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err.startswith("sturmlab: error:") and len(err.splitlines()) == 1


@pytest.mark.parametrize("claim", ["lemma1", "theorem1", "rampersad"])
def test_verify_claims(capsys, claim):
    code, out, _ = run(capsys, "verify", claim)
    assert code == 0
    assert all(line.startswith("pass") for line in out.splitlines())


def test_verify_theorem1_summary(capsys):
    _, out, _ = run(capsys, "verify", "theorem1")
    assert "max gap 10" in out and "[1, 7, 10]" in out


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from sturmlab import verify
    from sturmlab.verify import Check

    monkeypatch.setattr(verify, "check_lemma1", lambda: [Check("lemma1-x", False, "forced")])
    code, out, _ = run(capsys, "verify", "lemma1")
    assert code == 1
    assert out.startswith("FAIL")
