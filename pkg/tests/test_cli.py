import os

import pytest

from wknots.cli import main

DATA = os.path.join(os.path.dirname(__file__), "..", "src", "wknots",
                    "data", "knots")


@pytest.fixture
def braid_files(tmp_path):
    a = tmp_path / "a.braid"
    a.write_text("n=3\ns1 s2 s1\n")
    b = tmp_path / "b.braid"
    b.write_text("n=3\ns2 s1 s2\n")
    c = tmp_path / "c.braid"
    c.write_text("n=3\ns1\n")
    return str(a), str(b), str(c)


def test_braid_eq(braid_files, capsys):
    a, b, c = braid_files
    assert main(["braid-eq", a, b]) == 0
    assert capsys.readouterr().out.strip() == "equal"
    assert main(["braid-eq", a, c]) == 0
    assert capsys.readouterr().out.strip() == "distinct"
    assert main(["--machine", "braid-eq", a, b]) == 0
    assert capsys.readouterr().out.strip() == "equal=true"


def test_braid_act(braid_files, capsys):
    a, _, _ = braid_files
    assert main(["braid-act", a, "--word", "x1"]) == 0
    assert capsys.readouterr().out.strip() == "x3"
    assert main(["braid-act", a]) == 0
    assert len(capsys.readouterr().out.strip().splitlines()) == 3


def test_alexander_both(capsys):
    pd = os.path.join(DATA, "4_1.pd")
    assert main(["--machine", "alexander", pd, "--method", "both"]) == 0
    out = dict(line.split("=", 1)
               for line in capsys.readouterr().out.splitlines())
    assert out["fox"] == out["matrix"] == "1 - 3*X + 1*X^2"


def test_zed_wheels(capsys, tmp_path):
    f = tmp_path / "t.braid"
    f.write_text("n=2\ns1 s1 s1\n")
    assert main(["--machine", "zed", str(f), "--degree", "2",
                 "--check-alexander"]) == 0
    out = dict(line.split("=", 1)
               for line in capsys.readouterr().out.splitlines())
    assert out["self_linking"] == "3"
    assert out["degree1"] == "a:3"
    assert out["alexander_match"] == "match"


def test_dims_deterministic(capsys):
    assert main(["dims", "--degree", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["dims", "--degree", "3"]) == 0
    assert capsys.readouterr().out == first
    assert "dim 7" in first


def test_wheels_basis(capsys):
    assert main(["--machine", "wheels", "--degree", "4"]) == 0
    out = dict(line.split("=", 1)
               for line in capsys.readouterr().out.splitlines())
    assert out["basis4"] == "a*a*a*a a*a*w2 a*w3 w2*w2 w4"


def test_check_single_suite(capsys):
    assert main(["check", "--suite", "quotient-dimensions"]) == 0
    assert "ok" in capsys.readouterr().out


def test_usage_errors(tmp_path, capsys):
    assert main(["alexander", str(tmp_path / "missing.pd")]) == 2
    bad = tmp_path / "bad.pd"
    bad.write_text("Y[1,2,3,4]\n")
    assert main(["alexander", str(bad)]) == 2
    assert main(["no-such-command"]) == 2
