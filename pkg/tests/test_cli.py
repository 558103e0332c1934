import json

import pytest

from gradedhilbert import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


CONSTRUCT = ["--variant", "theorem1", "--d", "2", "--p", "2", "--series", "zero",
             "--max-degree", "3"]


def test_construct_plain(capsys):
    code, out, _ = run(capsys, "construct", *CONSTRUCT)
    assert code == 0 and out == "1,3,8,20\n"


def test_construct_formats(capsys):
    _, out, _ = run(capsys, "construct", *CONSTRUCT, "--format", "csv")
    assert out.splitlines() == ["degree,coefficient", "0,1", "1,3", "2,8", "3,20"]
    _, out, _ = run(capsys, "construct", *CONSTRUCT, "--format", "json")
    assert json.loads(out) == ["1", "3", "8", "20"]
    _, out, _ = run(capsys, "construct", *CONSTRUCT, "--format", "table")
    assert out.splitlines()[0].split() == ["degree", "coefficient"]
    assert out.splitlines()[-1].split() == ["3", "20"]


def test_output_file_and_determinism(capsys, tmp_path):
    f = tmp_path / "out.txt"
    assert cli.main(["expand", "--series", "partition", "--max-degree", "30",
                     "--output", str(f)]) == 0
    first = f.read_bytes()
    cli.main(["expand", "--series", "partition", "--max-degree", "30", "--output", str(f)])
    assert f.read_bytes() == first
    assert first.decode().startswith("1,1,2,3,5,7,11")


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--variant", "theorem1", "--d", "2", "--p", "2",
                       "--series", "partition", "--max-degree", "12", "--engine", "auto")
    assert code == 0 and "agreement" in out
    code, out, _ = run(capsys, "verify", "--variant", "theorem1", "--d", "2", "--series",
                       "partition", "--max-degree", "6", "--engine", "bruteforce",
                       "--format", "json")
    assert code == 0 and json.loads(out)["agree"] is True


def test_verify_mismatch_exit_3(capsys, monkeypatch):
    from gradedhilbert import constructions

    real = constructions.verify
    monkeypatch.setattr(constructions, "verify",
                        lambda spec, N, methods=None: real(spec, N, methods, {"closed": 2}))
    code, out, _ = run(capsys, "verify", *CONSTRUCT)
    assert code == 3 and "MISMATCH at degree 2" in out


def test_capacity_exit_2(capsys):
    code, _, err = run(capsys, "construct", "--variant", "theorem14", "--d", "2",
                       "--series", "partition", "--max-degree", "8")
    assert code == 2 and "capacity" in err


def test_usage_errors_exit_1(capsys):
    assert run(capsys, "construct", "--variant", "nope", "--d", "2", "--series", "zero",
               "--max-degree", "3")[0] == 1
    assert run(capsys, "construct", "--variant", "corollary12", "--d", "2", "--p", "2",
               "--q", "1", "--series", "zero", "--max-degree", "3")[0] == 1
    assert run(capsys, "expand", "--series", "bogus", "--max-degree", "3")[0] == 1
    assert run(capsys, "expand", "--series", "zero", "--max-degree", "-1")[0] == 1
    assert run(capsys, "hr", "--n", "0")[0] == 1
    assert run(capsys, "rationalize", "--presentation", "/nonexistent/x.pres")[0] == 1
    assert run(capsys)[0] == 1


def test_rationalize(capsys, tmp_path):
    f = tmp_path / "fib.pres"
    f.write_text("alphabet d=1 y=1\ny y\nx1 y y\n")
    code, out, err = run(capsys, "rationalize", "--presentation", str(f))
    assert code == 0 and out == "(1 + t) / (1 - t - t^2)\n"
    assert "redundant" in err


def test_analyze(capsys, tmp_path):
    f = tmp_path / "c.txt"
    f.write_text("\n".join(str(2**n) for n in range(60)))
    code, out, _ = run(capsys, "analyze", "--coeffs-file", str(f))
    assert code == 0 and json.loads(out)["verdict"] == "RATIONAL"
    f.write_text("\n".join("1" for _ in range(30)))
    code, _, err = run(capsys, "analyze", "--coeffs-file", str(f))
    assert code == 4 and "2*K + G" in err
    code, out, _ = run(capsys, "analyze", "--coeffs-file", str(f), "--max-order", "2",
                       "--guard", "5")
    assert code == 0


def test_hr(capsys):
    code, out, _ = run(capsys, "hr", "--n", "100")
    assert code == 0
    assert "p_n = 190569292" in out
    ratio = float(out.split("ratio = ")[1])
    assert 0.9 < ratio < 1.1


@pytest.mark.parametrize("series", ["catalan", "lacunary-factorial", "multiplicative:shift",
                                    "rational:1/(1 - 2t + t^2)", "lacunary-powers:3"])
def test_expand_series_specs(capsys, series):
    code, out, _ = run(capsys, "expand", "--series", series, "--max-degree", "5")
    assert code == 0 and len(out.strip().split(",")) == 6


def test_expand_file_series(capsys, tmp_path):
    f = tmp_path / "a.txt"
    f.write_text("1\n0\n2\n")
    code, out, _ = run(capsys, "expand", "--series", f"file:{f}", "--max-degree", "2")
    assert code == 0 and out == "1,0,2\n"
