import json

import pytest

from chdyn.cli import main, parse_bracket, parse_complex, parse_res


def test_arg_parsers():
    assert parse_complex("1.5,-2") == 1.5 - 2j
    assert parse_complex("3") == 3 + 0j
    assert parse_res("64x32") == (64, 32)
    b = parse_bracket("-0.03,-0.01")
    assert (b.lo, b.hi) == (-0.03, -0.01)
    with pytest.raises(Exception):
        parse_complex("nope,x")


def test_classify_command(capsys):
    rc = main(["classify", "--family", "ch", "--a", "-0.0164"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["class"] == "Sierpinski"
    assert doc["m"] == 3


def test_classify_mcmullen_command(capsys):
    rc = main(["classify", "--family", "mcmullen", "--lambda", "-0.455"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["class"] == "Cantor"


def test_classify_error_exit_code(capsys):
    # a = 0 is degenerate: typed error -> exit code 2
    assert main(["classify", "--family", "ch", "--a", "0"]) == 2
    assert "error" in capsys.readouterr().err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--family", "bogus"])
    assert exc.value.code == 1


def test_missing_parameter_is_typed_error(capsys):
    assert main(["classify", "--family", "ch"]) == 2


def test_find_special_command(capsys, tmp_path):
    out = tmp_path / "aq.json"
    rc = main(["find-special", "--target", "a-q", "--out", str(out)])
    assert rc == 0
    doc = json.loads(out.read_text())
    assert doc["kind"] == "a_q"
    assert -0.028 < doc["value"] < -0.0164
    assert doc["residual"] <= 1e-10


def test_find_special_q0(capsys):
    rc = main(["find-special", "--target", "q0", "--a", "0"])
    assert rc == 0
    doc = json.loads(capsys.readouterr().out)
    assert 0.15 < doc["q0"] < 0.30
    assert doc["q_inf"] > 1


def test_verify_command(capsys):
    rc = main(["verify", "--suite", "symmetry"])
    assert rc == 0
    assert json.loads(capsys.readouterr().out)["class"] == "pass"


def test_verify_normalize(capsys):
    assert main(["verify", "--suite", "normalize"]) == 0


def test_render_commands(tmp_path, capsys):
    ppm = tmp_path / "dyn.ppm"
    csv = tmp_path / "dyn.csv"
    rc = main([
        "render-dyn", "--family", "ch", "--a", "1.0", "--width", "3.0",
        "--res", "16x16", "--max-iter", "40", "--out", str(ppm), "--csv", str(csv),
    ])
    assert rc == 0
    assert ppm.read_bytes().startswith(b"P6\n16 16\n255\n")
    assert csv.read_text().startswith("i,j,re,im,class,iter")

    ppm2 = tmp_path / "param.ppm"
    rc = main([
        "render-param", "--family", "ch", "--center=-0.02,0", "--width", "0.01",
        "--res", "8x8", "--max-iter", "60", "--out", str(ppm2),
    ])
    assert rc == 0
    assert ppm2.read_bytes().startswith(b"P6\n8 8\n255\n")


def test_render_io_error(tmp_path):
    rc = main([
        "render-dyn", "--family", "ch", "--a", "1.0", "--width", "3.0",
        "--res", "4x4", "--out", str(tmp_path / "no-such-dir" / "x.ppm"),
    ])
    assert rc == 1
