import io
import json
import subprocess
import sys

import pytest

from homrat.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_invariants_text_and_json():
    code, text = run("invariants", "--group", "A2+2A1")
    assert code == 0 and "dim 14" in text
    code, js = run("invariants", "--group", "G2", "--subgroup", "maxrank:A2", "--format", "json")
    d = json.loads(js)
    assert d["dim"] == 14 and d["quotient"]["dim"] == 6
    assert d["input"]["group"] == "G2"


def test_radical_counts_in_dim():
    _, js = run("invariants", "--group", "A1", "--radical", "2", "--format", "json")
    assert json.loads(js)["dim"] == 5


def test_enumerate_text_and_json_agree():
    _, text = run("enumerate", "--group", "G2", "--depth", "1")
    _, js = run("enumerate", "--group", "G2", "--depth", "1", "--json")
    rows = [json.loads(line) for line in js.splitlines()]
    names = [line.split()[0] for line in text.splitlines()]
    assert names == ["A2", "A1+T1", "2A1"]
    assert [r["semisimple_part"] + (f"+T{r['torus']}" if r["torus"] else "") for r in rows] == names


def test_certify_text_and_json_agree():
    args = ("certify", "--group", "C3", "--subgroup", "maxrank:C2+A1")
    _, text = run(*args)
    _, js = run(*args, "--format", "json")
    d = json.loads(js)
    assert "status: Rational" in text and d["status"] == "Rational"
    assert d["certificate"]["rule"] in text
    assert d["input"] == {"group": "C3", "subgroup": "maxrank:C2+A1", "char": 0, "radical": 0}


def test_certify_frontier_text():
    code, text = run(
        "certify", "--group", "G2", "--subgroup",
        "general:levi=A1,torus=0,unip=0,connected=yes,parabolic=no,kernel0=yes",
    )
    assert code == 0 and "status: Unknown" in text and "frontier: G2-REGULAR-A1" in text


def test_expand_trace():
    _, js = run("certify", "--group", "G2", "--subgroup", "maxrank:A2", "--format", "json", "--expand-trace")
    assert json.loads(js)["certificate"]["rule"] == "R-B23C3G2"


@pytest.mark.parametrize(
    "argv",
    [
        ("invariants", "--group", "X5"),
        ("certify", "--group", "G2", "--subgroup", "maxrank:X9"),
        ("certify", "--group", "G2"),
        ("certify", "--group", "A1", "--subgroup", "general:levi=A2"),
        ("certify", "--group", "G2", "--subgroup", "general:levi=A1,unip=2,parabolic=no"),
        ("invariants", "--group", "A2", "--char", "4"),
        ("enumerate", "--group", "A2", "--depth", "0"),
        ("table", "nosuch"),
    ],
)
def test_bad_input_exits_2(argv, capsys):
    code, _ = run(*argv)
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_parse_error_reports_position(capsys):
    run("certify", "--group", "G2", "--subgroup", "maxrank:X9")
    err = capsys.readouterr().err
    assert "'X9'" in err and "position 8" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2


def test_table_text_and_json():
    code, text = run("table", "b23c3g2")
    assert code == 0 and "12 < 14" in text and "8 < 12" in text
    _, js = run("table", "b23c3g2", "--format", "json")
    d = json.loads(js)
    assert (d["B3"]["dim_G"], d["G2"]["dim_G"]) == (21, 14)


def _certify_doc(group, sub):
    _, js = run("certify", "--group", group, "--subgroup", sub, "--format", "json")
    return json.loads(js)


def test_validate_round_trip(tmp_path):
    p = tmp_path / "cert.json"
    p.write_text(json.dumps(_certify_doc("A2+A1", "maxrank:2A1+T1")))
    code, text = run("validate", str(p))
    assert code == 0 and text.strip() == "valid"


def test_validate_tampered(tmp_path):
    doc = _certify_doc("G2", "maxrank:A2")
    doc["invariants"]["dim"] = 60
    p = tmp_path / "cert.json"
    p.write_text(json.dumps(doc))
    code, text = run("validate", str(p))
    assert code == 1 and text.startswith("invalid at node []")


def test_validate_garbage(tmp_path):
    p = tmp_path / "cert.json"
    p.write_text("not json")
    assert run("validate", str(p))[0] == 2


def test_module_entry_point_and_stdin():
    doc = _certify_doc("C2", "maxrank:2A1")
    r = subprocess.run(
        [sys.executable, "-m", "homrat", "validate"], input=json.dumps(doc), capture_output=True, text=True
    )
    assert r.returncode == 0 and r.stdout.strip() == "valid"
