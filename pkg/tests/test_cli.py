import csv
import io
import json
import subprocess
import sys

import pytest

from finpart.cli import UsageError, main, parse_args, render_report
from finpart.idcat import lookup, perturbed, verify


def run(capsysbinary, *argv):
    code = main(list(argv))
    out = capsysbinary.readouterr()
    return code, out.out.decode(), out.err.decode()


def test_parse_examples():
    cfg = parse_args(["verify", "--id", "hamme", "--N", "3", "--order", "40"])
    assert (cfg.command, cfg.identity, cfg.params, cfg.order) == ("verify", "hamme", {"N": 3}, 40)
    cfg = parse_args(["table", "--fn", "spt", "--N", "3", "--max-n", "50", "--format", "csv"])
    assert (cfg.statistic, cfg.N, cfg.n_max, cfg.fmt) == ("spt", [3], 50, "csv")
    assert parse_args(["table", "--fn", "p", "--N", "1..3", "--max-n", "5"]).N == [1, 2, 3]


@pytest.mark.parametrize(
    "argv, flag",
    [
        (["verify", "--order", "0"], "--order"),
        (["verify", "--id", "hamme", "--order", "0"], "--order"),
        (["table", "--fn", "spt", "--N", "0", "--max-n", "5"], "--N"),
        (["scan-conjecture", "--k-max", "5"], "--k-max"),
        (["verify", "--id", "hamme", "--param", "c"], "--param"),
        ([], "subcommand"),
    ],
)
def test_usage_errors(argv, flag):
    with pytest.raises(UsageError, match=flag):
        parse_args(argv)


def test_usage_exit_code(capsysbinary):
    code, _, err = run(capsysbinary, "verify", "--order", "0")
    assert code == 2 and "--order" in err
    code, _, err = run(capsysbinary, "verify", "--id", "nonexistent", "--N", "3")
    assert code == 2 and "nonexistent" in err
    code, _, err = run(capsysbinary, "verify", "--id", "fin-yanfu", "--N", "3", "--param", "c=1")
    assert code == 2 and "c=1 forbidden" in err
    code, _, _ = run(capsysbinary, "check-congruence", "--N", "4")
    assert code == 2


def test_verify_json(capsysbinary):
    code, out, _ = run(capsysbinary, "verify", "--id", "hamme", "--N", "3", "--order", "40", "--format", "json")
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["identity"] == "hamme" and rec["pass"] is True and rec["firstMismatch"] is None
    assert rec["binding"] == {"N": 3} and rec["order"] == 40 and "millis" in rec


def test_verify_rational_params(capsysbinary):
    code, out, _ = run(
        capsysbinary,
        "verify", "--id", "master-abc", "--N", "4", "--param", "a=1/2", "--param", "b=1/3", "--param", "c=2/5",
        "--order", "40", "--format", "json", "--no-timing",
    )  # fmt: skip
    assert code == 0
    (rec,) = json.loads(out)
    assert rec["binding"] == {"N": 4, "a": "1/2", "b": "1/3", "c": "2/5"}
    assert "millis" not in rec


def test_formal_z_param(capsysbinary):
    code, _, _ = run(capsysbinary, "verify", "--id", "fin-garvan", "--N", "3", "--param", "z=z", "--order", "30")
    assert code == 0


def test_render_failing_report():
    bad = verify(perturbed(lookup("hamme"), 13), {"N": 3}, 30)
    (rec,) = json.loads(render_report([bad], "json", timing=False))
    assert rec["pass"] is False and rec["firstMismatch"]["n"] == 13
    assert rec["firstMismatch"]["lhs"].startswith("[")
    rows = list(csv.reader(io.StringIO(render_report([bad], "csv", timing=False).decode())))
    assert rows[0] == ["identity", "binding", "order", "pass", "mismatch_n", "lhs", "rhs"]
    assert rows[1][3] == "false" and rows[1][4] == "13"


def test_render_empty():
    assert json.loads(render_report([], "json")) == []


def test_render_sorted_and_deterministic():
    a = verify("merca", {"N": 2}, 10)
    b = verify("hamme", {"N": 10}, 10)
    c = verify("hamme", {"N": 2}, 10)
    one = render_report([a, b, c], "json", timing=False)
    two = render_report([c, a, b], "json", timing=False)
    assert one == two
    ids = [(r["identity"], r["binding"]["N"]) for r in json.loads(one)]
    assert ids == [("hamme", 2), ("hamme", 10), ("merca", 2)]


def test_table_spt(capsysbinary):
    code, out, _ = run(capsysbinary, "table", "--fn", "spt", "--N", "3", "--max-n", "10", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "n", "spt"]
    assert rows[7] == ["3", "6", "21"]


def test_table_generating_function_route(capsysbinary):
    code, out, _ = run(
        capsysbinary, "table", "--fn", "p", "--N", "3", "--max-n", "9", "--method", "generating-function", "--format", "json"
    )
    assert code == 0
    assert json.loads(out)[9] == {"N": 3, "n": 9, "p": 12}


def test_scan(capsysbinary):
    code, out, _ = run(capsysbinary, "scan-conjecture", "--k-max", "12", "--n-max", "20", "--N-max", "5")
    assert code == 0 and "all margins positive" in out


def test_congruence(capsysbinary):
    code, out, _ = run(capsysbinary, "check-congruence", "--N", "3", "--k-max", "200", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 201 and rows[1] == ["1", "1", "3", "3", "0"]


def test_asymptotics(capsysbinary):
    code, out, _ = run(capsysbinary, "asymptotics", "--N", "1", "--samples", "5,10", "--format", "json")
    assert code == 0
    assert [r["ratio"] for r in json.loads(out)] == ["1", "1"]


def test_output_file(tmp_path, capsysbinary):
    path = tmp_path / "out.json"
    code, out, _ = run(capsysbinary, "verify", "--id", "merca", "--N", "2", "--order", "10", "-o", str(path), "--format", "json")
    assert code == 0 and out == ""
    assert json.loads(path.read_text())[0]["identity"] == "merca"


def test_verify_all_quick_byte_identical(capsysbinary):
    argv = ["verify-all", "--profile", "quick", "--order", "12", "--format", "json", "--no-timing"]
    code1, out1, _ = run(capsysbinary, *argv)
    code2, out2, _ = run(capsysbinary, *argv)
    assert code1 == code2 == 0
    assert out1 == out2
    data = json.loads(out1)
    assert [r["identity"] for r in data] == sorted(r["identity"] for r in data)


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "finpart.cli", "table", "--fn", "p", "--N", "3", "--max-n", "6", "--format", "csv"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip().splitlines()[-1] == "3,6,7"
