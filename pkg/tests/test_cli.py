import io
import json
import subprocess
import sys

import pytest

from gradedlie.cli import run


def call(argv, stdin=None, monkeypatch=None, capsys=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = run(argv)
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


@pytest.fixture
def cli(monkeypatch, capsys):
    return lambda argv, stdin=None: call(argv, stdin, monkeypatch, capsys)


def test_build_round_trip(cli):
    code, alg = cli(["build", "free", "2", "3"])
    assert code == 0
    assert alg["dims"] == {"-3": 2, "-2": 1, "-1": 2}
    code, rep = cli(["check", "--expect-fundamental"], json.dumps(alg))
    assert code == 0 and rep["failed"] == []


def test_prolong_pipeline(cli):
    _, alg = cli(["build", "free", "2", "3"])
    code, rep = cli(["prolong", "--max-degree", "5"], json.dumps(alg))
    assert code == 0
    assert rep["layer_dims"] == [4, 2, 1, 2, 0]
    assert rep["status"] == "terminated"
    code, chk = cli(["check", "--expect-transitive"], json.dumps(rep))
    assert code == 0 and chk["checks"]["transitive"]["ok"]


def test_compare_with_simple_gradation(cli, tmp_path):
    _, alg = cli(["build", "free", "2", "3"])
    _, rep = cli(["prolong", "--max-degree", "5"], json.dumps(alg))
    a = tmp_path / "a.json"
    a.write_text(json.dumps(rep))
    b = tmp_path / "b.json"
    assert cli(["simple-gradation", "--type", "G", "--rank", "2", "--cross", "1", "--out", str(b)])[0] == 0
    code, out = cli(["compare", str(a), str(b)])
    assert code == 0 and out["equal"]
    assert out["a"] == [2, 1, 2, 4, 2, 1, 2]
    c = tmp_path / "c.json"
    cli(["simple-gradation", "--type", "B", "--rank", "3", "--cross", "3", "--out", str(c)])
    code, out = cli(["compare", str(a), str(c)])
    assert code == 2 and not out["equal"] and out["witness"]


def test_pseudo_product_flag(cli):
    _, alg = cli(["build", "pp", "1", "2", "2"])
    code, rep = cli(["prolong", "--max-degree", "4", "--pseudo-product"], json.dumps(alg))
    assert code == 0 and rep["layer_dims"] == [5, 3, 2, 0] and rep["restricted"]
    _, free = cli(["build", "free", "2", "2"])
    assert cli(["prolong", "--max-degree", "1", "--pseudo-product"], json.dumps(free))[0] == 1


def test_cartan(cli):
    code, rep = cli(["cartan", "K", "--n", "1", "--degrees", "-2..3"])
    assert code == 0 and rep["dim_vector"] == [1, 2, 4, 6, 9, 12]
    code, rep = cli(["cartan", "W", "--vars", "3", "--weights", "1,2,2", "--degrees", "-2..1"])
    assert code == 0 and rep["dim_vector"] == [2, 3, 7, 9]


def test_check_reports_jacobi_failure(cli):
    _, alg = cli(["build", "free", "3", "3"])
    # perturb [[x1,x2],x3]
    for b in alg["brackets"]:
        if (b["p"], b["i"], b["q"], b["j"]) == (-2, 0, -1, 2):
            b["out"][0] = str(int(b["out"][0]) + 1)
    code, rep = cli(["check"], json.dumps(alg))
    assert code == 2
    assert rep["failed"] == ["jacobi"]
    assert rep["checks"]["jacobi"]["witness"]


@pytest.mark.parametrize(
    "argv,stdin",
    [
        (["nonsense"], None),
        (["build", "free", "2"], None),
        (["build", "free", "1", "3"], None),
        (["build", "free", "x", "3"], None),
        (["simple-gradation", "--type", "E", "--rank", "6", "--cross", "1"], None),
        (["cartan", "K", "--degrees", "-2..3"], None),
        (["cartan", "W", "--vars", "2", "--weights", "1", "--degrees", "0..1"], None),
        (["cartan", "K", "--n", "1", "--degrees", "3..1"], None),
        (["prolong", "--max-degree", "2"], "not json"),
        (["prolong", "--max-degree", "2"], '{"hello": 1}'),
        (["reproduce", "thm7.1", "--max", "2"], None),
    ],
)
def test_invalid_arguments_exit_1(cli, argv, stdin):
    assert cli(argv, stdin)[0] == 1


def test_reproduce_prop(cli):
    code, table = cli(["reproduce", "prop8.3", "--max", "2"])
    assert code == 0 and table["all_pass"]
    assert len(table["rows"]) == 4
    row = table["rows"][-1]
    assert row["expected"] == row["got"] == [4, 4, 12]


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradedlie", "build", "model3", "1", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    data = json.loads(proc.stdout)
    assert data["dims"] == {"-3": 2, "-2": 1, "-1": 2}
    assert "pseudo_product" in data
