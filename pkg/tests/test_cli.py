import json

import pytest

from twistcalc.cli import main

ID_TABLE = '{"d":1,"entries":{"1":{"0":1}}}'
QUAD_TABLE = '{"d":2,"entries":{"2":{"0":1},"1,1":{"0":1}}}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "argv,expected",
    [
        (["er", "--p", "2", "--r", "1"], {"0": 1, "2": 1}),
        (["tensor", "--a", '{"0":1,"2":1}', "--b", '{"0":1,"2":1}'], {"0": 1, "2": 2, "4": 1}),
        (["stretch", "--a", '{"0":1,"2":1}', "--p", "3"], {"0": 1, "6": 1}),
        (["sym-hilbert", "--dim", "1", "--shifts", "0,2", "--coh", "2", "--poly", "2"], [[0, 0, 1], [0, 1, 1], [0, 2, 1], [2, 1, 1], [2, 2, 1]]),
        (["decompose", "--d", "2", "--param", '{"0":1,"2":1}'], [[[2], 0], [[1, 1], 2], [[2], 4]]),
        (["decompose", "--d", "1", "--param", '{"0":1}', "--bifunctor", "--p", "2", "--source"], [[[[1, 0]], 0], [[[0, 1]], 2]]),
        (["untwist", "--table", ID_TABLE, "--p", "2", "--r", "2"], {"0": 1, "2": 1, "4": 1, "6": 1}),
        (["untwist", "--table", '{"d":2,"entries":{"2":{"0":1},"1,1":{}}}', "--param", '{"0":1,"2":1}'], {"0": 1, "4": 1}),
        (["oracle", "ext", "--p", "2", "--left", "Fr(1)", "--right", "Fr(1)", "--maxdeg", "4"], {"0": 1, "2": 1}),
        (["steinberg", "goodshift", "--u", "5", "--head", "0", "--tail", "1", "--word", "V0,1,V2"],
         {"shift": {"base": ["V0", "1", "V2"], "twist": 0, "word": ["V0", "1", "V2"]}}),
    ],
)
def test_outputs(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert json.loads(out) == expected


def test_fit(capsys):
    code, out, _ = run(capsys, "fit", "--table", QUAD_TABLE, "--p", "2", "--rmax", "5")
    assert code == 0
    data = json.loads(out)
    assert data["coefficients"] == ["0", "1/2", "1/2"] and data["degree"] == 2


def test_steinberg_orbit(capsys):
    code, out, _ = run(capsys, "steinberg", "orbit", "--u", "5", "--word", "V0,1,V2")
    assert json.loads(out)["rendered"][3] == "V2⊗V0^(3)"
    code, out, _ = run(capsys, "steinberg", "qshifts", "--u", "5", "--word", "V0,1,V2")
    assert [q["twist"] for q in json.loads(out)["qshifts"]] == [0, 1, 2, 0, 1]


def test_classes_check(capsys):
    code, out, _ = run(capsys, "classes", "check", "--d", "2", "--l", "1", "--p", "2")
    assert code == 0 and json.loads(out)["ok"]


def test_crosscheck(capsys):
    code, out, _ = run(capsys, "crosscheck", "--left", "Id", "--family", "Id", "--p", "2", "--r", "1", "--maxdeg", "4")
    assert code == 0 and json.loads(out)["agree"]


def test_table_format(capsys):
    code, out, _ = run(capsys, "--format", "table", "er", "--p", "3", "--r", "1")
    assert code == 0
    assert [line.split() for line in out.strip().splitlines()] == [["0", "1"], ["2", "1"], ["4", "1"]]


def test_table_from_file(capsys, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(ID_TABLE)
    for ref in (f"@{path}", str(path)):
        code, out, _ = run(capsys, "untwist", "--table", ref, "--p", "3", "--r", "1")
        assert code == 0 and json.loads(out) == {"0": 1, "2": 1, "4": 1}


@pytest.mark.parametrize(
    "argv,code",
    [
        (["untwist", "--table", '{"d":2,"entries":{"2":{"0":1}}}', "--p", "2", "--r", "1"], 10),
        (["fit", "--table", QUAD_TABLE, "--p", "2", "--rmax", "5", "--degree-bound", "1"], 12),
        (["crosscheck", "--left", "Id", "--family", "Id", "--p", "2", "--r", "2", "--maxdeg", "4"], 21),
        (["er", "--p", "4", "--r", "1"], 2),
        (["oracle", "ext", "--p", "2", "--left", "Foo", "--right", "Fr(1)", "--maxdeg", "1"], 2),
        (["tensor", "--a", "{bad", "--b", "{}"], 2),
        (["untwist", "--table", "@/nonexistent/file.json", "--p", "2", "--r", "1"], 2),
        (["nosuchcommand"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, out, err = run(capsys, *argv)
    assert got == code
    assert out == ""
    assert err


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("TWISTCALC_BUDGET", "max_algebra_dim=5")
    code, _, err = run(capsys, "oracle", "ext", "--p", "2", "--left", "Fr(1)", "--right", "Fr(1)", "--maxdeg", "2")
    assert code == 21 and "BUDGET" in err


def test_deterministic_output(capsys):
    argv = ["oracle", "table", "--d", "2", "--p", "2", "--left", "Sym(2)", "--family", "Div", "--maxdeg", "3"]
    first = run(capsys, *argv)[1]
    second = run(capsys, *argv)[1]
    assert first == second == '{"d":2,"entries":{"2":{"0":1,"1":1,"2":1},"1,1":{"0":1}}}\n'


def test_selftest_quick(capsys):
    code, out, err = run(capsys, "selftest", "--quick")
    assert code == 0
    summary = json.loads(out)
    assert summary["passed"] == summary["total"] == 11
    assert all(r["ok"] for r in summary["results"])
    assert err.count("PASS") == 11
