import json

import pytest

from braidsurf.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariant_trefoil(capsys):
    code, out, _ = run(capsys, "invariant", "--braid", "1 1 1", "--strands", "2", "--k", "3")
    assert code == 0
    assert "P_3 = 6*z^4 - 8*z^2" in out
    assert "f_1^(3)=20" in out and "f_2^(3)=-14" in out
    rows = {int(line.split()[0]): line.split()[1:] for line in out.splitlines() if line.strip()[:1].isdigit()}
    assert rows[2][:2] == ["1", "2"] and rows[4][:2] == ["1", "1"]


@pytest.mark.parametrize("braid,expected", [("", "P_1 = 0"), ("1 1", "P_1 = z")])
def test_invariant_conway_layer(capsys, braid, expected):
    code, out, _ = run(capsys, "invariant", "--braid", braid, "--strands", "2", "--k", "1")
    assert code == 0 and expected in out


def test_invariant_json(capsys):
    code, out, _ = run(capsys, "invariant", "--braid", "1 1 1", "--strands", "2", "--k", "3", "--json")
    data = json.loads(out)
    assert data["P"] == [{"z": 2, "c": "-8"}, {"z": 4, "c": "6"}]
    assert data["f"]["1"] == "20"
    assert data["D"]["2"][2] == "2"


@pytest.mark.parametrize("braid,strands,k,value", [
    ("1 1 1", "2", "2", "6*z^4 - 8*z^2"),
    ("1 -2 1 -2", "3", "0", "-z^2 + 1"),
    ("", "3", "1", "0"),
])
def test_verify_passes(capsys, braid, strands, k, value):
    code, out, _ = run(capsys, "verify", "--braid", braid, "--strands", strands, "--k", k)
    assert code == 0
    assert "PASS" in out
    assert out.count(f"= {value}\n") == 3


def test_oracle_command(capsys):
    code, out, _ = run(capsys, "oracle", "--braid", "1 1 1", "--strands", "2")
    assert code == 0 and "P = a^-2*z^2 + 2*a^-2 - a^-4" in out
    code, out, _ = run(capsys, "oracle", "--braid", "1 1 1", "--strands", "2", "--k", "2", "--json")
    assert json.loads(out)["text"] == "6*z^4 - 8*z^2"


def test_states_trefoil(capsys):
    code, out, _ = run(capsys, "states", "--braid", "1 1 1", "--strands", "2", "--k", "3", "--j", "2", "--json")
    assert code == 0
    data = json.loads(out)
    (rec,) = data["colorings"]
    assert rec["coloring"]["based"] == [1, 2]
    assert [s["arrows"] for s in rec["states"]] == [[0], [2], [0, 1, 2]]
    assert [s["b"] for s in rec["states"]] == [2, 2, 2]
    assert data["diagram"]["arrows"][0]["sign"] == 1


def test_states_identity_and_empty(capsys):
    code, out, _ = run(capsys, "states", "--braid", "", "--strands", "1", "--k", "1", "--json")
    data = json.loads(out)
    assert [s["arrows"] for s in data["colorings"][0]["states"]] == [[]]
    code, out, _ = run(capsys, "states", "--braid", "1", "--strands", "2", "--k", "3", "--j", "3")
    assert code == 0 and "note: no colorings with 3 base points" in out


def test_states_ascending(capsys):
    code, out, _ = run(capsys, "states", "--braid", "1 1 1", "--strands", "2", "--k", "2", "--ascending")
    assert code == 0 and "ascending state" in out


def test_exit_codes(capsys):
    assert run(capsys, "invariant", "--braid", "1 0")[0] == 2
    code, _, err = run(capsys, "invariant", "--braid", "1 x")
    assert code == 2 and "'x'" in err
    assert run(capsys, "invariant", "--braid", "1 1 1 1", "--max-arrows", "3")[0] == 3
    assert run(capsys, "oracle", "--braid", "1 1 1 1", "--max-letters", "3")[0] == 3
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2


def test_random_check_campaign(capsys):
    code, out, _ = run(capsys, "random-check", "--strands", "3", "--letters", "7", "--samples", "50",
                       "--max-k", "2", "--seed", "7")
    assert code == 0
    assert out.strip().endswith("PASS: 50/50 samples clean")
    code2, out2, _ = run(capsys, "random-check", "--strands", "3", "--letters", "7", "--samples", "50",
                         "--max-k", "2", "--seed", "7")
    assert out2 == out


def test_random_check_empty(capsys):
    code, out, _ = run(capsys, "random-check", "--samples", "0")
    assert code == 0 and "PASS: 0/0" in out
