import json

from bowcalc.cli import main

RES = "0/1/3/5\\3\\2\\0"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_fixed_points(capsys):
    code, out, _ = run(capsys, "fixed-points", "--diagram", RES, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "bowcalc/1"
    assert data["result"]["count"] == 5
    keys = [p["key"] for p in data["result"]["points"]]
    assert keys == sorted(keys)


def test_byte_identical_output(capsys):
    args = ("stab", "--diagram", RES, "--eval", "101101010", "--arg", "101110001", "--json")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2


def test_stab_golden(capsys):
    code, out, _ = run(
        capsys,
        "stab",
        "--diagram", RES,
        "--eval", "101101010",
        "--arg", "101110001",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["result"]["value"] == "t1*t2*h - t1*t3*h + t1*h^2 - t2^2*h + t2*t3*h - t3*h^2 + h^3"


def test_restrict_golden(capsys):
    code, out, _ = run(
        capsys,
        "restrict",
        "--diagram", "0/2/3/4/5\\4/4\\1/0",
        "--tie", "010101101011",
        "--bundle", "2",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["result"]["euler"] == "t1*t2 - 4*t1*h - 3*t2*h + 12*h^2"
    assert data["result"]["weights"] == [
        {"t": [0, 1], "h": -4},
        {"t": [1, 0], "h": -3},
    ]


def test_cm_column(capsys):
    code, out, _ = run(
        capsys, "cm", "--diagram", "0/1/3/4/5\\4\\3\\1\\0", "--bundle", "3", "--json"
    )
    assert code == 0
    data = json.loads(out)
    offdiag = [e for e in data["result"]["entries"] if e["row"] != e["col"]]
    assert all(e["value"] in ("h", "-h") for e in offdiag)


def test_verify_roundtrip(capsys):
    code, out, _ = run(capsys, "verify", "--diagram", "0/1/2\\1\\0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["report"]["ok"] is True


def test_hw(capsys):
    code, out, _ = run(capsys, "hw", "--diagram", "0\\1/0", "--position", "2", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["result"] == "0/0\\0"
    code, _, err = run(capsys, "hw", "--diagram", "0\\2/0", "--position", "2", "--json")
    assert code == 3


def test_separate(capsys):
    code, out, _ = run(capsys, "separate", "--diagram", "0/1/2/4\\4\\4\\4\\4\\4\\4/0", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["result"]["separated"] == "0/1/2/4/6\\5\\4\\3\\2\\1\\0"
    assert len(data["result"]["moves"]) == 6


def test_inadmissible_diagram(capsys):
    code, _, err = run(capsys, "fixed-points", "--diagram", "0/2\\2\\0", "--json")
    assert code == 3
    assert "inadmissible" in err or "invalid" in err


def test_bad_tie_key(capsys):
    code, _, err = run(capsys, "restrict", "--diagram", RES, "--tie", "111", "--bundle", "2")
    assert code == 3


def test_render(capsys):
    code, out, _ = run(
        capsys, "render", "--diagram", RES, "--tie", "101101010", "--bct"
    )
    assert code == 0
    assert "path:" in out


def test_stab_table(capsys):
    code, out, _ = run(capsys, "stab", "--diagram", "0/1/2\\1\\0", "--all", "--json")
    assert code == 0
    data = json.loads(out)
    rows = data["result"]["rows"]
    assert set(rows) == {"0110", "1001"}
    assert rows["1001"]["0110"] == "0"  # triangularity


def test_pair_orthogonality(capsys):
    code, out, _ = run(
        capsys,
        "pair",
        "--diagram", "0/1/2\\1\\0",
        "--tie", "1001",
        "--tie2", "1001",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["result"]["value"] == "1"
    code, out, _ = run(
        capsys,
        "pair",
        "--diagram", "0/1/2\\1\\0",
        "--tie", "1001",
        "--tie2", "0110",
        "--json",
    )
    assert json.loads(out)["result"]["value"] == "0"
