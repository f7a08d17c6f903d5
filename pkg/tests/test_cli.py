import json

from jchsim.cli import main
from jchsim.sweep import CSV_HEADER


def test_solve_n0(capsys):
    assert main(["solve", "--n", "0"]) == 0
    out = capsys.readouterr().out
    assert "energy     0" in out
    assert "phase" in out


def test_solve_resonant_insulator(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code = main(
        [
            "solve", "--n", "4", "--delta", "0", "--hopping", "0.005",
            "--json", str(report_path),
        ]
    )
    assert code == 0
    out = capsys.readouterr().out
    assert "polaritonic-insulator" in out
    report = json.loads(report_path.read_text())
    assert report["p_group"][0]["probability"] > 0.97
    assert report["phase"] == "polaritonic-insulator"


def test_solve_coexisting(capsys):
    assert main(["solve", "--n", "4", "--delta", "-1000", "--hopping", "1e-4"]) == 0
    out = capsys.readouterr().out
    assert "coexisting" in out


def test_usage_error(capsys):
    assert main(["solve", "--n"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["solve"]) == 2  # missing required --n
    capsys.readouterr()


def test_negative_n(capsys):
    assert main(["solve", "--n", "-2"]) == 2
    capsys.readouterr()


def test_sweep_and_determinism(tmp_path, capsys):
    args = [
        "sweep", "--n", "4", "--delta=-8:8:9", "--hopping", "1e-4",
        "--out", str(tmp_path / "a.csv"),
    ]
    assert main(args) == 0
    args[-1] = str(tmp_path / "b.csv")
    assert main(args) == 0
    capsys.readouterr()
    a = (tmp_path / "a.csv").read_bytes()
    assert a == (tmp_path / "b.csv").read_bytes()
    lines = a.decode().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 9


def test_gaps_stdout(capsys):
    assert main(["gaps", "--delta", "0"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("delta,gap1")
    first_gap = float(out[1].split(",")[1])
    assert abs(first_gap - 0.09637) < 1e-4


def test_fig9(tmp_path, capsys):
    path = tmp_path / "f9.csv"
    assert main(["fig9", "--n", "4,6,8", "--out", str(path)]) == 0
    out = capsys.readouterr().out
    assert "slope" in out
    assert len(path.read_text().splitlines()) == 1 + 6


def test_check_single(capsys):
    assert main(["check", "--only", "gap-n4"]) == 0
    out = capsys.readouterr().out
    assert "PASS" in out and "gap-n4" in out


def test_check_failing_exits_one(capsys):
    # this oracle is known to sit outside its stated bound; the CLI must
    # report it and exit nonzero rather than hide it
    assert main(["check", "--only", "resonance-insulator"]) == 1
    out = capsys.readouterr()
    assert "FAIL" in out.out
    assert "resonance-insulator" in out.err


def test_check_unknown_name(capsys):
    assert main(["check", "--only", "no-such-check"]) == 2
    capsys.readouterr()
