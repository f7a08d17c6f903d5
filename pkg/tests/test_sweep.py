import json

import numpy as np
import pytest

from jchsim.model import ModelParams
from jchsim.sweep import (
    CSV_HEADER,
    GridSpec,
    Thresholds,
    classify_phase,
    evaluate_point,
    fig9_scan,
    read_csv,
    records_to_csv,
    run_sweep,
    write_output,
)


def test_single_point_composition():
    grid = GridSpec(delta_values=[0.5], h_values=[0.1], n_values=[4])
    records = run_sweep(grid)
    assert len(records) == 1
    direct = evaluate_point(4, 0.5, 0.1)
    assert records[0] == direct


def test_canonical_order():
    grid = GridSpec(
        delta_values=[1.0, -1.0], h_values=[0.2, 0.1], n_values=[4, 2]
    )
    records = run_sweep(grid)
    keys = [(r.n_total, r.h, r.delta) for r in records]
    assert keys == [
        (2, 0.2, 1.0), (2, 0.2, -1.0), (2, 0.1, 1.0), (2, 0.1, -1.0),
        (4, 0.2, 1.0), (4, 0.2, -1.0), (4, 0.1, 1.0), (4, 0.1, -1.0),
    ]


def test_classify_phase_rules():
    thr = Thresholds()
    assert classify_phase(0.01, 0.2, [0.3, 0.4, 0.3], thr) == "polaritonic-insulator"
    assert classify_phase(0.2, 0.001, [0.9, 0.05, 0.05], thr) == "photonic-superfluid"
    assert classify_phase(0.2, 0.001, [0.05, 0.05, 0.9], thr) == "coexisting"
    assert classify_phase(0.2, 0.2, [0.2, 0.6, 0.2], thr) == "polaritonic-superfluid"
    assert classify_phase(0.2, 0.2, [0.2, 0.6, 0.2], thr, degenerate=True) == "indeterminate"


def test_phase_labels_at_reference_points():
    assert evaluate_point(4, 0.0, 1e-4).phase == "polaritonic-insulator"
    assert evaluate_point(4, -1e3, 1e-4).phase == "coexisting"
    assert evaluate_point(4, 1e3, 1e-4).phase == "photonic-superfluid"
    assert evaluate_point(4, -50.0, 50.0).phase == "polaritonic-superfluid"


def test_record_invariants():
    grid = GridSpec(
        delta_values=list(np.linspace(-6, 6, 7)), h_values=[1e-4, 1.0], n_values=[2, 4]
    )
    for r in run_sweep(grid):
        assert r.d_n1 >= 0 and r.d_n1a >= 0 and r.prod >= 0
        assert r.p_na0 + r.p_na1 + r.p_na2 == pytest.approx(1.0, abs=1e-10)
        assert r.gap >= 0
        assert r.phase in (
            "polaritonic-insulator", "photonic-superfluid", "coexisting",
            "polaritonic-superfluid", "indeterminate",
        )


def test_csv_round_trip(tmp_path):
    grid = GridSpec(
        delta_values=[-2.0, 0.0, 2.0], h_values=[0.01], n_values=[4]
    )
    records = run_sweep(grid)
    path = tmp_path / "out.csv"
    write_output(records, "csv", path)
    text = path.read_text()
    assert text.splitlines()[0] == CSV_HEADER
    back = read_csv(path)
    assert len(back) == len(records)
    for a, b in zip(records, back):
        for field in ("delta", "h", "energy", "gap", "d_n1", "d_n1a", "prod"):
            # 12 significant digits in the file: relative 5e-12 round-off
            assert getattr(b, field) == pytest.approx(
                getattr(a, field), rel=1e-11, abs=1e-11
            )
        assert b.phase == a.phase
        assert b.degenerate == a.degenerate


def test_csv_determinism(tmp_path):
    grid = GridSpec(
        delta_values=list(np.linspace(-3, 3, 5)), h_values=[0.02], n_values=[4, 6]
    )
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    write_output(run_sweep(grid), "csv", p1)
    write_output(run_sweep(grid), "csv", p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_parallel_matches_serial(tmp_path):
    grid = GridSpec(
        delta_values=list(np.linspace(-2, 2, 5)), h_values=[0.1], n_values=[2, 4]
    )
    serial = run_sweep(grid, jobs=1)
    parallel = run_sweep(grid, jobs=2)
    p1, p2 = tmp_path / "s.csv", tmp_path / "p.csv"
    write_output(serial, "csv", p1)
    write_output(parallel, "csv", p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_json_output(tmp_path):
    grid = GridSpec(delta_values=[0.0], h_values=[0.01], n_values=[4])
    records = run_sweep(grid)
    path = tmp_path / "out.json"
    write_output(records, "json", path)
    rows = json.loads(path.read_text())
    assert len(rows) == 1
    assert rows[0]["n_total"] == 4
    assert rows[0]["phase"] == records[0].phase
    assert rows[0]["energy"] == pytest.approx(records[0].energy)


def test_fig9_scan_slopes():
    n_values = list(range(4, 17, 2))
    records, fits = fig9_scan(25.0, 1e4, n_values)
    assert len(records) == 2 * len(n_values)
    assert fits["+"][0] == pytest.approx(0.25, abs=0.01)
    assert fits["-"][0] == pytest.approx(0.25, abs=0.01)
    assert fits["+"][1] == pytest.approx(0.0, abs=0.05)
    assert fits["-"][1] == pytest.approx(-0.5, abs=0.05)


def test_bad_inputs(tmp_path):
    with pytest.raises(ValueError):
        GridSpec(delta_values=[], h_values=[1.0], n_values=[4])
    with pytest.raises(ValueError):
        write_output([], "csv", tmp_path / "x.csv")
    with pytest.raises(ValueError):
        write_output([evaluate_point(2, 0.0, 0.1)], "xml", tmp_path / "x.xml")
