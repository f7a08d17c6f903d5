"""Parameter sweeps over (detuning, hopping, excitation number) grids,
phase classification, and CSV/JSON output.

Grid points are independent solves; records are always emitted in
(n_total, hopping, detuning) lexicographic order so output files are
byte-stable regardless of the execution schedule.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
import json
import math

import numpy as np

from jchsim.hilbert import Basis
from jchsim.model import ModelParams, build_hamiltonian
from jchsim.observables import (
    atom_moments,
    site_moments,
    total_atomic_distribution,
    variance_product,
)
from jchsim.solver import SolverError, ground_state

CSV_HEADER = (
    "delta,h,n_total,energy,gap,d_n1,d_n1_rel,d_n1a,"
    "prod,prod_rel,p_na0,p_na1,p_na2,phase,degenerate"
)

PHASE_LABELS = (
    "polaritonic-insulator",
    "photonic-superfluid",
    "coexisting",
    "polaritonic-superfluid",
    "indeterminate",
)


@dataclass(frozen=True)
class Thresholds:
    """Classification cutoffs; the boundaries are drawn numerically, so the
    defaults are explicit and tunable rather than claimed from theory."""

    eps_sf: float = 0.05  # on d_n1 / N
    eps_a: float = 0.01  # on d_n1a


@dataclass
class GridSpec:
    delta_values: list
    h_values: list
    n_values: list
    include_omega_c: bool = False

    def __post_init__(self):
        if not self.delta_values or not self.h_values or not self.n_values:
            raise ValueError("every grid axis needs at least one value")

    def points(self):
        """Canonical (n_total, h, delta) order."""
        for n in sorted(self.n_values):
            for h in self.h_values:
                for d in self.delta_values:
                    yield int(n), float(h), float(d)


@dataclass
class SweepRecord:
    delta: float
    h: float
    n_total: int
    energy: float
    gap: float
    d_n1: float
    d_n1_rel: float
    d_n1a: float
    prod: float
    prod_rel: float
    p_na0: float
    p_na1: float
    p_na2: float
    phase: str
    degenerate: bool
    failed: bool = field(default=False, compare=False)


def classify_phase(d_n1_rel, d_n1a, p_na, thresholds=Thresholds(), degenerate=False):
    """Map the order parameters of one record to a phase label."""
    if degenerate:
        return "indeterminate"
    if d_n1_rel < thresholds.eps_sf:
        return "polaritonic-insulator"
    if d_n1a < thresholds.eps_a and p_na[0] > 0.5:
        return "photonic-superfluid"
    if d_n1a < thresholds.eps_a and p_na[2] > 0.5:
        return "coexisting"
    return "polaritonic-superfluid"


def evaluate_point(
    n_total, delta, hopping, base_params=ModelParams(), thresholds=Thresholds(), basis=None
) -> SweepRecord:
    """Solve one grid point; every observable comes from the same eigenvector."""
    if basis is None:
        basis = Basis(n_total)
    params = ModelParams(
        omega_c=base_params.omega_c,
        delta=delta,
        coupling=base_params.coupling,
        hopping=hopping,
    )
    try:
        gs = ground_state(build_hamiltonian(params, basis))
    except SolverError:
        nan = float("nan")
        return SweepRecord(
            delta, hopping, n_total, nan, nan, nan, nan, nan, nan, nan,
            nan, nan, nan, "indeterminate", False, failed=True,
        )
    if basis.dimension == 1:
        p_na = total_atomic_distribution(gs.vector, basis)
        return SweepRecord(
            delta, hopping, n_total, gs.energy, gs.gap_to_first_excited,
            0.0, 0.0, 0.0, 0.0, 0.0, p_na[0], p_na[1], p_na[2],
            "polaritonic-insulator", False,
        )
    sm = site_moments(gs.vector, basis, 1)
    am = atom_moments(gs.vector, basis, 1)
    p_na = total_atomic_distribution(gs.vector, basis)
    prod, prod_rel = variance_product(sm, am)
    phase = classify_phase(sm.relative_variance, am.variance, p_na, thresholds, gs.degenerate)
    return SweepRecord(
        delta, hopping, n_total, gs.energy, gs.gap_to_first_excited,
        sm.variance, sm.relative_variance, am.variance, prod, prod_rel,
        float(p_na[0]), float(p_na[1]), float(p_na[2]), phase, gs.degenerate,
    )


def _eval_star(args):
    n, h, d, base, thresholds = args
    return evaluate_point(n, d, h, base, thresholds)


def run_sweep(grid: GridSpec, base_params=ModelParams(), thresholds=Thresholds(), jobs=1):
    """One record per grid point, in canonical order."""
    pts = list(grid.points())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(
                pool.map(
                    _eval_star,
                    [(n, h, d, base_params, thresholds) for n, h, d in pts],
                    chunksize=max(1, len(pts) // (4 * jobs)),
                )
            )
    else:
        cache = {}
        records = []
        for n, h, d in pts:
            if n not in cache:
                cache[n] = Basis(n)
            records.append(evaluate_point(n, d, h, base_params, thresholds, cache[n]))
    return records


def fig9_scan(hopping, delta_magnitude, n_values, coupling=1.0):
    """Site-excitation variance vs total excitation at both large-detuning
    signs; returns (records, fits) where fits maps '+'/'-' to
    (slope, intercept) of the least-squares line."""
    records = []
    fits = {}
    for sign, key in ((+1, "+"), (-1, "-")):
        pts = []
        for n in sorted(n_values):
            rec = evaluate_point(
                n, sign * delta_magnitude, hopping, ModelParams(coupling=coupling)
            )
            records.append(rec)
            pts.append((n, rec.d_n1))
        arr = np.array(pts)
        slope, intercept = np.polyfit(arr[:, 0], arr[:, 1], 1)
        fits[key] = (float(slope), float(intercept))
    return records, fits


def _fmt(x):
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return "%.12g" % x


_CSV_FIELDS = (
    "delta", "h", "n_total", "energy", "gap", "d_n1", "d_n1_rel", "d_n1a",
    "prod", "prod_rel", "p_na0", "p_na1", "p_na2", "phase", "degenerate",
)


def records_to_csv(records) -> str:
    lines = [CSV_HEADER]
    for r in records:
        d = asdict(r)
        lines.append(
            ",".join(
                d[f] if f == "phase" else _fmt(d[f]) for f in _CSV_FIELDS
            )
        )
    return "\n".join(lines) + "\n"


def write_output(records, fmt, path):
    """Write records as CSV (fixed header, 12 significant digits) or JSON."""
    if not records:
        raise ValueError("no records to write")
    if fmt == "csv":
        text = records_to_csv(records)
    elif fmt == "json":
        rows = []
        for r in records:
            d = asdict(r)
            d.pop("failed")
            rows.append(d)
        text = json.dumps(rows, indent=1) + "\n"
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w") as f:
        f.write(text)


def read_csv(path):
    """Parse a sweep CSV back into SweepRecord objects (round-trip tests)."""
    with open(path) as f:
        lines = f.read().splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected header in {path}")
    records = []
    for line in lines[1:]:
        parts = line.split(",")
        vals = dict(zip(_CSV_FIELDS, parts))
        records.append(
            SweepRecord(
                delta=float(vals["delta"]),
                h=float(vals["h"]),
                n_total=int(vals["n_total"]),
                energy=float(vals["energy"]),
                gap=float(vals["gap"]),
                d_n1=float(vals["d_n1"]),
                d_n1_rel=float(vals["d_n1_rel"]),
                d_n1a=float(vals["d_n1a"]),
                prod=float(vals["prod"]),
                prod_rel=float(vals["prod_rel"]),
                p_na0=float(vals["p_na0"]),
                p_na1=float(vals["p_na1"]),
                p_na2=float(vals["p_na2"]),
                phase=vals["phase"],
                degenerate=vals["degenerate"] == "true",
            )
        )
    return records
