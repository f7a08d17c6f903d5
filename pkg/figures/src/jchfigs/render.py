"""Turn a figure recipe plus an input data file into a PNG or SVG.

The input files come from the simulation command line tool: long-format
sweep CSVs (one record per grid point), the wide gap-table CSV, or a JSON
solve report for bar charts.  A sha256 checksum of the raw input bytes is
embedded in the image metadata so any figure can be traced back to the
exact dataset it was drawn from.
"""

import hashlib
import json
import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from jchfigs.recipe import RecipeError


class DataError(Exception):
    """Raised when the input file does not match the recipe's expectations."""


def _parse_csv(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise DataError("input CSV is empty")
    header = lines[0].split(",")
    if len(lines) == 1:
        raise DataError("input CSV has a header but no data rows")
    columns = {name: [] for name in header}
    for ln in lines[1:]:
        cells = ln.split(",")
        if len(cells) != len(header):
            raise DataError(
                f"row has {len(cells)} cells, header has {len(header)}"
            )
        for name, cell in zip(header, cells):
            columns[name].append(cell)
    out = {}
    for name, cells in columns.items():
        try:
            out[name] = np.array([float(c) for c in cells])
        except ValueError:
            out[name] = np.array(cells)
    return out


def load_table(path):
    """Read a CSV file into {column: array} plus its sha256 hex digest."""
    with open(path, "rb") as f:
        raw = f.read()
    digest = hashlib.sha256(raw).hexdigest()
    return _parse_csv(raw.decode()), digest


def load_report(path):
    """Read a solve JSON report plus its sha256 hex digest."""
    with open(path, "rb") as f:
        raw = f.read()
    digest = hashlib.sha256(raw).hexdigest()
    try:
        report = json.loads(raw.decode())
    except json.JSONDecodeError as exc:
        raise DataError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(report, dict) or not report:
        raise DataError(f"{path}: expected a non-empty solve report object")
    return report, digest


def _require_columns(columns, needed):
    missing = [c for c in needed if c and c not in columns]
    if missing:
        raise DataError(
            "input is missing column(s) "
            + ", ".join(repr(c) for c in missing)
            + "; have: "
            + ", ".join(sorted(columns))
        )


def _line_panel(ax, panel, recipe, columns):
    """Draw one line panel; returns the number of curves drawn."""
    x = columns[recipe.x.column]
    marker = recipe.marker or None
    if panel.columns:
        for name in panel.columns:
            ax.plot(x, columns[name], marker=marker, label=name)
        n_curves = len(panel.columns)
    elif recipe.group_by:
        keys = columns[recipe.group_by]
        n_curves = 0
        for val in np.unique(keys):
            sel = keys == val
            order = np.argsort(x[sel], kind="stable")
            ax.plot(
                x[sel][order],
                columns[panel.column][sel][order],
                marker=marker,
                label=f"{recipe.group_by}={val:g}",
            )
            n_curves += 1
    else:
        order = np.argsort(x, kind="stable")
        ax.plot(x[order], columns[panel.column][order], marker=marker)
        n_curves = 1
    ax.set_xscale(recipe.x.scale)
    ax.set_yscale(panel.scale)
    ax.set_xlabel(recipe.x.label or recipe.x.column)
    ax.set_ylabel(panel.label or panel.column)
    return n_curves


def _bar_panel(ax, panel, report):
    value = report.get(panel.key)
    if value is None:
        raise DataError(f"solve report has no key {panel.key!r}")
    if panel.key == "p_group":
        heights = [g["probability"] for g in value]
        ticks = [f"$\\Gamma_{{{k + 1}}}$" for k in range(len(value))]
    else:
        heights = list(value)
        ticks = [str(k) for k in range(len(value))]
    ax.bar(range(len(heights)), heights)
    ax.set_xticks(range(len(heights)))
    ax.set_xticklabels(ticks)
    ax.set_ylabel(panel.label or panel.key)
    ax.set_ylim(0.0, 1.05)


def render(recipe, data_dir, out_dir, fmt="png"):
    """Render one recipe; returns the output image path.

    Raises DataError when the input is empty or its schema does not match
    the recipe, and RecipeError for unusable recipes.
    """
    if fmt not in ("png", "svg"):
        raise RecipeError(f"unsupported output format {fmt!r}")
    in_path = os.path.join(data_dir, recipe.input)
    if not os.path.exists(in_path):
        raise DataError(f"input file not found: {in_path}")

    fig, axes = plt.subplots(
        1, len(recipe.panels), figsize=(4.0 * len(recipe.panels), 3.2)
    )
    axes = np.atleast_1d(axes)
    try:
        if recipe.kind == "lines":
            columns, digest = load_table(in_path)
            needed = [recipe.x.column, recipe.group_by]
            for p in recipe.panels:
                needed.append(p.column)
                needed.extend(p.columns)
            _require_columns(columns, needed)
            for ax, panel in zip(axes, recipe.panels):
                n_curves = _line_panel(ax, panel, recipe, columns)
                if n_curves != recipe.expected_curves:
                    raise DataError(
                        f"panel {panel.column or ','.join(panel.columns)!r}: "
                        f"{n_curves} curves, recipe expects "
                        f"{recipe.expected_curves}"
                    )
            if recipe.group_by or any(p.columns for p in recipe.panels):
                axes[-1].legend(fontsize=7, ncol=2)
        else:
            report, digest = load_report(in_path)
            for ax, panel in zip(axes, recipe.panels):
                _bar_panel(ax, panel, report)

        fig.suptitle(recipe.figure)
        fig.tight_layout()
        os.makedirs(out_dir, exist_ok=True)
        out_path = os.path.join(out_dir, f"{recipe.figure}.{fmt}")
        note = f"data-sha256:{digest} input:{recipe.input}"
        if fmt == "png":
            metadata = {"Description": note, "data-sha256": digest}
        else:
            # the SVG writer only accepts a fixed set of metadata names
            metadata = {"Description": note}
        fig.savefig(out_path, dpi=150, metadata=metadata)
    finally:
        plt.close(fig)
    return out_path
