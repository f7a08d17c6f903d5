"""Declarative figure recipes.

A recipe is a small JSON file describing one figure: which input file to
read, which columns go on which axis, how curves are grouped, and how many
curves the finished figure must contain.  Rendering never computes physics;
every plotted number comes straight out of the input file.
"""

import json
from dataclasses import dataclass, field


class RecipeError(Exception):
    """Raised when a recipe file is malformed or inconsistent with its data."""


VALID_KINDS = ("lines", "bars")
VALID_SCALES = ("linear", "log", "symlog")


@dataclass
class AxisSpec:
    column: str
    label: str = ""
    scale: str = "linear"

    def __post_init__(self):
        if self.scale not in VALID_SCALES:
            raise RecipeError(f"unknown axis scale {self.scale!r}")


@dataclass
class PanelSpec:
    """One subplot.

    Line panels name either a single long-format column (curves split by the
    recipe's group_by column) or an explicit list of wide-format columns, one
    curve each.  Bar panels name a key in a solve report.
    """

    label: str = ""
    scale: str = "linear"
    column: str = ""
    columns: tuple = ()
    key: str = ""

    def __post_init__(self):
        if self.scale not in VALID_SCALES:
            raise RecipeError(f"unknown panel scale {self.scale!r}")
        chosen = sum(bool(x) for x in (self.column, self.columns, self.key))
        if chosen != 1:
            raise RecipeError(
                "panel must set exactly one of column, columns, or key"
            )


@dataclass
class FigureRecipe:
    figure: str
    kind: str
    input: str
    panels: list
    x: AxisSpec = None
    group_by: str = ""
    expected_curves: int = 0
    marker: str = ""

    def __post_init__(self):
        if self.kind not in VALID_KINDS:
            raise RecipeError(f"unknown figure kind {self.kind!r}")
        if not self.panels:
            raise RecipeError("recipe has no panels")
        if self.kind == "lines":
            if self.x is None:
                raise RecipeError("line recipe needs an x axis")
            if self.expected_curves < 1:
                raise RecipeError("line recipe needs expected_curves >= 1")
            for p in self.panels:
                if p.key:
                    raise RecipeError("bar panel key inside a line recipe")
                if p.column and not self.group_by and self.expected_curves != 1:
                    raise RecipeError(
                        "single-column panel without group_by implies one curve"
                    )
        else:
            for p in self.panels:
                if not p.key:
                    raise RecipeError("bar panels select data by key")


def load_recipe(path):
    """Read a recipe JSON file into a validated FigureRecipe."""
    with open(path) as f:
        try:
            raw = json.load(f)
        except json.JSONDecodeError as exc:
            raise RecipeError(f"{path}: not valid JSON ({exc})") from exc
    try:
        panels = [
            PanelSpec(
                label=p.get("label", ""),
                scale=p.get("scale", "linear"),
                column=p.get("column", ""),
                columns=tuple(p.get("columns", ())),
                key=p.get("key", ""),
            )
            for p in raw["panels"]
        ]
        x = None
        if "x" in raw:
            x = AxisSpec(
                column=raw["x"]["column"],
                label=raw["x"].get("label", ""),
                scale=raw["x"].get("scale", "linear"),
            )
        return FigureRecipe(
            figure=raw["figure"],
            kind=raw["kind"],
            input=raw["input"],
            panels=panels,
            x=x,
            group_by=raw.get("group_by", ""),
            expected_curves=int(raw.get("expected_curves", 0)),
            marker=raw.get("marker", ""),
        )
    except KeyError as exc:
        raise RecipeError(f"{path}: missing required field {exc}") from exc
