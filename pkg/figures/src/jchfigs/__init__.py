"""Figure rendering from sweep CSV files and solve reports."""

from jchfigs.recipe import AxisSpec, FigureRecipe, PanelSpec, RecipeError, load_recipe
from jchfigs.render import DataError, load_report, load_table, render

__all__ = [
    "AxisSpec",
    "DataError",
    "FigureRecipe",
    "PanelSpec",
    "RecipeError",
    "load_recipe",
    "load_report",
    "load_table",
    "render",
]
