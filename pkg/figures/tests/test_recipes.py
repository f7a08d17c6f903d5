import glob
import json
import os

import pytest

from jchfigs.recipe import FigureRecipe, PanelSpec, RecipeError, load_recipe

RECIPE_DIR = os.path.join(os.path.dirname(__file__), "..", "recipes")
DATA_DIR = os.path.join(os.path.dirname(__file__), "..", "data")


def test_all_checked_in_recipes_load():
    paths = sorted(glob.glob(os.path.join(RECIPE_DIR, "*.json")))
    assert len(paths) == 9
    figures = set()
    for path in paths:
        recipe = load_recipe(path)
        figures.add(recipe.figure)
        # every recipe points at a committed golden input
        assert os.path.exists(os.path.join(DATA_DIR, recipe.input))
    assert figures == {f"fig{i}" for i in range(1, 10)}


def test_recipe_kinds():
    by_fig = {
        load_recipe(p).figure: load_recipe(p)
        for p in glob.glob(os.path.join(RECIPE_DIR, "*.json"))
    }
    for fig in ("fig3", "fig4", "fig6"):
        assert by_fig[fig].kind == "bars"
    for fig in ("fig1", "fig2", "fig5", "fig7", "fig8", "fig9"):
        assert by_fig[fig].kind == "lines"
    assert by_fig["fig7"].expected_curves == 14
    assert len(by_fig["fig7"].panels) == 3
    assert by_fig["fig9"].expected_curves == 2


def test_panel_must_choose_one_source():
    with pytest.raises(RecipeError):
        PanelSpec(column="a", key="b")
    with pytest.raises(RecipeError):
        PanelSpec()
    with pytest.raises(RecipeError):
        PanelSpec(column="a", scale="cubic")


def test_recipe_validation():
    x = {"column": "delta"}
    with pytest.raises(RecipeError):
        FigureRecipe("f", "pie", "a.csv", [PanelSpec(column="y")])
    with pytest.raises(RecipeError):
        FigureRecipe("f", "lines", "a.csv", [])
    with pytest.raises(RecipeError):
        # line recipe without an x axis
        FigureRecipe("f", "lines", "a.csv", [PanelSpec(column="y")])
    with pytest.raises(RecipeError):
        # bar panels select by key, not column
        FigureRecipe("f", "bars", "a.json", [PanelSpec(column="y")])


def test_load_recipe_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(RecipeError):
        load_recipe(bad)
    missing = tmp_path / "missing.json"
    missing.write_text(json.dumps({"figure": "f", "kind": "lines"}))
    with pytest.raises(RecipeError):
        load_recipe(missing)
