"""Command-line figure renderer.

    jchfigs render RECIPE.json [RECIPE2.json ...] --data-dir D --out-dir O

Exit codes: 0 success, 1 recipe or data error, 2 usage error.
"""

import argparse
import os
import sys

from jchfigs.recipe import RecipeError, load_recipe
from jchfigs.render import DataError, render

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2

_HERE = os.path.dirname(os.path.abspath(__file__))
DEFAULT_RECIPE_DIR = os.path.normpath(os.path.join(_HERE, "..", "..", "recipes"))
DEFAULT_DATA_DIR = os.path.normpath(os.path.join(_HERE, "..", "..", "data"))


def build_parser():
    ap = argparse.ArgumentParser(prog="jchfigs", description=__doc__.split("\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("render", help="render one or more recipe files")
    p.add_argument("recipes", nargs="+", metavar="RECIPE.json")
    p.add_argument("--data-dir", default=DEFAULT_DATA_DIR, help="directory holding input CSV/JSON files")
    p.add_argument("--out-dir", default=".", help="where to write the images")
    p.add_argument("--format", choices=("png", "svg"), default="png")

    p = sub.add_parser("all", help="render every recipe in a directory")
    p.add_argument("--recipes-dir", default=DEFAULT_RECIPE_DIR)
    p.add_argument("--data-dir", default=DEFAULT_DATA_DIR)
    p.add_argument("--out-dir", default=".")
    p.add_argument("--format", choices=("png", "svg"), default="png")
    return ap


def _render_paths(paths, data_dir, out_dir, fmt):
    code = EXIT_OK
    for path in paths:
        try:
            recipe = load_recipe(path)
            out_path = render(recipe, data_dir, out_dir, fmt)
            print(f"{recipe.figure}: wrote {out_path}")
        except (RecipeError, DataError, OSError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            code = EXIT_ERROR
    return code


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    if args.command == "render":
        paths = args.recipes
    else:
        if not os.path.isdir(args.recipes_dir):
            print(f"error: no such directory: {args.recipes_dir}", file=sys.stderr)
            return EXIT_USAGE
        paths = sorted(
            os.path.join(args.recipes_dir, name)
            for name in os.listdir(args.recipes_dir)
            if name.endswith(".json")
        )
        if not paths:
            print(f"error: no recipes in {args.recipes_dir}", file=sys.stderr)
            return EXIT_USAGE
    return _render_paths(paths, args.data_dir, args.out_dir, args.format)


if __name__ == "__main__":
    sys.exit(main())
