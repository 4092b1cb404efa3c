"""Rebuild the bundled data files from their recipes.

The four files under data/ are deterministic functions of the recipe
seeds, so this script always reproduces them byte for byte.  Run it
after changing a recipe, never casually: the acceptance windows were
calibrated against the committed files.
"""

import pathlib

from tgp.synthetic import PROBLEM_RECIPES, write_problem_file

data_dir = pathlib.Path(__file__).resolve().parent.parent / "data"
data_dir.mkdir(exist_ok=True)

for name in sorted(PROBLEM_RECIPES):
    path = data_dir / f"{name}1.dt"
    dataset = write_problem_file(path, name)
    print(f"{path.name}: {dataset.n_inputs} inputs, {dataset.n_classes} classes, "
          f"{dataset.m_total} rows, {path.stat().st_size} bytes")
