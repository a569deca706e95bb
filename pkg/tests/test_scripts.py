import csv
import importlib.util
import io
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def load(name):
    spec = importlib.util.spec_from_file_location(name, SCRIPTS / f"{name}.py")
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


@pytest.mark.parametrize("name,kwargs,rows", [
    ("representation_table", dict(w_values=[0.6], x_values=[1.0, 2.0]), 2),
    ("asymptotic_table", dict(w_values=[0.5], x_values=[50.0]), 1),
    ("identity_residuals", dict(a_values=[3.141592653589793], orders=[3.0], w_values=[0.0, 0.5]), 5),
])
def test_script_runs(name, kwargs, rows):
    mod = load(name)
    out = io.StringIO()
    mod.run(mod.Config(**kwargs), out)
    table = list(csv.DictReader(io.StringIO(out.getvalue())))
    assert len(table) == rows


def test_representation_table_agrees():
    mod = load("representation_table")
    out = io.StringIO()
    mod.run(mod.Config(w_values=[1.0], x_values=[0.5]), out)
    row = next(csv.DictReader(io.StringIO(out.getvalue())))
    assert float(row["rel_diff"]) <= 1e-8
