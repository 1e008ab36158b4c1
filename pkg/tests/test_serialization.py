import csv
import json
import math

import numpy as np
import pytest

from dressedpdc.serialization import dumps_json, emit, load_json, loads_json
from dressedpdc.sweeps import SweepResult, run_intensity_sweep, run_spectrum


@pytest.fixture(scope="module")
def spectrum(paper):
    return run_spectrum(paper.with_angles(0.4))


def test_json_round_trip(spectrum, tmp_path):
    path = emit(spectrum, "json", tmp_path / "s.json")
    assert load_json(path) == spectrum
    assert json.loads(path.read_text())["schema"] == "dressedpdc.sweep/1"


def test_json_round_trip_nan_and_flags():
    r = SweepResult("x", "rad/s", [1.0, 2.0], {"blue": [math.nan, 0.1]}, {"blue": "cm^-1"}, [("blue:domain-error",), ()], {"a": 1})
    assert loads_json(dumps_json(r)) == r


def test_intensity_sweep_round_trip(paper):
    r = run_intensity_sweep(paper, np.geomspace(1, 1e6, 7))
    assert loads_json(dumps_json(r)) == r


def test_csv_layout(spectrum, tmp_path):
    path = emit(spectrum, "csv", tmp_path / "s.csv")
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["omega_s [rad/s]", "ordinary [cm^-1]", "blue [cm^-1]", "red [cm^-1]", "flags"]
    assert len(rows) == 1 + len(spectrum)
    assert all(len(r) == 5 for r in rows)
    assert float(rows[1][2]) == spectrum.columns["blue"][0]


def test_flags_survive_csv_and_plotdata(tmp_path):
    r = SweepResult("x", "rad/s", [1.0, 2.0], {"red": [1.0, 2.0]}, {"red": "cm^-1"}, [("red:pump-ratio", "red:degenerate"), ()])
    rows = list(csv.reader(emit(r, "csv", tmp_path / "r.csv").open()))
    assert rows[1][-1] == "red:pump-ratio;red:degenerate"
    lines = emit(r, "plotdata", tmp_path / "r.dat", ["hello"]).read_text().splitlines()
    assert lines[0] == "# hello" and lines[1].startswith("# columns: x [rad/s]")
    assert lines[2].split()[-1] == "red:pump-ratio;red:degenerate"
    assert lines[3].split()[-1] == "-"
    data = np.loadtxt(tmp_path / "r.dat", usecols=(0, 1))
    assert data.shape == (2, 2)


def test_emit_io_error(spectrum, tmp_path):
    with pytest.raises(OSError, match="cannot write"):
        emit(spectrum, "json", tmp_path / "missing" / "x.json")


def test_empty_sweep_rejected():
    with pytest.raises(ValueError):
        SweepResult("x", "rad/s", [], {}, {}, [])
