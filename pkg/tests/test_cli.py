import json

import pytest

from dressedpdc.cli import main
from dressedpdc.serialization import load_json


def test_spectrum_json(tmp_path):
    out = tmp_path / "s.json"
    assert main(["spectrum", "--out", str(out)]) == 0
    r = load_json(out)
    assert list(r.columns) == ["ordinary", "blue", "red"]


def test_spectrum_single_component_csv(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["spectrum", "--component", "red", "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0] == "omega_s [rad/s],red [cm^-1],flags"


def test_sweep_intensity(tmp_path):
    out = tmp_path / "i.json"
    assert main(["sweep-intensity", "--count", "5", "--out", str(out)]) == 0
    assert "diagnostics" in load_json(out).meta


def test_propagate(tmp_path, capsys):
    out = tmp_path / "p.dat"
    assert main(["propagate", "--component", "blue", "--format", "plotdata", "--out", str(out)]) == 0
    assert "gain in dB is 20*log10" in out.read_text()
    assert main(["propagate"]) == 2


def test_paper_check(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["paper-check", "--out", str(out)]) == 0
    printed = capsys.readouterr().out
    assert "blue sideband" in printed and "ratio to 0.001" in printed
    assert json.loads(out.read_text())["target_cm-1"] == 1e-3


def test_detuning_override_changes_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["spectrum", "--out", str(a)])
    main(["spectrum", "--detuning-unit", "rads", "--out", str(b)])
    assert load_json(a).meta["detuning_rad_s"] != load_json(b).meta["detuning_rad_s"]


def test_red_alt_form_flag(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(["spectrum", "--component", "red", "--out", str(a)])
    main(["spectrum", "--component", "red", "--red-alt-form", "--out", str(b)])
    assert (load_json(b).columns["red"] > load_json(a).columns["red"]).all()


def test_exit_codes(tmp_path):
    bad = tmp_path / "bad.ini"
    bad.write_text("[pump]\ndetuning = 3\n")
    assert main(["spectrum", "--scenario", str(bad)]) == 2
    assert main(["spectrum", "--scenario", str(tmp_path / "missing.ini")]) == 4
    assert main(["spectrum", "--out", str(tmp_path / "no" / "dir.json")]) == 4
    with pytest.raises(SystemExit) as info:
        main(["spectrum", "--format", "xml"])
    assert info.value.code == 2


def test_domain_error_exit_code(tmp_path):
    sc = tmp_path / "hot.ini"
    text = (
        "[transition]\nwavelength = 1 um\ndipole = 1e-17 statC*cm\nrho_bar = 3 angstrom\ndensity = 2.5e19 cm^-3\n"
        "[pump]\nintensity = 1000 W/cm^2\ndetuning = 1e10 Hz\n[state]\ntheta = 0.3 rad\n"
        "[matrix_element]\nmode = small_argument\n[grid]\nstart = 0.4 omega_p\nstop = 0.6 omega_p\ncount = 4\n"
        "probe = 2.5 omega_p\n[run]\ncomponents = ordinary\ncell_length = 1 cm\n"
    )
    sc.write_text(text)
    assert main(["propagate", "--scenario", str(sc), "--component", "ordinary"]) == 3
