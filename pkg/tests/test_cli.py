import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from cavityspin.cli import SUMMARY_KEYS, main
from cavityspin.grid import CoordinateMode, GridSpec, grid_table, iso_statistics, sample_rz

REFERENCE = ["--radius-nm", "8", "--half-height-nm", "4", "--potential-mev", "10", "--n", "1", "--l", "0", "--m", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_solve_json(capsys):
    code, out, _ = run(capsys, "solve", *REFERENCE)
    assert code == 0
    data = json.loads(out)
    assert set(SUMMARY_KEYS) <= set(data)
    assert data["epsilon_mev"] == pytest.approx(8.06, abs=0.05)
    assert data["zeta_per_m"] == pytest.approx(2.40e8, rel=0.01)
    assert data["xi_per_m"] == pytest.approx(4.53e8, rel=0.01)
    assert data["unity_ratio"] == pytest.approx(1.0, abs=1e-9)


def test_solve_csv(capsys):
    code, out, _ = run(capsys, "solve", *REFERENCE, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1 and float(rows[0]["kappa"]) == pytest.approx(15.94, abs=0.01)


def test_solve_no_bound_state(capsys):
    code, _, err = run(capsys, "solve", "--potential-mev", "0.001")
    assert code == 1
    assert "no bound state in window" in err


def test_solve_rejects_even_m(capsys):
    code, _, err = run(capsys, "solve", "--m", "2")
    assert code == 2
    assert "m must be odd" in err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as e:
        main(["solve", "--radius-nm", "abc"])
    assert e.value.code == 2
    code, _, _ = run(capsys, "solve", "--radius-nm", "-1")
    assert code == 2


def test_radial_index_error_exits_1(capsys):
    code, _, err = run(capsys, "solve", *REFERENCE[:-6], "--n", "3")
    assert code == 1 and "exceeds" in err


def test_scan_csv(capsys):
    code, out, _ = run(capsys, "scan", *REFERENCE, "--scan-points", "400")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "epsilon_mev,boundary_residual"
    data = np.loadtxt(io.StringIO(out), delimiter=",", skiprows=1)
    assert data.shape == (400, 2)
    assert 5.8754712535 < data[0, 0] and data[-1, 0] < 15.8754712536
    sign_changes = np.count_nonzero(np.diff(np.sign(data[:, 1])))
    assert sign_changes == 2
    assert "\r" not in out


def test_scan_deep_well_has_more_states(capsys):
    _, out, _ = run(capsys, "scan", "--potential-mev", "100", "--format", "json")
    data = json.loads(out)
    assert np.count_nonzero(np.diff(np.sign(data["boundary_residual"]))) >= 2


def test_grid_csv(tmp_path, capsys):
    path = tmp_path / "grid.csv"
    code, out, _ = run(capsys, "grid", *REFERENCE, "--grid", "200x200", "--output", str(path))
    assert code == 0
    assert "fraction inside rho < R = 1.000000" in out
    text = path.read_text()
    assert text.splitlines()[0] == "rho_nm,z_nm,charge_e_per_nm3,jphi,probability"
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert data.shape == (200 * 200, 5)
    # charge peaks at the cavity center
    imax = np.argmax(data[:, 2])
    assert data[imax, 0] == 0.0 and abs(data[imax, 1]) < 0.03
    # every field is written with 12 significant digits
    first = text.splitlines()[1].split(",")
    assert all(len(v.lstrip("-").split("e")[0].replace(".", "")) == 12 for v in first)


def test_grid_cartesian(tmp_path, capsys):
    path = tmp_path / "xyz.csv"
    code, _, _ = run(capsys, "grid", *REFERENCE, "--grid", "10x6:8", "--cartesian", "-o", str(path))
    assert code == 0
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert data.shape == (10 * 6 * 8, 8)
    x, y, jphi, jx, jy = data[:, 0], data[:, 1], data[:, 4], data[:, 5], data[:, 6]
    assert np.allclose(np.hypot(jx, jy), np.abs(jphi), rtol=1e-10, atol=1e-300)
    assert np.allclose(x * jx + y * jy, 0, atol=1e-20)


def test_grid_rejects_bad_spec(capsys):
    assert run(capsys, "grid", "--grid", "1x5")[0] == 2
    assert run(capsys, "grid", "--grid", "foo")[0] == 2
    assert run(capsys, "grid", "--grid", "100x100", "--max-points", "10")[0] == 2
    assert run(capsys, "grid", "--format", "json")[0] == 2


def test_grid_unwritable_output(capsys, tmp_path):
    code, _, err = run(capsys, "grid", "--grid", "4x4", "-o", str(tmp_path / "missing" / "x.csv"))
    assert code == 2 and "cannot write" in err


def test_interact_report(capsys):
    code, out, _ = run(capsys, "interact", *REFERENCE, "--b-tesla", "1")
    assert code == 0
    data = json.loads(out)
    assert data["wave_total_over_muB_B"] == pytest.approx(1.0, abs=1e-9)
    assert data["particle_total_over_muB_B"] == pytest.approx(1.0, abs=1e-9)
    assert data["unity_ratio"] == pytest.approx(1.0, abs=1e-9)
    assert data["max_abs_quadrature_minus_closed"] < 1e-9
    printed = {k: v["printed"] for k, v in data["published_comparison"].items()}
    assert printed == {"wave_fraction_I": 0.71, "wave_fraction_II": 0.29,
                       "particle_fraction_I": 0.85, "particle_fraction_II": 0.15}
    assert data["wave_total_signed_ev"] < 0


def test_interact_region_selection(capsys):
    _, out_i, _ = run(capsys, "interact", "--region", "I")
    _, out_ii, _ = run(capsys, "interact", "--region", "II")
    a, b = json.loads(out_i), json.loads(out_ii)
    assert a["selected_wave_ev"] + b["selected_wave_ev"] == pytest.approx(a["wave_total_ev"], rel=1e-11)
    assert a["selected_particle_ev"] == pytest.approx(a["particle_region_I_ev"], rel=1e-11)


@pytest.mark.parametrize("argv", [
    ["solve"], ["scan", "--scan-points", "300"], ["grid", "--grid", "40x30"],
    ["grid", "--grid", "8x6:5", "--cartesian"], ["interact", "--b-tesla", "0.5"],
])
def test_outputs_are_deterministic(argv, tmp_path, capsys):
    a, b = tmp_path / "a", tmp_path / "b"
    assert main(argv + ["-o", str(a)]) == 0
    assert main(argv + ["-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "cavityspin", "solve", "--m", "4"], capture_output=True, text=True)
    assert r.returncode == 2


def test_iso_statistics(ground_state):
    stats = iso_statistics(ground_state, GridSpec(rho_max=16.0, n_rho=200, n_z=200))
    assert stats.fraction_inside_region_I == 1.0
    assert stats.peak_rho_nm == pytest.approx(1.08197844105818 / ground_state.zeta, abs=16 / 199)
    assert abs(stats.peak_z_nm) < 8 / 199
    assert stats.iso_rho_max_nm < 8.0


def test_sample_shapes(ground_state):
    s = sample_rz(ground_state, GridSpec(rho_max=10.0, n_rho=7, n_z=5))
    assert s["charge_e_per_nm3"].shape == (7, 5)
    cols, tab = grid_table(ground_state, GridSpec(10.0, 4, 3, 6, CoordinateMode.CARTESIAN_XYZ))
    assert tab.shape == (72, len(cols))


def test_grid_spec_validation():
    with pytest.raises(ValueError):
        GridSpec(rho_max=0.0)
    with pytest.raises(ValueError):
        GridSpec(rho_max=1.0, n_rho=1)
