"""Command-line interface: formats, config precedence, exit codes."""
from __future__ import annotations

import json
import pathlib

import pytest

import dswave
from dswave.cli import main
from dswave.oracle import NonConvergence

FIXDIR = pathlib.Path(dswave.__file__).parent / "fixtures"


def run(capsys, *argv):
    rc = main(list(argv))
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def csv_rows(text):
    lines = [ln for ln in text.strip().splitlines() if ln]
    header = lines[0].split(",")
    return header, [ln.split(",") for ln in lines[1:]]


# --- potential ---------------------------------------------------------------


def test_potential_csv_shape_and_positivity(capsys):
    rc, out, _ = run(capsys, "potential", "--m", "5", "--j", "1", "--grid", "200")
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["r", "r_star", "U", "F"]
    assert len(rows) == 200
    assert all(float(row[3]) > 0.0 for row in rows)


def test_potential_grid_validation(capsys):
    rc, _, err = run(capsys, "potential", "--m", "5", "--j", "0", "--grid", "0")
    assert rc == 2 and err
    rc, _, err = run(capsys, "potential", "--m", "5", "--j", "0", "--r-max", "1.0")
    assert rc == 2 and err
    rc, _, err = run(capsys, "potential", "--m", "5", "--j", "0", "--r-min", "0.9", "--r-max", "0.1")
    assert rc == 2 and err


# --- wave --------------------------------------------------------------------


def test_wave_connection_residual_column(capsys):
    rc, out, _ = run(
        capsys,
        "wave", "--epsilon", "10", "--m", "5", "--j", "1",
        "--kind", "out", "--residuals", "--grid", "7",
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header[-1] == "connection_residual"
    assert all(float(row[-1]) < 1e-10 for row in rows)


def test_wave_in_is_conjugate_of_out(capsys):
    argv = ["wave", "--epsilon", "10", "--m", "5", "--j", "2", "--grid", "9"]
    _, out_text, _ = run(capsys, *argv, "--kind", "out")
    _, in_text, _ = run(capsys, *argv, "--kind", "in")
    _, o_rows = csv_rows(out_text)
    _, i_rows = csv_rows(in_text)
    for orow, irow in zip(o_rows, i_rows):
        ov = complex(float(orow[1]), float(orow[2]))
        iv = complex(float(irow[1]), float(irow[2]))
        assert abs(iv - ov.conjugate()) < 1e-12 * abs(ov)


def test_wave_standing_kinds_real(capsys):
    for kind in ("f", "g"):
        rc, out, _ = run(
            capsys, "wave", "--epsilon", "10", "--m", "5", "--j", "0",
            "--kind", kind, "--grid", "5",
        )
        assert rc == 0
        _, rows = csv_rows(out)
        assert all(abs(float(row[2])) < 1e-10 for row in rows)  # im_u column


# --- reflect -----------------------------------------------------------------


def test_reflect_json_report(capsys):
    rc, out, _ = run(
        capsys,
        "reflect", "--epsilon", "20", "--m", "10", "--j", "1",
        "--format", "json", "--no-flux",
    )
    assert rc == 0
    doc = json.loads(out)
    assert doc["inputs"]["epsilon"] == 20.0
    assert doc["inputs"]["units"] == "horizon"
    rep = doc["report"]
    assert rep["ratio"] < 1e-12
    assert rep["coefficient"] == rep["ratio"] ** 2
    assert rep["regime_ok"] is True
    assert isinstance(rep["C1"], list) and len(rep["C1"]) == 2


def test_reflect_includes_flux_by_default(capsys):
    rc, out, _ = run(
        capsys,
        "reflect", "--epsilon", "20", "--m", "10", "--j", "1", "--format", "json",
    )
    assert rc == 0
    rep = json.loads(out)["report"]
    assert rep["flux_ratio"] < 1e-6
    assert rep["flux_vs_far_field"] < 1e-6


def test_reflect_sweep(capsys):
    rc, out, _ = run(
        capsys,
        "reflect", "--m", "10", "--j", "1",
        "--sweep", "epsilon=20:100:5", "--no-flux",
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header[0] == "epsilon"
    assert len(rows) == 17  # inclusive endpoints
    eps = [float(row[0]) for row in rows]
    assert eps == sorted(eps) and eps[0] == 20.0 and eps[-1] == 100.0
    ratio_col = header.index("ratio")
    assert all(float(row[ratio_col]) < 1e-12 for row in rows)


def test_reflect_sweep_validation(capsys):
    rc, _, err = run(
        capsys, "reflect", "--m", "10", "--j", "1", "--sweep", "mu=1:2:0.5"
    )
    assert rc == 2 and "sweep" in err
    rc, _, err = run(
        capsys, "reflect", "--m", "10", "--j", "1", "--sweep", "epsilon=20:10:5"
    )
    assert rc == 2


def test_reflect_exit_codes_for_regime(capsys):
    # evanescent: epsilon below the mass line
    rc, _, err = run(capsys, "reflect", "--epsilon", "4", "--m", "5", "--j", "0")
    assert rc == 3 and err
    # below the hard validity floor
    rc, _, err = run(capsys, "reflect", "--epsilon", "10.5", "--m", "10", "--j", "5")
    assert rc == 3 and "eps^2 - m^2" in err


def test_reflect_numerics_failure_exit_code(capsys, monkeypatch):
    import dswave.cli as cli_mod

    def boom(*a, **k):
        raise NonConvergence("synthetic")

    monkeypatch.setattr(cli_mod, "far_field_coefficients", boom)
    rc, _, err = run(capsys, "reflect", "--epsilon", "20", "--m", "10", "--j", "1")
    assert rc == 4 and "synthetic" in err


# --- flat-limit / expand -----------------------------------------------------


def test_flat_limit_table_decreases(capsys):
    rc, out, _ = run(
        capsys, "flat-limit", "--mu", "2", "--j", "1", "--scales", "1e3,1e4,1e5"
    )
    assert rc == 0
    header, rows = csv_rows(out)
    assert header == ["R_over_lambda", "deviation"]
    devs = [float(row[1]) for row in rows]
    assert devs[0] > devs[1] > devs[2]


def test_flat_limit_alias_and_fixed_kappa(capsys):
    rc, out, _ = run(
        capsys,
        "flat_limit", "--mu", "2", "--j", "2",
        "--scales", "50,100,200,400", "--fixed-kappa", "2",
    )
    assert rc == 0
    _, rows = csv_rows(out)
    devs = [float(row[1]) for row in rows]
    assert all(d > 0.5 for d in devs)


def test_expand_report(capsys):
    rc, out, _ = run(capsys, "expand", "--mu", "2", "--X", "1e-3", "--j", "0")
    assert rc == 0
    doc = json.loads(out)
    assert doc["inputs"]["X"] == 1e-3
    assert doc["first_order_identity_error"] < 1e-10
    assert abs(doc["remainder"]["log_slope"] - 2.0) < 0.1
    audit = doc["audit"]
    assert audit["order0_is_two_exponentials"] is True
    assert audit["order1_is_two_exponentials"] is False
    table = doc["table"]
    assert len(table["rows"]) == 15 and len(table["header"]) == 11


def test_expand_validity_exit(capsys):
    rc, _, err = run(capsys, "expand", "--mu", "2", "--X", "0.5", "--j", "0")
    assert rc == 2 and err


# --- classify ----------------------------------------------------------------


def test_classify_fixture(capsys):
    rc, out, _ = run(capsys, "classify", str(FIXDIR / "de_sitter_radial.json"))
    assert rc == 0
    doc = json.loads(out)
    assert doc["inputs"]["coefficients"] == "de_sitter_radial.json"
    assert doc["classification"].startswith("hypergeometric_class")
    assert len(doc["points"]) == 3
    locs = {pt["location"] for pt in doc["points"]}
    assert locs == {"0", "1", "infinity"}


def test_classify_all_fixture_classes(capsys):
    expected = {
        "schwarzschild_like.json": "heun_class",
        "constant_coefficient.json": "other",
    }
    for name, prefix in expected.items():
        rc, out, _ = run(capsys, "classify", str(FIXDIR / name))
        assert rc == 0
        assert json.loads(out)["classification"].startswith(prefix)


def test_classify_bad_inputs(capsys, tmp_path):
    rc, _, err = run(capsys, "classify", str(tmp_path / "missing.json"))
    assert rc == 2 and err
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    rc, _, err = run(capsys, "classify", str(bad))
    assert rc == 2
    unfactored = tmp_path / "unfactored.json"
    unfactored.write_text(json.dumps({"p": {"numerator": [1], "denominator": [1, 2]},
                                      "q": {"numerator": [1], "denominator": [1]}}))
    rc, _, err = run(capsys, "classify", str(unfactored))
    assert rc == 2 and "factored" in err


# --- config file, env, output ------------------------------------------------


def test_config_file_supplies_defaults(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"epsilon": 20.0, "m": 10.0, "j": 1, "format": "json"}))
    rc, out, _ = run(capsys, "reflect", "--config", str(cfg), "--no-flux")
    assert rc == 0
    assert json.loads(out)["inputs"]["epsilon"] == 20.0


def test_cli_flag_beats_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"epsilon": 20.0, "m": 10.0, "j": 1, "format": "json"}))
    rc, out, _ = run(capsys, "reflect", "--config", str(cfg), "--epsilon", "30", "--no-flux")
    assert rc == 0
    assert json.loads(out)["inputs"]["epsilon"] == 30.0


def test_config_file_errors(capsys, tmp_path):
    rc, _, err = run(
        capsys, "reflect", "--m", "10", "--j", "1", "--epsilon", "20",
        "--config", str(tmp_path / "nope.json"),
    )
    assert rc == 2 and err
    bad = tmp_path / "list.json"
    bad.write_text("[1, 2]")
    rc, _, err = run(
        capsys, "reflect", "--m", "10", "--j", "1", "--epsilon", "20",
        "--config", str(bad),
    )
    assert rc == 2


def test_missing_required_parameter(capsys):
    rc, _, err = run(capsys, "reflect", "--m", "10", "--j", "1")
    assert rc == 2 and "epsilon" in err


def test_tol_env_and_flag_precedence(capsys, monkeypatch):
    argv = ("reflect", "--epsilon", "20", "--m", "10", "--j", "1",
            "--format", "json", "--no-flux")
    monkeypatch.setenv("DSW_TOL", "1e-8")
    rc, out, _ = run(capsys, *argv)
    assert rc == 0 and json.loads(out)["inputs"]["tol"] == 1e-8
    rc, out, _ = run(capsys, *argv, "--tol", "1e-9")
    assert rc == 0 and json.loads(out)["inputs"]["tol"] == 1e-9
    monkeypatch.setenv("DSW_TOL", "banana")
    rc, _, err = run(capsys, *argv)
    assert rc == 2 and "DSW_TOL" in err
    monkeypatch.delenv("DSW_TOL")
    rc, out, _ = run(capsys, *argv)
    assert rc == 0 and json.loads(out)["inputs"]["tol"] == 1e-10


def test_units_round_trip_identical_output(capsys):
    # physical parameters that map exactly onto the horizon-units run
    _, horizon, _ = run(
        capsys, "wave", "--epsilon", "20", "--m", "10", "--j", "1",
        "--kind", "f", "--grid", "7",
    )
    _, physical, _ = run(
        capsys, "wave", "--units", "physical", "--R", "5", "--lam", "0.5",
        "--mu", "2", "--j", "1", "--kind", "f", "--grid", "7",
    )
    assert horizon == physical


def test_output_file_and_determinism(capsys, tmp_path):
    target = tmp_path / "out.csv"
    argv = ("potential", "--m", "5", "--j", "1", "--grid", "50",
            "--output", str(target))
    rc, out, _ = run(capsys, *argv)
    assert rc == 0 and out == ""
    first = target.read_bytes()
    run(capsys, *argv)
    assert target.read_bytes() == first


def test_json_output_has_sorted_keys(capsys):
    rc, out, _ = run(
        capsys, "reflect", "--epsilon", "20", "--m", "10", "--j", "1",
        "--format", "json", "--no-flux",
    )
    assert rc == 0
    doc = json.loads(out)
    assert list(doc) == sorted(doc)
    assert list(doc["report"]) == sorted(doc["report"])
