import json

import numpy as np
import pytest

from elliptica._io import loads_csv
from elliptica.cli import main
from elliptica.green import kl_weights
from elliptica.solutions import Family, FieldConfig, profile

from conftest import K_I


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_eval_rows(capsys):
    code, out, err = run(capsys, "eval", "--family", "massless", "--mu", "1", "--lambda", "2",
                         "--grid", "0:10:100")
    assert code == 0 and err == ""
    header, rows = loads_csv(out)
    assert header == ["u", "phi"]
    assert len(rows) == 100


def test_eval_csv_round_trip_is_bit_exact(capsys):
    _, out, _ = run(capsys, "eval", "--family", "massive", "--mu0", "1", "--mu", "1",
                    "--lambda", "2", "--grid", "0:7:33")
    _, rows = loads_csv(out)
    u = np.array([float(r[0]) for r in rows])
    phi = np.array([float(r[1]) for r in rows])
    cfg = FieldConfig(Family.MASSIVE, mu0=1.0, mu=1.0, lam=2.0)
    assert np.array_equal(u, np.linspace(0, 7, 33))
    assert np.array_equal(phi, profile(cfg, u))


def test_spectrum_ssb_ladder(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "ssb", "--mu0", "1.7320508", "--n", "5",
                       "--json")
    assert code == 0
    masses = [r["mass"] for r in json.loads(out)["results"]]
    assert masses[0] == 0.0
    assert masses[1] == pytest.approx(np.pi / K_I * 1.7320508 / np.sqrt(3), rel=1e-14)
    assert masses[1] == pytest.approx(2.3963, abs=1e-4)
    np.testing.assert_allclose(np.diff(masses), masses[1], rtol=1e-13)


def test_kl_json_schema(capsys):
    code, out, _ = run(capsys, "kl", "--family", "massless", "--n", "10", "--json")
    assert code == 0
    doc = json.loads(out)
    assert set(doc) >= {"family", "params", "results", "checks"}
    assert doc["family"] == "massless"
    assert abs(sum(r["residue"] for r in doc["results"]) - 1.0) < 1e-3
    assert set(doc["checks"][0]) == {"name", "pass", "value", "tol"}
    assert doc["zero_mode_present"] is False


def test_kl_csv_bit_exact(capsys):
    _, out, _ = run(capsys, "kl", "--family", "massless", "--n", "12")
    _, rows = loads_csv(out)
    ps = kl_weights(FieldConfig(Family.MASSLESS, mu=1.0, lam=1.0), 12)
    assert np.array_equal([float(r[2]) for r in rows], ps.residues)


def test_plot_is_two_columns(capsys):
    code, out, _ = run(capsys, "green", "--family", "massless", "--mu", "1", "--lambda", "2",
                       "--format", "plot", "--grid", "0:5:20")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 20
    assert all(len(line.split()) == 2 for line in lines)


@pytest.mark.parametrize("cmd", ["propagator", "green", "modes", "series"])
def test_subcommands_run(capsys, cmd):
    fam = ["--family", "ssb", "--mu0", "1.7320508", "--lambda", "2"]
    code, out, _ = run(capsys, cmd, *fam, "--json")
    assert code == 0
    assert json.loads(out)["checks"][0]["pass"] is True


def test_verify_default(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert len(doc["checks"]) >= 20


def test_verify_negative_control(capsys):
    code, out, err = run(capsys, "verify", "--only", "eom", "--inject-dispersion-error", "0.01")
    assert code == 3
    doc = json.loads(out)
    assert not doc["passed"]
    assert all(not c["pass"] for c in doc["checks"] if c["name"].startswith("eom_"))
    assert "eom_" in err


def test_verify_only_zdelta(capsys):
    code, out, _ = run(capsys, "verify", "--only", "zdelta")
    assert code == 0
    names = [c["name"] for c in json.loads(out)["checks"]]
    assert names == ["zdelta_identity", "zdelta_spot"]


@pytest.mark.parametrize("argv", [
    ["eval", "--family", "massless", "--mu0", "1"],
    ["eval", "--mu", "1"],
    ["eval", "--family", "massive", "--mu0", "-1"],
    ["eval", "--family", "massive", "--grid", "0:1"],
    ["kl", "--family", "massless", "--n", "0"],
    ["modes", "--family", "massive", "--mu0", "1"],
    ["modes", "--family", "ssb", "--mu0", "1", "--points", "8"],
    ["eval", "--family", "cubic"],
    ["eval", "--family", "massless", "--config", "/nonexistent/file"],
])
def test_parameter_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:  # argparse rejects unknown choices itself
        code = exc.code
    _, err = capsys.readouterr()
    assert code == 2
    assert err


def test_self_check_breach_exits_3(capsys):
    argv = ["series", "--family", "massless", "--mu", "1", "--n", "2"]
    code, _, err = run(capsys, *argv)
    assert code == 0 and "series_vs_direct" in err
    code, _, _ = run(capsys, *argv, "--self-check")
    assert code == 3


def test_config_precedence(capsys, tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# comment\nfamily = massless\nmu = 2\nlambda = 2\nn = 3\n")
    _, out, _ = run(capsys, "kl", "--config", str(cfg), "--json")
    doc = json.loads(out)
    assert doc["params"]["mu"] == 2.0 and len(doc["results"]) == 3
    _, out, _ = run(capsys, "kl", "--config", str(cfg), "--n", "5", "--json")
    assert len(json.loads(out)["results"]) == 5


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("colour = blue\n")
    code, _, err = run(capsys, "kl", "--config", str(cfg))
    assert code == 2 and "colour" in err


def test_env_tolerance(capsys, monkeypatch):
    argv = ["kl", "--family", "massless", "--n", "10", "--json"]
    _, out, _ = run(capsys, *argv)
    assert json.loads(out)["checks"][0]["tol"] == 1e-8
    monkeypatch.setenv("ELLIPTICA_TOL", "1e-3")
    _, out, _ = run(capsys, *argv)
    assert json.loads(out)["checks"][0]["tol"] == 1e-3
    _, out, _ = run(capsys, *argv, "--tol", "1e-5")
    assert json.loads(out)["checks"][0]["tol"] == 1e-5
    monkeypatch.setenv("ELLIPTICA_TOL", "tiny")
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_output_file(capsys, tmp_path):
    path = tmp_path / "out.csv"
    code, out, _ = run(capsys, "spectrum", "--family", "massless", "--output", str(path))
    assert code == 0 and out == ""
    header, rows = loads_csv(path.read_text())
    assert header == ["n", "mass"] and len(rows) == 16
