import json
import shutil
import subprocess

import numpy as np
import pytest

from kinkspec import gamma_k, solve_gamma_star
from kinkspec.cli import main
from kinkspec.reports import (
    fgr_scan,
    format_csv,
    load_preset,
    read_csv,
    sign_changes,
    validate_config,
    validate_report,
)
from kinkspec.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--gamma", "0.75")
    doc = json.loads(out)
    assert code == 0
    assert doc["d"] == 4.0 and doc["schema"] == "kinkspec.params"


def test_params_domain_error(capsys):
    code, _, err = run(capsys, "params", "--gamma", "1.5")
    assert code == 2
    assert "gamma must lie in (0,1)" in err


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["certify"])
    assert exc.value.code == 2


def test_gamma_table(capsys):
    code, out, _ = run(capsys, "gamma-table", "--kmax", "5")
    assert code == 0
    assert out.splitlines()[0] == "# kinkspec-csv v1 gamma-table"
    header, body = read_csv(out)
    assert header == ["k", "gamma_k"]
    assert np.allclose(body[:, 1], [gamma_k(k) for k in range(1, 6)], rtol=1e-11)
    assert run(capsys, "gamma-table", "--kmax", "21")[0] == 2


def test_certify_holds(capsys, tmp_path):
    out_file = tmp_path / "rep.json"
    code, out, _ = run(capsys, "certify", "--gamma", "0.75", "--oracle", "--out", str(out_file))
    assert code == 0 and out == ""
    doc = json.loads(out_file.read_text())
    validate_report(doc)
    assert doc["provenance"]["oracle"]["count"] == 2
    assert doc["provenance"]["oracle"]["n"] == 11974
    assert all(doc[k]["holds"] for k in ("u1", "u2", "u3", "u4"))


def test_certify_mollified(capsys):
    code, out, _ = run(capsys, "certify", "--gamma", "0.75", "--epsilon", "0.02")
    assert code == 0
    diag = json.loads(out)["provenance"]["diagnostics"]
    assert diag["lambda1_eps"] == pytest.approx(3.276926, abs=1e-5)
    assert len(diag["fd_eigenvalues"]) == 2
    assert abs(diag["resonance_indicator"]) > 1e-3
    assert diag["fgr_numeric"] < 0


def test_certify_at_resonance(capsys):
    code, out, _ = run(capsys, "certify", "--gamma", repr(gamma_k(1)))
    assert code == 1
    assert json.loads(out)["u2"]["holds"] is False
    code, out, _ = run(capsys, "certify", "--gamma", "0.64643", "--tol-resonance", "1e-5")
    assert code == 1
    assert json.loads(out)["u2"]["holds"] is False


def test_certify_at_fgr_zero(capsys):
    code, out, _ = run(capsys, "certify", "--gamma", repr(solve_gamma_star().gamma))
    doc = json.loads(out)
    assert code == 1
    assert doc["u4"]["holds"] is False and doc["u3"]["holds"] is True


def test_certify_is_deterministic(capsys):
    a = run(capsys, "certify", "--gamma", "0.8")[1]
    b = run(capsys, "certify", "--gamma", "0.8")[1]
    assert a == b


def test_fgr_scan(capsys, monkeypatch):
    code, out, _ = run(capsys, "fgr-scan", "--range", "0.66", "0.85", "39")
    assert code == 0
    header, body = read_csv(out)
    fgr = body[:, header.index("fgr_value")]
    (i,) = sign_changes(fgr)
    assert body[i, 0] < solve_gamma_star().gamma < body[i + 1, 0]
    monkeypatch.setenv("KINKSPEC_THREADS", "4")
    assert run(capsys, "fgr-scan", "--range", "0.66", "0.85", "39")[1] == out


@pytest.mark.parametrize("rng", [("0.5", "0.8", "10"), ("0.7", "0.8", "1"), ("0.7", "0.8", "x")])
def test_fgr_scan_domain(capsys, rng):
    assert run(capsys, "fgr-scan", "--range", *rng)[0] == 2


def test_fgr_scan_row_values():
    rows = fgr_scan(0.7, 0.8, 3)
    assert rows[1]["gamma"] == pytest.approx(0.75)
    assert rows[1]["lambda1"] == pytest.approx(3.278214586487314)


def test_converge(capsys):
    code, out, _ = run(capsys, "converge", "--gamma", "0.75", "--epsilon", "0.08", "0.04")
    assert code == 0
    assert out.startswith("# kinkspec-csv v1 convergence")
    header, body = read_csv(out)
    assert body.shape == (2, 5)
    assert body[1, 1] == pytest.approx(3.273056, abs=1e-5)
    assert run(capsys, "converge", "--gamma", "0.95")[0] == 2


def _small_config():
    cfg = load_preset("static")
    cfg["t_end"] = 1.0
    cfg["grid"] = {"L": 10.0, "dx": 0.02}
    cfg["frame_stride"] = 50
    cfg["diag_stride"] = 25
    return cfg


def test_simulate_config(capsys, tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps(_small_config()))
    code, _, _ = run(capsys, "simulate", "--config", str(cfg_path), "--out", str(tmp_path / "o"))
    assert code == 0
    header, frames = read_csv((tmp_path / "o" / "frames.csv").read_text())
    assert header == ["t", "x", "psi", "pi"]
    assert sorted(set(frames[:, 0])) == [0.0, 0.5, 1.0]
    header, diag = read_csv((tmp_path / "o" / "diagnostics.csv").read_text())
    assert header == ["t", "center", "window_sup", "energy"]
    assert diag.shape[0] == 5
    first = (tmp_path / "o" / "diagnostics.csv").read_text()
    run(capsys, "simulate", "--config", str(cfg_path), "--out", str(tmp_path / "o"))
    assert (tmp_path / "o" / "diagnostics.csv").read_text() == first


def test_simulate_bad_config(capsys, tmp_path):
    cfg = _small_config()
    cfg["grid"]["L"] = -1
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(cfg))
    code, _, err = run(capsys, "simulate", "--config", str(p))
    assert code == 2 and "grid/L" in err
    p.write_text("{not json")
    assert run(capsys, "simulate", "--config", str(p))[0] == 2


def test_presets_validate():
    for name in ("static", "boosted", "perturbed"):
        validate_config(load_preset(name))
    with pytest.raises(DomainError):
        load_preset("missing")


def test_csv_format():
    text = format_csv([{"a": 1, "b": 0.1, "c": True, "d": None}], ["a", "b", "c", "d"], "demo")
    assert text == "# kinkspec-csv v1 demo\na,b,c,d\n1,0.1,true,\n"


@pytest.mark.skipif(shutil.which("kinkspec") is None, reason="console script not on PATH")
def test_console_script():
    res = subprocess.run(["kinkspec", "gamma-table", "--kmax", "2"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.startswith("# kinkspec-csv v1 gamma-table")
