"""Machine-readable outputs: JSON reports, CSV tables, scans and simulation artifacts."""
from __future__ import annotations

import io
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from importlib import resources

import jsonschema
import numpy as np

from . import analytic, numeric, wave
from .errors import DomainError
from .potential import (
    build_mollified,
    derive_params,
    exact_kink,
    exact_model,
    kink_mollified,
    linearize,
    quartic_model,
)

CSV_VERSION = 1
ORACLE_TOL = 5e-3
RESONANCE_THRESHOLD = 1e-3


# ---------------------------------------------------------------------------
# formatting
# ---------------------------------------------------------------------------

def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.12g}"


def format_csv(rows, columns, kind: str) -> str:
    buf = io.StringIO()
    buf.write(f"# kinkspec-csv v{CSV_VERSION} {kind}\n")
    buf.write(",".join(columns) + "\n")
    for row in rows:
        buf.write(",".join(_fmt(row[c]) for c in columns) + "\n")
    return buf.getvalue()


def read_csv(text: str) -> tuple[list[str], np.ndarray]:
    """Header and numeric body of a CSV written by ``format_csv``."""
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    header = lines[0].split(",")
    conv = lambda s: 1.0 if s == "true" else 0.0 if s == "false" else float(s) if s else math.nan
    body = np.array([[conv(c) for c in ln.split(",")] for ln in lines[1:]], dtype=float)
    return header, body.reshape(-1, len(header))


def _clean(obj):
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _clean(obj.tolist())
    return obj


def dumps_json(doc) -> str:
    return json.dumps(_clean(doc), indent=2, allow_nan=False) + "\n"


def load_schema(name: str) -> dict:
    text = resources.files("kinkspec").joinpath("data", f"{name}.schema.json").read_text()
    return json.loads(text)


def load_preset(name: str) -> dict:
    path = resources.files("kinkspec").joinpath("data", "presets", f"{name}.json")
    if not path.is_file():
        raise DomainError(f"unknown preset {name!r}")
    return json.loads(path.read_text())


def _validate(doc, schema_name: str):
    validator = jsonschema.Draft202012Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        err = errors[0]
        where = "/".join(str(p) for p in err.absolute_path) or "<root>"
        raise DomainError(f"invalid {schema_name} at {where}: {err.message}")


def validate_report(doc: dict):
    _validate(doc, "spectral_report")


def validate_config(doc: dict):
    _validate(doc, "simulate_config")


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("KINKSPEC_THREADS", "1")))
    except ValueError:
        return 1


def _parallel_map(fn, items):
    items = list(items)
    n = _threads()
    if n == 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# tables and scans
# ---------------------------------------------------------------------------

def gamma_table(kmax: int) -> list[dict]:
    if not 1 <= kmax <= 20:
        raise DomainError("kmax must lie in 1..20")
    return [{"k": k, "gamma_k": analytic.gamma_k(k)} for k in range(1, kmax + 1)]


SCAN_COLUMNS = ["gamma", "R", "lambda1", "fourlam_over_d", "fgr_value", "u2", "u3", "u4"]


def _scan_row(g: float) -> dict:
    rep = analytic.certify(g)
    return {
        "gamma": g,
        "R": rep.params.R,
        "lambda1": rep.u3["lambda1"],
        "fourlam_over_d": rep.u3["ratio"],
        "fgr_value": rep.u4["fgr_value"],
        "u2": rep.u2["holds"],
        "u3": rep.u3["holds"],
        "u4": rep.u4["holds"],
    }


def fgr_scan(a: float, b: float, n: int) -> list[dict]:
    """Analytic scan of lambda1 and the FGR value over [a, b] inside (gamma_1, gamma_2)."""
    g1, g2 = analytic.gamma_k(1), analytic.gamma_k(2)
    if not (g1 < a < b < g2) or n < 2:
        raise DomainError(f"scan range must satisfy {g1:.6f} < a < b < {g2:.6f} with n >= 2")
    return _parallel_map(_scan_row, np.linspace(a, b, n).tolist())


def sign_changes(values) -> list[int]:
    """Indices i where values[i] and values[i+1] have opposite signs."""
    v = np.asarray(values, dtype=float)
    return [i for i in range(len(v) - 1) if v[i] * v[i + 1] < 0]


# ---------------------------------------------------------------------------
# certification with numeric cross-checks
# ---------------------------------------------------------------------------

def certify_full(gamma: float, epsilon: float | None = None, oracle: bool = False,
                 L: float = 30.0, h: float = 0.005, tol_resonance: float = 1e-6) -> analytic.SpectralReport:
    """Analytic certificate, optionally cross-checked by the FD oracle and, for
    eps > 0, re-evaluated numerically on the mollified potential."""
    report = analytic.certify(gamma, tol_resonance)
    p = report.params
    checks = []
    if oracle:
        W0 = linearize(exact_kink(p))
        op = numeric.discretize(W0, L, h)
        vals = numeric.eigs_below_edge(op)
        analytic_vals = [m.lam for m in report.modes]
        ok = len(vals) == len(analytic_vals)
        diff = max((abs(a - b) for a, b in zip(vals, analytic_vals)), default=0.0) if ok else None
        ok = ok and diff <= ORACLE_TOL
        report.provenance["oracle"] = {
            "L": op.L, "h": op.h, "n": op.n, "eigenvalues": vals.tolist(),
            "count": len(vals), "max_abs_diff": diff, "holds": ok, "note": op.note,
        }
        checks.append(ok)
    if epsilon:
        model = build_mollified(p.gamma, epsilon)
        kink = kink_mollified(model)
        W = linearize(kink)
        diag = {"delta": W.support_pad, "w_norm": W.w_norm()}
        ind = numeric.resonance_indicator(W)
        diag["resonance_indicator"] = ind
        report.u2["holds"] = report.u2["holds"] and abs(ind) > RESONANCE_THRESHOLD
        vals = numeric.eigs_below_edge(numeric.discretize(W, L, h))
        diag["fd_eigenvalues"] = vals.tolist()
        if report.u3["lambda1"] is not None:
            state = numeric.odd_bound_state(W, report.u3["lambda1"])
            lam_eps = state.lam
            diag["lambda1_eps"] = lam_eps
            diag["fourlam_over_d_eps"] = 4.0 * lam_eps / p.d
            report.u3["holds"] = report.u3["holds"] and len(vals) == 2 and 4.0 * lam_eps > p.d
            fgr = numeric.fgr_integral_numeric(model, kink, lam_eps)
            diag["fgr_numeric"] = fgr
            diag["fgr_limit"] = analytic.fgr_limit(p)
            same_sign = np.sign(fgr) == np.sign(report.u4["fgr_value"]) and fgr != 0.0
            report.u4["holds"] = bool(report.u4["holds"] and same_sign)
        else:
            report.u3["holds"] = False
            report.u4["holds"] = False
        report.provenance.update({"kind": "mollified", "epsilon": float(epsilon),
                                  "sup_dev_const": model.sup_dev_const, "diagnostics": diag})
    report.provenance["checks_pass"] = all(checks)
    return report


# ---------------------------------------------------------------------------
# simulations
# ---------------------------------------------------------------------------

def model_from_config(cfg: dict):
    pot = cfg["potential"]
    kind = pot["kind"]
    if kind == "quartic":
        return quartic_model()
    if "gamma" not in pot:
        raise DomainError("invalid simulate_config at potential/gamma: required for this kind")
    if kind == "exact":
        return exact_model(pot["gamma"])
    if "epsilon" not in pot:
        raise DomainError("invalid simulate_config at potential/epsilon: required for kind 'mollified'")
    return build_mollified(pot["gamma"], pot["epsilon"])


def profile_from_config(cfg: dict):
    prof = cfg["profile"]
    kind = prof["type"]
    if kind == "kink":
        return "kink"
    if kind == "boosted":
        return wave.BoostSpec(v=prof.get("v", 0.0), q0=prof.get("q0", 0.0))
    return wave.Perturbation(
        amplitude=prof.get("amplitude", 0.0),
        width=prof.get("width", 0.5),
        parity=prof.get("parity", "odd"),
        center=prof.get("center", 0.0),
    )


def simulate(cfg: dict) -> tuple[list[wave.FieldState], wave.DiagnosticSeries]:
    """Run a validated config; returns frames and the diagnostic series."""
    validate_config(cfg)
    model = model_from_config(cfg)
    kink = wave.default_kink(model)
    state = wave.init_state(model, profile_from_config(cfg), cfg["grid"]["L"], cfg["grid"]["dx"], kink=kink)
    dt = cfg["dt"]
    n = int(round(cfg["t_end"] / dt))
    diag_stride = cfg.get("diag_stride", 100)
    frame_stride = cfg.get("frame_stride", n)
    states = wave.evolve(state, dt, n, stride=math.gcd(diag_stride, frame_stride))
    step_of = lambda st: int(round(st.t / dt))
    diag_states = [s for s in states if step_of(s) % diag_stride == 0 or step_of(s) == n]
    frames = [s for s in states if step_of(s) % frame_stride == 0 or step_of(s) == n]
    series = wave.perturbation_diagnostics(diag_states, cfg.get("window", 5.0), kink)
    return frames, series


def frames_csv(frames) -> str:
    rows = []
    for f in frames:
        for x, p, v in zip(f.x, f.psi, f.pi):
            rows.append({"t": f.t, "x": x, "psi": p, "pi": v})
    return format_csv(rows, ["t", "x", "psi", "pi"], "frames")


def diagnostics_csv(series: wave.DiagnosticSeries) -> str:
    return format_csv(series.rows(), ["t", "center", "window_sup", "energy"], "diagnostics")


CONVERGE_COLUMNS = ["epsilon", "lambda1_eps", "w_norm", "delta", "fgr_numeric"]


def convergence_csv(report: numeric.ConvergenceReport) -> str:
    return format_csv(report.rows(), CONVERGE_COLUMNS, f"convergence gamma={report.gamma:.12g}")


def params_doc(gamma: float) -> dict:
    p = derive_params(gamma)
    return {"schema": "kinkspec.params", "version": 1, **p.to_dict()}
