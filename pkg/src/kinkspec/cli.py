"""Command-line front end.

Exit codes: 0 success (all requested conditions hold), 1 a condition failed,
2 usage or domain error, 3 numerical failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import reports
from .errors import DomainError, NumericalError
from .numeric import convergence_study


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_params(args) -> int:
    _emit(reports.dumps_json(reports.params_doc(args.gamma)), args.out)
    return 0


def cmd_gamma_table(args) -> int:
    rows = reports.gamma_table(args.kmax)
    _emit(reports.format_csv(rows, ["k", "gamma_k"], "gamma-table"), args.out)
    return 0


def cmd_certify(args) -> int:
    L, dx = args.grid if args.grid else (30.0, 0.005)
    rep = reports.certify_full(args.gamma, epsilon=args.epsilon, oracle=args.oracle, L=L, h=dx,
                              tol_resonance=args.tol_resonance)
    doc = rep.to_dict()
    reports.validate_report(reports._clean(doc))
    _emit(reports.dumps_json(doc), args.out)
    return 0 if rep.all_hold and rep.provenance.get("checks_pass", True) else 1


def cmd_fgr_scan(args) -> int:
    a, b, n = args.range
    rows = reports.fgr_scan(float(a), float(b), int(n))
    _emit(reports.format_csv(rows, reports.SCAN_COLUMNS, "fgr-scan"), args.out)
    return 0


def cmd_converge(args) -> int:
    rep = convergence_study(args.gamma, args.epsilon)
    _emit(reports.convergence_csv(rep), args.out)
    return 0


def cmd_simulate(args) -> int:
    if args.config:
        try:
            cfg = json.loads(Path(args.config).read_text())
        except json.JSONDecodeError as exc:
            raise DomainError(f"config is not valid JSON: {exc}") from None
    else:
        cfg = reports.load_preset(args.preset)
    frames, series = reports.simulate(cfg)
    out = Path(args.out or ".")
    out.mkdir(parents=True, exist_ok=True)
    (out / "frames.csv").write_text(reports.frames_csv(frames))
    (out / "diagnostics.csv").write_text(reports.diagnostics_csv(series))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kinkspec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="derived constants for one gamma")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("gamma-table", help="resonance parameters gamma_k")
    p.add_argument("--kmax", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gamma_table)

    p = sub.add_parser("certify", help="spectral conditions U1-U4")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--epsilon", type=float)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--grid", type=float, nargs=2, metavar=("L", "DX"))
    p.add_argument("--tol-resonance", type=float, default=1e-6,
                   help="half-width of the excluded bands around gamma_k and gamma_*")
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("fgr-scan", help="scan of lambda1 and the FGR value")
    p.add_argument("--range", nargs=3, metavar=("A", "B", "N"), required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_fgr_scan)

    p = sub.add_parser("converge", help="eigenvalue convergence under mollification")
    p.add_argument("--gamma", type=float, required=True)
    p.add_argument("--epsilon", type=float, nargs="+", default=[0.08, 0.04, 0.02])
    p.add_argument("--out")
    p.set_defaults(func=cmd_converge)

    p = sub.add_parser("simulate", help="time-domain kink simulation")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--config")
    g.add_argument("--preset", choices=["static", "boosted", "perturbed"])
    p.add_argument("--out", help="output directory")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "fgr-scan":
            try:
                args.range = (float(args.range[0]), float(args.range[1]), int(args.range[2]))
            except ValueError:
                raise DomainError("--range expects two floats and an integer") from None
        return args.func(args)
    except DomainError as exc:
        print(f"kinkspec: error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"kinkspec: numerical failure: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
