"""Command-line front end.

    zetasieve verify    [--grid s0:s1:r0:r1:n] [--tol T] [--log-space]
    zetasieve zeros     --min R0 --max R1 [--step S] [--tol T] [--format csv|json|both]
    zetasieve appendixc [--delta D]
    zetasieve eval      --sigma S --rho R

Every command accepts ``--out DIR`` (default ``zs_out``) and
``--config FILE``.  Exit codes: 0 success, 1 identity failure,
2 evaluation error, 3 no root, 64 usage.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import logging
import math
import os
import sys
import time
from dataclasses import asdict
from pathlib import Path

from . import __version__, appendixc, critline, funceq, identities, specfun, zerofind
from .errors import EvaluationError, NoRootError, RangeError, ZetaSieveError

EXIT_OK = 0
EXIT_IDENTITY = 1
EXIT_EVAL = 2
EXIT_NO_ROOT = 3
EXIT_USAGE = 64

log = logging.getLogger("zetasieve")

ZEROS_CSV_COLUMNS = ("rho", "kind", "residual", "zeta_mag", "bracket_lo", "bracket_hi",
                     "iterations")
CRITLINE_SCAN_COLUMNS = ("rho", "half_zero_value", "full_zero_value")
L_SCAN_COLUMNS = ("sigma", "rho", "l_value", "rhs", "b_value")
B_SCAN_COLUMNS = ("sigma", "rho", "b_value")

DEFAULTS = {
    "out": "zs_out",
    "grid": identities.DEFAULT_GRID,
    "tol": None,
    "log_space": False,
    "min": None,
    "max": None,
    "step": 0.05,
    "format": "both",
    "delta": 0.5,
    "sigma": None,
    "rho": None,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _bool(text: str) -> bool:
    v = str(text).strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


CONVERTERS = {
    "tol": float, "min": float, "max": float, "step": float,
    "delta": float, "sigma": float, "rho": float, "log_space": _bool,
    "out": str, "grid": str, "format": str,
}


def read_config(path: Path) -> dict:
    """Flat ``key = value`` file; '#' starts a comment; keys use '_' or '-'."""
    cfg = {}
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key = value")
        key, value = (p.strip() for p in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONVERTERS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            cfg[key] = CONVERTERS[key](value)
        except ValueError as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
    return cfg


def resolve_options(args: argparse.Namespace, keys) -> dict:
    """flags > config file > defaults."""
    opts = {k: DEFAULTS[k] for k in keys}
    if args.config is not None:
        for k, v in read_config(Path(args.config)).items():
            if k in opts:
                opts[k] = v
    for k in keys:
        v = getattr(args, k, None)
        if v is not None:
            opts[k] = v
    return opts


def _fmt(x) -> str:
    if isinstance(x, float):
        return repr(x)
    return str(x)


def write_csv(path: Path, columns, rows) -> None:
    with path.open("w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row[c]) for c in columns])


def write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, allow_nan=False) + "\n", encoding="utf-8")


def write_manifest(out: Path, command: str, config: dict, started_at: str,
                   outputs: list[Path]) -> Path:
    path = out / "manifest.json"
    write_json(path, {
        "command": command,
        "config": config,
        "started_at": started_at,
        "tool_version": __version__,
        "outputs": [str(p) for p in outputs],
    })
    return path


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds")


# -- verify ------------------------------------------------------------------

def cmd_verify(opts: dict) -> int:
    out = Path(opts["out"])
    grid = identities.GridSpec.parse(opts["grid"])
    mode = "log" if opts["log_space"] else "direct"
    started = _now()
    out.mkdir(parents=True, exist_ok=True)
    report_path = out / "verify_report.json"
    report = {"grid": str(grid), "n_points": grid.n, "mode": mode}
    try:
        results = identities.run_identity_suite(grid, mode=mode, tol=opts["tol"])
        calib = appendixc.default_calibration()
    except EvaluationError as exc:
        report.update(identities=[], passed=False, error=str(exc))
        write_json(report_path, report)
        write_manifest(out, "verify", opts, started, [report_path])
        print(f"evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    passed = all(r.passed for r in results)
    report.update(
        identities=[r.as_dict() for r in results],
        dl_coefficient=asdict(calib),
        passed=passed,
    )
    write_json(report_path, report)
    write_manifest(out, "verify", opts, started, [report_path])
    for r in results:
        status = "ok  " if r.passed else "FAIL"
        print(f"{status} {r.name:<24} max={r.max_residual:.3e} tol={r.tolerance:.1e} n={r.n}")
    print(f"dL/dsigma coefficient: {calib.chosen} ({calib.coefficient:.12g})")
    return EXIT_OK if passed else EXIT_IDENTITY


# -- zeros -------------------------------------------------------------------

def smooth_zero_count(t: float) -> float:
    """theta(t)/pi + 1 from the Stirling expansion of the Riemann-Siegel theta."""
    if t < 7.0:
        return 0.0
    theta = 0.5 * t * math.log(t / (2 * math.pi)) - 0.5 * t - math.pi / 8
    theta += 1.0 / (48 * t) + 7.0 / (5760 * t**3)
    return theta / math.pi + 1.0


def cmd_zeros(opts: dict) -> int:
    if opts["min"] is None or opts["max"] is None:
        raise UsageError("zeros requires --min and --max")
    if opts["format"] not in ("csv", "json", "both"):
        raise UsageError(f"--format must be csv, json or both, got {opts['format']!r}")
    try:
        tol = 1e-12 if opts["tol"] is None else opts["tol"]
        cfg = zerofind.ScanConfig(opts["min"], opts["max"], opts["step"], tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    out = Path(opts["out"])
    started = _now()
    out.mkdir(parents=True, exist_ok=True)
    t0 = time.perf_counter()
    result = zerofind.run_campaign_detailed(cfg)
    records = result.records
    log.info("campaign done in %.2fs: %d records, %d failures",
             time.perf_counter() - t0, len(records), len(result.failures))

    outputs = []
    if opts["format"] in ("csv", "both"):
        p = out / "zeros.csv"
        write_csv(p, ZEROS_CSV_COLUMNS, [r.as_row() for r in records])
        outputs.append(p)
    if opts["format"] in ("json", "both"):
        p = out / "zeros.json"
        write_json(p, [r.as_json() for r in records])
        outputs.append(p)
    critline_scan = out / "critline_scan.csv"
    write_csv(critline_scan, CRITLINE_SCAN_COLUMNS, [
        {"rho": x, "half_zero_value": critline.half_zero_function(x),
         "full_zero_value": critline.full_zero_function(x, 1)}
        for x in cfg.grid()
    ])
    outputs.append(critline_scan)
    write_manifest(out, "zeros", opts, started, outputs)

    full = zerofind.full_zeros(records)
    for r in full:
        print(f"FullZero rho={r.rho:.10f} |zeta|={r.zeta_mag:.2e}")
    print(f"{len(records)} records ({len(full)} full zeros) in [{cfg.rho_min}, {cfg.rho_max}]")
    expected = smooth_zero_count(cfg.rho_max) - smooth_zero_count(cfg.rho_min)
    if not full and expected >= 2.0:
        print(f"no full zeros found where about {expected:.1f} are expected", file=sys.stderr)
        return EXIT_NO_ROOT
    return EXIT_OK


# -- appendixc ---------------------------------------------------------------

def _sign_change_intervals(rows) -> list[list[float]]:
    out = []
    for a, b in zip(rows, rows[1:]):
        if a.b_value == 0.0 or a.b_value * b.b_value < 0:
            out.append([a.rho, b.rho])
    return out


def cmd_appendixc(opts: dict) -> int:
    delta = opts["delta"]
    if not delta > 0:
        raise UsageError("--delta must be positive")
    out = Path(opts["out"])
    started = _now()
    out.mkdir(parents=True, exist_ok=True)
    try:
        rs = appendixc.find_rho_s()
    except NoRootError as exc:
        print(f"no root: {exc}", file=sys.stderr)
        return EXIT_NO_ROOT
    calib = appendixc.default_calibration()
    rho_s = rs.rho_s

    sigmas = [i / 100 for i in range(101)]
    l_rows = appendixc.scan_rows(sigmas, [rho_s - delta, rho_s, rho_s + delta])
    l_scan = out / "l_scan.csv"
    write_csv(l_scan, L_SCAN_COLUMNS, [asdict(r) for r in l_rows])

    rhos = [rho_s - 1.0 + i / 100 for i in range(201)]
    b_scan = out / "b_scan.csv"
    b_rows = []
    changes = {}
    for sigma in (0.0, 0.25, 0.5, 0.75, 1.0):
        row = appendixc.scan_rows([sigma], rhos)
        changes[repr(sigma)] = _sign_change_intervals(row)
        b_rows.extend(row)
    write_csv(b_scan, B_SCAN_COLUMNS, [asdict(r) for r in b_rows])

    report = out / "appendixc_report.json"
    write_json(report, {
        "rho_s": rho_s,
        "bracket": list(rs.bracket),
        "alt_root_l0_zero": rs.alt_root,
        "delta": delta,
        "dl_coefficient": asdict(calib),
        "b_sign_changes": changes,
    })
    write_manifest(out, "appendixc", opts, started, [l_scan, b_scan, report])
    print(f"rho_s = {rho_s:.9f} bracket [{rs.bracket[0]:.2f}, {rs.bracket[1]:.2f}]")
    print(f"L(0, rho) = 0 root: {rs.alt_root:.12f}")
    return EXIT_OK


# -- eval --------------------------------------------------------------------

def cmd_eval(opts: dict) -> int:
    sigma, rho = opts["sigma"], opts["rho"]
    if sigma is None or rho is None:
        raise UsageError("eval requires --sigma and --rho")
    z = specfun.zeta_strip(sigma, rho)
    g = specfun.gamma_complex(sigma, rho)
    pq = funceq.pq_coefficients(sigma, rho)
    print(f"s      = {sigma!r} + {rho!r}i")
    print(f"zeta   = {z.real!r} {z.imag:+.17g}i")
    print(f"Gamma  = {g.real!r} {g.imag:+.17g}i")
    print(f"P      = {pq.p!r}")
    print(f"Q      = {pq.q!r}")
    if rho > 0:
        f = critline.factors(rho)
        print(f"N      = {f.n!r}   (sigma = 1/2)")
        print(f"D_R    = {f.dr!r}   (sigma = 1/2)")
        print(f"D_I    = {f.di!r}   (sigma = 1/2)")
    return EXIT_OK


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetasieve",
                     description="Zeta functional-equation numerics and zero location.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="output directory (default zs_out)")
    common.add_argument("--config", help="flat key = value config file")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("verify", parents=[common], help="run the identity suites")
    p.add_argument("--grid", help=f"s0:s1:r0:r1:n (default {identities.DEFAULT_GRID})")
    p.add_argument("--tol", type=float, help="override every identity tolerance")
    p.add_argument("--log-space", dest="log_space", action="store_const", const=True,
                   help="assemble hyperbolic/Gamma products in log space")

    p = sub.add_parser("zeros", parents=[common], help="locate and classify zeros")
    p.add_argument("--min", type=float, help="lower end of the rho range")
    p.add_argument("--max", type=float, help="upper end of the rho range")
    p.add_argument("--step", type=float, help="scan grid spacing, at most 0.25 (default 0.05)")
    p.add_argument("--tol", type=float, help="root refinement tolerance (default 1e-12)")
    p.add_argument("--format", choices=("csv", "json", "both"), help="record format (default both)")

    p = sub.add_parser("appendixc", parents=[common], help="off-line candidate scans")
    p.add_argument("--delta", type=float, help="rho offset for the L(sigma) curves (default 0.5)")

    p = sub.add_parser("eval", parents=[common], help="print zeta, Gamma, P, Q, N, D_R, D_I")
    p.add_argument("--sigma", type=float)
    p.add_argument("--rho", type=float)
    return parser


COMMANDS = {
    "verify": (cmd_verify, ("out", "grid", "tol", "log_space")),
    "zeros": (cmd_zeros, ("out", "min", "max", "step", "tol", "format")),
    "appendixc": (cmd_appendixc, ("out", "delta")),
    "eval": (cmd_eval, ("out", "sigma", "rho")),
}


def main(argv=None) -> int:
    logging.basicConfig(level=os.environ.get("ZS_LOG_LEVEL", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    func, keys = COMMANDS[args.command]
    try:
        opts = resolve_options(args, keys)
        return func(opts)
    except (UsageError, RangeError) as exc:
        print(f"zetasieve {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ZetaSieveError as exc:
        print(f"zetasieve {args.command}: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except ValueError as exc:
        print(f"zetasieve {args.command}: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
