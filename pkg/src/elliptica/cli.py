"""Command-line front end.

Exit codes: 0 success, 2 invalid parameters, 3 a check exceeded its tolerance.
Output goes to stdout (or ``--output``); diagnostics go to stderr.

Option precedence is flags > ``--config`` file (flat ``key = value`` lines,
keys named like the long flags) > ``ELLIPTICA_TOL`` (tolerance only) > defaults.
"""
from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import checks, fourier, green, modes
from ._io import dumps_csv, dumps_json, fmt17
from .elliptic_core import EllipticDomainError
from .solutions import (ConfigError, Family, FieldConfig, WaveFrame, eom_residual, eom_scale,
                        modulus, profile)

EXIT_OK = 0
EXIT_PARAMS = 2
EXIT_TOLERANCE = 3

DEFAULT_N = 16
DEFAULT_TOL = 1e-8


class _ParamError(Exception):
    pass


def _grid(spec: str) -> np.ndarray:
    try:
        lo, hi, n = spec.split(":")
        n = int(n)
        lo, hi = float(lo), float(hi)
    except ValueError:
        raise _ParamError(f"grid must look like start:stop:count, got {spec!r}") from None
    if n < 1:
        raise _ParamError("grid count must be positive")
    return np.linspace(lo, hi, n)


def read_config_file(path: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise _ParamError(f"{path}:{lineno}: expected key = value")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


def _common(p: argparse.ArgumentParser):
    p.add_argument("--family", choices=[f.value for f in Family], default=None)
    p.add_argument("--mu0", type=float, default=0.0)
    p.add_argument("--mu", type=float, default=1.0)
    p.add_argument("--lambda", dest="lam", type=float, default=1.0)
    p.add_argument("--n", dest="N", type=int, default=DEFAULT_N)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=["json", "csv", "plot"], default="csv")
    p.add_argument("--json", dest="format", action="store_const", const="json")
    p.add_argument("--output", default=None)
    p.add_argument("--config", default=None)
    p.add_argument("--self-check", action="store_true",
                   help="exit 3 when a built-in consistency check exceeds --tol")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elliptica", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="field profile phi(u) on a phase grid")
    _common(p)
    p.add_argument("--grid", default="0:10:100")
    p.add_argument("--branch", type=int, choices=[1, -1], default=1)

    p = sub.add_parser("spectrum", help="pole masses")
    _common(p)

    p = sub.add_parser("kl", help="Kallen-Lehmann masses and weights")
    _common(p)

    p = sub.add_parser("propagator", help="pole-sum propagator on a p^2 grid")
    _common(p)
    p.add_argument("--grid", default="0:10:200")
    p.add_argument("--epsilon", type=float, default=None)

    p = sub.add_parser("green", help="rest-frame Green function G(t)")
    _common(p)
    p.add_argument("--grid", default="0:10:200")
    p.add_argument("--phase-index", type=int, default=0)

    p = sub.add_parser("modes", help="zero / non-zero mode table over one period")
    _common(p)
    p.add_argument("--mode", choices=["zero", "nonzero"], default="zero")
    p.add_argument("--points", type=int, default=1024)

    p = sub.add_parser("series", help="Fourier coefficients and frequencies")
    _common(p)

    p = sub.add_parser("verify", help="run the consistency suite")
    p.add_argument("--only", action="append", choices=sorted(checks.CHECKS), default=None)
    p.add_argument("--inject-dispersion-error", type=float, default=0.0,
                   help="relative error put into p^2 of the eom test frames (negative control)")
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--format", choices=["json", "csv", "plot"], default="json")
    p.add_argument("--output", default=None)
    p.add_argument("--config", default=None)
    parser.subcommands = sub.choices
    return parser


_KEY_ALIASES = {"lambda": "lam", "n": "N"}


def _parse(parser, argv):
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    sub = parser.subcommands[args.command]
    known = {a.dest for a in sub._actions}
    values = {}
    for key, raw in read_config_file(args.config).items():
        key = _KEY_ALIASES.get(key, key)
        if key not in known or key in ("help", "config"):
            raise _ParamError(f"unknown key in {args.config}: {key!r}")
        values[key] = raw
    # string defaults go through each option's type converter; flags still win
    sub.set_defaults(**values)
    return parser.parse_args(argv)


def _tolerance(args) -> float:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("ELLIPTICA_TOL")
    if env:
        try:
            return float(env)
        except ValueError:
            raise _ParamError(f"ELLIPTICA_TOL is not a number: {env!r}") from None
    return DEFAULT_TOL


def _config(args) -> FieldConfig:
    if args.family is None:
        raise _ParamError("--family is required")
    return FieldConfig(Family(args.family), mu0=args.mu0, mu=args.mu, lam=args.lam)


def _emit(args, payload, columns, rows, plot_cols=(0, 1)):
    if args.format == "json":
        text = dumps_json(payload) + "\n"
    elif args.format == "csv":
        text = dumps_csv(columns, rows)
    else:
        i, j = plot_cols
        text = "".join(f"{fmt17(r[i])} {fmt17(r[j])}\n" for r in rows)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _payload(cfg, results, check_list):
    return {
        "family": cfg.kind.value,
        "params": {"mu0": cfg.mu0, "mu": cfg.mu, "lambda": cfg.lam},
        "results": results,
        "checks": [c.as_dict() for c in check_list],
    }


def _finish(args, check_list) -> int:
    failed = [c for c in check_list if not c.passed]
    for c in failed:
        print(f"check {c.name} failed: {c.value:.3e} > {c.tol:.1e}", file=sys.stderr)
    if failed and getattr(args, "self_check", False):
        return EXIT_TOLERANCE
    return EXIT_OK


def cmd_eval(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    u = _grid(args.grid)
    phi = profile(cfg, u, args.branch)
    # rest frame, theta = 0: t = u / p0
    frame = WaveFrame.rest(cfg)
    p0 = frame.p[0]
    if p0 > 0:
        x = np.zeros((len(u), 4))
        x[:, 0] = u / p0
        res = np.abs(eom_residual(cfg, frame, x, branch=args.branch)).max() / eom_scale(cfg)
    else:
        res = 0.0
    chk = [checks.CheckResult("eom_relative_residual", bool(res <= tol), float(res), tol)]
    rows = list(zip(u, phi))
    _emit(args, _payload(cfg, [{"u": a, "phi": b} for a, b in rows], chk), ["u", "phi"], rows)
    return _finish(args, chk)


def cmd_spectrum(args) -> int:
    cfg = _config(args)
    masses = green.mass_spectrum(cfg, args.N)
    eps = fourier.epsilon_spectrum(cfg, args.N)
    mism = int(np.sum(masses != eps))
    chk = [checks.CheckResult("spectrum_equality", mism == 0, float(mism), 0.0)]
    rows = [(i, m) for i, m in enumerate(masses)]
    _emit(args, _payload(cfg, [{"n": i, "mass": m} for i, m in rows], chk), ["n", "mass"], rows)
    return _finish(args, chk)


def cmd_kl(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    ps = green.kl_weights(cfg, args.N)
    dev = abs(ps.total_weight - 1.0)
    chk = [checks.CheckResult("kl_sum_rule", bool(dev <= tol), dev, tol)]
    rows = [(i, m, r) for i, (m, r) in enumerate(zip(ps.masses, ps.residues))]
    results = [{"mass": m, "residue": r} for _, m, r in rows]
    payload = _payload(cfg, results, chk)
    payload["zero_mode_present"] = ps.has_zero_mode
    _emit(args, payload, ["r", "mass", "residue"], rows, plot_cols=(1, 2))
    return _finish(args, chk)


def cmd_propagator(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    ps = green.kl_weights(cfg, args.N, args.epsilon)
    p2 = _grid(args.grid)
    vals = ps.propagator(p2)
    dev = abs(ps.total_weight - 1.0)
    chk = [checks.CheckResult("kl_sum_rule", bool(dev <= tol), dev, tol)]
    rows = [(a, v.real, v.imag) for a, v in zip(p2, vals)]
    results = [{"p2": a, "re": b, "im": c} for a, b, c in rows]
    _emit(args, _payload(cfg, results, chk), ["p2", "re", "im"], rows)
    return _finish(args, chk)


def cmd_green(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    t = _grid(args.grid)
    g = green.rest_frame_green(cfg, t, args.phase_index)
    periods = max(t.max() * green.effective_mass(cfg) / (4 * modulus(cfg).K), 0.25)
    err = checks.green_oracle_error(cfg, periods=periods)
    chk = [checks.CheckResult("green_oracle", bool(err <= tol), err, tol)]
    rows = list(zip(t, g))
    _emit(args, _payload(cfg, [{"t": a, "G": b} for a, b in rows], chk), ["t", "G"], rows)
    return _finish(args, chk)


def cmd_modes(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    try:
        mode = modes.claimed_modes(cfg)[args.mode]
    except ValueError as exc:
        raise _ParamError(str(exc)) from None
    op = modes.LinearizedOperator(cfg, WaveFrame.rest(cfg))
    if args.points < modes.MIN_POINTS:
        raise _ParamError(f"--points must be at least {modes.MIN_POINTS}")
    eps, _ = modes.eigenvalue_check(op, mode, args.points)
    dev = abs(eps - mode.claimed_eigenvalue) / op.p_squared
    chk = [checks.CheckResult("eigenvalue", bool(dev <= tol), dev, tol)]
    u = op.grid(args.points)
    chi = mode(u, modulus(cfg).m)
    resid = modes.apply_reduced(op, chi) - mode.claimed_eigenvalue * chi
    rows = list(zip(u, chi, resid))
    payload = _payload(cfg, [{"u": a, "mode": b, "residual": c} for a, b, c in rows], chk)
    payload["measured_eigenvalue"] = eps
    payload["claimed_eigenvalue"] = mode.claimed_eigenvalue
    _emit(args, payload, ["u", "mode", "residual"], rows)
    return _finish(args, chk)


def cmd_series(args) -> int:
    cfg = _config(args)
    tol = _tolerance(args)
    spec = fourier.series_spec(cfg, args.N)
    eps = fourier.epsilon_spectrum(cfg, args.N)
    u = np.linspace(0.0, 4.0 * modulus(cfg).K, 1001)
    err = float(np.abs(fourier.field_series(cfg, u, args.N) - profile(cfg, u)).max())
    chk = [checks.CheckResult("series_vs_direct", bool(err <= tol), err, tol)]
    if cfg.kind is Family.SSB:
        coeffs = np.concatenate([[spec.constant], spec.coefficients[: args.N - 1]])
    else:
        coeffs = spec.coefficients
    rows = [(i, c, e) for i, (c, e) in enumerate(zip(coeffs, eps))]
    payload = _payload(cfg, [{"n": i, "coefficient": c, "epsilon": e} for i, c, e in rows], chk)
    payload["nome"] = spec.q
    _emit(args, payload, ["n", "coefficient", "epsilon"], rows, plot_cols=(2, 1))
    return _finish(args, chk)


def cmd_verify(args) -> int:
    results = checks.run_checks(args.only, seed=args.seed,
                                dispersion_error=args.inject_dispersion_error)
    payload = {"checks": [c.as_dict() for c in results],
               "passed": all(c.passed for c in results)}
    rows = [(c.name, "pass" if c.passed else "FAIL", c.value, c.tol) for c in results]
    if args.format == "json":
        text = dumps_json(payload) + "\n"
    else:
        text = dumps_csv(["name", "status", "value", "tol"], rows)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    failed = [c for c in results if not c.passed]
    for c in failed:
        print(f"check {c.name} failed: {c.value:.3e} > {c.tol:.1e}", file=sys.stderr)
    return EXIT_TOLERANCE if failed else EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "spectrum": cmd_spectrum,
    "kl": cmd_kl,
    "propagator": cmd_propagator,
    "green": cmd_green,
    "modes": cmd_modes,
    "series": cmd_series,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = _parse(parser, argv)
        if getattr(args, "N", 1) < 1:
            raise _ParamError("--n must be at least 1")
        return COMMANDS[args.command](args)
    except (_ParamError, ConfigError, EllipticDomainError, KeyError, OSError) as exc:
        print(f"elliptica: error: {exc}", file=sys.stderr)
        return EXIT_PARAMS


if __name__ == "__main__":
    sys.exit(main())
