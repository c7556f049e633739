"""Command-line front end: ``radialgeo {verify,curvature,geodesic,rotation,mesh}``.

Every subcommand also reads ``--config file.json``; keys in the file act as
defaults and explicit flags win.  Exit codes: 0 success, 1 failed check,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .errors import GeometryError, NoBracketError
from .export import (CURVATURE_COLUMNS, MESH_COLUMNS, SWEEP_COLUMNS, TRAJECTORY_COLUMNS,
                     curvature_rows, fmt, mesh, obj_text, to_csv, trajectory_rows)
from .geodesic import integrate
from .metric import parse_factor
from .rotation import extrinsic_residual, radius_for_curvature, solve_profile
from .surface import catalog, from_json
from .verify import DEFAULT_SEED, run

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class ConfigError(Exception):
    pass


def _load_json(text: str):
    path = Path(text)
    try:
        if path.is_file():
            return json.loads(path.read_text())
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read JSON from {text!r}: {exc}") from None


def _surface(value):
    if value is None:
        raise ConfigError("a surface is required (--surface or config key 'surface')")
    if isinstance(value, str):
        cat = catalog()
        if value in cat:
            return cat[value]
        value = _load_json(value)
    try:
        return from_json(value)
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad surface description: {exc}") from None


def _factor(value):
    try:
        return parse_factor(str(value))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def _grid(value):
    if isinstance(value, (list, tuple)) and len(value) == 2:
        nu, nv = value
    else:
        try:
            nu, nv = str(value).lower().split("x")
        except ValueError:
            raise ConfigError(f"grid must look like NxM, got {value!r}") from None
    try:
        nu, nv = int(nu), int(nv)
    except ValueError:
        raise ConfigError(f"grid must look like NxM, got {value!r}") from None
    if nu < 2 or nv < 2:
        raise ConfigError("grid needs at least 2 points per direction")
    return nu, nv


def _vector(value, name):
    if isinstance(value, str):
        value = value.split(",")
    try:
        vec = np.array([float(c) for c in value])
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be three comma-separated numbers") from None
    if vec.shape != (3,):
        raise ConfigError(f"{name} must have three components")
    return vec


def _sweep(value):
    try:
        lo, hi, n = str(value).split(":")
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise ConfigError(f"sweep must look like lo:hi:n, got {value!r}") from None
    if not (0 < lo <= hi) or n < 1:
        raise ConfigError("sweep needs 0 < lo <= hi and n >= 1")
    return np.geomspace(lo, hi, n)


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# -- subcommands -------------------------------------------------------------------------

def cmd_verify(opt) -> int:
    extra = opt.get("checks", [])
    if not isinstance(extra, list):
        raise ConfigError("'checks' must be a list")
    try:
        report = run(seed=int(opt.get("seed", DEFAULT_SEED)), extra=extra,
                     stamp=bool(opt.get("stamp", False)))
    except (KeyError, TypeError, ValueError) as exc:
        raise ConfigError(f"bad check in config: {exc}") from None
    _write(report.to_json() + "\n", opt.get("out"))
    for e in report.entries:
        if not e.passed:
            print(f"FAIL {e.id}: {e.max_residual:.3e} vs {e.tolerance:.1e}", file=sys.stderr)
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_curvature(opt) -> int:
    spec = _surface(opt.get("surface"))
    factor = _factor(opt.get("factor", "radial"))
    rows = curvature_rows(spec, factor, _grid(opt.get("grid", "10x10")))
    _write(to_csv(CURVATURE_COLUMNS, rows), opt.get("out"))
    return EXIT_OK


def cmd_geodesic(opt) -> int:
    factor = _factor(opt.get("factor", "radial"))
    start = _vector(opt.get("start", "1,0,0"), "start")
    direction = _vector(opt.get("direction", "1,0,0"), "direction")
    try:
        traj = integrate(factor, start, direction, float(opt.get("length", 1.0)),
                         float(opt.get("step", 1e-3)))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    _write(to_csv(TRAJECTORY_COLUMNS, trajectory_rows(traj)), opt.get("out"))
    if traj.exited_domain:
        print(f"trajectory left the domain at s = {traj.s[-1]:.6g}; truncated", file=sys.stderr)
    return EXIT_OK


def _root_row(factor, c0):
    row = {"c0": c0, "R_roots": "", "w_min": math.nan, "brackets_found": 0, "error": ""}
    try:
        res = radius_for_curvature(factor, c0)
    except NoBracketError as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
        return row
    row.update(R_roots=";".join(fmt(r) for r in res.roots), w_min=res.w_min,
               brackets_found=len(res.brackets))
    return row


def cmd_rotation(opt) -> int:
    factor = _factor(opt.get("factor", "exp"))
    if opt.get("profile"):
        c0 = float(opt.get("c0", 0.0))
        lo, hi = (float(x) for x in str(opt.get("span", "-0.9:0.9")).split(":"))
        try:
            prof = solve_profile(factor, c0, float(opt.get("phi0", 1.0)),
                                 float(opt.get("dphi0", 0.0)), (lo, hi),
                                 step=float(opt.get("step", 1e-3)))
        except GeometryError as exc:
            print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        rows = [{"u": u, "phi": p, "dphi": dp,
                 "residual": extrinsic_residual(factor, prof, float(u), c0)}
                for u, p, dp in zip(prof.u, prof.phi, prof.dphi)]
        _write(to_csv(["u", "phi", "dphi", "residual"], rows), opt.get("out"))
        return EXIT_OK
    if opt.get("sweep") is not None:
        c0s = _sweep(opt["sweep"])
    elif opt.get("c0") is not None:
        c0s = [float(opt["c0"])]
    else:
        raise ConfigError("rotation needs --c0, --sweep or --profile")
    if any(not c > 0 for c in c0s):
        raise ConfigError("root solving needs c0 > 0")
    _write(to_csv(SWEEP_COLUMNS, [_root_row(factor, float(c)) for c in c0s]), opt.get("out"))
    return EXIT_OK


def cmd_mesh(opt) -> int:
    spec = _surface(opt.get("surface"))
    factor = _factor(opt.get("factor", "radial"))
    grid = _grid(opt.get("grid", "20x20"))
    try:
        verts, rows = mesh(spec, factor, grid, opt.get("map", "none"))
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out = opt.get("out")
    if out in (None, "-"):
        raise ConfigError("mesh needs --out <file.obj>; the sidecar CSV goes next to it")
    obj = Path(out)
    obj.write_text(obj_text(verts, *grid))
    obj.with_suffix(".csv").write_text(to_csv(MESH_COLUMNS, rows))
    return EXIT_OK


COMMANDS = {"verify": cmd_verify, "curvature": cmd_curvature, "geodesic": cmd_geodesic,
            "rotation": cmd_rotation, "mesh": cmd_mesh}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radialgeo", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, factor=True):
        p.add_argument("--config", help="JSON file with default option values")
        p.add_argument("--out", help="output path (default: stdout)")
        if factor:
            p.add_argument("--factor", help="euclidean | radial | exp | custom:h;dh;ddh")
        return p

    p = common(sub.add_parser("verify", help="run the residual battery, JSON report"), False)
    p.add_argument("--seed", type=int)
    p.add_argument("--stamp", action="store_true", default=None,
                   help="record a creation time (off by default for byte-identical output)")

    p = common(sub.add_parser("curvature", help="per-point curvature CSV over a grid"))
    p.add_argument("--surface", help="catalog name, JSON text or JSON file")
    p.add_argument("--grid", help="NxM")

    p = common(sub.add_parser("geodesic", help="integrate a geodesic, trajectory CSV"))
    p.add_argument("--start", help="x,y,z")
    p.add_argument("--direction", help="x,y,z (rescaled to unit g-speed)")
    p.add_argument("--length", type=float)
    p.add_argument("--step", type=float)

    p = common(sub.add_parser("rotation", help="sphere radii for an extrinsic curvature, or a profile"))
    p.add_argument("--c0", type=float)
    p.add_argument("--sweep", help="lo:hi:n, log-spaced c0 values")
    p.add_argument("--profile", action="store_true", default=None,
                   help="integrate the profile ODE instead of solving for radii")
    p.add_argument("--phi0", type=float)
    p.add_argument("--dphi0", type=float)
    p.add_argument("--span", help="lo:hi interval of u containing 0")
    p.add_argument("--step", type=float)

    p = common(sub.add_parser("mesh", help="OBJ mesh plus per-vertex CSV"))
    p.add_argument("--surface", help="catalog name, JSON text or JSON file")
    p.add_argument("--grid", help="NxM")
    p.add_argument("--map", choices=("none", "psi", "inversion"))
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        opt = {}
        if args.config:
            cfg = _load_json(args.config)
            if not isinstance(cfg, dict):
                raise ConfigError("config must be a JSON object")
            opt.update(cfg)
        opt.update({k: v for k, v in vars(args).items()
                    if v is not None and k not in ("config", "command")})
        return COMMANDS[args.command](opt)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
