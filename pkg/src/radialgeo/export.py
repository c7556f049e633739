"""CSV and OBJ writers plus the row builders used by the command line."""

from __future__ import annotations

import csv
import io
import math

import numpy as np

from .conformal import transform, weingarten_functionals
from .errors import GeometryError
from .geodesic import Trajectory
from .metric import ConformalFactor
from .radialmodel import inversion, psi
from .surface import SurfaceSpec, curvature_at, grid_points, invert_surface, position

CURVATURE_COLUMNS = ["u", "v", "E", "G", "e", "f", "g", "H", "K", "t", "nu",
                     "lambda1t", "lambda2t", "Ht", "KEt", "Kt", "W1", "W2", "error"]
TRAJECTORY_COLUMNS = ["s", "x1", "x2", "x3", "gspeed", "residual"]
SWEEP_COLUMNS = ["c0", "R_roots", "w_min", "brackets_found", "error"]


def fmt(x) -> str:
    """17 significant digits, '.' decimal separator."""
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "1" if x else "0"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x) + 0.0, ".17g")  # + 0.0 turns -0.0 into 0


def to_csv(columns, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([fmt(row.get(c, "")) for c in columns])
    return buf.getvalue()


def curvature_row(spec: SurfaceSpec, factor: ConformalFactor, u: float, v: float) -> dict:
    row = {"u": u, "v": v, "error": ""}
    try:
        c = curvature_at(spec, u, v)
        cc = transform(factor, c)
        if factor.kind == "radial":
            w1, w2, _ = weingarten_functionals(c, factor)
        else:
            w1, w2 = cc.W1, cc.W2
    except GeometryError as exc:
        for col in CURVATURE_COLUMNS[2:-1]:
            row[col] = math.nan
        row["error"] = type(exc).__name__
        return row
    row.update(E=c.E, G=c.G, e=c.e, f=c.f, g=c.g, H=c.H, K=c.K, t=c.t, nu=c.nu,
               lambda1t=cc.lam1, lambda2t=cc.lam2, Ht=cc.H, KEt=cc.KE, Kt=cc.K, W1=w1, W2=w2)
    return row


def curvature_rows(spec, factor, grid):
    return [curvature_row(spec, factor, u, v) for u, v in grid_points(spec, grid)]


def trajectory_rows(traj: Trajectory):
    speeds, res = traj.gspeed, traj.residual
    return [{"s": s, "x1": x[0], "x2": x[1], "x3": x[2], "gspeed": sp, "residual": r}
            for s, x, sp, r in zip(traj.s, traj.x, speeds, res)]


def obj_text(vertices, nu: int, nv: int) -> str:
    """Grid mesh as OBJ: 'v x y z' lines and 1-indexed triangles, two per quad."""
    lines = [f"v {fmt(p[0])} {fmt(p[1])} {fmt(p[2])}" for p in vertices]
    for i in range(nu - 1):
        for j in range(nv - 1):
            a = i * nv + j + 1
            b, c, d = a + 1, a + nv, a + nv + 1
            lines.append(f"f {a} {c} {d}")
            lines.append(f"f {a} {d} {b}")
    return "\n".join(lines) + "\n"


MESH_COLUMNS = ["u", "v", "x1", "x2", "x3", "p1", "p2", "p3", "h",
                "H", "K", "KEt", "Kt", "W1", "W2", "error"]


def mesh(spec: SurfaceSpec, factor: ConformalFactor, grid, mapping="none"):
    """Vertices and per-vertex rows for ``spec`` mapped by none, psi or inversion.

    psi vertices keep the sphere direction and height (p1..p3, h) in the rows;
    the OBJ position is exp(h) p.  Curvatures are those of the mapped surface.
    """
    if mapping not in ("none", "psi", "inversion"):
        raise ValueError(f"unknown map {mapping!r}")
    target = invert_surface(spec) if mapping == "inversion" else spec
    verts, rows = [], []
    for u, v in grid_points(spec, grid):
        row = curvature_row(target, factor, u, v)
        out = {"u": u, "v": v, "error": row["error"]}
        for k in ("H", "K", "KEt", "Kt", "W1", "W2"):
            out[k] = row[k]
        x = position(spec, u, v)
        if mapping == "inversion":
            x = inversion(x)
        if mapping == "psi":
            pp = psi(x)
            out.update(p1=pp.p[0], p2=pp.p[1], p3=pp.p[2], h=pp.h)
            x = math.exp(pp.h) * pp.p
        else:
            out.update(p1="", p2="", p3="", h="")
        out.update(x1=x[0], x2=x[1], x3=x[2])
        verts.append(x)
        rows.append(out)
    return verts, rows
