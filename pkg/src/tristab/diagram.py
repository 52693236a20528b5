"""Stability diagrams: J swept over an (omega, gamma) mesh plus level curves.

Grid cells hold the J value, NaN where no standing wave exists, or a signed
infinity where the query landed on the nonexistence curve (J diverges there,
positive from the lower-left side, negative from the FF upper-right side).
Level curves come from marching squares on the linearly interpolated field;
cells touching a sentinel corner are skipped rather than clamped, since every
level curve accumulates on the nonexistence curve and clamping would
fabricate geometry there.

Serialization formats:

* grid CSV: header ``gamma\\omega,<w1>,...``, one row per gamma ascending,
  17-significant-digit decimals, sentinel literals NaN / +Inf / -Inf;
* contour JSON: ``{"params": {...}, "level": c, "paths": [[[w, g], ...]]}``;
* boundary CSV: columns ``a,omega_ne,gamma_ne``.
"""

from __future__ import annotations

import json
import math
import multiprocessing
import os
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .boundary import BoundaryCurve
from .errors import NoStandingWave
from .model import NonlinearityParams
from .stability import eval_J


@dataclass(frozen=True)
class DiagramGrid:
    """J values on a rectangular mesh; values has shape (len(gamma_axis), len(omega_axis))."""

    params: NonlinearityParams
    omega_axis: np.ndarray
    gamma_axis: np.ndarray
    values: np.ndarray


@dataclass(frozen=True)
class ContourSet:
    """Polylines of one level curve; each path is a list of (omega, gamma)."""

    level: float
    paths: Tuple[Tuple[Tuple[float, float], ...], ...]
    params: Optional[NonlinearityParams] = None


def _cell_value(params: NonlinearityParams, omega: float,
                gamma: float) -> float:
    # plain floats: numpy scalars slow the per-point root find and
    # quadrature down severalfold over a 200x200 mesh
    try:
        return eval_J(params, float(omega), float(gamma)).j
    except NoStandingWave:
        return math.nan


def _sweep_row(task):
    params, gamma, omegas = task
    return [_cell_value(params, w, gamma) for w in omegas]


def sweep_grid(params: NonlinearityParams,
               omega_range: Tuple[float, float],
               gamma_range: Tuple[float, float],
               nx: int, ny: int,
               jobs: Optional[int] = None) -> DiagramGrid:
    """Evaluate J on an nx (omega) by ny (gamma) mesh.

    jobs > 1 distributes rows over a process pool; the evaluation order is
    unspecified either way.
    """
    w_lo, w_hi = float(omega_range[0]), float(omega_range[1])
    g_lo, g_hi = float(gamma_range[0]), float(gamma_range[1])
    if not (0.0 < w_lo < w_hi) or not math.isfinite(w_hi):
        raise ValueError("omega_range must satisfy 0 < lo < hi, finite")
    if not (g_lo < g_hi) or not (math.isfinite(g_lo) and math.isfinite(g_hi)):
        raise ValueError("gamma_range must satisfy lo < hi, finite")
    if nx < 2 or ny < 2:
        raise ValueError("need nx >= 2 and ny >= 2")
    omega_axis = np.linspace(w_lo, w_hi, int(nx))
    gamma_axis = np.linspace(g_lo, g_hi, int(ny))
    if jobs is None:
        jobs = os.cpu_count() or 1
    tasks = [(params, g, list(omega_axis)) for g in gamma_axis]
    if jobs > 1 and ny > 1:
        with multiprocessing.Pool(processes=min(jobs, ny)) as pool:
            rows = pool.map(_sweep_row, tasks)
    else:
        rows = [_sweep_row(t) for t in tasks]
    values = np.array(rows, dtype=float)
    return DiagramGrid(params=params, omega_axis=omega_axis,
                       gamma_axis=gamma_axis, values=values)


# -- marching squares ---------------------------------------------------------


def _interp(x1: float, x2: float, f1: float, f2: float) -> float:
    t = f1 / (f1 - f2)
    return x1 + t * (x2 - x1)


def _cell_segments(x0, x1, y0, y1, fa, fb, fc, fd, center_above):
    """Level-crossing segments of one cell.

    Corners: a=(x0,y0), b=(x1,y0), c=(x1,y1), d=(x0,y1); f* are the corner
    values minus the level; center_above() lazily resolves the two saddle
    configurations.
    """
    idx = ((1 if fa > 0.0 else 0)
           | (2 if fb > 0.0 else 0)
           | (4 if fc > 0.0 else 0)
           | (8 if fd > 0.0 else 0))
    if idx == 0 or idx == 15:
        return []
    # crossing points are computed only on the edges each case uses; the
    # strict sign split guarantees a nonzero denominator there
    bottom = lambda: (_interp(x0, x1, fa, fb), y0)
    right = lambda: (x1, _interp(y0, y1, fb, fc))
    top = lambda: (_interp(x0, x1, fd, fc), y1)
    left = lambda: (x0, _interp(y0, y1, fa, fd))
    if idx in (1, 14):
        segs = [(left(), bottom())]
    elif idx in (2, 13):
        segs = [(bottom(), right())]
    elif idx in (3, 12):
        segs = [(left(), right())]
    elif idx in (4, 11):
        segs = [(right(), top())]
    elif idx in (6, 9):
        segs = [(bottom(), top())]
    elif idx in (7, 8):
        segs = [(left(), top())]
    elif idx == 5:
        if center_above():
            segs = [(left(), top()), (bottom(), right())]
        else:
            segs = [(left(), bottom()), (right(), top())]
    elif center_above():
        segs = [(bottom(), left()), (top(), right())]
    else:
        segs = [(bottom(), right()), (top(), left())]
    # a corner sitting exactly at the level collapses both adjacent
    # crossings onto the corner itself; such zero-length pieces carry no
    # geometry and would break loop stitching
    return [(p1, p2) for p1, p2 in segs if p1 != p2]


def _join_segments(segments) -> List[List[Tuple[float, float]]]:
    """Chain segments sharing endpoints into polylines.

    Shared edges of adjacent cells produce bitwise-identical crossing points,
    so exact tuple equality is the join key.
    """
    unused = set(range(len(segments)))
    by_point = {}
    for i, (p1, p2) in enumerate(segments):
        by_point.setdefault(p1, []).append(i)
        by_point.setdefault(p2, []).append(i)

    def take_from(point):
        for i in by_point.get(point, ()):  # first unused segment at point
            if i in unused:
                unused.discard(i)
                p1, p2 = segments[i]
                return p2 if p1 == point else p1
        return None

    paths = []
    for start in range(len(segments)):
        if start not in unused:
            continue
        unused.discard(start)
        p1, p2 = segments[start]
        chain = [p1, p2]
        while True:  # grow forward
            nxt = take_from(chain[-1])
            if nxt is None:
                break
            chain.append(nxt)
        while True:  # grow backward
            prv = take_from(chain[0])
            if prv is None:
                break
            chain.insert(0, prv)
        paths.append(chain)
    return paths


def extract_contours(grid: DiagramGrid,
                     levels: Sequence[float]) -> List[ContourSet]:
    """Marching-squares level curves; sentinel-touching cells are skipped."""
    vals = grid.values
    wx = grid.omega_axis
    gy = grid.gamma_axis
    ny, nx = vals.shape
    out = []
    for level in levels:
        level = float(level)
        segments = []
        for iy in range(ny - 1):
            for ix in range(nx - 1):
                va = vals[iy, ix]
                vb = vals[iy, ix + 1]
                vc = vals[iy + 1, ix + 1]
                vd = vals[iy + 1, ix]
                if not (math.isfinite(va) and math.isfinite(vb)
                        and math.isfinite(vc) and math.isfinite(vd)):
                    continue
                fa, fb, fc, fd = va - level, vb - level, vc - level, vd - level
                if (fa > 0.0) == (fb > 0.0) == (fc > 0.0) == (fd > 0.0):
                    continue
                x0, x1 = float(wx[ix]), float(wx[ix + 1])
                y0, y1 = float(gy[iy]), float(gy[iy + 1])

                def center_above(x0=x0, x1=x1, y0=y0, y1=y1, level=level):
                    wc = 0.5 * (x0 + x1)
                    gc = 0.5 * (y0 + y1)
                    jc = _cell_value(grid.params, wc, gc)
                    if math.isfinite(jc):
                        return jc > level
                    return False

                segments.extend(_cell_segments(x0, x1, y0, y1,
                                               fa, fb, fc, fd, center_above))
        paths = tuple(tuple(path) for path in _join_segments(segments))
        out.append(ContourSet(level=level, paths=paths, params=grid.params))
    return out


# -- serialization ------------------------------------------------------------


def _fmt(v: float) -> str:
    if math.isnan(v):
        return "NaN"
    if v == math.inf:
        return "+Inf"
    if v == -math.inf:
        return "-Inf"
    return "%.17g" % v


def export_grid_csv(grid: DiagramGrid, path: str) -> None:
    """Grid CSV: header gamma\\omega,<w...>; one row per gamma, ascending."""
    try:
        with open(path, "w") as fh:
            fh.write("gamma\\omega," +
                     ",".join(_fmt(w) for w in grid.omega_axis) + "\n")
            for iy, g in enumerate(grid.gamma_axis):
                row = grid.values[iy]
                fh.write(_fmt(g) + "," + ",".join(_fmt(v) for v in row) + "\n")
    except OSError as exc:
        raise OSError("cannot write grid CSV to %r: %s" % (path, exc))


def import_grid_csv(path: str,
                    params: Optional[NonlinearityParams] = None) -> DiagramGrid:
    """Inverse of export_grid_csv; float() accepts the sentinel literals."""
    with open(path) as fh:
        lines = [ln.rstrip("\n") for ln in fh if ln.strip()]
    header = lines[0].split(",")
    omega_axis = np.array([float(tok) for tok in header[1:]])
    gammas = []
    rows = []
    for ln in lines[1:]:
        toks = ln.split(",")
        gammas.append(float(toks[0]))
        rows.append([float(tok) for tok in toks[1:]])
    return DiagramGrid(params=params, omega_axis=omega_axis,
                       gamma_axis=np.array(gammas),
                       values=np.array(rows, dtype=float))


def _params_dict(params: Optional[NonlinearityParams]):
    if params is None:
        return {}
    return {"p": params.p, "q": params.q, "r": params.r,
            "sign1": params.sign1, "sign3": params.sign3,
            "case": params.case}


def export_contours_json(contours: Sequence[ContourSet], path: str) -> None:
    """One JSON object per level: {"params": ..., "level": c, "paths": ...}."""
    objs = []
    for cs in contours:
        objs.append({
            "params": _params_dict(cs.params),
            "level": cs.level,
            "paths": [[[pt[0], pt[1]] for pt in path] for path in cs.paths],
        })
    payload = objs[0] if len(objs) == 1 else objs
    try:
        with open(path, "w") as fh:
            json.dump(payload, fh)
            fh.write("\n")
    except OSError as exc:
        raise OSError("cannot write contour JSON to %r: %s" % (path, exc))


def import_contours_json(path: str) -> List[ContourSet]:
    with open(path) as fh:
        payload = json.load(fh)
    if isinstance(payload, dict):
        payload = [payload]
    out = []
    for obj in payload:
        paths = tuple(tuple((float(w), float(g)) for w, g in path)
                      for path in obj["paths"])
        out.append(ContourSet(level=float(obj["level"]), paths=paths))
    return out


def export_curve_csv(curve: BoundaryCurve, path: str) -> None:
    """Boundary CSV: columns a,omega_ne,gamma_ne."""
    try:
        with open(path, "w") as fh:
            fh.write("a,omega_ne,gamma_ne\n")
            for a, om, ga in curve.samples:
                fh.write("%s,%s,%s\n" % (_fmt(a), _fmt(om), _fmt(ga)))
    except OSError as exc:
        raise OSError("cannot write boundary CSV to %r: %s" % (path, exc))
