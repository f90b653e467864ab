"""Ratio scans over n, l, Z or m and their CSV / JSON-lines serialization."""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constants import PION_MASS, ALPHA, QuantumState, make_state, make_system
from .errors import (FisherUndefinedError, IntegrationError, InvalidArgumentError,
                     InvalidQuantumNumbersError, SupercriticalChargeError)
from .info import FISHER_TOL, SHANNON_TOL, fisher, shannon_report
from .kg import kg_density
from .moments import heisenberg, sch_moments
from .schrodinger import sch_density

MEASURES = ("centroid", "r2", "variance", "shannon_power", "fisher")
_ALIASES = {"shannon-power": "shannon_power", "shannon": "shannon_power", "sigma2": "variance",
            "heisenberg": "variance", "mean": "centroid"}
COLUMNS = ("measure", "Z", "mass", "n", "l", "m", "value_kg", "value_sch", "ratio", "converged")

# status tokens; "ok" and "unconverged" serialize as true / false
STATUSES = ("ok", "unconverged", "undefined", "supercritical", "invalid")


@dataclass(frozen=True)
class ScanRecord:
    measure: str
    Z: float
    mass: float
    n: int
    l: int
    m: int
    value_kg: Optional[float]
    value_sch: Optional[float]
    ratio: Optional[float]
    status: str = "ok"

    @property
    def converged(self) -> bool:
        return self.status == "ok"


def normalize_measures(names) -> tuple:
    out = []
    for name in names:
        key = _ALIASES.get(name.strip().lower(), name.strip().lower())
        if key not in MEASURES:
            raise InvalidArgumentError(f"unknown measure {name!r}; choose from {', '.join(MEASURES)}")
        out.append(key)
    return tuple(out)


def _ratio(measure, kg, sch):
    if kg is None or sch is None:
        return None
    return sch / kg if measure == "fisher" else kg / sch


def _safe_call(fn):
    """Run fn, mapping an unconverged integral to its best estimate."""
    try:
        return fn(), True
    except IntegrationError as exc:
        return exc.report.value, False


def compute_point(Z, mass, n, l, m, measures, tol=None, alpha=ALPHA):
    """All requested records for one grid point, in ``measures`` order."""
    system = make_system(Z, mass, alpha)
    shannon_tol = tol or SHANNON_TOL
    fisher_tol = tol or FISHER_TOL
    try:
        state = make_state(n, l, m)
    except InvalidQuantumNumbersError:
        return [ScanRecord(meas, system.Z, mass, n, l, m, None, None, None, "invalid")
                for meas in measures]
    sch_m = sch_moments(system, state)
    try:
        kg_m = heisenberg(system, state)
    except SupercriticalChargeError:
        kg_m = None
    records = []
    for meas in measures:
        ok = True
        status = "ok"
        kg = sch = None
        if meas in ("centroid", "r2", "variance"):
            attr = {"centroid": "r_mean", "r2": "r2", "variance": "sigma2"}[meas]
            sch = getattr(sch_m, attr)
            kg = getattr(kg_m, attr) if kg_m is not None else None
        elif meas == "shannon_power":
            sch, ok_s = _safe_call(lambda: shannon_report(system, state, "sch", shannon_tol).entropic_power)
            ok = ok and ok_s
            if kg_m is not None:
                kg, ok_k = _safe_call(lambda: shannon_report(system, state, "kg", shannon_tol).entropic_power)
                ok = ok and ok_k
        else:
            sch, ok_s = _safe_call(lambda: fisher(system, state, "sch", fisher_tol))
            ok = ok and ok_s
            if kg_m is not None:
                try:
                    kg, ok_k = _safe_call(lambda: fisher(system, state, "kg", fisher_tol))
                    ok = ok and ok_k
                except FisherUndefinedError:
                    status = "undefined"
        if kg_m is None:
            status = "supercritical"
        elif status == "ok" and not ok:
            status = "unconverged"
        vals = [v for v in (kg, sch) if v is not None]
        if any(not math.isfinite(v) for v in vals):
            raise IntegrationError(f"non-finite {meas} value at Z={Z}, state {state}", None)
        records.append(ScanRecord(meas, system.Z, mass, n, l, m, kg, sch, _ratio(meas, kg, sch), status))
    return records


def parse_range(text: str, integer: bool = True):
    """Inclusive ``a:b:step`` (``a:b`` uses step 1, ``a`` a single value)."""
    parts = text.split(":")
    if not 1 <= len(parts) <= 3:
        raise InvalidArgumentError(f"range must look like a:b:step, got {text!r}")
    conv = int if integer else float
    try:
        nums = [conv(p) for p in parts]
    except ValueError as exc:
        raise InvalidArgumentError(f"bad range {text!r}: {exc}") from None
    if len(nums) == 1:
        return [nums[0]]
    a, b = nums[0], nums[1]
    step = nums[2] if len(nums) == 3 else conv(1)
    if step <= 0 or b < a:
        raise InvalidArgumentError(f"range {text!r} must have a <= b and a positive step")
    if integer:
        return list(range(a, b + 1, step))
    count = int(math.floor((b - a) / step + 1e-9)) + 1
    return [a + i * step for i in range(count)]


def build_grid(axis, Z, n, l, m, family="circular", range_text=None, states=None):
    """(Z, n, l, m) tuples for a scan, in output order."""
    if axis == "n":
        ns = parse_range(range_text or "1:10:1")
        grid = []
        for nv in ns:
            if family == "circular":
                lv = nv - 1
                grid.append((Z, nv, lv, min(abs(m), lv)))
            elif family == "sstate":
                grid.append((Z, nv, 0, 0))
            else:
                grid.append((Z, nv, l, m))
        return grid
    if axis == "l":
        return [(Z, n, lv, m) for lv in parse_range(range_text or f"0:{n - 1}:1")]
    if axis == "m":
        return [(Z, n, l, mv) for mv in parse_range(range_text or f"0:{l}:1")]
    if axis == "Z":
        zs = parse_range(range_text or "5:68:7", integer=False)
        picks = states or [QuantumState(n, l, m)]
        return [(zv, st.n, st.l, st.m) for st in picks for zv in zs]
    raise InvalidArgumentError(f"axis must be one of n, l, Z, m; got {axis!r}")


def _point(args):
    return compute_point(*args)


def run_scan(grid, mass=PION_MASS, measures=("centroid",), tol=None, alpha=ALPHA, jobs=1):
    measures = normalize_measures(measures)
    tasks = [(Z, mass, n, l, m, measures, tol, alpha) for (Z, n, l, m) in grid]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_point, tasks))
    else:
        chunks = [_point(t) for t in tasks]
    return [rec for chunk in chunks for rec in chunk]


def density_profile(system, state, points=500, grid="log", rmin=None, rmax=None):
    """Rows (r, D_kg, D_sch) on a log- or linearly-spaced radial grid."""
    if points < 2:
        raise InvalidArgumentError("a profile needs at least 2 points")
    kg = kg_density(system, state)
    sch = sch_density(system, state)
    small = min(kg.decay_scale, sch.decay_scale)
    large = max(kg.decay_scale, sch.decay_scale)
    lo = rmin if rmin is not None else 1e-4 * small
    hi = rmax if rmax is not None else (4 * state.n + 20) * large
    if not 0 < lo < hi:
        raise InvalidArgumentError(f"need 0 < rmin < rmax, got {lo}, {hi}")
    r = np.geomspace(lo, hi, points) if grid == "log" else np.linspace(lo, hi, points)
    return r, kg.value(r), sch.value(r)


# ---- serialization ---------------------------------------------------------

def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, float):
        if not math.isfinite(v):
            raise ValueError("refusing to write a non-finite value")
        return repr(v)
    return str(v)


def _status_token(status):
    return {"ok": "true", "unconverged": "false"}.get(status, status)


def _status_from_token(token):
    return {"true": "ok", "false": "unconverged"}.get(token, token)


def record_row(rec: ScanRecord) -> list:
    return [rec.measure, _fmt(float(rec.Z)), _fmt(float(rec.mass)), str(rec.n), str(rec.l), str(rec.m),
            _fmt(rec.value_kg), _fmt(rec.value_sch), _fmt(rec.ratio), _status_token(rec.status)]


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for rec in records:
        w.writerow(record_row(rec))
    return buf.getvalue()


def records_to_jsonl(records) -> str:
    lines = []
    for rec in records:
        d = {"measure": rec.measure, "Z": float(rec.Z), "mass": float(rec.mass), "n": rec.n,
             "l": rec.l, "m": rec.m, "value_kg": rec.value_kg, "value_sch": rec.value_sch,
             "ratio": rec.ratio, "converged": _status_token(rec.status)}
        lines.append(json.dumps(d, allow_nan=False))
    return "".join(line + "\n" for line in lines)


def _opt(text):
    return float(text) if text not in ("", None) else None


def records_from_csv(text: str):
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise InvalidArgumentError(f"unexpected CSV header {reader.fieldnames}")
    return [ScanRecord(row["measure"], float(row["Z"]), float(row["mass"]), int(row["n"]),
                       int(row["l"]), int(row["m"]), _opt(row["value_kg"]), _opt(row["value_sch"]),
                       _opt(row["ratio"]), _status_from_token(row["converged"]))
            for row in reader]


def records_from_jsonl(text: str):
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        d = json.loads(line)
        out.append(ScanRecord(d["measure"], d["Z"], d["mass"], d["n"], d["l"], d["m"],
                              d["value_kg"], d["value_sch"], d["ratio"],
                              _status_from_token(d["converged"])))
    return out
