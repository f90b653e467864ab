"""Command line interface: single-state reports, ratio scans, density profiles.

Exit codes: 0 success, 2 invalid arguments, 3 supercritical charge,
4 integration failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .constants import ALPHA, PION_MASS, binding_energy, kg_params, make_state, make_system, parse_label
from .errors import (IntegrationError, IntegrandError, InvalidArgumentError, KGError,
                     SupercriticalChargeError)
from .info import FISHER_TOL, SHANNON_TOL, measure_report
from .moments import heisenberg, sch_moments
from .scan import (build_grid, density_profile, normalize_measures, records_to_csv,
                   records_to_jsonl, run_scan)
from .schrodinger import sch_energy

EXIT_INVALID = 2
EXIT_SUPERCRITICAL = 3
EXIT_INTEGRATION = 4


def read_config(path):
    """key=value lines; '#' starts a comment. Keys match long flag names."""
    values = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidArgumentError(f"{path}:{lineno}: expected key=value")
            key, value = (part.strip() for part in line.split("=", 1))
            values[key.lstrip("-").replace("-", "_")] = value
    return values


def _common(p):
    p.add_argument("--config", metavar="PATH", help="key=value defaults; flags take precedence")
    p.add_argument("--Z", type=float, default=68.0, help="nuclear charge")
    p.add_argument("--mass", type=float, default=PION_MASS, help="particle mass in electron masses")
    p.add_argument("--alpha", type=float, default=ALPHA, help="fine-structure constant")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--tol", type=float, default=None, help="relative quadrature tolerance")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH", help="write here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(prog="kgcoulomb", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("state", help="full KG vs Schroedinger report for one state")
    _common(st)

    sc = sub.add_parser("scan", help="ratio table over one axis")
    _common(sc)
    sc.add_argument("--axis", choices=("n", "l", "Z", "m"), default="n")
    sc.add_argument("--range", dest="range", metavar="a:b:step")
    sc.add_argument("--family", choices=("circular", "sstate", "fixed"), default="circular")
    sc.add_argument("--measures", default="centroid,variance")
    sc.add_argument("--states", help="comma list like 1S,2S,2P for Z scans")
    sc.add_argument("--jobs", type=int, default=1, help="worker processes")

    pr = sub.add_parser("profile", help="radial densities D_kg(r), D_sch(r)")
    _common(pr)
    pr.add_argument("--points", type=int, default=500)
    pr.add_argument("--grid", choices=("log", "linear"), default="log")
    pr.add_argument("--rmin", type=float)
    pr.add_argument("--rmax", type=float)
    return parser


def parse_args(argv):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        try:
            config = read_config(args.config)
        except OSError as exc:
            raise InvalidArgumentError(f"cannot read config: {exc}") from None
        sub = parser._subparsers._group_actions[0].choices[args.command]
        known = {a.dest for a in sub._actions}
        unknown = set(config) - known
        if unknown:
            raise InvalidArgumentError(f"unknown config keys: {', '.join(sorted(unknown))}")
        sub.set_defaults(**{k: v for k, v in config.items()})
        args = parser.parse_args(argv)
        for action in sub._actions:
            value = getattr(args, action.dest, None)
            if isinstance(value, str) and action.type is not None and action.dest in config:
                setattr(args, action.dest, action.type(value))
    return args


def _emit(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _state_report(args):
    system = make_system(args.Z, args.mass, args.alpha)
    state = make_state(args.n, args.l, args.m)
    params = kg_params(system, state)
    kg_mom = heisenberg(system, state)
    sch_mom = sch_moments(system, state)
    kg_rep = measure_report(system, state, "kg", args.tol or SHANNON_TOL, args.tol or FISHER_TOL)
    sch_rep = measure_report(system, state, "sch", args.tol or SHANNON_TOL, args.tol or FISHER_TOL)
    rows = [
        ("energy", -binding_energy(system, state), sch_energy(system, state)),
        ("centroid", kg_mom.r_mean, sch_mom.r_mean),
        ("r2", kg_mom.r2, sch_mom.r2),
        ("variance", kg_mom.sigma2, sch_mom.sigma2),
        ("shannon_radial", kg_rep.shannon_radial, sch_rep.shannon_radial),
        ("shannon_angular", kg_rep.shannon_angular, sch_rep.shannon_angular),
        ("shannon_total", kg_rep.shannon_total, sch_rep.shannon_total),
        ("shannon_power", kg_rep.entropic_power, sch_rep.entropic_power),
        ("fisher", kg_rep.fisher, sch_rep.fisher),
    ]
    table = []
    for name, kg, sch in rows:
        ratio = None
        if kg is not None and sch is not None and name not in ("energy", "shannon_radial",
                                                               "shannon_angular", "shannon_total"):
            ratio = sch / kg if name == "fisher" else kg / sch
        table.append((name, kg, sch, ratio))
    params_d = {"gamma": params.gamma, "l_prime": params.l_prime, "epsilon": params.epsilon,
                "beta": params.beta, "lambda": params.lam, "norm_sq": params.norm_sq}
    converged = kg_rep.converged and sch_rep.converged
    if args.format == "json":
        doc = {
            "system": {"Z": system.Z, "mass": system.mass, "alpha": system.alpha},
            "state": {"n": state.n, "l": state.l, "m": state.m, "label": state.label},
            "kg_params": params_d,
            "measures": [{"quantity": q, "kg": k, "sch": s, "ratio": r} for q, k, s, r in table],
            "converged": converged,
        }
        return json.dumps(doc, indent=2, allow_nan=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("quantity", "kg", "sch", "ratio"))
    for name, value in params_d.items():
        w.writerow((name, repr(value), "", ""))
    for name, kg, sch, ratio in table:
        w.writerow((name, *("" if v is None else repr(float(v)) for v in (kg, sch, ratio))))
    w.writerow(("converged", str(converged).lower(), "", ""))
    return buf.getvalue()


def _scan(args):
    measures = normalize_measures(args.measures.split(","))
    states = [parse_label(s, args.m) for s in args.states.split(",")] if args.states else None
    if args.axis != "Z":
        make_system(args.Z, args.mass, args.alpha)
    grid = build_grid(args.axis, args.Z, args.n, args.l, args.m, args.family, args.range, states)
    records = run_scan(grid, args.mass, measures, args.tol, args.alpha, max(1, args.jobs))
    return records_to_jsonl(records) if args.format == "json" else records_to_csv(records)


def _profile(args):
    system = make_system(args.Z, args.mass, args.alpha)
    state = make_state(args.n, args.l, args.m)
    r, dkg, dsch = density_profile(system, state, args.points, args.grid, args.rmin, args.rmax)
    if args.format == "json":
        return "".join(json.dumps({"r": float(a), "D_kg": float(b), "D_sch": float(c)}, allow_nan=False)
                       + "\n" for a, b, c in zip(r, dkg, dsch))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("r", "D_kg", "D_sch"))
    for a, b, c in zip(r, dkg, dsch):
        w.writerow((repr(float(a)), repr(float(b)), repr(float(c))))
    return buf.getvalue()


COMMANDS = {"state": _state_report, "scan": _scan, "profile": _profile}


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
        text = COMMANDS[args.command](args)
        _emit(text, args.out)
    except SupercriticalChargeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SUPERCRITICAL
    except (IntegrationError, IntegrandError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTEGRATION
    except (InvalidArgumentError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except KGError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except SystemExit as exc:
        return int(exc.code or 0)
    return 0


if __name__ == "__main__":
    sys.exit(main())
