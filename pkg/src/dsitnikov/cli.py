"""Command-line front end.

Subcommands: orbit, period-table, catalog, invert, verify. Output goes to
--out (default stdout) as CSV or JSON. Real numbers are always written with
17 significant digits and '\\n' line endings so identical configurations
produce byte-identical files. Exit codes: 0 success, 2 argument/domain
error, 3 verification failure, 4 numerical-convergence failure.
"""

import argparse
import json
import sys

import numpy as np

from . import __version__, closedform, dynamics, resonance, verify
from ._errors import CollisionApproachError, ConvergenceError, DomainError


def _fmt(x) -> str:
    return format(float(x), ".16e")


def _jval(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt(v)
    return json.dumps(v)


def _jobj(d: dict) -> str:
    return "{" + ",".join(f"{json.dumps(k)}:{_jval(v)}" for k, v in d.items()) + "}"


def _json_doc(meta: dict, tables: dict) -> str:
    parts = [f'"meta":{_jobj(meta)}']
    for key, rows in tables.items():
        parts.append(f'"{key}":[' + ",".join(_jobj(r) for r in rows) + "]")
    return "{" + ",".join(parts) + "}\n"


def _csv_cell(v) -> str:
    if isinstance(v, str):
        if any(ch in v for ch in ',"\n'):
            return '"' + v.replace('"', '""') + '"'
        return v
    return _jval(v)


def _csv_table(columns, rows) -> str:
    lines = [",".join(columns)]
    for r in rows:
        lines.append(",".join(_csv_cell(r[c]) for c in columns))
    return "\n".join(lines) + "\n"


def _emit(args, meta: dict, tables: dict) -> None:
    """tables: ordered {name: (columns, rows-as-dicts)}; the first table is
    the main one in CSV mode, later tables are appended with their own
    header line."""
    if args.format == "json":
        text = _json_doc(meta, {k: rows for k, (cols, rows) in tables.items()})
    else:
        chunks = [_csv_table(cols, rows) for cols, rows in tables.values()]
        text = "".join(chunks)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _meta(args, **params) -> dict:
    meta = {"command": args.command, "version": __version__}
    meta.update(params)
    return meta


def _cmd_orbit(args) -> int:
    for name in ("h3", "h4"):
        h = getattr(args, name)
        if not -2.0 < h < 0.0:
            raise DomainError(f"--{name}={h!r} must lie in (-2, 0)")
    if args.t_end < 0.0:
        raise DomainError(f"--t-end={args.t_end!r} must be >= 0")
    if args.dt <= 0.0:
        raise DomainError(f"--dt={args.dt!r} must be > 0")
    o3 = closedform.make_orbit(args.h3, args.nu0_3)
    o4 = closedform.make_orbit(args.h4, args.nu0_4)
    nsteps = int(round(args.t_end / args.dt))
    ts = np.arange(nsteps + 1) * args.dt

    tables = {}
    if args.mode == "closed-form":
        q3, p3 = closedform.eval_state_array(ts, o3)
        q4, p4 = closedform.eval_state_array(ts, o4)
        states = np.column_stack([q3, q4, p3, p4])
    else:
        s0 = closedform.eval_double_state(0.0, o3, o4)
        if args.mode == "integrate":
            tr = dynamics.integrate_physical(s0, dynamics.EQUAL_MASS_LIMIT,
                                             args.t_end, args.dt)
        else:
            tr = dynamics.extend_with_bounce(s0, args.t_end, args.dt)
            tables["bounce_events"] = (
                ["t_bounce", "q_at_bounce"],
                [{"t_bounce": float(t), "q_at_bounce": float(q)}
                 for t, q in zip(tr.bounce_times, tr.bounce_positions)],
            )
        ts = tr.t
        states = tr.states

    rows = []
    for i, t in enumerate(ts):
        q3, q4, p3, p4 = states[i]
        s = dynamics.PhysicalState(q3, q4, p3, p4)
        rows.append({"t": float(t), "q3": float(q3), "p3": float(p3),
                     "q4": float(q4), "p4": float(p4),
                     "H": dynamics.hamiltonian_limit(s)})
    main = {"rows": (["t", "q3", "p3", "q4", "p4", "H"], rows)}
    main.update(tables)
    _emit(args, _meta(args, h3=args.h3, h4=args.h4, nu0_3=args.nu0_3,
                      nu0_4=args.nu0_4, t_end=args.t_end, dt=args.dt,
                      mode=args.mode), main)
    return 0


def _cmd_period_table(args) -> int:
    if not -2.0 < args.h_min < args.h_max < 0.0:
        raise DomainError(
            f"need -2 < --h-min={args.h_min!r} < --h-max={args.h_max!r} < 0")
    if args.steps < 1:
        raise DomainError(f"--steps={args.steps!r} must be >= 1")
    hs = np.linspace(args.h_min, args.h_max, args.steps)
    rows = []
    for h in hs:
        em = closedform.modulus_from_energy(float(h))
        t_per = closedform.period_T(em)
        rows.append({"h": em.h, "k": em.k, "T": t_per,
                     "J": closedform.action_J(em), "Omega": t_per / (2.0 * np.pi)})
    _emit(args, _meta(args, h_min=args.h_min, h_max=args.h_max, steps=args.steps),
          {"rows": (["h", "k", "T", "J", "Omega"], rows)})
    return 0


def _cmd_catalog(args) -> int:
    if args.p_max < 1:
        raise DomainError(f"--p-max={args.p_max!r} must be >= 1")
    cat = resonance.build_catalog(args.p_max)
    rows = [{"p": e.triplet.p, "q": e.triplet.q, "n": e.triplet.n,
             "h1": e.h1, "h2": e.h2, "h_star": e.h_star, "tau": e.tau}
            for e in cat.entries]
    summary = [{"p": p, "count": cat.counts[p], "bound": cat.bounds[p]}
               for p in sorted(cat.counts)]
    _emit(args, _meta(args, p_max=args.p_max, distinct_surfaces=len(cat.surfaces)),
          {"rows": (["p", "q", "n", "h1", "h2", "h_star", "tau"], rows),
           "summary": (["p", "count", "bound"], summary)})
    return 0


def _cmd_invert(args) -> int:
    h = resonance.invert_period(args.period)
    em = closedform.modulus_from_energy(h)
    resid = abs(closedform.period_T(em) - args.period)
    _emit(args, _meta(args, period=args.period),
          {"rows": (["T_target", "h", "k", "residual"],
                    [{"T_target": args.period, "h": h, "k": em.k,
                      "residual": resid}])})
    return 0


def _cmd_verify(args) -> int:
    results = verify.run_suites(args.suite)
    rows = [{"suite": r.suite, "check": r.name, "passed": r.passed,
             "residual": r.residual, "tolerance": r.tolerance,
             "detail": r.detail} for r in results]
    n_fail = sum(1 for r in results if not r.passed)
    _emit(args, _meta(args, suite=args.suite, checks=len(results), failures=n_fail),
          {"rows": (["suite", "check", "passed", "residual", "tolerance", "detail"],
                    rows)})
    return 3 if n_fail else 0


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.add_argument("--format", choices=("csv", "json"), default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsitnikov",
        description="Circular double Sitnikov problem: orbits, period tables, "
                    "resonance catalog, and verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("orbit", help="trace a two-body orbit")
    p.add_argument("--h3", type=float, required=True, help="partial energy of body 3")
    p.add_argument("--h4", type=float, required=True, help="partial energy of body 4")
    p.add_argument("--nu0-3", type=float, default=0.0, help="phase of body 3 at t=0")
    p.add_argument("--nu0-4", type=float, default=0.0, help="phase of body 4 at t=0")
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--dt", type=float, required=True)
    p.add_argument("--mode", choices=("closed-form", "integrate", "bounce"),
                   default="closed-form")
    _add_io(p)
    p.set_defaults(func=_cmd_orbit)

    p = sub.add_parser("period-table", help="tabulate h, k, T, J, Omega")
    p.add_argument("--h-min", type=float, required=True)
    p.add_argument("--h-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    _add_io(p)
    p.set_defaults(func=_cmd_period_table)

    p = sub.add_parser("catalog", help="enumerate resonant energy surfaces")
    p.add_argument("--p-max", type=int, required=True)
    _add_io(p)
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("invert", help="solve T(h) = period for h")
    p.add_argument("--period", type=float, required=True,
                   help="target period, must exceed pi/sqrt(2)")
    _add_io(p)
    p.set_defaults(func=_cmd_invert)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    _add_io(p)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"dsitnikov: domain error: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceError, CollisionApproachError) as exc:
        print(f"dsitnikov: numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
