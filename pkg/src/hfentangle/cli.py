"""Command-line front end.

Subcommands::

    hfentangle ground-sweep  [--c-min -5] [--c-max 5] [--steps 1001] [--out FILE]
    hfentangle thermal-sweep [--temps 0.05 0.107 0.2 0.5] [--c-min -2] [--c-max 2] [--steps 401]
    hfentangle measure       [--c 0] [--d 0] [--t T] | [--b1 TESLA --b2 TESLA]
    hfentangle critical-temp [--lo 0.05] [--hi 0.5] [--tol 1e-4]

Exit status: 0 on success, 2 for invalid arguments, 3 for numerical failure.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from dataclasses import dataclass, field

from .errors import InvalidRange, NoConvergence, NoSignChange, NotHermitian
from .ground import DEGENERACY_TOL, ground_state, ground_sweep, limit_pure_states
from .measures import concurrence_pure, negativity
from .report import write_ground_csv, write_thermal_csv, write_values
from .spin import FieldParams, physical_to_reduced
from .thermal import CURVATURE_STEP, DEFAULT_TEMPERATURES, find_critical_temperature, thermal_negativity, thermal_sweep

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERIC = 3


@dataclass
class RunConfig:
    command: str
    c_min: float = -5.0
    c_max: float = 5.0
    steps: int = 1001
    temps: list[float] = field(default_factory=lambda: list(DEFAULT_TEMPERATURES))
    c: float = 0.0
    d: float = 0.0
    t: float | None = None
    b1: float | None = None
    b2: float | None = None
    out_path: str | None = None
    degeneracy_tol: float = DEGENERACY_TOL
    lo: float = 0.05
    hi: float = 0.5
    tol: float = 1e-4
    h: float = CURVATURE_STEP
    jobs: int = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hfentangle",
        description="Electron-nuclear entanglement of a spin-1 nucleus and spin-1/2 electron.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_out(p):
        p.add_argument("--out", dest="out_path", default=None, help="output file (default: stdout)")

    def add_jobs(p):
        p.add_argument("--jobs", type=int, default=1, help="worker processes for the sweep")

    p = sub.add_parser("ground-sweep", help="ground energy and entanglement versus C (CSV)")
    p.add_argument("--c-min", type=float, default=-5.0)
    p.add_argument("--c-max", type=float, default=5.0)
    p.add_argument("--steps", type=int, default=1001)
    p.add_argument("--d", type=float, default=0.0)
    p.add_argument("--degeneracy-tol", type=float, default=DEGENERACY_TOL)
    add_out(p)
    add_jobs(p)

    p = sub.add_parser("thermal-sweep", help="thermal negativity versus C at several temperatures (CSV)")
    p.add_argument("--temps", type=float, nargs="+", default=list(DEFAULT_TEMPERATURES))
    p.add_argument("--c-min", type=float, default=-2.0)
    p.add_argument("--c-max", type=float, default=2.0)
    p.add_argument("--steps", type=int, default=401)
    p.add_argument("--d", type=float, default=0.0)
    add_out(p)
    add_jobs(p)

    p = sub.add_parser("measure", help="single-point ground and thermal quantities")
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--d", type=float, default=0.0)
    p.add_argument("--t", type=float, default=None)
    p.add_argument("--b1", type=float, default=None, help="electron field in tesla (overrides --c)")
    p.add_argument("--b2", type=float, default=None, help="nuclear field in tesla (overrides --d)")
    p.add_argument("--degeneracy-tol", type=float, default=DEGENERACY_TOL)
    add_out(p)

    p = sub.add_parser("critical-temp", help="locate T_C by bisection")
    p.add_argument("--lo", type=float, default=0.05)
    p.add_argument("--hi", type=float, default=0.5)
    p.add_argument("--tol", type=float, default=1e-4)
    p.add_argument("--h", type=float, default=CURVATURE_STEP, help="second-difference step in C")
    add_out(p)
    return parser


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    return RunConfig(**vars(ns))


def _measure(cfg: RunConfig) -> dict[str, object]:
    c, d = cfg.c, cfg.d
    if cfg.b1 is not None or cfg.b2 is not None:
        print(
            "warning: tesla-to-reduced mapping assumes J = h x 228 MHz; treat as approximate",
            file=sys.stderr,
        )
        rc, rd = physical_to_reduced(cfg.b1 or 0.0, cfg.b2 or 0.0)
        c = rc if cfg.b1 is not None else c
        d = rd if cfg.b2 is not None else d
    gs = ground_state(FieldParams(c=c, d=d), cfg.degeneracy_tol)
    out: dict[str, object] = {"c": c, "d": d, "ground_energy": gs.energy, "degeneracy": gs.degeneracy}
    if gs.is_degenerate:
        out["negativity_mixed"] = negativity(gs.state)
        out["concurrence_limit"] = min(concurrence_pure(p) for p in limit_pure_states(gs))
    else:
        out["concurrence"] = concurrence_pure(gs.pure_states()[0])
        out["negativity_ground"] = negativity(gs.state)
    if cfg.t is not None:
        out["t"] = cfg.t
        out["negativity"] = thermal_negativity(c, d, cfg.t)
    return out


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute one command; returns the process exit status."""
    stdout = stdout or sys.stdout
    try:
        if cfg.command in ("ground-sweep", "thermal-sweep") and cfg.jobs < 1:
            raise InvalidRange(f"--jobs must be >= 1, got {cfg.jobs}")
        with contextlib.ExitStack() as stack:
            fh = stdout
            if cfg.out_path:
                fh = stack.enter_context(open(cfg.out_path, "w", encoding="utf-8", newline=""))
            if cfg.command == "ground-sweep":
                series = ground_sweep(
                    cfg.c_min, cfg.c_max, cfg.steps, d=cfg.d, degeneracy_tol=cfg.degeneracy_tol, jobs=cfg.jobs
                )
                write_ground_csv(series, fh)
            elif cfg.command == "thermal-sweep":
                sweeps = thermal_sweep(cfg.temps, cfg.c_min, cfg.c_max, cfg.steps, d=cfg.d, jobs=cfg.jobs)
                write_thermal_csv(sweeps, fh)
            elif cfg.command == "measure":
                write_values(_measure(cfg), fh)
            elif cfg.command == "critical-temp":
                res = find_critical_temperature(cfg.lo, cfg.hi, cfg.tol, h=cfg.h)
                write_values(
                    {
                        "t_c": res.t_c,
                        "bracket_low": res.bracket[0],
                        "bracket_high": res.bracket[1],
                        "curvature_low": res.curvature_low,
                        "curvature_high": res.curvature_high,
                        "iterations": res.iterations,
                    },
                    fh,
                )
            else:
                raise InvalidRange(f"unknown command {cfg.command!r}")
    except (NoConvergence, NoSignChange) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (InvalidRange, NotHermitian, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None) -> int:
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
