"""Command-line front end: run scenario files, list audits, print version.

Exit codes: 0 all audits pass, 1 input error, 2 audit failure or error.
Outputs land in the chosen directory: trajectory.csv and drift.csv when
the scenario integrates, report.json always. Identical scenario and flags
give byte-identical outputs; wall-clock timing goes to stdout only.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from importlib import resources
from pathlib import Path

from . import __version__
from .audits import AuditContext, format_catalog, run_audits
from .forces import SingularityError
from .report import AuditReport, AuditResult, ERROR
from .scenario import Scenario, ScenarioError, load_scenario

__all__ = ["main", "run_scenario", "resolve_scenario_path"]


def resolve_scenario_path(name: str) -> Path:
    """Direct path, or a bundled scenario name like ``kepler.json``."""
    path = Path(name)
    if path.exists():
        return path
    bundled = resources.files("invarlab") / "scenarios" / name
    if bundled.is_file():
        return Path(str(bundled))
    raise ScenarioError(f"no such scenario file: {name}")


def _write_drift_csv(ctx: AuditContext, out: Path) -> None:
    """Plot-ready deviations of the conserved candidates from their initial
    values; energy blank when undefined."""
    traj = ctx.trajectory()
    first = traj.observables(0)
    with (out / "drift.csv").open("w") as stream:
        stream.write("t,dP,dL,dE\n")
        for i, t in enumerate(traj.times):
            obs = traj.observables(i)
            dp = (obs.total_momentum - first.total_momentum).norm()
            dl = (obs.angular_momentum - first.angular_momentum).norm()
            if obs.internal_energy is None:
                de = ""
            else:
                de = repr(abs(obs.internal_energy - first.internal_energy))
            stream.write(f"{t!r},{dp!r},{dl!r},{de}\n")


def run_scenario(scenario: Scenario, out_dir: Path, seed: int) -> int:
    """Full pipeline: integrate (if configured), audit, write outputs."""
    out_dir.mkdir(parents=True, exist_ok=True)
    started = time.perf_counter()

    ctx = AuditContext(scenario, seed)
    trajectory_failure: AuditResult | None = None
    if scenario.integrator is not None:
        try:
            trajectory = ctx.trajectory()
            with (out_dir / "trajectory.csv").open("w") as stream:
                trajectory.write_csv(stream)
            _write_drift_csv(ctx, out_dir)
        except SingularityError as exc:
            trajectory_failure = AuditResult(
                "trajectory", "equations-of-motion", ERROR, detail=str(exc)
            )

    report = run_audits(scenario, seed, context=ctx)
    if trajectory_failure is not None:
        report = AuditReport(
            scenario=report.scenario,
            seed=report.seed,
            results=(trajectory_failure,) + report.results,
            integrator=report.integrator,
        )
    (out_dir / "report.json").write_text(report.to_json())

    for line in report.summary_lines():
        print(line)
    print(f"elapsed {time.perf_counter() - started:.2f} s, outputs in {out_dir}")
    return 0 if report.overall == "PASS" else 2


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="invarlab",
        description="Run two-body invariance scenarios and their audit suites",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="run a scenario file")
    run_p.add_argument("scenario", help="path to a scenario JSON file, or a bundled name")
    run_p.add_argument("--out", default="out", help="output directory (default: out)")
    run_p.add_argument("--seed", type=int, default=42, help="PRNG seed (default: 42)")
    run_p.add_argument("--step", type=float, default=None, help="override integrator step")
    run_p.add_argument(
        "--method", choices=("rk4", "verlet"), default=None, help="override integrator method"
    )

    sub.add_parser("audits", help="list the audit catalog")
    sub.add_parser("version", help="print the version")

    args = parser.parse_args(argv)

    if args.command == "audits":
        for line in format_catalog():
            print(line)
        return 0
    if args.command == "version":
        print(f"invarlab {__version__}")
        return 0

    try:
        scenario = load_scenario(resolve_scenario_path(args.scenario))
        if args.step is not None or args.method is not None:
            if scenario.integrator is None:
                raise ScenarioError("integrator: cannot override; scenario has no integrator block")
            cfg = scenario.integrator
            if args.step is not None:
                if args.step <= 0:
                    raise ScenarioError("--step must be positive")
                cfg = replace(cfg, step=args.step)
            if args.method is not None:
                cfg = replace(cfg, method=args.method)
            scenario = replace(scenario, integrator=cfg)
        return run_scenario(scenario, Path(args.out), args.seed)
    except ScenarioError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
