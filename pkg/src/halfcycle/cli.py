"""Command-line front end: reproducible experiments with file output.

Subcommands: profile, cycle, instant, stats, pack, schrodinger,
complexity.  Every report embeds the seed; one root seed feeds a named
sub-stream per subcommand, so rerunning a command with the same arguments
and seed writes byte-identical output.  Exit code 0 means no check in the
run reported a violation.
"""

from __future__ import annotations

import argparse
import secrets
import sys
from dataclasses import dataclass

import numpy as np

from . import reports
from .complexity import check_lower_bound, complexity, zero_count
from .cycle import build_alpha_cycle, verify_cycle
from .ensemble import get_density, moment_experiment
from .errors import HalfcycleError
from .machine import initial_config, load_machine, run
from .measure import halting_demo
from .schrodinger import (chirped_pair, identical_pair, obstruction_certificate,
                          read_grid_functions)
from .spectral import (aperiodic_spectrum, halfstep_profile_aperiodic,
                       halfstep_profile_periodic, minimal_periodic_spectrum,
                       pack_spectrum)

_STREAMS = {"profile": 0, "cycle": 1, "instant": 2, "stats": 3, "pack": 4,
            "schrodinger": 5, "complexity": 6}


@dataclass
class ExperimentConfig:
    subcommand: str
    machine: str | None = None
    input_word: str = ""
    alpha: float | None = None
    period: int | None = None
    truncation: int | None = None
    density: str | None = None
    trials: int | None = None
    majority: int | None = None
    budget: int | None = None
    seed: int | None = None
    out_format: str = "json"
    out_path: str | None = None

    def to_dict(self) -> dict:
        # out_path stays out of the report so reruns to different files
        # stay byte-identical
        return {k: v for k, v in vars(self).items() if v is not None and k != "out_path"}


def _rng_for(seed: int, subcommand: str):
    return np.random.default_rng(np.random.SeedSequence((seed, _STREAMS[subcommand])))


def _resolve_seed(args) -> int:
    if args.seed is not None:
        return args.seed
    seed = secrets.randbits(63)
    print(f"seed drawn from system entropy: {seed}", file=sys.stderr)
    return seed


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _envelope(config: ExperimentConfig, body: dict) -> str:
    return reports.render_json({"config": config.to_dict(), **body})


def cmd_profile(args) -> int:
    config = ExperimentConfig("profile", period=args.period, truncation=args.K,
                              out_format=args.format, out_path=args.out, seed=args.seed or 0)
    if args.period is not None:
        if args.period % 2:
            print(f"error: period {args.period} is odd; the minimal construction "
                  "needs an even period", file=sys.stderr)
            return 2
        profile = halfstep_profile_periodic(args.period)
        peak = args.period // 2
    else:
        profile = halfstep_profile_aperiodic(args.K)
        peak = 1
    if args.format == "csv":
        _emit(reports.profile_csv(profile), args.out)
    else:
        peak_amp = profile.amplitudes[profile.position(peak)]
        body = {
            "captured": profile.captured,
            "peak_index": peak,
            "peak_abs": float(abs(peak_amp)),
            "amplitudes": [[int(j), float(np.real(a)), float(np.imag(a))]
                           for j, a in zip(profile.indices, profile.amplitudes)],
        }
        _emit(_envelope(config, body), args.out)
    return 0


def cmd_cycle(args) -> int:
    config = ExperimentConfig("cycle", machine=args.machine, input_word=args.input,
                              alpha=args.alpha, budget=args.budget,
                              out_path=args.out, seed=args.seed or 0)
    spec = load_machine(args.machine)
    trace = run(spec, initial_config(spec, args.input), args.budget)
    if not trace.halted:
        _emit(_envelope(config, {"halted": False, "budget_exceeded": True}), args.out)
        return 1
    cyc = build_alpha_cycle(trace, args.alpha, source=f"{spec.name}({args.input})")
    report = verify_cycle(cyc)
    body = {"halted": True, "cycle": cyc.to_dict(),
            "verified": report.ok, "violations": list(report.violations)}
    _emit(_envelope(config, body), args.out)
    return 0 if report.ok else 1


def cmd_instant(args) -> int:
    seed = _resolve_seed(args)
    config = ExperimentConfig("instant", machine=args.machine, input_word=args.input,
                              alpha=args.alpha, truncation=args.K, majority=args.majority,
                              budget=args.budget, trials=args.trials, seed=seed,
                              out_path=args.out)
    spec = load_machine(args.machine)
    rng = _rng_for(seed, "instant")
    verdict = halting_demo(spec, initial_config(spec, args.input), args.budget,
                           args.K, args.alpha, rng, majority_m=args.majority,
                           max_trials=args.trials)
    _emit(_envelope(config, {"verdict": verdict.to_dict()}), args.out)
    return 1 if verdict.report.inconclusive else 0


def cmd_stats(args) -> int:
    seed = _resolve_seed(args)
    p_list = [int(tok) for tok in args.p.split(",") if tok]
    config = ExperimentConfig("stats", density=args.density, trials=args.trials,
                              seed=seed, out_format=args.format, out_path=args.out)
    density = get_density(args.density)
    rng = _rng_for(seed, "stats")
    report = moment_experiment(p_list, density, args.trials, rng)
    if args.format == "csv":
        _emit(reports.stats_csv(report), args.out)
    else:
        _emit(_envelope(config, {"stats": report.to_dict()}), args.out)
    return 0


def cmd_pack(args) -> int:
    config = ExperimentConfig("pack", out_path=args.out, seed=args.seed or 0)
    nu = [int(tok) for tok in args.nu.split(",")] if args.nu else None
    packed = pack_spectrum(args.n, nu)
    body = packed.to_dict()
    _emit(_envelope(config, {"pack": body}), args.out)
    return 0 if body["disjoint"] and body["energy_bound_ok"] and body["grid_ok"] else 1


def cmd_schrodinger(args) -> int:
    config = ExperimentConfig("schrodinger", out_path=args.out, seed=args.seed or 0)
    if args.functions:
        gset = read_grid_functions(args.functions)
    elif args.builtin == "identical":
        gset = identical_pair(grid_points=args.grid)
    else:
        gset = chirped_pair(grid_points=args.grid)
    result = obstruction_certificate(gset)
    _emit(_envelope(config, {"obstruction": result.to_dict()}), args.out)
    return 0


def cmd_complexity(args) -> int:
    config = ExperimentConfig("complexity", period=args.period, out_format=args.format,
                              out_path=args.out, seed=args.seed or 0)
    spec = aperiodic_spectrum() if args.aperiodic else minimal_periodic_spectrum(args.period)
    t_grid = np.linspace(0.0, 1.0, args.grid)
    readings = [complexity(spec, t) for t in t_grid]
    zeros = zero_count(spec, max(args.grid, 256)) if not args.aperiodic else None
    bound = check_lower_bound(spec, t_grid) if not args.aperiodic else None
    if args.format == "csv":
        _emit(reports.complexity_csv(readings, zeros), args.out)
        return 0 if bound is None or bound.ok else 1
    body = {
        "mean_abs_phase": readings[0].mean_abs_phase if readings else None,
        "zero_count": zeros,
        "lower_bound_ok": None if bound is None else bound.ok,
        "readings": [[r.t, r.value] for r in readings],
    }
    _emit(_envelope(config, body), args.out)
    return 0 if bound is None or bound.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="halfcycle",
        description="Half-cycle measurement experiments on periodic Turing computations",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, seed_default=None):
        p.add_argument("--seed", type=int, default=seed_default)
        p.add_argument("--out", default=None)

    p = sub.add_parser("profile", help="half-cycle amplitude table")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--period", type=int)
    group.add_argument("--aperiodic", action="store_true")
    p.add_argument("--K", type=int, default=1000)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    common(p)
    p.set_defaults(handler=cmd_profile)

    p = sub.add_parser("cycle", help="build and verify a waiting cycle")
    p.add_argument("--machine", required=True)
    p.add_argument("--input", default="")
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--budget", type=int, default=10000)
    common(p)
    p.set_defaults(handler=cmd_cycle)

    p = sub.add_parser("instant", help="halting demo via the retry procedures")
    p.add_argument("--machine", required=True)
    p.add_argument("--input", default="")
    p.add_argument("--alpha", type=float, default=0.75)
    p.add_argument("--K", type=int, default=1000)
    p.add_argument("--majority", type=int, default=15)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--trials", type=int, default=10 ** 6,
                   help="measurement-trial cap before a run is inconclusive")
    common(p)
    p.set_defaults(handler=cmd_instant)

    p = sub.add_parser("stats", help="random-implementation moment experiment")
    p.add_argument("--p", default="64,256,1024")
    p.add_argument("--density", default="uniform")
    p.add_argument("--trials", type=int, default=100000)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    common(p)
    p.set_defaults(handler=cmd_stats)

    p = sub.add_parser("pack", help="bounded-energy spectrum packing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--nu", default=None, help="comma-separated exponents")
    common(p)
    p.set_defaults(handler=cmd_pack)

    p = sub.add_parser("schrodinger", help="shared-orbit obstruction certificate")
    p.add_argument("functions", nargs="*", help="CSV files (x, re, im)")
    p.add_argument("--builtin", choices=("chirped", "identical"), default="chirped")
    p.add_argument("--grid", type=int, default=1024)
    common(p)
    p.set_defaults(handler=cmd_schrodinger)

    p = sub.add_parser("complexity", help="evolution-cost readings and zero counts")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--period", type=int)
    group.add_argument("--aperiodic", action="store_true")
    p.add_argument("--grid", type=int, default=1024)
    p.add_argument("--format", choices=("csv", "json"), default="json")
    common(p)
    p.set_defaults(handler=cmd_complexity)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except HalfcycleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
