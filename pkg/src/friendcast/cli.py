"""Command-line frontend: scenario runs, sweeps, and CSV emission.

Subcommands:
  run        execute one scenario and write snapshots.csv / summary.csv /
             manifest.json (plus actors.csv with --per-actor)
  scenarios  list the built-in scenario presets
  sweep      run the cross product of one varied parameter and a seed list

Outputs are byte-stable: identical config + seed + version produce
identical files.
"""

from __future__ import annotations

import argparse
import concurrent.futures
import csv
import json
import sys
from pathlib import Path

from . import __version__
from .harness import ConfigError, HISTOGRAM_BINS, RunResult, ScenarioConfig, simulate
from .scenarios import BUILTIN_SCENARIOS, scenario_config

SNAPSHOT_HEADER = ["step", "mean_value", "mean_abs_value", "std_value"] + [
    f"bin_{i:02d}" for i in range(HISTOGRAM_BINS)
]
ACTOR_HEADER = ["step", "actor_id", "mean_value", "mean_abs_value", "popularity", "reputation"]
SUMMARY_HEADER = [
    "scenario",
    "seed",
    "steps",
    "final_mean_abs",
    "steps_to_0.9",
    "sender_send_rate",
    "feedback_rate",
]
CONVERGENCE_THRESHOLD = 0.9


def _writer(handle):
    return csv.writer(handle, lineterminator="\n")


def write_snapshots(path: Path, result: RunResult) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(SNAPSHOT_HEADER)
        for snap in result.snapshots:
            out.writerow(
                [snap.step, snap.mean_value, snap.mean_abs_value, snap.std_value]
                + [int(c) for c in snap.histogram]
            )


def write_actors(path: Path, result: RunResult) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(ACTOR_HEADER)
        for snap in result.snapshots:
            for actor_id in range(len(snap.actor_mean_value)):
                out.writerow(
                    [
                        snap.step,
                        actor_id,
                        float(snap.actor_mean_value[actor_id]),
                        float(snap.actor_mean_abs_value[actor_id]),
                        float(snap.actor_popularity[actor_id]),
                        float(snap.actor_reputation[actor_id]),
                    ]
                )


def summary_row(scenario: str, cfg: ScenarioConfig, result: RunResult) -> list:
    reached = result.steps_to_threshold(CONVERGENCE_THRESHOLD)
    return [
        scenario,
        cfg.rng_seed,
        cfg.n_steps,
        result.snapshots[-1].mean_abs_value,
        "" if reached is None else reached,
        result.send_rate,
        result.feedback_rate,
    ]


def write_summary(path: Path, rows: list[list]) -> None:
    with open(path, "w", newline="") as handle:
        out = _writer(handle)
        out.writerow(SUMMARY_HEADER)
        out.writerows(rows)


def write_manifest(path: Path, scenario: str, cfg: ScenarioConfig, outputs: list[str]) -> None:
    manifest = {
        "tool_version": __version__,
        "scenario": scenario,
        "seed": cfg.rng_seed,
        "outputs": outputs,
        "config": cfg.to_dict(),
    }
    with open(path, "w", newline="") as handle:
        json.dump(manifest, handle, indent=2, sort_keys=True)
        handle.write("\n")


def load_config_file(path: str) -> dict:
    try:
        with open(path) as handle:
            data = json.load(handle)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except json.JSONDecodeError as err:
        raise ConfigError(f"config file {path} is not valid JSON: {err}")
    if not isinstance(data, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    if "config" in data and "tool_version" in data:
        data = data["config"]  # a manifest written by an earlier run
    return data


def resolve_config(args) -> tuple[str, ScenarioConfig]:
    """Merge scenario preset, config file, and CLI overrides."""
    base: dict = {}
    label = "custom"
    if args.scenario:
        if args.scenario not in BUILTIN_SCENARIOS:
            raise ConfigError(f"unknown scenario {args.scenario!r}")
        base.update(scenario_config(args.scenario).to_dict())
        label = args.scenario
    if args.config:
        base.update(load_config_file(args.config))
        if not args.scenario:
            label = Path(args.config).stem
    if args.seed is not None:
        base["rng_seed"] = args.seed
    if args.steps is not None:
        base["n_steps"] = args.steps
    if args.snapshot_every is not None:
        base["snapshot_every"] = args.snapshot_every
    try:
        return label, ScenarioConfig.from_dict(base)
    except (ConfigError, TypeError, ValueError) as err:
        raise ConfigError(str(err))


def _run_one(task) -> list:
    scenario, cfg, out_dir, per_actor = task
    result = simulate(cfg)
    out_dir.mkdir(parents=True, exist_ok=True)
    outputs = ["snapshots.csv", "summary.csv", "manifest.json"]
    write_snapshots(out_dir / "snapshots.csv", result)
    row = summary_row(scenario, cfg, result)
    write_summary(out_dir / "summary.csv", [row])
    if per_actor:
        write_actors(out_dir / "actors.csv", result)
        outputs.append("actors.csv")
    write_manifest(out_dir / "manifest.json", scenario, cfg, outputs)
    return row


def cmd_run(args) -> int:
    scenario, cfg = resolve_config(args)
    _run_one((scenario, cfg, Path(args.out), args.per_actor))
    print(f"wrote {args.out}/snapshots.csv, summary.csv, manifest.json")
    return 0


def cmd_scenarios(args) -> int:
    for name in sorted(BUILTIN_SCENARIOS):
        cfg = scenario_config(name)
        tiers = ", ".join(f"{frac:.3f}@{target}" for frac, target in cfg.knowledge_tiers)
        print(
            f"{name}: weights knowledge={cfg.knowledge_weight} "
            f"reputation={cfg.reputation_weight} popularity={cfg.popularity_weight}; "
            f"actors={cfg.n_actors} assertions={cfg.n_assertions} "
            f"receivers={cfg.n_receivers} steps={cfg.n_steps} "
            f"snapshot_every={cfg.snapshot_every}; tiers [{tiers}]"
        )
    return 0


_SWEEPABLE = {
    name: f.type
    for name, f in ScenarioConfig.__dataclass_fields__.items()
    if name not in ("knowledge_tiers", "ontology", "ontology_belief_weight")
}


def _parse_scalar(key: str, text: str):
    if key in ("n_actors", "n_assertions", "n_receivers", "n_steps", "snapshot_every", "rng_seed"):
        return int(text)
    return float(text)


def cmd_sweep(args) -> int:
    if args.vary not in _SWEEPABLE:
        raise ConfigError(f"unknown sweep parameter {args.vary!r}")
    scenario, base = resolve_config(args)
    values = [_parse_scalar(args.vary, v) for v in args.values.split(",")]
    seeds = [int(s) for s in args.seeds.split(",")]
    out_root = Path(args.out)

    tasks = []
    for value in values:
        for seed in seeds:
            data = base.to_dict()
            data[args.vary] = value
            data["rng_seed"] = seed
            cfg = ScenarioConfig.from_dict(data)
            run_dir = out_root / f"{args.vary}={value}_seed={seed}"
            tasks.append((f"{scenario}[{args.vary}={value}]", cfg, run_dir, args.per_actor))

    if args.jobs > 1:
        with concurrent.futures.ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_run_one, tasks))
    else:
        rows = [_run_one(t) for t in tasks]
    out_root.mkdir(parents=True, exist_ok=True)
    write_summary(out_root / "summary.csv", rows)
    print(f"wrote {len(rows)} runs under {out_root}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="friendcast",
        description="Broadcast information-diffusion simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="JSON config file (or a manifest from a previous run)")
        p.add_argument("--scenario", help="built-in scenario name")
        p.add_argument("--seed", type=int, help="override rng_seed")
        p.add_argument("--steps", type=int, help="override n_steps")
        p.add_argument("--snapshot-every", type=int, help="override snapshot_every")
        p.add_argument("--out", default="results", help="output directory")
        p.add_argument("--per-actor", action="store_true", help="also write actors.csv")

    p_run = sub.add_parser("run", help="execute one scenario")
    add_common(p_run)
    p_run.set_defaults(func=cmd_run)

    p_list = sub.add_parser("scenarios", help="list built-in scenarios")
    p_list.set_defaults(func=cmd_scenarios)

    p_sweep = sub.add_parser("sweep", help="run a parameter/seed cross product")
    add_common(p_sweep)
    p_sweep.add_argument("--vary", required=True, help="config key to vary")
    p_sweep.add_argument("--values", required=True, help="comma-separated values")
    p_sweep.add_argument("--seeds", required=True, help="comma-separated seeds")
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel runs")
    p_sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"i/o error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
