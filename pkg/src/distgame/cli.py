"""Command-line front end.

Every subcommand resolves one RunConfig (defaults < config file < flags),
runs the corresponding operation, and writes a data file plus an adjacent
``<out>.meta.json`` recording the resolved config, tool version and wall
clock.  Data files are byte-identical across reruns of the same config.

Exit codes: 0 success, 1 configuration error, 2 numerical error.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import __version__, serialize
from .econ import CostParams, strategy_report, total_social_cost
from .errors import ConfigError, DistGameError, DomainError, GridError, \
    IntegrationError, OracleError
from .sir import EpiParams, Scenario, integrate
from .sweep import DEFAULT_DELTA_VALUES, DEFAULT_GAMMA_INV_VALUES, \
    DEFAULT_R0_VALUES, GridSpec, cost_fraction_field, field_by_delta, \
    sweep_r0_gamma, utility_field

SUBCOMMANDS = ("simulate", "sweep-grid", "field", "utility-field",
               "cost-field", "strategy", "total-cost")

_DEFAULT_BASENAME = {
    "simulate": "trajectory",
    "sweep-grid": "grid_sweep",
    "field": "field",
    "utility-field": "utility_field",
    "cost-field": "cost_field",
    "strategy": "strategy",
    "total-cost": "total_cost",
}


@dataclass
class RunConfig:
    """Flat bag of every tunable, mirroring the config-file schema."""

    r0: float = 2.67
    gamma_inv: float = 8.5
    n: float = 10000.0
    i0_fraction: float = 0.001
    delta: float = 0.0
    t0: float = 0.0
    tf: float = 180.0
    dt_internal: float = 0.05
    dt_output: float = 0.5
    c_d: float = 1.0
    c_i: float = 100.0
    dt_cost: float = 1.0
    r0_values: tuple = DEFAULT_R0_VALUES
    gamma_inv_values: tuple = DEFAULT_GAMMA_INV_VALUES
    delta_values: tuple = DEFAULT_DELTA_VALUES
    h: float = 0.01
    quantity: str = "I"
    out: str | None = None
    format: str = "csv"

    def scenario(self) -> Scenario:
        params = EpiParams(r0=self.r0, gamma=1.0 / self.gamma_inv, n=self.n)
        return Scenario(params=params, i0_fraction=self.i0_fraction,
                        delta=self.delta, t0=self.t0, tf=self.tf,
                        dt_internal=self.dt_internal,
                        dt_output=self.dt_output)

    def costs(self) -> CostParams:
        return CostParams(c_d=self.c_d, c_i=self.c_i)

    def grid(self) -> GridSpec:
        return GridSpec(r0_values=self.r0_values,
                        gamma_inv_values=self.gamma_inv_values,
                        delta_values=self.delta_values,
                        base_scenario=self.scenario())


_CONFIG_KEYS = {f.name for f in dataclasses.fields(RunConfig)}
_LIST_KEYS = {"r0_values", "gamma_inv_values", "delta_values"}


class _Parser(argparse.ArgumentParser):
    # Flag errors must exit 1, not argparse's default 2.
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="distgame",
                     description="Distancing-game SIR simulator and "
                                 "parameter-sweep toolkit")
    parser.add_argument("--version", action="version",
                        version=f"distgame {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    help_text = {
        "simulate": "integrate one scenario and write the trajectory",
        "sweep-grid": "delta=0 trajectories over the (r0, gamma_inv) grid",
        "field": "compartment field over (delta, t); see --quantity",
        "utility-field": "marginal-utility field over (delta, t)",
        "cost-field": "break-even cost-fraction field over (delta, t)",
        "strategy": "per-day risk, step costs and preferred strategy",
        "total-cost": "discrete-time total social cost of one scenario",
    }
    for name in SUBCOMMANDS:
        p = sub.add_parser(name, help=help_text[name])
        _add_run_flags(p)
    return parser


def _add_run_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("scenario")
    g.add_argument("--r0", type=float, help="basic reproduction number")
    g.add_argument("--gamma-inv", type=float, dest="gamma_inv",
                   help="mean infectious period in days")
    g.add_argument("--n", type=float, help="population size")
    g.add_argument("--i0", type=float, dest="i0_fraction",
                   help="initially infected fraction")
    g.add_argument("--delta", type=float, help="distancing level in [0, 1]")
    g.add_argument("--t0", type=float, help="start time (days)")
    g.add_argument("--tf", type=float, help="end time (days)")
    g.add_argument("--dt-internal", type=float, dest="dt_internal",
                   help="integrator step (days)")
    g.add_argument("--dt-output", type=float, dest="dt_output",
                   help="output sampling interval (days)")
    g = p.add_argument_group("costs")
    g.add_argument("--c-d", type=float, dest="c_d",
                   help="cost of distancing per person-day")
    g.add_argument("--c-i", type=float, dest="c_i",
                   help="cost of illness per person-day")
    g.add_argument("--dt-cost", type=float, dest="dt_cost",
                   help="cost summation step (days)")
    g = p.add_argument_group("sweep grids")
    g.add_argument("--r0-values", dest="r0_values",
                   help="comma-separated r0 grid")
    g.add_argument("--gamma-inv-values", dest="gamma_inv_values",
                   help="comma-separated gamma_inv grid")
    g.add_argument("--delta-values", dest="delta_values",
                   help="comma-separated delta grid")
    g.add_argument("--h", type=float,
                   help="finite-difference step in delta")
    g.add_argument("--quantity", choices=("S", "I", "R"),
                   help="compartment for the field subcommand")
    g = p.add_argument_group("output")
    g.add_argument("--config", help="JSON config file (flags override it)")
    g.add_argument("--out", help="output data file path")
    g.add_argument("--format", choices=("csv", "json"),
                   help="data file format (default csv)")


def _parse_list(key: str, raw) -> tuple:
    if isinstance(raw, str):
        items = [part.strip() for part in raw.split(",") if part.strip()]
    elif isinstance(raw, (list, tuple)):
        items = raw
    else:
        raise ConfigError(f"config key {key!r} must be a list, got {raw!r}")
    try:
        return tuple(float(v) for v in items)
    except (TypeError, ValueError):
        raise ConfigError(
            f"config key {key!r} contains a non-numeric entry: {raw!r}"
        ) from None


def load_config_file(path: str) -> dict:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"config file {path} is not valid JSON: {e}") from e
    if not isinstance(raw, dict):
        raise ConfigError(f"config file {path} must hold a JSON object")
    for key in raw:
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"unknown config key {key!r} in {path}")
    return raw


def resolve_config(args: argparse.Namespace) -> RunConfig:
    merged: dict = {}
    if args.config is not None:
        merged.update(load_config_file(args.config))
    for key in _CONFIG_KEYS:
        flag_value = getattr(args, key, None)
        if flag_value is not None:
            merged[key] = flag_value
    for key in _LIST_KEYS & merged.keys():
        merged[key] = _parse_list(key, merged[key])
    if "quantity" in merged and merged["quantity"] not in ("S", "I", "R"):
        raise ConfigError(
            f"config key 'quantity' must be S, I or R, "
            f"got {merged['quantity']!r}")
    if "format" in merged and merged["format"] not in ("csv", "json"):
        raise ConfigError(
            f"config key 'format' must be csv or json, "
            f"got {merged['format']!r}")
    return RunConfig(**merged)


def _run(command: str, cfg: RunConfig) -> tuple[str, dict | None, list]:
    """Execute a subcommand; returns (csv_header, json_payload, csv_rows)."""
    if command == "simulate":
        tr = integrate(cfg.scenario())
        return (serialize.TRAJECTORY_HEADER, serialize.trajectory_json(tr),
                serialize.trajectory_rows(tr))
    if command == "sweep-grid":
        grid = cfg.grid()
        trs = sweep_r0_gamma(grid)
        return (serialize.GRID_SWEEP_HEADER,
                serialize.grid_sweep_json(grid, trs),
                serialize.grid_sweep_rows(grid, trs))
    if command == "field":
        field = field_by_delta(cfg.grid(), cfg.quantity)
    elif command == "utility-field":
        field = utility_field(cfg.grid(), cfg.h)
    elif command == "cost-field":
        field = cost_fraction_field(cfg.grid())
    elif command == "strategy":
        rows = strategy_report(integrate(cfg.scenario()), cfg.costs())
        payload = serialize.strategy_json(rows)
        lines = [",".join([serialize.fmt(t), serialize.fmt(r_i),
                           serialize.fmt(j_d), serialize.fmt(j_n), c.value])
                 for t, r_i, j_d, j_n, c in rows]
        return (serialize.STRATEGY_HEADER, payload, lines)
    elif command == "total-cost":
        total = total_social_cost(integrate(cfg.scenario()), cfg.costs(),
                                  cfg.dt_cost)
        return ("total_cost", {"header": ["total_cost"], "rows": [[total]]},
                [[total]])
    else:
        raise ConfigError(f"unknown command {command!r}")
    return (serialize.field_header(field), serialize.field_json(field),
            serialize.field_rows(field))


def _write_output(command: str, cfg: RunConfig, header: str,
                  payload: dict, rows: list) -> Path:
    suffix = ".json" if cfg.format == "json" else ".csv"
    out = Path(cfg.out) if cfg.out else \
        Path(_DEFAULT_BASENAME[command] + suffix)
    if cfg.format == "json":
        serialize.write_json(payload, out)
    else:
        lines = [header]
        for row in rows:
            lines.append(row if isinstance(row, str)
                         else ",".join(serialize.fmt(v) for v in row))
        out.write_text("\n".join(lines) + "\n", encoding="ascii",
                       newline="\n")
    return out


def _write_metadata(command: str, cfg: RunConfig, out: Path,
                    elapsed: float) -> Path:
    meta_path = Path(str(out) + ".meta.json")
    cfg_dict = dataclasses.asdict(cfg)
    for key in _LIST_KEYS:
        cfg_dict[key] = list(cfg_dict[key])
    cfg_dict["out"] = str(out)
    meta = {
        "tool": "distgame",
        "version": __version__,
        "command": command,
        "config": cfg_dict,
        "wall_clock_seconds": elapsed,
    }
    meta_path.write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n",
                         encoding="utf-8")
    return meta_path


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise ConfigError("a subcommand is required "
                              f"(one of: {', '.join(SUBCOMMANDS)})")
        cfg = resolve_config(args)
        start = time.perf_counter()
        header, payload, rows = _run(args.command, cfg)
        out = _write_output(args.command, cfg, header, payload, rows)
        meta = _write_metadata(args.command, cfg, out,
                               time.perf_counter() - start)
    except (ConfigError, DomainError, GridError) as e:
        print(f"distgame: config error: {e}", file=sys.stderr)
        return 1
    except (IntegrationError, OracleError) as e:
        print(f"distgame: numerical error: {e}", file=sys.stderr)
        return 2
    except DistGameError as e:
        print(f"distgame: error: {e}", file=sys.stderr)
        return 2
    print(f"wrote {out} and {meta}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
