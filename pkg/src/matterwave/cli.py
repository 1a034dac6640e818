"""Command-line front end: interfere / disperse / bounds / boxcount.

Every emitted document (JSON or CSV) embeds the fully resolved run
configuration, the constant-set identifier, and the package version, so a
stored output file is enough to reproduce the run byte for byte.

Exit codes: 0 success, 1 computation error (bad physics parameters, grid or
resolution failures), 2 usage error (unknown flags/subcommands/config keys,
malformed numbers, missing required parameters).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import __version__
from .boxstates import BoxSpec, MomentumRegion, count_states_continuum, count_states_lattice, min_momentum_uncertainty
from .bounds import black_hole_floor, check_localization, compton_wavelength, hydrogen_report
from .constants import (
    BUILTIN_REGISTRY,
    Particle,
    ParticleRegistry,
    UnitSystem,
    get_constants,
    load_particle_config,
)
from .interferometer import ExperimentConfig, run_experiment, sample_clicks
from .wavepacket import GaussianPacket, emit_spread_series, grid_for, width_report

ARTIFACT_NAME = "matterwave"

# Per-subcommand parameter schema: name -> (python type, default).  Config
# files may set any of these keys; command-line flags override them.
_SCHEMAS: dict[str, dict[str, tuple[type, Any]]] = {
    "interfere": {
        "h2": (bool, False),
        "phase": (float, 0.0),
        "insertion_frac": (float, 0.0),
        "samples": (int, None),
        "sweep": (int, None),
    },
    "disperse": {
        "particle": (str, None),
        "mass": (float, None),
        "width0": (float, None),
        "t_max": (float, None),
        "t_steps": (int, 9),
        "routes": (str, "analytic,spectral"),
        "rays": (int, None),
    },
    "bounds": {
        "particle": (str, None),
        "width": (float, None),
        "hydrogen": (int, None),
    },
    "boxcount": {
        "side": (float, None),
        "p_lo": (str, None),
        "p_hi": (str, None),
    },
}

_REQUIRED: dict[str, tuple[str, ...]] = {
    "interfere": (),
    "disperse": ("width0", "t_max"),
    "bounds": (),
    "boxcount": ("side", "p_lo", "p_hi"),
}


@dataclass(frozen=True)
class RunConfig:
    subcommand: str
    unit_mode: UnitSystem
    output_format: str  # "json" | "csv"
    seed: int | None
    parameters: dict[str, Any]
    out_path: str | None = None
    particles_path: str | None = None

    def as_document(self) -> dict[str, Any]:
        return {
            "subcommand": self.subcommand,
            "units": self.unit_mode.value,
            "format": self.output_format,
            "seed": self.seed,
            "parameters": {k: self.parameters[k] for k in sorted(self.parameters)},
        }


def _triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated numbers, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed number in triple {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--units", choices=[u.value for u in UnitSystem], default=None,
                        help="constant set: si (default) or natural (hbar=c=1)")
    common.add_argument("--format", choices=["json", "csv"], default=None, help="output format (default json)")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")
    common.add_argument("--config", default=None, help="JSON file of flag values; flags override it")
    common.add_argument("--particles", default=None, help="JSON file extending the particle registry")
    common.add_argument("--seed", type=int, default=None, help="seed for any random sampling")

    parser = argparse.ArgumentParser(prog=ARTIFACT_NAME, description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"{ARTIFACT_NAME} {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("interfere", parents=[common], help="delayed-choice interferometer probabilities and clicks")
    p.add_argument("--h2", action="store_true", default=None, help="insert the second splitter H2")
    p.add_argument("--phase", type=float, default=None, help="relative arm phase in radians (upper minus lower)")
    p.add_argument("--insertion-frac", dest="insertion_frac", type=float, default=None,
                   help="H2 insertion time as a fraction of the photon arrival time")
    p.add_argument("--samples", type=int, default=None, help="draw this many Monte Carlo clicks")
    p.add_argument("--sweep", type=int, default=None, help="emit a phase sweep with this many points")

    p = sub.add_parser("disperse", parents=[common], help="Gaussian packet widths over time by several routes")
    p.add_argument("--particle", default=None, help="registry particle name")
    p.add_argument("--mass", type=float, default=None, help="explicit mass (kg; dimensionless in natural units)")
    p.add_argument("--width0", type=float, default=None, help="initial amplitude-width parameter (m)")
    p.add_argument("--t-max", dest="t_max", type=float, default=None, help="final time (s)")
    p.add_argument("--t-steps", dest="t_steps", type=int, default=None, help="number of time samples (default 9)")
    p.add_argument("--routes", default=None, help="comma list from: analytic,spectral,kernel")
    p.add_argument("--rays", type=int, default=None, help="emit the straight-ray fan table with this many rays per side")

    p = sub.add_parser("bounds", parents=[common], help="Compton floor, localization check, hydrogen chain")
    p.add_argument("--particle", default=None, help="registry particle name")
    p.add_argument("--width", type=float, default=None, help="requested localization width (m)")
    p.add_argument("--hydrogen", type=int, default=None, help="hydrogen report for principal quantum number n")

    p = sub.add_parser("boxcount", parents=[common], help="microstate counts for a particle in a box")
    p.add_argument("--side", type=float, default=None, help="box side L (m)")
    p.add_argument("--p-lo", dest="p_lo", default=None, help="momentum region lower corner: X,Y,Z")
    p.add_argument("--p-hi", dest="p_hi", default=None, help="momentum region upper corner: X,Y,Z")

    return parser


def _load_config_file(path: str, known_keys: set[str], parser: argparse.ArgumentParser) -> dict[str, Any]:
    try:
        raw = json.loads(Path(path).read_text())
    except OSError as exc:
        parser.error(f"cannot read config file {path}: {exc}")
    except json.JSONDecodeError as exc:
        parser.error(f"config file {path} is not valid JSON: {exc}")
    if not isinstance(raw, dict):
        parser.error(f"config file {path} must hold a flat JSON object")
    for key in raw:
        if key not in known_keys:
            parser.error(f"unknown config key: {key!r}")
    return raw


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Resolve argv (plus any config file) into a fully specified RunConfig.

    Raises SystemExit(2) on usage errors, matching the CLI exit contract.
    """
    parser = _build_parser()
    args = parser.parse_args(argv)
    sub = args.subcommand
    schema = _SCHEMAS[sub]
    global_keys = {"units", "format", "seed"}
    file_values: dict[str, Any] = {}
    if args.config:
        file_values = _load_config_file(args.config, set(schema) | global_keys, parser)

    def resolve(key: str, cast: type, default: Any) -> Any:
        flag = getattr(args, key, None)
        if flag is not None:
            return flag
        if key in file_values and file_values[key] is not None:
            try:
                value = file_values[key]
                return bool(value) if cast is bool else cast(value)
            except (TypeError, ValueError):
                parser.error(f"config key {key!r} has malformed value {file_values[key]!r}")
        return default

    parameters = {key: resolve(key, cast, default) for key, (cast, default) in schema.items()}
    for key in _REQUIRED[sub]:
        if parameters[key] is None:
            parser.error(f"{sub} requires --{key.replace('_', '-')}")
    if sub == "disperse" and (parameters["particle"] is None) == (parameters["mass"] is None):
        parser.error("disperse requires exactly one of --particle or --mass")
    if sub == "boxcount":
        for key in ("p_lo", "p_hi"):
            try:
                if isinstance(parameters[key], str):
                    parameters[key] = list(_triple(parameters[key]))
                else:
                    parameters[key] = [float(v) for v in parameters[key]]
                if len(parameters[key]) != 3:
                    raise TypeError
            except (TypeError, argparse.ArgumentTypeError):
                parser.error(f"{key} must be three numbers, got {parameters[key]!r}")

    try:
        unit_mode = UnitSystem(resolve("units", str, UnitSystem.SI.value))
    except ValueError:
        parser.error(f"unknown unit system {resolve('units', str, None)!r}")
    output_format = resolve("format", str, "json")
    if output_format not in ("json", "csv"):
        parser.error(f"unknown output format {output_format!r}")
    seed = resolve("seed", int, None)
    if sub == "interfere" and parameters.get("samples") is not None and seed is None:
        seed = 0  # sampling is always reproducible; default stream 0
    return RunConfig(
        subcommand=sub,
        unit_mode=unit_mode,
        output_format=output_format,
        seed=seed,
        parameters=parameters,
        out_path=args.out,
        particles_path=args.particles,
    )


def _registry_for(config: RunConfig) -> ParticleRegistry:
    if config.particles_path:
        return load_particle_config(config.particles_path)
    return BUILTIN_REGISTRY


def _render_json(config: RunConfig, constants_label: str, result: dict[str, Any]) -> str:
    document = {
        "artifact": ARTIFACT_NAME,
        "version": __version__,
        "constants": constants_label,
        "config": config.as_document(),
        "result": result,
    }
    return json.dumps(document, sort_keys=True, indent=2) + "\n"


def _render_csv(config: RunConfig, constants_label: str, header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    meta = json.dumps(
        {"artifact": ARTIFACT_NAME, "version": __version__, "constants": constants_label,
         "config": config.as_document()},
        sort_keys=True,
    )
    buffer = io.StringIO()
    buffer.write(f"# {meta}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else repr(float(v)) if isinstance(v, float) else v for v in row])
    return buffer.getvalue()


def _column(base: str, si_suffix: str, unit_mode: UnitSystem) -> str:
    return f"{base}_{si_suffix}" if unit_mode is UnitSystem.SI else base


def _execute_interfere(config: RunConfig) -> tuple[dict[str, Any], tuple[list[str], list[list[Any]]]]:
    params = config.parameters
    arrival = 1.0
    experiment = ExperimentConfig(
        h2_present=bool(params["h2"]),
        h2_insertion_time=float(params["insertion_frac"]) * arrival,
        photon_arrival_time=arrival,
        phase_upper=float(params["phase"]),
        phase_lower=0.0,
    )
    if params["sweep"] is not None:
        n_sweep = int(params["sweep"])
        if n_sweep < 2:
            raise ValueError("sweep needs at least 2 points")
        phases = np.linspace(0.0, 2.0 * math.pi, n_sweep)
        rows = []
        for phi in phases:
            stats = run_experiment(
                ExperimentConfig(
                    h2_present=experiment.h2_present,
                    h2_insertion_time=experiment.h2_insertion_time,
                    photon_arrival_time=arrival,
                    phase_upper=float(phi),
                    phase_lower=0.0,
                )
            )
            rows.append([float(phi), stats.p_d1, stats.p_d2])
        return {"sweep": rows}, (["phase_rad", "p_d1", "p_d2"], rows)

    stats = run_experiment(experiment)
    result: dict[str, Any] = {"p_d1": stats.p_d1, "p_d2": stats.p_d2,
                              "h2_in_place": experiment.h2_in_place_at_arrival()}
    if params["samples"] is not None:
        seed = 0 if config.seed is None else int(config.seed)
        stats = sample_clicks(stats, int(params["samples"]), seed)
        result["clicks"] = {"d1": stats.clicks_d1, "d2": stats.clicks_d2,
                            "n": stats.clicks_d1 + stats.clicks_d2, "seed": stats.seed}
    header = ["p_d1", "p_d2", "clicks_d1", "clicks_d2"]
    row = [stats.p_d1, stats.p_d2, stats.clicks_d1, stats.clicks_d2]
    return result, (header, [row])


def _execute_disperse(config: RunConfig) -> tuple[dict[str, Any], tuple[list[str], list[list[Any]]]]:
    params = config.parameters
    constants = get_constants(config.unit_mode)
    if params["particle"] is not None:
        particle = _registry_for(config).lookup(params["particle"])
    else:
        particle = Particle("custom", float(params["mass"]))
    packet = GaussianPacket(particle=particle, width0=float(params["width0"]))
    t_max = float(params["t_max"])
    if t_max < 0.0:
        raise ValueError("t_max must be >= 0")
    t_steps = int(params["t_steps"])
    if t_steps < 2:
        raise ValueError("t_steps must be >= 2")
    times = np.linspace(0.0, t_max, t_steps)
    grid = grid_for(packet, t_max, constants)
    mode = config.unit_mode

    if params["rays"] is not None:
        rays = int(params["rays"])
        series = emit_spread_series(packet, list(times), rays, grid=grid, constants=constants)
        header = [_column("t", "s", mode), "ray_index", _column("x", "m", mode)]
        rows = []
        for sample in series:
            for j, x in zip(range(-rays, rays + 1), sample.ray_positions):
                rows.append([sample.t, j, x])
        result = {
            "rays": rays,
            "series": [
                {"t": s.t, "width_analytic": s.width_analytic, "width_spectral": s.width_spectral,
                 "ray_positions": list(s.ray_positions)}
                for s in series
            ],
        }
        return result, (header, rows)

    routes = [r.strip() for r in str(params["routes"]).split(",") if r.strip()]
    known_routes = {"analytic", "spectral", "kernel"}
    unknown = sorted(set(routes) - known_routes)
    if unknown:
        raise ValueError(f"unknown routes: {', '.join(unknown)} (choose from {', '.join(sorted(known_routes))})")
    header = [_column("t", "s", mode)]
    if "analytic" in routes:
        header.append(_column("width_analytic", "m", mode))
    if "spectral" in routes:
        header.append(_column("width_spectral", "m", mode))
    if "kernel" in routes:
        header.append(_column("width_kernel", "m", mode))
    header.append(_column("v_disp", "mps", mode))
    rows = []
    reports = []
    for t in times:
        report = width_report(packet, float(t), grid, constants, include_kernel="kernel" in routes)
        reports.append(report)
        row: list[Any] = [report.t]
        if "analytic" in routes:
            row.append(report.width_analytic)
        if "spectral" in routes:
            row.append(report.width_spectral)
        if "kernel" in routes:
            row.append(report.width_kernel)
        row.append(report.v_disp)
        rows.append(row)
    result = {
        "particle": {"name": particle.name, "mass": particle.mass},
        "width0": packet.width0,
        "routes": routes,
        "grid": {"x_min": grid.x_min, "x_max": grid.x_max, "n_points": grid.n_points},
        "series": [
            {"t": r.t, "width_analytic": r.width_analytic, "width_spectral": r.width_spectral,
             "width_kernel": r.width_kernel, "v_disp": r.v_disp, "v_disp_asymptotic": r.v_disp_asymptotic}
            for r in reports
        ],
    }
    return result, (header, rows)


def _execute_bounds(config: RunConfig) -> tuple[dict[str, Any], tuple[list[str], list[list[Any]]]]:
    params = config.parameters
    constants = get_constants(config.unit_mode)
    registry = _registry_for(config)

    if params["hydrogen"] is not None:
        report = hydrogen_report(int(params["hydrogen"]), constants,
                                 electron=registry.lookup("electron"))
        result = {
            "hydrogen": {
                "n": report.n,
                "bohr_radius_n": report.bohr_radius_n,
                "compton_electron": report.compton_electron,
                "alpha": report.alpha,
                "forms": report.forms,
            }
        }
        header = ["n", "bohr_radius_m", "compton_electron_m", "alpha", "forms"]
        rows = [[report.n, report.bohr_radius_n, report.compton_electron, report.alpha, report.forms]]
        return result, (header, rows)

    if params["particle"] is not None:
        particle = registry.lookup(params["particle"])
        if params["width"] is not None:
            report = check_localization(particle, float(params["width"]), constants)
            result = {
                "particle": {"name": particle.name, "mass": particle.mass},
                "compton": report.compton,
                "requested_width": report.requested_width,
                "admissible": report.admissible,
                "implied_asymptotic_speed": report.implied_asymptotic_speed,
            }
            header = ["name", "mass_kg", "compton_m", "requested_width_m", "admissible", "implied_speed_mps"]
            rows = [[particle.name, particle.mass, report.compton, report.requested_width,
                     report.admissible, report.implied_asymptotic_speed]]
            return result, (header, rows)
        compton = compton_wavelength(particle, constants)
        result = {
            "particle": {"name": particle.name, "mass": particle.mass},
            "compton": compton,
            "black_hole_floor": black_hole_floor(particle.mass, constants),
        }
        header = ["name", "mass_kg", "compton_m"]
        rows = [[particle.name, particle.mass, compton]]
        return result, (header, rows)

    table = []
    for particle in registry:
        table.append({"name": particle.name, "mass": particle.mass,
                      "compton": compton_wavelength(particle, constants)})
    header = ["name", "mass_kg", "compton_m"]
    rows = [[entry["name"], entry["mass"], entry["compton"]] for entry in table]
    return {"registry": table}, (header, rows)


def _execute_boxcount(config: RunConfig) -> tuple[dict[str, Any], tuple[list[str], list[list[Any]]]]:
    params = config.parameters
    constants = get_constants(config.unit_mode)
    box = BoxSpec(side=float(params["side"]))
    region = MomentumRegion(p_lo=tuple(params["p_lo"]), p_hi=tuple(params["p_hi"]))
    continuum = count_states_continuum(box, region, constants)
    lattice = count_states_lattice(box, region, constants)
    ratio = lattice / continuum if continuum != 0.0 else None
    result = {
        "continuum": continuum,
        "lattice": lattice,
        "ratio": ratio,
        "min_momentum_uncertainty": min_momentum_uncertainty(box, constants),
    }
    header = ["continuum", "lattice", "ratio"]
    return result, (header, [[continuum, lattice, ratio]])


_EXECUTORS = {
    "interfere": _execute_interfere,
    "disperse": _execute_disperse,
    "bounds": _execute_bounds,
    "boxcount": _execute_boxcount,
}


def execute(config: RunConfig, stream: io.TextIOBase | None = None) -> int:
    """Run the configured subcommand; returns the process exit status."""
    constants_label = get_constants(config.unit_mode).label
    try:
        result, csv_payload = _EXECUTORS[config.subcommand](config)
        if config.output_format == "json":
            text = _render_json(config, constants_label, result)
        else:
            header, rows = csv_payload
            text = _render_csv(config, constants_label, header, rows)
    except ValueError as exc:
        print(f"{ARTIFACT_NAME}: error: {exc}", file=sys.stderr)
        return 1
    if config.out_path:
        Path(config.out_path).write_text(text)
    else:
        (stream if stream is not None else sys.stdout).write(text)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    config = parse_args(sys.argv[1:] if argv is None else list(argv))
    return execute(config)


if __name__ == "__main__":
    sys.exit(main())
