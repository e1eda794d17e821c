"""Named, reproducible experiment definitions.

A scenario binds a catalog, a set of control entries and a grid, and
produces a spectrum, a per-line applicability report and a few summary
metrics.  Bundled scenarios live as JSON data files so they can be cloned
and edited; the schema is

    {
      "name":        str,
      "description": str (optional),
      "catalog":     bundled catalog name or CSV path,
      "controls":    [{"line": label, "omega_c": x, "rabi": x,
                       "omega_es": x}, ...],
      "grid":        "auto" | {"center": x, "halfwidth": x, "step": x},
      "probe_amp":   number (optional, default 1.0)
    }

Outputs are plain CSV: `spectrum.csv` with header `energy_cm1,total` plus
one column per line label, and `report.csv` as defined by the planner.
Re-running a scenario yields byte-identical files.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, replace
from importlib import resources
from pathlib import Path
from typing import Mapping

import numpy as np

from . import catalog as _catalog
from .catalog import LineCatalog, format_float, load_catalog
from .dressed import ControlField
from .errors import ConfigError, UnknownScenarioError
from .lineshape import (
    SpectrumGrid,
    default_grid,
    line_profile,
    make_grid,
    synthesize_spectrum,
)
from .planner import ApplicabilityReport, assess_lines, report_to_csv

_CONFIG_KEYS = {"name", "description", "catalog", "controls", "grid", "probe_amp"}
_CONTROL_KEYS = {"line", "omega_c", "rabi", "omega_es"}


@dataclass(frozen=True)
class ScenarioControl:
    """One control entry: the targeted line label plus field parameters."""

    line: str
    omega_c: float
    rabi: float
    omega_es: float

    def as_control(self) -> ControlField:
        return ControlField(
            omega_c=self.omega_c, rabi=self.rabi, omega_es=self.omega_es
        )


@dataclass(frozen=True)
class GridSpec:
    center: float
    halfwidth: float
    step: float

    def energies(self) -> np.ndarray:
        return make_grid(
            self.center - self.halfwidth, self.center + self.halfwidth, self.step
        )


@dataclass(frozen=True)
class ScenarioConfig:
    name: str
    catalog: str
    controls: tuple[ScenarioControl, ...] = ()
    grid: GridSpec | None = None  # None means auto
    probe_amp: float = 1.0
    description: str = ""


@dataclass(eq=False)
class ScenarioResult:
    config: ScenarioConfig
    spectrum: SpectrumGrid
    report: ApplicabilityReport
    metrics: dict[str, float] = field(default_factory=dict)


def config_from_dict(raw: Mapping, base_dir: Path | None = None) -> ScenarioConfig:
    """Validate a parsed JSON object into a ScenarioConfig.

    Relative catalog paths resolve against `base_dir` (the config file's
    directory) unless they name a bundled catalog.
    """
    if not isinstance(raw, Mapping):
        raise ConfigError("scenario config must be a JSON object")
    unknown = set(raw) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key in ("name", "catalog"):
        if key not in raw:
            raise ConfigError(f"config key {key!r} is required")
    name = raw["name"]
    cat = raw["catalog"]
    if not isinstance(name, str) or not isinstance(cat, str):
        raise ConfigError("'name' and 'catalog' must be strings")
    if (
        base_dir is not None
        and cat not in _catalog.bundled_catalog_names()
        and not Path(cat).is_absolute()
    ):
        cat = str(base_dir / cat)
    controls = []
    for i, entry in enumerate(raw.get("controls", [])):
        if not isinstance(entry, Mapping) or set(entry) != _CONTROL_KEYS:
            raise ConfigError(
                f"controls[{i}] must have exactly the keys "
                f"{', '.join(sorted(_CONTROL_KEYS))}"
            )
        try:
            controls.append(
                ScenarioControl(
                    line=str(entry["line"]),
                    omega_c=float(entry["omega_c"]),
                    rabi=float(entry["rabi"]),
                    omega_es=float(entry["omega_es"]),
                )
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"controls[{i}]: {exc}") from None
    grid_raw = raw.get("grid", "auto")
    if grid_raw == "auto":
        grid = None
    elif isinstance(grid_raw, Mapping) and set(grid_raw) == {
        "center",
        "halfwidth",
        "step",
    }:
        try:
            grid = GridSpec(
                center=float(grid_raw["center"]),
                halfwidth=float(grid_raw["halfwidth"]),
                step=float(grid_raw["step"]),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"grid: {exc}") from None
    else:
        raise ConfigError("'grid' must be \"auto\" or {center, halfwidth, step}")
    try:
        probe_amp = float(raw.get("probe_amp", 1.0))
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"probe_amp: {exc}") from None
    return ScenarioConfig(
        name=name,
        catalog=cat,
        controls=tuple(controls),
        grid=grid,
        probe_amp=probe_amp,
        description=str(raw.get("description", "")),
    )


def read_config(path: str | Path) -> ScenarioConfig:
    """Load a scenario config from a JSON file."""
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: {exc}") from None
    return config_from_dict(raw, base_dir=path.parent)


def _bundled_scenario_files():
    root = resources.files("eitspec.data").joinpath("scenarios")
    return sorted(
        (entry for entry in root.iterdir() if entry.name.endswith(".json")),
        key=lambda entry: entry.name,
    )


def list_scenarios() -> tuple[tuple[str, str], ...]:
    """(name, one-line description) for every bundled scenario, sorted."""
    out = []
    for entry in _bundled_scenario_files():
        raw = json.loads(entry.read_text(encoding="utf-8"))
        out.append((raw["name"], raw.get("description", "")))
    return tuple(sorted(out))


def scenario_names() -> tuple[str, ...]:
    return tuple(name for name, _ in list_scenarios())


def load_scenario(name: str) -> ScenarioConfig:
    """Load a bundled scenario by name."""
    names = scenario_names()
    if name not in names:
        raise UnknownScenarioError(name, names)
    text = (
        resources.files("eitspec.data")
        .joinpath(f"scenarios/{name}.json")
        .read_text(encoding="utf-8")
    )
    return config_from_dict(json.loads(text))


def with_rabi(cfg: ScenarioConfig, rabi: float) -> ScenarioConfig:
    """Copy of a scenario with every control coupling set to `rabi`."""
    return replace(
        cfg, controls=tuple(replace(c, rabi=rabi) for c in cfg.controls)
    )


def spectrum_to_csv(spectrum: SpectrumGrid) -> str:
    """Serialize a spectrum; header `energy_cm1,total` plus line columns."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["energy_cm1", "total", *spectrum.per_line.keys()])
    columns = list(spectrum.per_line.values())
    for i, energy in enumerate(spectrum.energies):
        row = [format_float(energy), format_float(spectrum.total[i])]
        row.extend(format_float(col[i]) for col in columns)
        writer.writerow(row)
    return buf.getvalue()


def _nearest_index(energies: np.ndarray, value: float) -> int:
    return int(np.argmin(np.abs(energies - value)))


def _summary_metrics(
    cfg: ScenarioConfig, cat: LineCatalog, spectrum: SpectrumGrid
) -> dict[str, float]:
    energies = spectrum.energies
    # The targeted (removed) line is the one whose control sits closest to
    # resonance; without controls fall back to the first catalog line.
    if cfg.controls:
        target_label = min(
            cfg.controls, key=lambda c: abs(c.omega_c - c.omega_es)
        ).line
    else:
        target_label = cat.lines[0].label
    by_label = {line.label: line for line in cat.lines}
    target = by_label[target_label]
    i_target = _nearest_index(energies, target.omega_ge)
    residual = float(spectrum.total[i_target])
    point = energies[i_target : i_target + 1]
    uncontrolled = float(
        sum(
            line_profile(line, None, point)[0] * cfg.probe_amp**2
            for line in cat.lines
        )
    )
    metrics = {
        "target_cm1": float(target.omega_ge),
        "residual_at_target": residual,
        "uncontrolled_at_target": uncontrolled,
        "residual_ratio": residual / uncontrolled if uncontrolled else np.nan,
    }
    # Masked-partner metric: where the total peaks around the nearest other
    # line (catalog order on ties), relative to that line's bare position.
    others = [line for line in cat.lines if line.label != target_label]
    if others:
        spectator = min(others, key=lambda line: abs(line.omega_ge - target.omega_ge))
        window = np.abs(energies - spectator.omega_ge) <= spectator.gamma
        if np.any(window):
            idx = np.flatnonzero(window)
            peak_total = idx[int(np.argmax(spectrum.total[window]))]
            metrics["b_peak_shift_cm1"] = float(
                energies[peak_total] - spectator.omega_ge
            )
    # Dressed-doublet separation of the targeted line's own profile.
    profile = spectrum.per_line[target_label]
    if 0 < i_target < energies.size - 1:
        left = int(np.argmax(profile[:i_target]))
        right = i_target + 1 + int(np.argmax(profile[i_target + 1 :]))
        metrics["at_peak_separation_cm1"] = float(
            energies[right] - energies[left]
        )
    return metrics


def run_scenario(
    cfg: ScenarioConfig, out_dir: str | Path | None = None
) -> ScenarioResult:
    """Execute a scenario; optionally write spectrum.csv and report.csv."""
    cat = load_catalog(cfg.catalog)
    energies = cfg.grid.energies() if cfg.grid is not None else default_grid(cat.lines)
    controls = [(c.line, c.as_control()) for c in cfg.controls]
    spectrum = synthesize_spectrum(cat.lines, controls, energies, cfg.probe_amp)
    control_map = {c.line: c.as_control() for c in cfg.controls}
    report = assess_lines(cat.lines, control_map)
    metrics = _summary_metrics(cfg, cat, spectrum)
    result = ScenarioResult(
        config=cfg, spectrum=spectrum, report=report, metrics=metrics
    )
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        (out / "spectrum.csv").write_text(
            spectrum_to_csv(spectrum), encoding="utf-8", newline=""
        )
        (out / "report.csv").write_text(
            report_to_csv(report), encoding="utf-8", newline=""
        )
    return result
