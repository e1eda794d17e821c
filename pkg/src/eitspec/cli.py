"""Command-line interface.

Subcommands: run (bundled or file scenarios), spectrum (ad-hoc synthesis),
plan (control-field applicability report), convert (unit conversions),
list (bundled scenarios).  Exit status: 0 success, 1 usage error, 2 data
or parse error, 3 numerical error.  Diagnostics go to stderr, results to
files or stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .catalog import load_catalog
from .dressed import ControlField
from .errors import (
    ConfigError,
    EitSpecError,
    LinelistParseError,
    SingularMatrixError,
    UnknownScenarioError,
)
from .lineshape import make_grid, synthesize_spectrum
from .planner import evaluate_control, report_to_csv
from .scenarios import (
    list_scenarios,
    load_scenario,
    read_config,
    run_scenario,
    spectrum_to_csv,
)
from .units import rabi_to_intensity, wavenumber_to_frequency

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERICAL = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; route through our own status codes.
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="eitspec",
        description=(
            "Simulate control-field modified absorption spectra of "
            "overlapping lines, and plan which lines a control eliminates, "
            "shifts, or leaves intact."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"eitspec {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a bundled or file-based scenario")
    group = p_run.add_mutually_exclusive_group(required=True)
    group.add_argument("--scenario", metavar="NAME", help="bundled scenario name")
    group.add_argument("--config", metavar="FILE", help="scenario JSON file")
    p_run.add_argument(
        "--out", metavar="DIR", help="write spectrum.csv, report.csv and a figure"
    )
    p_run.add_argument(
        "--no-plot",
        action="store_true",
        help="skip the figure next to the CSV output",
    )

    p_spec = sub.add_parser("spectrum", help="synthesize a spectrum from files")
    p_spec.add_argument("--catalog", metavar="FILE", required=True)
    p_spec.add_argument(
        "--controls",
        metavar="FILE",
        required=True,
        help="JSON array of {line, omega_c, rabi, omega_es} entries",
    )
    p_spec.add_argument(
        "--grid",
        metavar="C,H,S",
        required=True,
        help="grid as center,halfwidth,step in cm-1",
    )
    p_spec.add_argument("--out", metavar="FILE", help="CSV output (default stdout)")
    p_spec.add_argument("--plot", metavar="FILE", help="also render a figure")

    p_plan = sub.add_parser("plan", help="per-line control applicability report")
    p_plan.add_argument("--catalog", metavar="FILE", required=True)
    p_plan.add_argument(
        "--control",
        metavar="WC,RABI,WES",
        required=True,
        help="control centre frequency, Rabi coupling, e-s frequency (cm-1)",
    )
    p_plan.add_argument(
        "--gamma", metavar="G", type=float, help="reference linewidth in cm-1"
    )
    p_plan.add_argument(
        "--es-map",
        metavar="FILE",
        help="JSON object of per-line e-s frequencies (label -> cm-1 or null); "
        "default applies the control's e-s frequency to every line",
    )

    p_conv = sub.add_parser("convert", help="unit conversions")
    p_conv.add_argument("--wavenumber", metavar="X", type=float, required=True)
    p_conv.add_argument("--to", dest="target", choices=("ghz", "intensity"),
                        required=True)
    p_conv.add_argument(
        "--mu", metavar="M", type=float, help="dipole moment in Debye"
    )

    sub.add_parser("list", help="list bundled scenarios")
    return parser


def _parse_triple(text: str, what: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise _UsageError(f"{what} needs three comma-separated numbers: {text!r}")
    try:
        a, b, c = (float(p) for p in parts)
    except ValueError:
        raise _UsageError(f"{what} is not numeric: {text!r}") from None
    return a, b, c


def _cmd_run(args) -> int:
    if args.scenario is not None:
        cfg = load_scenario(args.scenario)
    else:
        cfg = read_config(args.config)
    result = run_scenario(cfg, out_dir=args.out)
    if args.out is not None:
        out = Path(args.out)
        print(f"wrote {out / 'spectrum.csv'}")
        print(f"wrote {out / 'report.csv'}")
        if not args.no_plot:
            from .figures import save_spectrum_plot

            figure = save_spectrum_plot(
                result.spectrum, out / "spectrum.png", title=cfg.name
            )
            print(f"wrote {figure}")
    for key in sorted(result.metrics):
        print(f"{key} = {result.metrics[key]!r}")
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    cat = load_catalog(args.catalog)
    try:
        entries = json.loads(Path(args.controls).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{args.controls}: {exc}") from None
    if not isinstance(entries, list):
        raise ConfigError("controls file must hold a JSON array")
    controls = []
    for i, entry in enumerate(entries):
        keys = {"line", "omega_c", "rabi", "omega_es"}
        if not isinstance(entry, dict) or set(entry) != keys:
            raise ConfigError(
                f"controls[{i}] must have exactly the keys "
                f"{', '.join(sorted(keys))}"
            )
        try:
            control = ControlField(
                omega_c=float(entry["omega_c"]),
                rabi=float(entry["rabi"]),
                omega_es=float(entry["omega_es"]),
            )
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"controls[{i}]: {exc}") from None
        controls.append((str(entry["line"]), control))
    center, halfwidth, step = _parse_triple(args.grid, "--grid")
    if halfwidth <= 0 or step <= 0:
        raise _UsageError("--grid needs halfwidth > 0 and step > 0")
    energies = make_grid(center - halfwidth, center + halfwidth, step)
    spectrum = synthesize_spectrum(cat.lines, controls, energies)
    text = spectrum_to_csv(spectrum)
    if args.out is not None:
        Path(args.out).write_text(text, encoding="utf-8", newline="")
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    if args.plot is not None:
        from .figures import save_spectrum_plot

        save_spectrum_plot(spectrum, args.plot)
        print(f"wrote {args.plot}")
    return EXIT_OK


def _cmd_plan(args) -> int:
    cat = load_catalog(args.catalog)
    omega_c, rabi, omega_es = _parse_triple(args.control, "--control")
    control = ControlField(omega_c=omega_c, rabi=rabi, omega_es=omega_es)
    if args.es_map is not None:
        try:
            raw = json.loads(Path(args.es_map).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{args.es_map}: {exc}") from None
        if not isinstance(raw, dict):
            raise ConfigError("es-map file must hold a JSON object")
        es_map = {
            str(k): (None if v is None else float(v)) for k, v in raw.items()
        }
    else:
        es_map = {line.label: omega_es for line in cat.lines}
    report = evaluate_control(cat, control, es_map, gamma_ref=args.gamma)
    sys.stdout.write(report_to_csv(report))
    return EXIT_OK


def _cmd_convert(args) -> int:
    if args.target == "ghz":
        print(wavenumber_to_frequency(args.wavenumber))
        return EXIT_OK
    if args.mu is None:
        raise _UsageError("convert --to intensity requires --mu")
    print(rabi_to_intensity(args.wavenumber, args.mu))
    return EXIT_OK


def _cmd_list(args) -> int:
    del args
    for name, description in list_scenarios():
        print(f"{name}  {description}")
    return EXIT_OK


_HANDLERS = {
    "run": _cmd_run,
    "spectrum": _cmd_spectrum,
    "plan": _cmd_plan,
    "convert": _cmd_convert,
    "list": _cmd_list,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except UnknownScenarioError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SingularMatrixError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except (LinelistParseError, ConfigError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (FileNotFoundError, IsADirectoryError, PermissionError) as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except EitSpecError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
