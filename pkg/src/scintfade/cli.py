"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from datetime import datetime, timezone

import numpy as np

from . import __version__
from .analysis import SweepSpec, monthly_profile, run_sweep
from .climate import MONTH_NAMES, annual_means, builtin_dataset, dump_csv, find_site, load_csv, validate_csv
from .errors import ValidationError
from .model import ClimateSample, LinkConfig, ModelVariant, PredictionTrace, predict

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

BANDS = {"C": 6.0, "Ku": 10.95, "Ka": 20.0}
SWEEP_PARAMS = {
    "elev": "elevation_deg",
    "freq": "frequency_ghz",
    "diameter": "antenna_diameter_m",
    "percent": "time_percent",
}
TRACE_FIELDS = [f for f in PredictionTrace.__dataclass_fields__]


class UsageError(Exception):
    pass


def _num(v):
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _now():
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _month_arg(value):
    if value == "annual":
        return value
    try:
        m = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"month must be 1-12 or 'annual', got {value!r}")
    if not 1 <= m <= 12:
        raise argparse.ArgumentTypeError(f"month must be 1-12 or 'annual', got {value!r}")
    return m


def _add_link_args(p, elev_default=5.0):
    freq = p.add_mutually_exclusive_group()
    freq.add_argument("--freq", type=float, help="carrier frequency in GHz")
    freq.add_argument("--band", choices=sorted(BANDS), help="C = 6, Ku = 10.95, Ka = 20 GHz")
    p.add_argument("--elev", type=float, default=elev_default, help="elevation angle, deg (must be > 4)")
    p.add_argument("--diameter", type=float, default=8.0, help="antenna diameter, m")
    p.add_argument("--efficiency", type=float, default=0.5, help="antenna efficiency (0, 1]")
    p.add_argument("--percent", type=float, default=0.01, help="time percentage, 0.01-50")
    p.add_argument("--variant", choices=["itu", "paper"], default="itu")
    p.add_argument("--month", type=_month_arg, default="annual", help="1-12 or 'annual'")
    p.add_argument("--climate-file", help="CSV of site climate to use instead of the built-in dataset")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="scintfade", description="Tropospheric scintillation fade depth prediction")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("predict", help="single prediction with the full trace")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--site", help="site name from the dataset")
    src.add_argument("--temp", type=float, help="temperature, deg C (use with --rh)")
    p.add_argument("--rh", type=float, help="relative humidity, percent")
    p.add_argument("--series", choices=["max", "min"], default="max")
    _add_link_args(p)

    p = sub.add_parser("sweep", help="fade depth over a range of one parameter")
    p.add_argument("--sweep", required=True, choices=sorted(SWEEP_PARAMS))
    p.add_argument("--from", dest="start", type=float)
    p.add_argument("--to", dest="stop", type=float)
    p.add_argument("--step", type=float)
    p.add_argument("--values", help="comma-separated values instead of --from/--to/--step")
    p.add_argument("--sites", default="all", help="'all' or comma-separated names")
    p.add_argument("--series", choices=["max", "min", "both"], default="max")
    _add_link_args(p)

    p = sub.add_parser("season", help="month-by-month fade depth for one site")
    p.add_argument("--site", required=True)
    p.add_argument("--series", choices=["max", "min", "both"], default="both")
    _add_link_args(p)

    p = sub.add_parser("dataset", help="export or validate climate CSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--export", action="store_true", help="write the built-in dataset as CSV")
    g.add_argument("--validate", metavar="FILE", help="check a climate CSV file")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")
    return parser


def _link_config(args, **override) -> LinkConfig:
    if args.freq is not None:
        freq = args.freq
    else:
        freq = BANDS[args.band or "Ku"]
    kw = dict(
        frequency_ghz=freq,
        elevation_deg=args.elev,
        antenna_diameter_m=args.diameter,
        antenna_efficiency=args.efficiency,
        time_percent=args.percent,
        variant=ModelVariant(args.variant),
    )
    kw.update(override)
    return LinkConfig(**kw)


def _sites(args):
    if getattr(args, "climate_file", None):
        with open(args.climate_file, "rb") as fh:
            return load_csv(fh)
    return builtin_dataset()


def _site_climate(site, series, month):
    if month == "annual":
        rh, t_max, t_min = annual_means(site)
    else:
        rec = site.month(month)
        rh, t_max, t_min = rec.rh_pct, rec.t_max_c, rec.t_min_c
    return ClimateSample(t_max if series == "max" else t_min, rh)


def _warnings(cfg, clamped):
    out = []
    if cfg.out_of_validity:
        out.append(f"frequency {cfg.frequency_ghz:g} GHz is outside the 4-20 GHz validity range")
    if clamped:
        out.append("averaging factor radicand is negative; g clamped to 0")
    return out


def _config_dict(cfg):
    return {
        "frequency_ghz": cfg.frequency_ghz,
        "elevation_deg": cfg.elevation_deg,
        "antenna_diameter_m": cfg.antenna_diameter_m,
        "antenna_efficiency": cfg.antenna_efficiency,
        "time_percent": cfg.time_percent,
        "turbulence_height_m": cfg.turbulence_height_m,
        "variant": cfg.variant.value,
    }


def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([_num(v) for v in r])
    return buf.getvalue()


def _json(doc):
    return json.dumps(doc, indent=2) + "\n"


def cmd_predict(args) -> str:
    if args.temp is not None or args.rh is not None:
        if args.temp is None or args.rh is None:
            raise UsageError("--temp and --rh must be given together")
        if args.month != "annual":
            raise UsageError("--month applies only with --site")
        site_name = None
        climate = ClimateSample(args.temp, args.rh)
    else:
        if not args.site:
            raise UsageError("give either --site or --temp/--rh")
        site = find_site(args.site, _sites(args))
        site_name = site.name
        climate = _site_climate(site, args.series, args.month)
    cfg = _link_config(args)
    trace = predict(climate, cfg)
    warnings = _warnings(cfg, trace.radicand_clamped)
    inputs = {
        "site": site_name,
        "series": args.series if site_name else None,
        "month": args.month if site_name else None,
        "temperature_c": climate.temperature_c,
        "relative_humidity_pct": climate.relative_humidity_pct,
        **_config_dict(cfg),
    }
    if args.format == "csv":
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        header = list(inputs) + TRACE_FIELDS
        row = [("" if v is None else v) for v in inputs.values()] + [getattr(trace, f) for f in TRACE_FIELDS]
        return _csv(header, [row])
    return _json(
        {"command": "predict", "inputs": inputs, "trace": trace.as_dict(), "warnings": warnings, "generated_at": _now()}
    )


def _sweep_values(args):
    if args.values is not None:
        if any(v is not None for v in (args.start, args.stop, args.step)):
            raise UsageError("--values cannot be combined with --from/--to/--step")
        try:
            values = [float(v) for v in args.values.split(",") if v.strip()]
        except ValueError as exc:
            raise UsageError(f"--values: {exc}")
    else:
        if any(v is None for v in (args.start, args.stop, args.step)):
            raise UsageError("give --from, --to and --step (or --values)")
        if args.step <= 0 or args.stop < args.start:
            raise UsageError("range must satisfy --from <= --to with --step > 0")
        n = int(np.floor((args.stop - args.start) / args.step + 1e-9)) + 1
        values = [round(args.start + k * args.step, 10) for k in range(n)]
    if not values:
        raise UsageError("sweep range is empty")
    d = np.diff(values)
    if not (np.all(d > 0) or np.all(d < 0)):
        raise UsageError("sweep values must be strictly monotone")
    return values


def _select_sites(args):
    sites = _sites(args)
    if args.sites.strip().lower() == "all":
        return sites
    return [find_site(name.strip(), sites) for name in args.sites.split(",") if name.strip()]


def _table_doc(command, inputs, header, rows, warnings, variant, fmt):
    if fmt == "csv":
        for w in warnings:
            print(f"warning: {w}", file=sys.stderr)
        return _csv(header, rows)
    return _json(
        {
            "command": command,
            "inputs": inputs,
            "rows": [dict(zip(header, r)) for r in rows],
            "warnings": warnings,
            "metadata": {"variant": variant, "generated_at": _now()},
        }
    )


def cmd_sweep(args) -> str:
    values = _sweep_values(args)
    param = SWEEP_PARAMS[args.sweep]
    month = args.month
    sites = _select_sites(args)
    base = _link_config(args, **({param: values[0]}))
    spec = SweepSpec(param, values, base, sites, args.series, month=None if month == "annual" else month)
    result = run_sweep(spec)
    warnings = []
    if any(r.out_of_validity for r in result.rows):
        warnings.append("some rows use a frequency outside the 4-20 GHz validity range")
    if any(r.radicand_clamped for r in result.rows):
        warnings.append("some rows have a negative averaging-factor radicand; g clamped to 0")
    header = ["site", "series", param, "fade_depth_db", "radicand_clamped", "out_of_validity"]
    rows = [list(r) for r in result.rows]
    inputs = {"swept": param, "values": values, "sites": [s.name for s in sites], "series": args.series,
              "month": month, **_config_dict(base)}
    inputs.pop(param)
    return _table_doc("sweep", inputs, header, rows, warnings, result.variant.value, args.format)


def cmd_season(args) -> str:
    if args.month != "annual":
        raise UsageError("--month does not apply to season")
    site = find_site(args.site, _sites(args))
    cfg = _link_config(args)
    profile = monthly_profile(site, cfg)
    series_list = ("max", "min") if args.series == "both" else (args.series,)
    header = ["site", "series", "month", "month_name", "fade_depth_db"]
    rows = []
    for series in series_list:
        for m, v in enumerate(profile.series(series), start=1):
            rows.append([site.name, series, m, MONTH_NAMES[m - 1], float(v)])
    # g does not depend on climate, so one month tells us about clamping
    warnings = _warnings(cfg, predict(_site_climate(site, "max", 1), cfg).radicand_clamped)
    inputs = {"site": site.name, "series": args.series, **_config_dict(cfg)}
    return _table_doc("season", inputs, header, rows, warnings, cfg.variant.value, args.format)


def cmd_dataset(args) -> tuple[str, int]:
    if args.export:
        return dump_csv(builtin_dataset()), EXIT_OK
    with open(args.validate, "rb") as fh:
        problems = validate_csv(fh)
    if not problems:
        return f"{args.validate}: OK, no problems found\n", EXIT_OK
    lines = [f"{args.validate}: {p}" for p in problems]
    return "\n".join(lines) + "\n", EXIT_VALIDATION


def _emit(text, path):
    if path:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        code = EXIT_OK
        if args.command == "predict":
            text = cmd_predict(args)
        elif args.command == "sweep":
            text = cmd_sweep(args)
        elif args.command == "season":
            text = cmd_season(args)
        else:
            text, code = cmd_dataset(args)
        _emit(text, args.output)
        return code
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"scintfade: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"scintfade: error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        name = getattr(exc, "filename", None) or ""
        print(f"scintfade: I/O error: {name}: {exc.strerror or exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
