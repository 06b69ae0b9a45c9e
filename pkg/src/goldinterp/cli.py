"""Command-line front end.

Artifacts go to ``--out`` (``-`` for stdout); diagnostics go to stderr.
Exit codes: 0 success, 1 domain error (machine code on stderr), 2 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__, criteria, export, pipeline
from .core import PHI, NodeSequence, quadratic_spline_interpolate
from .errors import GoldenInterpError
from .presets import PRESETS

_METHOD_CHOICES = [m.replace("_", "-") for m in pipeline.METHODS]


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_sequence(args: argparse.Namespace) -> NodeSequence:
    seq = NodeSequence.from_json(_read_text(args.input))
    if getattr(args, "k0", None) is not None:
        seq = NodeSequence(seq.nodes, args.k0)
    return seq


def _method_params(args: argparse.Namespace) -> dict:
    params: dict = {}
    if getattr(args, "L", None) is not None:
        params["L"] = args.L
    if getattr(args, "q", None) is not None:
        params["q"] = args.q
    if getattr(args, "side", None) is not None:
        params["side"] = args.side
    return params


def _add_io(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="input", required=True, help="node JSON file, or - for stdin")
    p.add_argument("--out", dest="output", required=True, help="output file, or - for stdout")


def _add_method(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", required=True, choices=_METHOD_CHOICES)
    p.add_argument("--k0", type=float, help="start derivative (overrides the input file)")
    p.add_argument("--L", type=float, help="longitudinal jump for step transforms")
    p.add_argument("--q", type=float, help="apex height ratio for linear transforms")
    p.add_argument("--side", choices=["left", "right"], help="golden point selection")
    p.add_argument("--samples", type=int, default=200, help="sample count (default 200)")


def _run_and_profile(args: argparse.Namespace):
    seq = _load_sequence(args)
    params = _method_params(args)
    result = pipeline.run_method(seq, args.method, params)
    profile = pipeline.profile_of(result, args.samples, args.method, params)
    return result, profile


def _cmd_interp(args: argparse.Namespace) -> int:
    result, profile = _run_and_profile(args)
    fmt = args.format or ("csv" if args.output.endswith(".csv") else "json")
    if fmt == "csv":
        _write_text(args.output, export.to_csv(profile))
    else:
        _write_text(args.output, json.dumps(result.to_json_dict(), indent=2) + "\n")
    return 0


def _cmd_csv(args: argparse.Namespace) -> int:
    _, profile = _run_and_profile(args)
    _write_text(args.output, export.to_csv(profile))
    return 0


def _cmd_svg(args: argparse.Namespace) -> int:
    _, profile = _run_and_profile(args)
    if args.mirror is not None:
        profile = export.mirror(profile, args.mirror)
    _write_text(args.output, export.to_svg(profile))
    return 0


def _cmd_obj(args: argparse.Namespace) -> int:
    _, profile = _run_and_profile(args)
    a, b, c = args.axis
    mesh = export.revolve(profile, export.AxisLine(a, b, c), args.segments)
    _write_text(args.output, mesh)
    return 0


def _cmd_error(args: argparse.Namespace) -> int:
    seq = _load_sequence(args)
    if args.family == "step":
        ratios = criteria.step_ratios(seq)
    elif args.family == "linear":
        ratios = criteria.linear_ratios(seq)
    else:
        f = quadratic_spline_interpolate(seq)
        target = PHI if (args.side or "right") == "right" else 1.0 - PHI
        ratios = criteria.curve_ratios(f, seq.xs, target)
    spec = criteria.ErrorSpec(
        variant=args.variant,
        m=args.m,
        form="squared" if args.squared else "absolute",
        averaged=args.averaged,
    )
    report = criteria.golden_error(ratios, spec)
    _write_text(args.output, json.dumps(report.to_json_dict(), indent=2) + "\n")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import app

    host = args.host or os.environ.get("GOLDINTERP_HOST", "127.0.0.1")
    port = args.port or int(os.environ.get("GOLDINTERP_PORT", "8350"))
    uvicorn.run(app, host=host, port=port, log_level="info")
    return 0


def _repro_one(preset_name: str, out_dir: Path, samples: int) -> None:
    preset = PRESETS[preset_name]
    seq = NodeSequence.from_pairs(preset.nodes, preset.k0)
    _write_text(str(out_dir / f"{preset_name}_nodes.json"), seq.to_json() + "\n")
    for label, method in (
        ("traditional", preset.traditional_method),
        ("golden", preset.golden_method),
    ):
        result = pipeline.run_method(seq, method, preset.params)
        profile = pipeline.profile_of(result, samples, method, preset.params)
        if preset.mirror_about is not None:
            profile = export.mirror(profile, preset.mirror_about)
        base = out_dir / f"{preset_name}_{label}"
        _write_text(str(base) + ".json", json.dumps(result.to_json_dict(), indent=2) + "\n")
        _write_text(str(base) + ".csv", export.to_csv(profile))
        _write_text(str(base) + ".svg", export.to_svg(profile))
        if preset.axis is not None:
            mesh = export.revolve(profile, export.AxisLine(*preset.axis))
            _write_text(str(base) + ".obj", mesh)


def _cmd_repro(args: argparse.Namespace) -> int:
    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    names = list(PRESETS) if args.preset == "all" else [args.preset]
    for name in names:
        _repro_one(name, out_dir, args.samples)
        print(f"wrote {args.output}/{name}_*", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="goldinterp",
        description="Golden-section-guided interpolation toolkit",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("interp", help="interpolate nodes and write samples or a result document")
    _add_io(p)
    _add_method(p)
    p.add_argument("--format", choices=["csv", "json"], help="default: by --out extension")
    p.set_defaults(func=_cmd_interp)

    p = sub.add_parser("csv", help="write sampled profile as CSV")
    _add_io(p)
    _add_method(p)
    p.set_defaults(func=_cmd_csv)

    p = sub.add_parser("svg", help="write an equal-axis SVG plot")
    _add_io(p)
    _add_method(p)
    p.add_argument("--mirror", type=float, help="mirror the profile about x = MIRROR first")
    p.set_defaults(func=_cmd_svg)

    p = sub.add_parser("obj", help="revolve the profile about an axis into an OBJ mesh")
    _add_io(p)
    _add_method(p)
    p.add_argument(
        "--axis",
        required=True,
        type=_axis_triple,
        help="axis line a,b,c meaning a*x + b*y + c = 0",
    )
    p.add_argument("--segments", type=int, default=64)
    p.set_defaults(func=_cmd_obj)

    p = sub.add_parser("error", help="compute a golden error report for a node file")
    _add_io(p)
    p.add_argument("--family", choices=["step", "linear", "curve"], required=True)
    p.add_argument("--variant", choices=list(criteria.VARIANTS), default="left")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--squared", action="store_true")
    p.add_argument("--averaged", action="store_true")
    p.add_argument("--k0", type=float)
    p.add_argument("--side", choices=["left", "right"])
    p.set_defaults(func=_cmd_error)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", help="default GOLDINTERP_HOST or 127.0.0.1")
    p.add_argument("--port", type=int, help="default GOLDINTERP_PORT or 8350")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("repro", help="regenerate the built-in design presets")
    p.add_argument("--out", dest="output", required=True, help="output directory")
    p.add_argument("--preset", choices=list(PRESETS) + ["all"], default="all")
    p.add_argument("--samples", type=int, default=200)
    p.set_defaults(func=_cmd_repro)

    return parser


def _axis_triple(text: str) -> tuple[float, float, float]:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("axis must be three comma-separated numbers a,b,c")
    return tuple(float(v) for v in parts)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GoldenInterpError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
