"""Command-line front door for the screening calculator.

Every number printed is the corresponding library value; formats only
control rendering (plain = 4 decimals, json = full precision, csv /
markdown for grids). Exit codes: 0 success, 1 domain error (the typed
error name is printed on stderr), 2 usage error. A failed --verify run
of the simulator also exits 1.

Environment: SEQSCREEN_FORMAT overrides the default output format,
SEQSCREEN_PORT the default service port. Everything else is flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import __version__
from .core import (
    Prior,
    TestProfile,
    epsilon,
    iterations_from_log_lr,
    iterations_needed,
    npv,
    npv_curve,
    ppv,
    ppv_curve,
    prevalence_threshold,
    sequential_ppv,
)
from .errors import ScreeningError
from .mc import SimulationConfig, simulate, verify_closed_form
from .tables import (
    ReferenceTableSpec,
    generate_reference_table,
    paper_spec,
    render_csv,
    render_json,
    render_markdown,
    render_surface_csv,
    render_surface_json,
    surface_grid,
)


def _default_format(fallback: str) -> str:
    env = os.environ.get("SEQSCREEN_FORMAT", "").strip().lower()
    return env if env in ("plain", "json", "csv", "markdown") else fallback


def _default_port() -> int:
    try:
        return int(os.environ.get("SEQSCREEN_PORT", ""))
    except ValueError:
        return 8000


def _print_plain(pairs: list[tuple[str, object]]) -> None:
    for name, value in pairs:
        if isinstance(value, float):
            print(f"{name} {value:.4f}")
        else:
            print(f"{name} {value}")


def _emit_scalar(fmt: str, pairs: list[tuple[str, object]]) -> None:
    if fmt == "json":
        print(json.dumps(dict(pairs)))
    else:
        _print_plain(pairs)


def _test_from_args(args) -> TestProfile:
    return TestProfile(args.sens, args.spec)


def _plan_pairs(plan) -> list[tuple[str, object]]:
    return [
        ("status", plan.status.value),
        ("raw_n", plan.raw_n if plan.raw_n is not None else None),
        ("n_i", plan.n_i),
    ]


def _csv_rows(header: list[str], rows: list[list[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------


def _cmd_ppv(args) -> int:
    value = ppv(_test_from_args(args), Prior(args.prev)).value
    _emit_scalar(args.format, [("ppv", value)])
    return 0


def _cmd_npv(args) -> int:
    value = npv(_test_from_args(args), Prior(args.prev)).value
    _emit_scalar(args.format, [("npv", value)])
    return 0


def _cmd_threshold(args) -> int:
    test = _test_from_args(args)
    _emit_scalar(
        args.format,
        [("phi_e", prevalence_threshold(test)), ("epsilon", epsilon(test))],
    )
    return 0


def _cmd_iterations(args) -> int:
    if args.log_lr is not None:
        plan = iterations_from_log_lr(args.log_lr, args.prev, args.target)
    elif args.sens is not None and args.spec is not None:
        plan = iterations_needed(_test_from_args(args), Prior(args.prev), args.target)
    else:
        print("error: provide either --log-lr or both --sens and --spec", file=sys.stderr)
        return 2
    _emit_scalar(args.format, _plan_pairs(plan))
    return 0


def _cmd_sequential_ppv(args) -> int:
    value = sequential_ppv(_test_from_args(args), Prior(args.prev), args.n).value
    _emit_scalar(args.format, [("sequential_ppv", value)])
    return 0


def _parse_float_list(text: str) -> tuple[float, ...]:
    return tuple(float(tok) for tok in text.split(",") if tok.strip())


def _cmd_table(args) -> int:
    if args.axes == "paper":
        spec = paper_spec(args.target)
    else:
        if not args.log_lr_values or not args.phi_values:
            print(
                "error: --axes custom requires --log-lr-values and --phi-values",
                file=sys.stderr,
            )
            return 2
        spec = ReferenceTableSpec(
            args.target,
            _parse_float_list(args.log_lr_values),
            _parse_float_list(args.phi_values),
        )
    table = generate_reference_table(spec)
    rendered = {"csv": render_csv, "markdown": render_markdown, "json": render_json}[
        args.format
    ](table)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(rendered)
    else:
        sys.stdout.write(rendered)
    return 0


def _cmd_surface(args) -> int:
    points = surface_grid(args.target, tuple(args.log_lr_range), tuple(args.phi_range))
    if args.format == "json":
        sys.stdout.write(render_surface_json(args.target, points))
    else:
        sys.stdout.write(render_surface_csv(points))
    return 0


def _cmd_curve(args) -> int:
    test = _test_from_args(args)
    if args.points < 2:
        print("error: --points must be at least 2", file=sys.stderr)
        return 2
    grid = [i / (args.points - 1) for i in range(args.points)]
    points = ppv_curve(test, grid) if args.kind == "ppv" else npv_curve(test, grid)
    if args.format == "json":
        print(json.dumps({"kind": args.kind, "points": points}))
    else:
        sys.stdout.write(
            _csv_rows(["phi", args.kind], [[repr(x), repr(y)] for x, y in points])
        )
    return 0


def _cmd_simulate(args) -> int:
    config = SimulationConfig(
        test=_test_from_args(args),
        prior=Prior(args.prev),
        trials=args.trials,
        seed=args.seed,
        serial_depth=args.depth,
    )
    if args.verify:
        verdict = verify_closed_form(config, tolerance_sigmas=args.sigmas, backend=args.backend)
        sys.stdout.write(verdict.to_json())
        return 0 if verdict.passed else 1
    sys.stdout.write(simulate(config, backend=args.backend).to_json())
    return 0


def _cmd_serve(args) -> int:
    import dataclasses

    import uvicorn

    from .service import create_app, load_config

    config = load_config(args.config)
    if args.port is not None:
        config = dataclasses.replace(config, port=args.port)
    if args.static is not None:
        config = dataclasses.replace(config, static_dir=args.static)
    uvicorn.run(create_app(config), host=args.host, port=config.port)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_test_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--sens", type=float, required=required, help="sensitivity a in [0,1]")
    p.add_argument("--spec", type=float, required=required, help="specificity b in [0,1]")


def _add_format_flag(p: argparse.ArgumentParser, choices, default: str) -> None:
    p.add_argument(
        "--format",
        choices=choices,
        default=_default_format(default),
        help=f"output format (default {default})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqscreen",
        description="Bayesian screening-test calculator and serial-testing planner",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ppv", help="positive predictive value of one positive test")
    _add_test_flags(p)
    p.add_argument("--prev", type=float, required=True, help="prevalence/pre-test probability")
    _add_format_flag(p, ("plain", "json"), "plain")
    p.set_defaults(handler=_cmd_ppv)

    p = sub.add_parser("npv", help="negative predictive value of one negative test")
    _add_test_flags(p)
    p.add_argument("--prev", type=float, required=True)
    _add_format_flag(p, ("plain", "json"), "plain")
    p.set_defaults(handler=_cmd_npv)

    p = sub.add_parser("threshold", help="prevalence threshold phi_e and epsilon")
    _add_test_flags(p)
    _add_format_flag(p, ("plain", "json"), "plain")
    p.set_defaults(handler=_cmd_threshold)

    p = sub.add_parser(
        "iterations",
        help="consecutive positives needed to reach a target PPV",
    )
    _add_test_flags(p, required=False)
    p.add_argument("--log-lr", type=float, default=None, help="ln(LR+) instead of --sens/--spec")
    p.add_argument("--prev", type=float, required=True)
    p.add_argument("--target", type=float, required=True, help="target PPV in (0,1)")
    _add_format_flag(p, ("plain", "json"), "plain")
    p.set_defaults(handler=_cmd_iterations)

    p = sub.add_parser("sequential-ppv", help="posterior after n consecutive positives")
    _add_test_flags(p)
    p.add_argument("--prev", type=float, required=True)
    p.add_argument("--n", type=int, required=True, help="number of positive results, >= 1")
    _add_format_flag(p, ("plain", "json"), "plain")
    p.set_defaults(handler=_cmd_sequential_ppv)

    p = sub.add_parser("table", help="reference table of iteration counts")
    p.add_argument("--target", type=float, required=True)
    p.add_argument("--axes", choices=("paper", "custom"), default="paper")
    p.add_argument("--log-lr-values", help="comma-separated ln(LR+) axis for --axes custom")
    p.add_argument("--phi-values", help="comma-separated prevalence axis for --axes custom")
    p.add_argument("--out", help="write to file instead of stdout")
    _add_format_flag(p, ("csv", "markdown", "json"), "csv")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("surface", help="dense (ln LR+, phi, raw_n) grid for plotting")
    p.add_argument("--target", type=float, required=True)
    p.add_argument(
        "--log-lr-range",
        type=float,
        nargs=3,
        metavar=("START", "STOP", "STEP"),
        required=True,
    )
    p.add_argument(
        "--phi-range", type=float, nargs=3, metavar=("START", "STOP", "STEP"), required=True
    )
    _add_format_flag(p, ("csv", "json"), "csv")
    p.set_defaults(handler=_cmd_surface)

    p = sub.add_parser("curve", help="PPV or NPV curve over prevalence in [0,1]")
    p.add_argument("--kind", choices=("ppv", "npv"), required=True)
    _add_test_flags(p)
    p.add_argument("--points", type=int, default=200, help="grid size (default 200)")
    _add_format_flag(p, ("csv", "json"), "csv")
    p.set_defaults(handler=_cmd_curve)

    p = sub.add_parser("simulate", help="Monte Carlo population simulation / verification")
    _add_test_flags(p)
    p.add_argument("--prev", type=float, required=True)
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=3, help="serial tests per subject")
    p.add_argument("--verify", action="store_true", help="compare against the closed form")
    p.add_argument("--sigmas", type=float, default=3.0, help="verification tolerance in SEs")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("serve", help="run the HTTP JSON API")
    p.add_argument("--port", type=int, default=None, help=f"default {_default_port()}")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--config", help="path to a JSON service config file")
    p.add_argument("--static", help="directory of web UI assets to serve at /")
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ScreeningError as err:
        print(f"error: {type(err).__name__}: {err}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
