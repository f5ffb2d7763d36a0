"""
Main program for default rate modelling
"""

import logging
import sys
from argparse import ArgumentParser, ArgumentTypeError, Namespace
from collections import OrderedDict
from typing import List, Optional, Sequence, Tuple

import numpy as np

from default_rate import ols
from default_rate.diagnostics import DwBand, diagnose
from default_rate.errors import DefaultRateError
from default_rate.pipeline import load_config, load_csv, render_report, run_pipeline
from default_rate.pipeline.report import (
    format_adf,
    format_description,
    format_diagnostics,
    format_fit,
    format_integration,
    format_ladder,
)
from default_rate.series import Dataset, describe
from default_rate.stepwise import backward_eliminate, forward_select
from default_rate.unitroot import AdfModel, adf_test, sequential_adf
from default_rate.unitroot.critical_values import level_name

logger = logging.getLogger("default_rate")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(ArgumentParser):
    """usage errors exit with status 1"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# argument types


def _names(text: str) -> List[str]:
    names = [name.strip().upper() for name in text.split(",") if name.strip()]
    if not names:
        raise ArgumentTypeError("expected a comma separated list of names")
    return names


def _lags(text: str):
    if text.strip().lower() == "auto":
        return "auto"
    try:
        lags = int(text)
    except ValueError:
        raise ArgumentTypeError(f"expected an integer >= 0 or auto, got {text!r}")
    if lags < 0:
        raise ArgumentTypeError(f"expected an integer >= 0 or auto, got {text!r}")
    return lags


def _alpha(text: str) -> float:
    try:
        alpha = float(text)
    except ValueError:
        raise ArgumentTypeError(f"expected a decimal in (0, 1), got {text!r}")
    if not 0 < alpha < 1:
        raise ArgumentTypeError(f"expected a decimal in (0, 1), got {text!r}")
    return alpha


def _level(text: str) -> float:
    """alpha of a unit root test, critical values are tabulated at 1%, 5%, 10%"""
    alpha = _alpha(text)
    try:
        level_name(alpha)
    except ValueError:
        raise ArgumentTypeError(f"expected one of 0.01, 0.05, 0.10, got {text!r}")
    return alpha


# commands


def _design(
    data: Dataset, dep: str, regressors: Sequence[str]
) -> Tuple[np.ndarray, ols.DesignMatrix]:
    y = data.series(dep.upper()).values
    columns = OrderedDict((name, data.series(name).values) for name in regressors)
    return y, ols.DesignMatrix.from_columns(columns)


def adf_command(args: Namespace) -> str:
    s = load_csv(args.data).series(args.series.upper())
    if args.model == "auto":
        report = sequential_adf(
            s, alpha=args.alpha, lags=args.lags, max_diff=args.max_diff
        )
        return format_integration(s.name, report)
    outcome = adf_test(s, AdfModel(args.model), args.lags, level=args.alpha)
    return format_adf(outcome)


def fit_command(args: Namespace) -> str:
    y, design = _design(load_csv(args.data), args.dep, args.regressors)
    return format_fit(ols.fit(y, design, dependent=args.dep.upper()))


def stepwise_command(args: Namespace) -> str:
    y, design = _design(load_csv(args.data), args.dep, args.regressors)
    search = backward_eliminate if args.direction == "backward" else forward_select
    ladder = search(y, design, args.alpha, dependent=args.dep.upper())
    return format_ladder(ladder) + "\n\n" + format_fit(ladder.final)


def diagnose_command(args: Namespace) -> str:
    y, design = _design(load_csv(args.data), args.dep, args.regressors)
    fit = ols.fit(y, design, dependent=args.dep.upper())
    diagnostics = diagnose(
        fit,
        design,
        alpha=args.alpha,
        band=DwBand(args.dw_low, args.dw_high),
        cross_terms=not args.no_cross_terms,
    )
    return format_diagnostics(diagnostics)


def describe_command(args: Namespace) -> str:
    s = load_csv(args.data).series(args.series.upper())
    return format_description(s.name, describe(s))


def pipeline_command(args: Namespace) -> str:
    config = load_config(
        args.config,
        alpha=args.alpha,
        max_diff=args.max_diff,
        adf_lags=args.lags,
        direction=args.direction,
        workers=args.workers,
    )
    report = run_pipeline(load_csv(args.data), config, verbose=args.verbose > 0)
    return render_report(report, args.format)


# parser


def build_parser() -> ArgumentParser:

    # options shared by every command
    common = _Parser(add_help=False)
    common.add_argument("--data", type=str, required=True, help="quarterly CSV panel")
    common.add_argument("--out", type=str, help="write the result here, not to stdout")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v info, -vv debug"
    )

    parser = _Parser("default_rate", description="Default rate econometrics")
    subparsers = parser.add_subparsers(dest="command", help="sub-command help")

    # adf
    adf_parser = subparsers.add_parser(
        "adf", parents=[common], help="Dickey-Fuller unit root test"
    )
    adf_parser.add_argument("--series", type=str, required=True)
    adf_parser.add_argument(
        "--model",
        type=str,
        default="auto",
        choices=["auto"] + [m.value for m in AdfModel],
        help="deterministic terms, auto runs the sequential strategy",
    )
    adf_parser.add_argument("--lags", type=_lags, default=0, help="integer or auto")
    adf_parser.add_argument("--alpha", type=_level, default=0.05)
    adf_parser.add_argument("--max-diff", type=int, default=2)
    adf_parser.set_defaults(func=adf_command)

    # regressions
    for name, func, summary in [
        ("fit", fit_command, "least squares fit"),
        ("stepwise", stepwise_command, "stepwise specification search"),
        ("diagnose", diagnose_command, "residual tests of the full model"),
    ]:
        sub = subparsers.add_parser(name, parents=[common], help=summary)
        sub.add_argument("--dep", type=str, required=True, help="dependent column")
        sub.add_argument(
            "--regressors", type=_names, required=True, help="comma separated columns"
        )
        sub.set_defaults(func=func)
        if name != "fit":
            sub.add_argument("--alpha", type=_alpha, default=0.05)
        if name == "stepwise":
            sub.add_argument(
                "--direction", choices=["backward", "forward"], default="backward"
            )
        if name == "diagnose":
            sub.add_argument("--dw-low", type=float, default=1.0)
            sub.add_argument("--dw-high", type=float, default=3.0)
            sub.add_argument("--no-cross-terms", action="store_true")

    # describe
    describe_parser = subparsers.add_parser(
        "describe", parents=[common], help="descriptive statistics"
    )
    describe_parser.add_argument("--series", type=str, required=True)
    describe_parser.set_defaults(func=describe_command)

    # pipeline, flags left to None keep the config values
    pipeline_parser = subparsers.add_parser(
        "pipeline", parents=[common], help="full modelling workflow"
    )
    pipeline_parser.add_argument("--config", type=str, required=True, help="INI file")
    pipeline_parser.add_argument(
        "--format", choices=["text", "structured"], default="text"
    )
    pipeline_parser.add_argument("--alpha", type=_level)
    pipeline_parser.add_argument("--max-diff", type=int)
    pipeline_parser.add_argument("--lags", type=_lags)
    pipeline_parser.add_argument("--direction", choices=["backward", "forward"])
    pipeline_parser.add_argument("--workers", type=int)
    pipeline_parser.set_defaults(func=pipeline_command)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    if not hasattr(args, "func"):
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(
        stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s"
    )

    try:
        output = args.func(args)
        if not output.endswith("\n"):
            output += "\n"
        if args.out:
            with open(args.out, "wt", encoding="utf-8", newline="") as f:
                f.write(output)
        else:
            sys.stdout.write(output)
    except (DefaultRateError, ValueError, OSError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_DATA
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
