"""
Text and structured renderings of the results
"""

import json
from typing import Any, Dict, List, Mapping, Optional

import numpy as np

from default_rate import ols
from default_rate._types import ReportFormat, SignCheck
from default_rate.diagnostics import DiagnosticsReport
from default_rate.series.functional import Description
from default_rate.stepwise import SpecLadder
from default_rate.unitroot import AdfOutcome, IntegrationReport

from .run import PipelineReport

__all__ = [
    "render_report",
    "parse_report",
    "to_structured",
    "format_description",
    "format_adf",
    "format_integration",
    "format_fit",
    "format_ladder",
    "format_diagnostics",
    "format_signs",
    "format_equation",
]

SIGNIFICANT_DIGITS = 9
RULE = "=" * 72
THIN_RULE = "-" * 72


def _round(value: Any) -> Any:
    """rounds every decimal of a nested document to 9 significant digits"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.{SIGNIFICANT_DIGITS}g}")
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Mapping):
        return {str(k): _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    raise TypeError(f"cannot render {type(value).__name__} in a structured report")


def to_structured(document: Mapping) -> str:
    """stable JSON text: sorted keys, two space indent, 9 significant digits"""
    return json.dumps(_round(document), sort_keys=True, indent=2) + "\n"


def render_report(report: PipelineReport, format: ReportFormat = "text") -> str:
    """
    Renders the pipeline results.

    Parameters
    ----------
    report: PipelineReport
    format: "text" or "structured"
        ``text`` is a fixed layout document for reading, ``structured`` a
        JSON document with keys ``integration``, ``ladder``, ``diagnostics``,
        ``sign_check``, ``final_equation`` and ``r_squared`` that
        :func:`parse_report` reads back

    Returns
    -------
    str
        identical for identical reports
    """
    if format == "structured":
        return to_structured(report.to_dict())
    if format != "text":
        raise ValueError(f"report format {format} not supported")

    orders = report.orders
    blocks = [
        RULE,
        f"DEFAULT RATE MODEL: {report.dependent}",
        RULE,
        "",
        "STATIONARITY",
        THIN_RULE,
    ]
    for name, integration in report.integration.items():
        blocks.append(format_integration(name, integration))
        blocks.append("")
    blocks += ["SPECIFICATIONS", THIN_RULE, format_ladder(report.ladder), ""]
    blocks += ["FINAL MODEL", THIN_RULE, format_fit(report.ladder.final), ""]
    blocks += ["VALIDATION", THIN_RULE, format_diagnostics(report.diagnostics), ""]
    if report.sign_check:
        blocks += [
            "EXPECTED SIGNS",
            THIN_RULE,
            format_signs(report.sign_check, report.final_equation),
            "",
        ]
    blocks += [
        "EQUATION",
        THIN_RULE,
        format_equation(report.dependent, report.final_equation, orders),
        f"R-squared = {report.r_squared:.6f}",
    ]
    notes = report.notes
    if notes:
        blocks += ["", "NOTES", THIN_RULE] + [f"* {note}" for note in notes]
    return "\n".join(blocks) + "\n"


def parse_report(text: str) -> PipelineReport:
    """reads back a structured report"""
    return PipelineReport.from_dict(json.loads(text))


# TEXT BLOCKS


def format_description(name: str, description: Description) -> str:
    rows = [
        ("Mean", description.mean),
        ("Median", description.median),
        ("Maximum", description.max),
        ("Minimum", description.min),
        ("Std. Dev.", description.std_dev),
    ]
    lines = [f"{name} ({description.n} observations)"]
    lines += [f"  {label:<12}{value:>14.6f}" for label, value in rows]
    return "\n".join(lines)


def format_adf(outcome: AdfOutcome) -> str:
    lines = [
        f"ADF {outcome.series}: model {outcome.model.value}, "
        f"{outcome.lags} lag(s), {outcome.effective_n} observations"
    ]
    for step in outcome.descent:
        action = "kept" if step.kept else "dropped"
        lines.append(
            f"  {step.term:<6} p-value {step.p_value:.6f} in {step.model.value} "
            f"model: {action}"
        )
    lines.append(f"  {'t-stat':<12}{outcome.adf_stat:>14.6f}")
    for level, value in outcome.critical_values.items():
        lines.append(f"  {level + ' cv':<12}{value:>14.6f}")
    for name, term in outcome.deterministic_terms.items():
        lines.append(
            f"  {name:<12}{term.coefficient:>14.6f}  t {term.t_stat:>10.6f}"
            f"  p {term.p_value:.6f}"
        )
    if outcome.decision is not None:
        lines.append(f"  decision at {outcome.level}: {outcome.decision}")
    return "\n".join(lines)


def format_integration(name: str, integration: IntegrationReport) -> str:
    lines = [f"{name}: I({integration.order})"]
    for outcome in integration.trace:
        lines += ["  " + line for line in format_adf(outcome).splitlines()]
    return "\n".join(lines)


def format_fit(fit: ols.OlsFit) -> str:
    lines = [
        f"Dependent variable: {fit.dependent}, {fit.nobs} observations",
        f"{'Variable':<16}{'Coefficient':>14}{'Std. Error':>14}"
        f"{'t-Statistic':>14}{'Prob.':>10}",
    ]
    for name in fit.names:
        lines.append(
            f"{name:<16}{fit.coefficients[name]:>14.6f}{fit.std_errors[name]:>14.6f}"
            f"{fit.t_stats[name]:>14.6f}{fit.p_values[name]:>10.4f}"
        )
    stats = [
        ("R-squared", fit.r_squared),
        ("Adjusted R-squared", fit.adj_r_squared),
        ("S.E. of regression", fit.se_regression),
        ("Sum squared resid", fit.ssr),
        ("Log likelihood", fit.loglike),
        ("Akaike info criterion", fit.aic),
        ("Schwarz criterion", fit.bic),
        ("Hannan-Quinn criter.", fit.hqic),
        ("Durbin-Watson stat", fit.durbin_watson),
        ("Mean dependent var", fit.mean_dependent),
        ("S.D. dependent var", fit.sd_dependent),
    ]
    if fit.f_statistic is not None:
        stats += [
            ("F-statistic", fit.f_statistic),
            ("Prob(F-statistic)", fit.f_p_value),
        ]
    lines += [f"{label:<24}{value:>14.6f}" for label, value in stats]
    return "\n".join(lines)


def format_ladder(ladder: SpecLadder) -> str:
    """one column per specification, p-values of each candidate regressor"""
    fits = [step.fit for step in ladder.steps]
    candidates: List[str] = []
    for fit in fits:
        candidates += [name for name in fit.names if name not in candidates]
    header = f"{'Variable':<16}" + "".join(
        f"{'Spec ' + str(i):>12}" for i in range(1, len(fits) + 1)
    )
    lines = [f"{ladder.direction} search at alpha {ladder.alpha}", header]
    for name in candidates:
        cells = [
            f"{fit.p_values[name]:>12.4f}" if name in fit.p_values else f"{'':>12}"
            for fit in fits
        ]
        lines.append(f"{name:<16}" + "".join(cells))
    lines.append(f"{'R-squared':<16}" + "".join(f"{f.r_squared:>12.4f}" for f in fits))
    for i, step in enumerate(ladder.steps, start=1):
        if step.removed is not None:
            lines.append(
                f"Spec {i}: removed {step.removed} (p-value {step.removal_p_value:.4f})"
            )
        if step.added is not None:
            lines.append(
                f"Spec {i}: added {step.added} (p-value {step.entry_p_value:.4f})"
            )
    return "\n".join(lines)


def format_diagnostics(diagnostics: DiagnosticsReport) -> str:
    dw = diagnostics.durbin_watson
    jb = diagnostics.jarque_bera
    lines = [
        f"Durbin-Watson {dw.statistic:.6f} in [{dw.band.low}, {dw.band.high}]: "
        f"{dw.verdict}"
    ]
    white = diagnostics.white
    if white is None:
        lines.append("White: not applicable, intercept only model")
    else:
        kind = "with" if white.cross_terms else "without"
        lines.append(
            f"White ({kind} cross terms) Obs*R-squared {white.obs_r_squared:.6f}, "
            f"df {white.df}, p-value {white.p_value:.6f}: {white.verdict}"
        )
        lines.append(f"  auxiliary regressors: {', '.join(white.aux_regressors)}")
        if white.dropped_collinear:
            dropped = ", ".join(white.dropped_collinear)
            lines.append(f"  dropped as collinear: {dropped}")
    lines.append(
        f"Jarque-Bera {jb.jb_stat:.6f}, skewness {jb.skewness:.6f}, "
        f"kurtosis {jb.kurtosis:.6f}, p-value {jb.p_value:.6f}: {jb.verdict}"
    )
    return "\n".join(lines)


def format_signs(
    checks: Mapping[str, SignCheck], coefficients: Optional[Mapping[str, float]] = None
) -> str:
    coefficients = coefficients or {}
    lines = []
    for name, check in checks.items():
        value = coefficients.get(name)
        shown = f"{value:>14.6f}" if value is not None else f"{'-':>14}"
        lines.append(f"{name:<16}{shown}  {check}")
    return "\n".join(lines)


def format_equation(
    dependent: str,
    coefficients: Mapping[str, float],
    orders: Optional[Dict[str, int]] = None,
) -> str:
    """
    Writes the estimated equation, differenced variables appear as ``D(...)``

    Example
    -------

    >>> format_equation("TX_DEF", {"C": 0.5, "X": -0.25}, {"TX_DEF": 0, "X": 1})
    'TX_DEF = 0.500000 - 0.250000*D(X)'
    """
    orders = orders or {}

    def term(name: str) -> str:
        for _ in range(orders.get(name, 0)):
            name = f"D({name})"
        return name

    parts = []
    for name, beta in coefficients.items():
        if name == ols.INTERCEPT:
            text = f"{abs(beta):.6f}"
        else:
            text = f"{abs(beta):.6f}*{term(name)}"
        if not parts:
            parts.append(("-" if beta < 0 else "") + text)
        else:
            parts.append(("- " if beta < 0 else "+ ") + text)
    return f"{term(dependent)} = " + " ".join(parts)
