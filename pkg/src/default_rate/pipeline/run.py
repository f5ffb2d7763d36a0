"""
End to end modelling of the default rate
"""

import logging
from collections import OrderedDict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

from tqdm import tqdm

from default_rate import ols
from default_rate._types import SignCheck
from default_rate.diagnostics import DiagnosticsReport, diagnose
from default_rate.errors import InsufficientObservations, MissingColumn
from default_rate.series import Dataset, align
from default_rate.stepwise import SpecLadder, backward_eliminate, forward_select
from default_rate.unitroot import IntegrationReport, sequential_adf

from .config import PipelineConfig
from .signs import check_expected_signs

__all__ = ["PipelineReport", "run_pipeline", "MIN_OBSERVATIONS"]

logger = logging.getLogger(__name__)

MIN_OBSERVATIONS = 12


@dataclass(frozen=True)
class PipelineReport:
    """
    Everything the pipeline produced: the integration analysis of each
    variable, the specification ladder, the residual tests of the final
    model, the expected sign checks and the final equation.
    """

    integration: Dict[str, IntegrationReport]
    ladder: SpecLadder
    diagnostics: DiagnosticsReport
    sign_check: Dict[str, SignCheck]
    final_equation: Dict[str, float]
    r_squared: float

    @property
    def dependent(self) -> str:
        return self.ladder.final.dependent

    @property
    def orders(self) -> Dict[str, int]:
        return OrderedDict((name, rep.order) for name, rep in self.integration.items())

    @property
    def notes(self) -> List[str]:
        """remarks on mixed integration orders and the trimmed sample"""
        orders = self.orders
        notes = []
        if len(set(orders.values())) > 1:
            differenced = [f"{n} (I({d}))" for n, d in orders.items() if d > 0]
            notes.append(
                "mixed integration orders, entered as differences: "
                + ", ".join(differenced)
            )
            notes.append(
                f"alignment dropped {max(orders.values())} leading observation(s)"
            )
        return notes

    def to_dict(self) -> Dict:
        return {
            "integration": {
                name: rep.to_dict() for name, rep in self.integration.items()
            },
            "ladder": self.ladder.to_dict(),
            "diagnostics": self.diagnostics.to_dict(),
            "sign_check": dict(self.sign_check),
            "final_equation": dict(self.final_equation),
            "r_squared": self.r_squared,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "PipelineReport":
        ladder = SpecLadder.from_dict(d["ladder"])
        variables = [ladder.final.dependent] + list(ladder.candidates)
        return cls(
            integration=OrderedDict(
                (name, IntegrationReport.from_dict(d["integration"][name]))
                for name in variables
            ),
            ladder=ladder,
            diagnostics=DiagnosticsReport.from_dict(d["diagnostics"]),
            sign_check=_in_design_order(d["sign_check"], ladder.candidates),
            final_equation=OrderedDict(
                (name, d["final_equation"][name])
                for name in ladder.final.names
                if name in d["final_equation"]
            ),
            r_squared=d["r_squared"],
        )


def _in_design_order(
    checks: Mapping[str, SignCheck], candidates: Sequence[str]
) -> "OrderedDict[str, SignCheck]":
    """candidates first in design order, then the other variables by name"""
    names = [name for name in candidates if name in checks]
    names += sorted(name for name in checks if name not in candidates)
    return OrderedDict((name, checks[name]) for name in names)


def _integrate(
    data: Dataset, config: PipelineConfig, verbose: bool
) -> "OrderedDict[str, IntegrationReport]":
    names = [config.dependent] + list(config.regressors)

    def task(name: str) -> Tuple[str, IntegrationReport]:
        report = sequential_adf(
            data.series(name),
            alpha=config.alpha,
            lags=config.adf_lags,
            max_diff=config.max_diff,
            criterion=config.lag_criterion,
        )
        return name, report

    with ThreadPoolExecutor(max_workers=config.workers) as pool:
        results = list(
            tqdm(
                pool.map(task, names),
                total=len(names),
                desc="ADF",
                unit="series",
                disable=not verbose,
            )
        )
    return OrderedDict(results)


def run_pipeline(
    data: Dataset, config: PipelineConfig, verbose: bool = False
) -> PipelineReport:
    """
    Runs the modelling workflow on ``data``:

    1. sequential ADF on the dependent and on every regressor, integrated
       series are replaced by their stationary difference and all series are
       trimmed to their common periods;
    2. stepwise search of the regressors (backward by default);
    3. Durbin-Watson, White and Jarque-Bera tests on the final residuals;
    4. check of the expected signs.

    Parameters
    ----------
    data: Dataset
        quarterly panel holding the dependent and the regressors
    config: PipelineConfig
        settings of the run
    verbose: bool, default False
        show a progress bar over the ADF tests

    Returns
    -------
    PipelineReport
        identical for identical inputs
    """
    for name in [config.dependent] + list(config.regressors):
        if name not in data:
            raise MissingColumn(name)

    logger.info("testing stationarity of %d series", len(config.regressors) + 1)
    integration = _integrate(data, config, verbose)

    stationary = [rep.stationarized.rename(name) for name, rep in integration.items()]
    aligned = align(*stationary)
    nobs = len(aligned[0])
    logger.info(
        "aligned sample %s-%s, %d observations", aligned[0].start, aligned[0].end, nobs
    )
    if nobs < MIN_OBSERVATIONS:
        raise InsufficientObservations(nobs, MIN_OBSERVATIONS, "pipeline")

    y = aligned[0].values
    design = ols.DesignMatrix.from_columns(
        OrderedDict((s.name, s.values) for s in aligned[1:])
    )

    logger.info("%s stepwise search over %s", config.direction, design.regressors)
    search = backward_eliminate if config.direction == "backward" else forward_select
    ladder = search(y, design, config.alpha, dependent=config.dependent)
    final = ladder.final

    diagnostics = diagnose(
        final,
        design.select(final.names),
        alpha=config.alpha,
        band=config.dw_band,
        cross_terms=config.white_cross_terms,
    )
    sign_check = _in_design_order(
        check_expected_signs(final, config.expected_signs), ladder.candidates
    )

    return PipelineReport(
        integration=integration,
        ladder=ladder,
        diagnostics=diagnostics,
        sign_check=sign_check,
        final_equation=OrderedDict(final.coefficients),
        r_squared=final.r_squared,
    )
