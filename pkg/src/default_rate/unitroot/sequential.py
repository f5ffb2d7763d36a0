"""
Sequential Dickey-Fuller strategy: settle the deterministic terms from the
trend model downwards, test, and difference until the series is stationary
"""

import functools
import logging
from dataclasses import dataclass, replace
from typing import Callable, Dict, Mapping, Optional, Tuple

from default_rate.errors import OrderExceeded
from default_rate.series import Series
from default_rate.series.functional import diff

from .adf import TREND, AdfOutcome, Criterion, DescentStep, Lags, adf_regression
from .critical_values import level_name
from .models import AdfModel

__all__ = ["RegressionProvider", "IntegrationReport", "settle_model", "sequential_adf"]

logger = logging.getLogger(__name__)

# anything estimating an ADF regression, injectable to replay decisions
RegressionProvider = Callable[[Series, AdfModel, Lags], AdfOutcome]


@dataclass(frozen=True, eq=False)
class IntegrationReport:
    """
    ``order`` differences were needed, ``trace`` holds the classified outcome
    of the level and of each difference, the last one being Stationary.
    """

    order: int
    trace: Tuple[AdfOutcome, ...]
    stationarized: Series

    @property
    def final(self) -> AdfOutcome:
        return self.trace[-1]

    def to_dict(self) -> Dict:
        return {
            "order": self.order,
            "trace": [outcome.to_dict() for outcome in self.trace],
            "stationarized": self.stationarized.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "IntegrationReport":
        return cls(
            order=d["order"],
            trace=tuple(AdfOutcome.from_dict(o) for o in d["trace"]),
            stationarized=Series.from_dict(d["stationarized"]),
        )

    def __repr__(self):
        name = self.stationarized.name
        return f"IntegrationReport(series={name}, order=I({self.order}))"


def settle_model(
    s: Series,
    alpha: float,
    lags: Lags = 0,
    regression: RegressionProvider = adf_regression,
) -> AdfOutcome:
    """
    Fits the trend model, drops the trend when its p-value exceeds ``alpha``,
    then drops the constant likewise. The returned outcome records every
    p-value tested in ``descent``.
    """
    descent = []

    outcome = regression(s, AdfModel.TREND, lags)
    p_value = outcome.deterministic_terms[TREND].p_value
    descent.append(DescentStep(AdfModel.TREND, TREND, p_value, p_value <= alpha))
    if p_value > alpha:
        logger.debug("%s: trend dropped, p-value %.4f", s.name, p_value)
        outcome = regression(s, AdfModel.CONSTANT, lags)
        p_value = outcome.deterministic_terms["C"].p_value
        descent.append(DescentStep(AdfModel.CONSTANT, "C", p_value, p_value <= alpha))
        if p_value > alpha:
            logger.debug("%s: constant dropped, p-value %.4f", s.name, p_value)
            outcome = regression(s, AdfModel.NONE, lags)

    return replace(outcome, descent=tuple(descent))


def sequential_adf(
    s: Series,
    alpha: float = 0.05,
    lags: Lags = 0,
    max_diff: int = 2,
    regression: Optional[RegressionProvider] = None,
    criterion: Criterion = "bic",
) -> IntegrationReport:
    """
    Determines the order of integration of ``s``.

    Parameters
    ----------
    s: Series
        series to test
    alpha: float
        level of the deterministic term tests and of the unit root test,
        one of 0.01, 0.05, 0.10
    lags: int or "auto"
        lagged differences in each regression
    max_diff: int
        maximum number of differences before giving up
    regression: RegressionProvider, optional
        estimator of the ADF regressions, defaults to :func:`adf_regression`
        with the lag ``criterion``
    criterion: "aic" or "bic"
        used by the default estimator when ``lags`` is "auto"

    Returns
    -------
    IntegrationReport
        order, trace and the differenced stationary series

    Raises
    ------
    OrderExceeded
        when the series still has a unit root after ``max_diff`` differences
    """
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    if max_diff < 1:
        raise ValueError(f"max_diff must be positive, got {max_diff}")
    level = level_name(alpha)
    if regression is None:
        regression = functools.partial(adf_regression, criterion=criterion)

    trace = []
    current = s
    for order in range(max_diff + 1):
        outcome = settle_model(current, alpha, lags, regression).classified(level)
        trace.append(outcome)
        logger.info(
            "%s: %s model, ADF %.6f vs %.6f -> %s",
            current.name,
            outcome.model.value,
            outcome.adf_stat,
            outcome.critical_values[level],
            outcome.decision,
        )
        if outcome.decision == "Stationary":
            return IntegrationReport(order, tuple(trace), current)
        if order == max_diff:
            break
        current = diff(current)
    raise OrderExceeded(s.name, max_diff)
