"""
Augmented Dickey-Fuller regressions
"""

import logging
from dataclasses import dataclass, replace
from typing import Dict, Mapping, Optional, Tuple, Union

import numpy as np

from default_rate import ols
from default_rate._types import Decision, Literal
from default_rate.errors import DegenerateFit, SeriesTooShort
from default_rate.series import Series

from .critical_values import LEVELS, MIN_NOBS, adf_critical_values, level_name
from .models import AdfModel

__all__ = [
    "TermEstimate",
    "DescentStep",
    "AdfOutcome",
    "adf_regression",
    "adf_test",
    "classify",
    "select_lags",
    "max_lag",
]

logger = logging.getLogger(__name__)

Lags = Union[int, Literal["auto"]]
Criterion = Literal["aic", "bic"]

TREND = "TREND"


@dataclass(frozen=True)
class TermEstimate:
    coefficient: float
    std_error: float
    t_stat: float
    p_value: float

    def to_dict(self) -> Dict:
        return {
            "coefficient": self.coefficient,
            "std_error": self.std_error,
            "t_stat": self.t_stat,
            "p_value": self.p_value,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "TermEstimate":
        return cls(**d)


@dataclass(frozen=True)
class DescentStep:
    """a deterministic term tested while settling the ADF model"""

    model: AdfModel
    term: str
    p_value: float
    kept: bool

    def to_dict(self) -> Dict:
        return {
            "model": self.model.value,
            "term": self.term,
            "p_value": self.p_value,
            "kept": self.kept,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "DescentStep":
        return cls(AdfModel(d["model"]), d["term"], d["p_value"], d["kept"])


@dataclass(frozen=True)
class AdfOutcome:
    """
    Result of one Dickey-Fuller regression.

    ``rho_hat`` is the coefficient on the lagged level and ``adf_stat`` its
    t-ratio. ``decision`` and ``level`` stay None until the statistic is
    classified, ``descent`` lists the deterministic terms tested before the
    model was settled.
    """

    series: str
    model: AdfModel
    lags: int
    rho_hat: float
    rho_std_error: float
    adf_stat: float
    critical_values: Dict[str, float]
    deterministic_terms: Dict[str, TermEstimate]
    effective_n: int
    decision: Optional[Decision] = None
    level: Optional[str] = None
    descent: Tuple[DescentStep, ...] = ()

    def classified(self, level: Union[str, float]) -> "AdfOutcome":
        """the same outcome with the decision taken at ``level``"""
        level = level_name(level)
        if level not in self.critical_values:
            raise SeriesTooShort(self.series, self.effective_n + 1, MIN_NOBS + 1)
        return replace(
            self,
            decision=classify(self.adf_stat, self.critical_values[level]),
            level=level,
        )

    def to_dict(self) -> Dict:
        return {
            "series": self.series,
            "model": self.model.value,
            "lags": self.lags,
            "rho_hat": self.rho_hat,
            "rho_std_error": self.rho_std_error,
            "adf_stat": self.adf_stat,
            "critical_values": dict(self.critical_values),
            "deterministic_terms": {
                name: term.to_dict() for name, term in self.deterministic_terms.items()
            },
            "effective_n": self.effective_n,
            "decision": self.decision,
            "level": self.level,
            "descent": [step.to_dict() for step in self.descent],
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "AdfOutcome":
        model = AdfModel(d["model"])
        return cls(
            series=d["series"],
            model=model,
            lags=d["lags"],
            rho_hat=d["rho_hat"],
            rho_std_error=d["rho_std_error"],
            adf_stat=d["adf_stat"],
            critical_values={
                level: d["critical_values"][level]
                for level in LEVELS
                if level in d["critical_values"]
            },
            deterministic_terms={
                name: TermEstimate.from_dict(d["deterministic_terms"][name])
                for name in model.terms
            },
            effective_n=d["effective_n"],
            decision=d["decision"],
            level=d["level"],
            descent=tuple(DescentStep.from_dict(s) for s in d["descent"]),
        )


def classify(adf_stat: float, critical_value: float) -> Decision:
    """
    Stationary when the statistic lies strictly below the critical value,
    a tie fails to reject the unit root
    """
    return "Stationary" if adf_stat < critical_value else "UnitRoot"


def max_lag(nobs: int) -> int:
    """default cap of the lag search, ``floor((n - 1) ** (1 / 3))``"""
    return int(np.floor(max(nobs - 1, 0) ** (1.0 / 3.0) + 1e-12))


def _design(
    s: Series, model: AdfModel, lags: int, skip: int = 0
) -> Tuple[np.ndarray, ols.DesignMatrix]:
    x = s.values
    dx = np.diff(x)
    first = max(lags, skip)
    nobs = dx.size - first
    required = 1 + len(model.terms) + lags + 2
    if nobs < required:
        raise SeriesTooShort(s.name, len(s), len(s) + required - nobs)

    level_term = f"{s.name}(-1)"
    names = [level_term]
    columns = [x[first : first + nobs]]
    if AdfModel(model) in (AdfModel.CONSTANT, AdfModel.TREND):
        names.append(ols.INTERCEPT)
        columns.append(np.ones(nobs))
    if AdfModel(model) == AdfModel.TREND:
        names.append(TREND)
        columns.append(np.arange(nobs, dtype=np.float64))
    for i in range(1, lags + 1):
        names.append(f"D({s.name}(-{i}))")
        columns.append(dx[first - i : first - i + nobs])

    return dx[first:], ols.DesignMatrix(tuple(names), np.column_stack(columns))


def _fit(s: Series, model: AdfModel, lags: int, skip: int = 0) -> ols.OlsFit:
    y, design = _design(s, model, lags, skip)
    result = ols.fit(y, design, dependent=f"D({s.name})")
    if result.ssr <= 1e-24 * float(y @ y):
        raise DegenerateFit(
            f"ADF regression of {s.name} fits exactly, the series has no "
            "stochastic component"
        )
    return result


def select_lags(
    s: Series,
    model: AdfModel,
    max_lags: Optional[int] = None,
    criterion: Criterion = "bic",
) -> int:
    """
    Lag order minimising the information criterion, every candidate is
    estimated on the sample of the longest one
    """
    if criterion not in ("aic", "bic"):
        raise ValueError(f"criterion {criterion} not supported")
    cap = max_lag(len(s)) if max_lags is None else max_lags
    # shrink the cap until the common sample can hold the largest model
    required = 1 + len(AdfModel(model).terms) + 2
    while cap > 0 and len(s) - 1 - cap < required + cap:
        cap -= 1

    best_lag, best_ic = 0, np.inf
    for p in range(cap + 1):
        ic = getattr(_fit(s, model, p, skip=cap), criterion)
        if ic < best_ic:
            best_lag, best_ic = p, ic
    logger.debug("%s: %s selected %d lags out of %d", s.name, criterion, best_lag, cap)
    return best_lag


def adf_regression(
    s: Series,
    model: AdfModel = AdfModel.CONSTANT,
    lags: Lags = 0,
    criterion: Criterion = "bic",
) -> AdfOutcome:
    """
    Regresses the first difference of ``s`` on its lagged level, the
    deterministic terms of ``model`` and ``lags`` lagged differences.

    Parameters
    ----------
    s: Series
        series to test
    model: AdfModel
        deterministic terms, the trend counts 0, 1, 2, ... from the first
        observation entering the regression
    lags: int or "auto"
        number of lagged differences, "auto" picks it with ``criterion``
    criterion: "aic" or "bic"
        information criterion of the automatic lag choice

    Returns
    -------
    AdfOutcome
        the outcome with critical values for ``effective_n`` observations and
        no decision yet
    """
    model = AdfModel(model)
    if lags == "auto":
        lags = select_lags(s, model, criterion=criterion)
    elif lags < 0:
        raise ValueError(f"lags must be non negative, got {lags}")

    result = _fit(s, model, int(lags))
    level_term = result.names[0]
    terms = {
        term: TermEstimate(
            coefficient=result.coefficients[term],
            std_error=result.std_errors[term],
            t_stat=result.t_stats[term],
            p_value=result.p_values[term],
        )
        for term in model.terms
    }
    return AdfOutcome(
        series=s.name,
        model=model,
        lags=int(lags),
        rho_hat=result.coefficients[level_term],
        rho_std_error=result.std_errors[level_term],
        adf_stat=result.t_stats[level_term],
        critical_values=(
            adf_critical_values(model, result.nobs)
            if result.nobs >= MIN_NOBS
            else {}
        ),
        deterministic_terms=terms,
        effective_n=result.nobs,
    )


def adf_test(
    s: Series,
    model: AdfModel = AdfModel.CONSTANT,
    lags: Lags = 0,
    level: Union[str, float] = "5%",
    criterion: Criterion = "bic",
) -> AdfOutcome:
    """ADF regression classified at ``level``"""
    return adf_regression(s, model, lags, criterion).classified(level)
