"""
Residual tests: Durbin-Watson, White and Jarque-Bera
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Sequence, Tuple

import numpy as np
from scipy import stats

from default_rate import ols
from default_rate._types import DwVerdict, JbVerdict, WhiteVerdict
from default_rate.errors import (
    DegenerateResiduals,
    InsufficientObservations,
    SeriesTooShort,
)

__all__ = [
    "DwBand",
    "DwResult",
    "WhiteResult",
    "JbResult",
    "durbin_watson",
    "white_design",
    "white_test",
    "white_verdict",
    "jarque_bera",
    "jb_verdict",
]

logger = logging.getLogger(__name__)


def _check_alpha(alpha: float):
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")


def _residuals(residuals: Sequence[float], minimum: int) -> np.ndarray:
    e = np.asarray(residuals, dtype=np.float64).reshape(-1)
    if e.size < minimum:
        raise SeriesTooShort("residuals", e.size, minimum)
    if not np.any(e):
        raise DegenerateResiduals()
    return e


# DURBIN-WATSON


@dataclass(frozen=True)
class DwBand:
    low: float = 1.0
    high: float = 3.0

    def __post_init__(self):
        if not 0 <= self.low <= self.high <= 4:
            raise ValueError(f"band [{self.low}, {self.high}] must lie within [0, 4]")

    def verdict(self, statistic: float) -> DwVerdict:
        if statistic < self.low:
            return "PositiveAutocorr"
        if statistic > self.high:
            return "NegativeAutocorr"
        return "NoAutocorr"


@dataclass(frozen=True)
class DwResult:
    statistic: float
    verdict: DwVerdict
    band: DwBand

    def to_dict(self) -> Dict:
        return {
            "statistic": self.statistic,
            "verdict": self.verdict,
            "band": {"low": self.band.low, "high": self.band.high},
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "DwResult":
        return cls(d["statistic"], d["verdict"], DwBand(**d["band"]))


def durbin_watson(residuals: Sequence[float], band: DwBand = DwBand()) -> DwResult:
    r"""
    Durbin-Watson statistic and its reading against ``band``

    .. math::

        DW = \frac{\sum_{t \geq 2}(e_t - e_{t-1})^2}{\sum_t e_t^2}

    Below ``band.low`` residuals are positively autocorrelated, above
    ``band.high`` negatively.

    Example
    -------

    >>> durbin_watson([1.0, -1.0, 1.0, -1.0]).statistic
    3.0
    """
    e = _residuals(residuals, 2)
    statistic = float(np.sum(np.diff(e) ** 2) / np.sum(e ** 2))
    return DwResult(statistic, band.verdict(statistic), band)


# WHITE


def white_verdict(p_value: float, alpha: float) -> WhiteVerdict:
    return "Homoscedastic" if p_value > alpha else "Heteroscedastic"



@dataclass(frozen=True)
class WhiteResult:
    """
    White heteroscedasticity test, ``obs_r_squared`` is ``n R²`` of the
    squared residuals on the auxiliary regressors and ``df`` the number of
    auxiliary regressors besides the constant.
    """

    obs_r_squared: float
    df: int
    p_value: float
    f_statistic: float
    f_p_value: float
    aux_regressors: Tuple[str, ...]
    dropped_collinear: Tuple[str, ...]
    cross_terms: bool
    verdict: WhiteVerdict

    def to_dict(self) -> Dict:
        return {
            "obs_r_squared": self.obs_r_squared,
            "df": self.df,
            "p_value": self.p_value,
            "f_statistic": self.f_statistic,
            "f_p_value": self.f_p_value,
            "aux_regressors": list(self.aux_regressors),
            "dropped_collinear": list(self.dropped_collinear),
            "cross_terms": self.cross_terms,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "WhiteResult":
        values = dict(d)
        values["aux_regressors"] = tuple(values["aux_regressors"])
        values["dropped_collinear"] = tuple(values["dropped_collinear"])
        return cls(**values)


def white_design(
    design: ols.DesignMatrix, cross_terms: bool = True
) -> ols.DesignMatrix:
    """
    Auxiliary design of the White test: the constant then, for each regressor
    in order, the regressor, its square and its products with the regressors
    after it. Without ``cross_terms`` only levels and squares are used.
    """
    regressors = design.regressors
    names: List[str] = [ols.INTERCEPT]
    columns: List[np.ndarray] = [np.ones(design.nobs)]
    for i, a in enumerate(regressors):
        xa = design.column(a)
        names.append(a)
        columns.append(xa)
        names.append(f"{a}^2")
        columns.append(xa * xa)
        if cross_terms:
            for b in regressors[i + 1 :]:
                names.append(f"{a}*{b}")
                columns.append(xa * design.column(b))
    return ols.DesignMatrix(tuple(names), np.column_stack(columns))


def white_test(
    fit: ols.OlsFit,
    design: ols.DesignMatrix,
    alpha: float = 0.05,
    cross_terms: bool = True,
) -> WhiteResult:
    """
    White test of homoscedasticity on the residuals of ``fit``.

    Collinear auxiliary columns are dropped left to right with the rank rule
    of the least squares module, then the squared residuals are regressed on
    the remaining ones.

    Parameters
    ----------
    fit: OlsFit
        fitted model whose residuals are tested
    design: DesignMatrix
        design of ``fit``, with intercept and at least one regressor
    alpha: float
        level of the test
    cross_terms: bool, default True
        include pairwise products of the regressors

    Returns
    -------
    WhiteResult
        Homoscedastic when the chi-square p-value exceeds ``alpha``
    """
    _check_alpha(alpha)
    if not design.has_intercept or not design.regressors:
        raise ValueError("the White test needs an intercept and at least one regressor")
    e = _residuals(fit.residuals, 2)
    if e.size != design.nobs:
        raise ValueError("residuals and design have different lengths")

    auxiliary = white_design(design, cross_terms)
    kept, dropped = ols.independent_columns(auxiliary)
    if dropped:
        logger.info("White test: collinear regressors dropped %s", dropped)
    auxiliary = auxiliary.select([auxiliary.names[i] for i in kept])
    if e.size <= auxiliary.ncols:
        raise InsufficientObservations(
            e.size, auxiliary.ncols, "White auxiliary regression"
        )

    aux_fit = ols.fit(e * e, auxiliary, dependent="RESID^2")
    df = auxiliary.ncols - 1
    obs_r_squared = e.size * aux_fit.r_squared
    p_value = float(ols.chi2_sf(obs_r_squared, df))
    f_statistic = aux_fit.f_statistic if aux_fit.f_statistic is not None else 0.0
    f_p_value = aux_fit.f_p_value if aux_fit.f_p_value is not None else 1.0
    return WhiteResult(
        obs_r_squared=float(obs_r_squared),
        df=df,
        p_value=p_value,
        f_statistic=float(f_statistic),
        f_p_value=float(f_p_value),
        aux_regressors=auxiliary.names,
        dropped_collinear=tuple(dropped),
        cross_terms=cross_terms,
        verdict=white_verdict(p_value, alpha),
    )


# JARQUE-BERA


def jb_verdict(p_value: float, alpha: float) -> JbVerdict:
    return "Normal" if p_value > alpha else "NonNormal"



@dataclass(frozen=True)
class JbResult:
    skewness: float
    kurtosis: float
    jb_stat: float
    p_value: float
    verdict: JbVerdict

    def to_dict(self) -> Dict:
        return {
            "skewness": self.skewness,
            "kurtosis": self.kurtosis,
            "jb_stat": self.jb_stat,
            "p_value": self.p_value,
            "verdict": self.verdict,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "JbResult":
        return cls(**d)


def jarque_bera(residuals: Sequence[float], alpha: float = 0.05) -> JbResult:
    r"""
    Jarque-Bera normality test, moments use the divisor ``n``

    .. math::

        JB = \frac{n}{6}\left(S^2 + \frac{(K - 3)^2}{4}\right)

    Example
    -------

    >>> jarque_bera([-1.0, 0.0, 1.0]).jb_stat
    0.28125
    """
    _check_alpha(alpha)
    e = _residuals(residuals, 3)
    if np.var(e) == 0.0:
        raise DegenerateResiduals("residuals have zero variance")
    skewness = float(stats.skew(e, bias=True))
    kurtosis = float(stats.kurtosis(e, fisher=False, bias=True))
    jb_stat = e.size / 6.0 * (skewness ** 2 + (kurtosis - 3.0) ** 2 / 4.0)
    p_value = float(ols.chi2_sf(jb_stat, 2))
    return JbResult(
        skewness=skewness,
        kurtosis=kurtosis,
        jb_stat=float(jb_stat),
        p_value=p_value,
        verdict=jb_verdict(p_value, alpha),
    )
