"""
Ordinary least squares with classical inference
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass
from typing import ClassVar, Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import solve_triangular

from default_rate.errors import (
    DuplicateColumn,
    InsufficientObservations,
    MissingColumn,
    MissingRegressor,
    NonFiniteValue,
    RankDeficient,
)

from .distributions import f_sf, student_t_pvalue

__all__ = [
    "INTERCEPT",
    "RANK_TOLERANCE",
    "DesignMatrix",
    "OlsFit",
    "independent_columns",
    "fit",
    "predict",
]

logger = logging.getLogger(__name__)

INTERCEPT = "C"

# a column is collinear when the norm of its residual after projection on
# the previous columns is below RANK_TOLERANCE times its own norm
RANK_TOLERANCE = 1e-10


@dataclass(frozen=True, eq=False)
class DesignMatrix:
    """
    Regressors of a linear model, one named column each. The intercept, when
    present, is the column of ones named ``C``.
    """

    names: Tuple[str, ...]
    values: np.ndarray

    intercept: ClassVar[str] = INTERCEPT

    def __post_init__(self):
        names = tuple(self.names)
        values = np.array(self.values, dtype=np.float64)
        if values.ndim == 1:
            values = values.reshape(-1, 1)
        if values.ndim != 2 or values.shape[1] != len(names):
            raise ValueError(
                f"design has shape {values.shape} but {len(names)} column names"
            )
        seen = set()
        for name in names:
            if name in seen:
                raise DuplicateColumn(name)
            seen.add(name)
        bad = np.argwhere(~np.isfinite(values))
        if bad.size:
            raise NonFiniteValue(names[bad[0][1]], int(bad[0][0]))
        values.setflags(write=False)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "values", values)

    @staticmethod
    def from_columns(
        columns: Mapping[str, Sequence[float]], intercept: bool = True
    ) -> "DesignMatrix":
        """
        Stacks the columns in order, prepending the intercept if required
        """
        names = list(columns.keys())
        arrays = [np.asarray(columns[name], dtype=np.float64) for name in names]
        if intercept:
            if INTERCEPT in names:
                raise ValueError(
                    f"column {INTERCEPT} clashes with the name of the intercept"
                )
            if not arrays:
                raise ValueError("the number of rows is unknown without columns")
            names = [INTERCEPT] + names
            arrays = [np.ones_like(arrays[0])] + arrays
        return DesignMatrix(tuple(names), np.column_stack(arrays))

    @staticmethod
    def constant(nobs: int) -> "DesignMatrix":
        return DesignMatrix((INTERCEPT,), np.ones((nobs, 1)))

    @property
    def nobs(self) -> int:
        return int(self.values.shape[0])

    @property
    def ncols(self) -> int:
        return int(self.values.shape[1])

    @property
    def has_intercept(self) -> bool:
        return INTERCEPT in self.names and bool(
            np.all(self.column(INTERCEPT) == 1.0)
        )

    @property
    def regressors(self) -> List[str]:
        """column names except the intercept"""
        return [name for name in self.names if name != INTERCEPT]

    def column(self, name: str) -> np.ndarray:
        if name not in self.names:
            raise MissingColumn(name)
        return self.values[:, self.names.index(name)]

    def select(self, names: Sequence[str]) -> "DesignMatrix":
        """keeps ``names`` in the order they appear in the design"""
        wanted = set(names)
        for name in wanted:
            if name not in self.names:
                raise MissingColumn(name)
        idx = [i for i, name in enumerate(self.names) if name in wanted]
        return DesignMatrix(
            tuple(self.names[i] for i in idx), self.values[:, idx]
        )

    def drop(self, name: str) -> "DesignMatrix":
        return self.select([n for n in self.names if n != name])

    def with_column(self, name: str, values: Sequence[float]) -> "DesignMatrix":
        return DesignMatrix(
            self.names + (name,),
            np.column_stack([self.values, np.asarray(values, dtype=np.float64)]),
        )

    def row(self, i: int) -> Dict[str, float]:
        return OrderedDict(
            (name, float(v)) for name, v in zip(self.names, self.values[i])
        )

    def __repr__(self):
        return f"DesignMatrix(nobs={self.nobs}, names={list(self.names)})"


def independent_columns(design: DesignMatrix) -> Tuple[List[int], List[str]]:
    """
    Scans the columns left to right and keeps each one whose residual norm,
    after projection on the columns already kept, is at least
    ``RANK_TOLERANCE`` times its own norm.

    Returns
    -------
    (List[int], List[str])
        indices of the kept columns and names of the dropped ones
    """
    kept: List[int] = []
    dropped: List[str] = []
    basis: Optional[np.ndarray] = None
    for j, name in enumerate(design.names):
        x = design.values[:, j]
        norm = np.linalg.norm(x)
        if norm == 0.0:
            dropped.append(name)
            continue
        residual = x if basis is None else x - basis @ (basis.T @ x)
        if np.linalg.norm(residual) < RANK_TOLERANCE * norm:
            dropped.append(name)
            continue
        kept.append(j)
        basis, _ = np.linalg.qr(design.values[:, kept])
    return kept, dropped


@dataclass(frozen=True, eq=False)
class OlsFit:
    """
    Estimates and inference of a least squares fit.

    ``t_stats`` are ``coefficients / std_errors`` and ``p_values`` their two
    sided Student-t probabilities with ``dof = nobs - k`` degrees of freedom.
    Information criteria are normalised by the number of observations.
    ``f_statistic`` and ``f_p_value`` test all slopes jointly and are None
    without intercept or slopes.
    """

    dependent: str
    names: Tuple[str, ...]
    coefficients: Dict[str, float]
    std_errors: Dict[str, float]
    t_stats: Dict[str, float]
    p_values: Dict[str, float]
    residuals: np.ndarray
    fitted: np.ndarray
    r_squared: float
    adj_r_squared: float
    nobs: int
    dof: int
    ssr: float
    se_regression: float
    mean_dependent: float
    sd_dependent: float
    loglike: float
    aic: float
    bic: float
    hqic: float
    durbin_watson: float
    f_statistic: Optional[float] = None
    f_p_value: Optional[float] = None

    @property
    def has_intercept(self) -> bool:
        return INTERCEPT in self.names

    @property
    def regressors(self) -> List[str]:
        return [name for name in self.names if name != INTERCEPT]

    def to_dict(self) -> Dict:
        d = {
            key: getattr(self, key)
            for key in self.__dataclass_fields__  # type: ignore
        }
        d["names"] = list(self.names)
        for key in ("coefficients", "std_errors", "t_stats", "p_values"):
            d[key] = {name: float(v) for name, v in d[key].items()}
        d["residuals"] = [float(v) for v in self.residuals]
        d["fitted"] = [float(v) for v in self.fitted]
        return d

    @classmethod
    def from_dict(cls, d: Mapping) -> "OlsFit":
        values = dict(d)
        names = tuple(values["names"])
        values["names"] = names
        for key in ("coefficients", "std_errors", "t_stats", "p_values"):
            values[key] = OrderedDict((name, values[key][name]) for name in names)
        values["residuals"] = np.array(values["residuals"], dtype=np.float64)
        values["fitted"] = np.array(values["fitted"], dtype=np.float64)
        return cls(**values)

    def __repr__(self):
        return (
            f"OlsFit(dependent={self.dependent}, names={list(self.names)}, "
            f"r_squared={self.r_squared:.6f})"
        )


def fit(y: Sequence[float], design: DesignMatrix, dependent: str = "Y") -> OlsFit:
    """
    Least squares fit of ``y`` on ``design`` through a QR factorisation.

    Parameters
    ----------
    y: Sequence[float]
        dependent variable, one value per design row
    design: DesignMatrix
        regressors, full column rank by the rule of :func:`independent_columns`
    dependent: str
        name of the dependent variable, reported in the fit

    Returns
    -------
    OlsFit
        coefficients, standard errors from ``s^2 (X'X)^-1`` with
        ``s^2 = SSR / (n - k)``, t statistics, p-values and goodness of fit.
        R² uses the sum of squares centred on the mean of ``y`` even without
        intercept, so it can be negative in that case; it is 0 when ``y``
        is constant.

    Example
    -------

    >>> fit([1.0, 2.0, 3.0], DesignMatrix.constant(3)).coefficients["C"]
    2.0
    """
    y = np.asarray(y, dtype=np.float64).reshape(-1)
    X = design.values
    n, k = X.shape
    if y.size != n:
        raise ValueError(f"dependent has {y.size} values, design has {n} rows")
    if n <= k:
        raise InsufficientObservations(n, k)
    _, dropped = independent_columns(design)
    if dropped:
        raise RankDeficient(dropped)

    q, r = np.linalg.qr(X)
    beta = solve_triangular(r, q.T @ y)
    r_inv = solve_triangular(r, np.eye(k))
    xtx_inv = r_inv @ r_inv.T

    fitted = X @ beta
    residuals = y - fitted
    dof = n - k
    ssr = float(residuals @ residuals)
    s2 = ssr / dof
    std_errors = np.sqrt(s2 * np.diag(xtx_inv))
    with np.errstate(divide="ignore", invalid="ignore"):
        t_stats = beta / std_errors
    # an exact fit has zero standard errors, a null coefficient then has t = 0
    t_stats[np.isnan(t_stats)] = 0.0
    p_values = student_t_pvalue(t_stats, dof)

    mean_y = float(np.mean(y))
    sst = float(np.sum((y - mean_y) ** 2))
    r_squared = 1.0 - ssr / sst if sst > 0 else 0.0
    adj_r_squared = 1.0 - (1.0 - r_squared) * (n - 1) / dof

    with np.errstate(divide="ignore", invalid="ignore"):
        loglike = -n / 2.0 * (1.0 + np.log(2.0 * np.pi) + np.log(ssr / n))
        dw = float(np.sum(np.diff(residuals) ** 2) / ssr) if ssr > 0 else float("nan")
    aic = -2.0 * loglike / n + 2.0 * k / n
    bic = -2.0 * loglike / n + k * np.log(n) / n
    hqic = -2.0 * loglike / n + 2.0 * k * np.log(np.log(n)) / n

    f_statistic = f_p_value = None
    if INTERCEPT in design.names and k > 1:
        with np.errstate(divide="ignore", invalid="ignore"):
            explained = np.float64(r_squared) / (k - 1)
            f_statistic = float(explained / ((1.0 - r_squared) / dof))
        f_p_value = float(f_sf(f_statistic, k - 1, dof))

    names = design.names
    result = OlsFit(
        dependent=dependent,
        names=names,
        coefficients=OrderedDict(zip(names, map(float, beta))),
        std_errors=OrderedDict(zip(names, map(float, std_errors))),
        t_stats=OrderedDict(zip(names, map(float, t_stats))),
        p_values=OrderedDict(zip(names, map(float, p_values))),
        residuals=residuals,
        fitted=fitted,
        r_squared=float(r_squared),
        adj_r_squared=float(adj_r_squared),
        nobs=n,
        dof=dof,
        ssr=ssr,
        se_regression=float(np.sqrt(s2)),
        mean_dependent=mean_y,
        sd_dependent=float(np.std(y, ddof=1)) if n > 1 else 0.0,
        loglike=float(loglike),
        aic=float(aic),
        bic=float(bic),
        hqic=float(hqic),
        durbin_watson=dw,
        f_statistic=f_statistic,
        f_p_value=f_p_value,
    )
    logger.debug("fitted %s on %s, R2=%.6f", dependent, list(names), r_squared)
    return result


def predict(coefficients: Mapping[str, float], x: Mapping[str, float]) -> float:
    """
    Evaluates the linear model: intercept plus the sum of ``coefficient * x``
    over the other coefficient names.

    Example
    -------

    >>> predict({"C": 1.0, "A": 2.0}, {"A": 3.0})
    7.0
    """
    value = float(coefficients.get(INTERCEPT, 0.0))
    for name, beta in coefficients.items():
        if name == INTERCEPT:
            continue
        if name not in x:
            raise MissingRegressor(name)
        value += float(beta) * float(x[name])
    return value
