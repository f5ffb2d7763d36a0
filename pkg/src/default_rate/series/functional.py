"""
Transformations applied to series before modelling and their
descriptive statistics
"""

from dataclasses import asdict, dataclass
from typing import Dict

import numpy as np

from default_rate._types import Literal
from default_rate.errors import NonPositiveValue, SeriesTooShort

from .series import Series

__all__ = ["log", "diff", "lag", "transform", "describe", "Description"]


def log(s: Series) -> Series:
    """natural logarithm of each observation, same start"""
    non_positive = np.flatnonzero(s.values <= 0)
    if non_positive.size:
        idx = int(non_positive[0])
        raise NonPositiveValue(s.name, idx, float(s.values[idx]))
    return Series(f"{s.name}_LOG", s.start, np.log(s.values))


def diff(s: Series) -> Series:
    """
    First difference, the result starts one quarter later and is one
    observation shorter
    """
    if len(s) < 2:
        raise SeriesTooShort(s.name, len(s), 2)
    return Series(f"{s.name}_DIFF1", s.start.successor(), np.diff(s.values))


def lag(s: Series, k: int = 1) -> Series:
    r"""
    Lags the series by ``k`` quarters: entry at period ``start + k + t`` is the
    original entry ``t``, so the result covers ``n - k`` periods.

    .. math::

        y_t = x_{t-k}
    """
    if k < 1:
        raise ValueError(f"lag order must be positive, got {k}")
    if len(s) <= k:
        raise SeriesTooShort(s.name, len(s), k + 1)
    return Series(f"{s.name}_LAG{k}", s.start.shift(k), s.values[: len(s) - k])


def transform(s: Series, kind: Literal["log", "diff", "lag"], k: int = 1) -> Series:
    """
    Applies the transformation named by ``kind``, ``k`` is the lag order and
    is ignored by ``log`` and ``diff``
    """
    if kind == "log":
        return log(s)
    elif kind == "diff":
        return diff(s)
    elif kind == "lag":
        return lag(s, k)
    raise ValueError(f"transformation {kind} not supported")


@dataclass(frozen=True)
class Description:
    mean: float
    median: float
    max: float
    min: float
    std_dev: float
    n: int

    def to_dict(self) -> Dict:
        return asdict(self)


def describe(s: Series) -> Description:
    """
    Mean, median, extremes and sample standard deviation (divisor ``n - 1``)
    """
    if len(s) < 2:
        raise SeriesTooShort(s.name, len(s), 2)
    x = s.values
    return Description(
        mean=float(np.mean(x)),
        median=float(np.median(x)),
        max=float(np.max(x)),
        min=float(np.min(x)),
        std_dev=float(np.std(x, ddof=1)),
        n=len(s),
    )
