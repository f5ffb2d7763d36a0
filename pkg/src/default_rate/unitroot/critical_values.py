"""
Dickey-Fuller critical values from MacKinnon's response surfaces
"""

from typing import Dict, Tuple, Union

from .models import AdfModel

__all__ = [
    "LEVELS",
    "MIN_NOBS",
    "adf_critical_value",
    "adf_critical_values",
    "level_name",
]

LEVELS = ("1%", "5%", "10%")

# (beta_inf, beta_1, beta_2) for a single series, MacKinnon (1991)
_RESPONSE_SURFACE: Dict[AdfModel, Dict[str, Tuple[float, float, float]]] = {
    AdfModel.NONE: {
        "1%": (-2.5658, -1.960, -10.04),
        "5%": (-1.9393, -0.398, 0.0),
        "10%": (-1.6156, -0.181, 0.0),
    },
    AdfModel.CONSTANT: {
        "1%": (-3.4336, -5.999, -29.25),
        "5%": (-2.8621, -2.738, -8.36),
        "10%": (-2.5671, -1.438, -4.48),
    },
    AdfModel.TREND: {
        "1%": (-3.9638, -8.353, -47.44),
        "5%": (-3.4126, -4.039, -17.83),
        "10%": (-3.1279, -2.418, -7.58),
    },
}

MIN_NOBS = 10


def level_name(level: Union[str, float]) -> str:
    """
    Normalises a significance level given as ``"5%"`` or ``0.05``
    """
    if isinstance(level, str):
        if level in LEVELS:
            return level
        raise ValueError(f"level {level} not tabulated, use one of {LEVELS}")
    for name in LEVELS:
        if abs(float(level) - float(name[:-1]) / 100.0) < 1e-12:
            return name
    raise ValueError(f"level {level} not tabulated, use one of 0.01, 0.05, 0.10")


def adf_critical_value(
    model: AdfModel, effective_n: int, level: Union[str, float] = "5%"
) -> float:
    r"""
    Critical value of the ADF statistic for a regression on ``effective_n``
    observations

    .. math::

        CV(T) = \beta_\infty + \beta_1 / T + \beta_2 / T^2
    """
    if effective_n < MIN_NOBS:
        raise ValueError(
            f"critical values need at least {MIN_NOBS} observations, got {effective_n}"
        )
    b_inf, b_1, b_2 = _RESPONSE_SURFACE[AdfModel(model)][level_name(level)]
    t = float(effective_n)
    return b_inf + b_1 / t + b_2 / (t * t)


def adf_critical_values(model: AdfModel, effective_n: int) -> Dict[str, float]:
    """critical values at every tabulated level"""
    return {level: adf_critical_value(model, effective_n, level) for level in LEVELS}
