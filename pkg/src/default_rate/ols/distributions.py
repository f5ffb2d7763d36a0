"""
Tail probabilities and quantiles of the reference distributions, through
the regularized incomplete beta and gamma functions
"""

from typing import Union

import numpy as np
from scipy import special

__all__ = ["student_t_pvalue", "t_critical", "chi2_sf", "f_sf"]

ArrayOrFloat = Union[np.ndarray, float]


def student_t_pvalue(t: ArrayOrFloat, dof: float) -> ArrayOrFloat:
    r"""
    Two sided Student-t tail probability :math:`P(|T_{dof}| \geq |t|)`

    .. math::

        p = I_{\nu / (\nu + t^2)}(\nu / 2, 1 / 2)
    """
    t = np.asarray(t, dtype=np.float64)
    with np.errstate(divide="ignore", invalid="ignore"):
        p = special.betainc(dof / 2.0, 0.5, dof / (dof + t * t))
    return float(p) if p.ndim == 0 else p


def t_critical(dof: int, alpha: float) -> float:
    """
    Two sided Student-t critical value, the ``|t|`` whose p-value is ``alpha``
    """
    if dof < 1:
        raise ValueError(f"degrees of freedom must be positive, got {dof}")
    if not 0 < alpha <= 1:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    return abs(float(special.stdtrit(dof, alpha / 2.0)))


def chi2_sf(x: ArrayOrFloat, df: float) -> ArrayOrFloat:
    r"""
    Upper tail of the chi-square distribution, :math:`Q(df / 2, x / 2)`
    """
    x = np.asarray(x, dtype=np.float64)
    p = special.gammaincc(df / 2.0, np.maximum(x, 0.0) / 2.0)
    return float(p) if p.ndim == 0 else p


def f_sf(f: ArrayOrFloat, dfn: float, dfd: float) -> ArrayOrFloat:
    r"""
    Upper tail of the F distribution with ``(dfn, dfd)`` degrees of freedom

    .. math::

        P(F > f) = I_{d_2 / (d_2 + d_1 f)}(d_2 / 2, d_1 / 2)
    """
    f = np.asarray(f, dtype=np.float64)
    p = special.betainc(dfd / 2.0, dfn / 2.0, dfd / (dfd + dfn * np.maximum(f, 0.0)))
    return float(p) if p.ndim == 0 else p
