"""
Linear regression by ordinary least squares
"""

__all__ = [
    "INTERCEPT",
    "DesignMatrix",
    "OlsFit",
    "independent_columns",
    "fit",
    "predict",
    "student_t_pvalue",
    "t_critical",
    "chi2_sf",
    "f_sf",
]

from .distributions import chi2_sf, f_sf, student_t_pvalue, t_critical
from .linear import INTERCEPT, DesignMatrix, OlsFit, fit, independent_columns, predict
