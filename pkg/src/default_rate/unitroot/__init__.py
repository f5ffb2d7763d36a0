"""
Unit root testing: Dickey-Fuller regressions, critical values and the
sequential strategy determining the order of integration
"""

__all__ = [
    "AdfModel",
    "AdfOutcome",
    "TermEstimate",
    "DescentStep",
    "IntegrationReport",
    "RegressionProvider",
    "LEVELS",
    "adf_regression",
    "adf_test",
    "adf_critical_value",
    "adf_critical_values",
    "classify",
    "select_lags",
    "settle_model",
    "sequential_adf",
]

from .adf import (
    AdfOutcome,
    DescentStep,
    TermEstimate,
    adf_regression,
    adf_test,
    classify,
    select_lags,
)
from .critical_values import LEVELS, adf_critical_value, adf_critical_values
from .models import AdfModel
from .sequential import (
    IntegrationReport,
    RegressionProvider,
    sequential_adf,
    settle_model,
)
