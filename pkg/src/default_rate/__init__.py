"""
Econometric toolkit modelling a bank default rate on macroeconomic factors
"""

__version__ = "0.1.0"

__all__ = ["series", "ols", "unitroot", "diagnostics", "stepwise", "pipeline", "errors"]

from . import diagnostics, errors, ols, pipeline, series, stepwise, unitroot
