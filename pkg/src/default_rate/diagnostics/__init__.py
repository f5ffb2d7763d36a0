"""
Validation of regression residuals
"""

__all__ = [
    "functional",
    "DwBand",
    "DwResult",
    "WhiteResult",
    "JbResult",
    "DiagnosticsReport",
    "durbin_watson",
    "white_design",
    "white_test",
    "white_verdict",
    "jarque_bera",
    "jb_verdict",
    "diagnose",
]

from . import functional
from .battery import DiagnosticsReport, diagnose
from .functional import (
    DwBand,
    DwResult,
    JbResult,
    WhiteResult,
    durbin_watson,
    jarque_bera,
    jb_verdict,
    white_design,
    white_test,
    white_verdict,
)
