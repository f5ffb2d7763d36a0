"""
From a quarterly CSV panel to a validated default rate model
"""

__all__ = [
    "ExpectedSign",
    "PipelineConfig",
    "PipelineReport",
    "DEFAULT_EXPECTED_SIGNS",
    "load_config",
    "load_csv",
    "to_csv_text",
    "write_csv",
    "check_expected_signs",
    "run_pipeline",
    "render_report",
    "parse_report",
    "report",
]

from . import report
from .config import DEFAULT_EXPECTED_SIGNS, ExpectedSign, PipelineConfig, load_config
from .panel import load_csv, to_csv_text, write_csv
from .report import parse_report, render_report
from .run import PipelineReport, run_pipeline
from .signs import check_expected_signs
