"""
Quarterly series, datasets and the transformations applied before modelling
"""

__all__ = [
    "Period",
    "Series",
    "Dataset",
    "align",
    "functional",
    "transform",
    "describe",
    "Description",
]

from . import functional
from .functional import Description, describe, transform
from .period import Period
from .series import Dataset, Series, align
